"""Tests the epsilon-noise channel and the singularity families that converge
to a degenerate distribution.
"""
import pytest
import numpy as np
from mbuniq.dist import measures as m
from mbuniq.dist.distribution import (DiscreteDistribution, marginal,
                                      total_variation)
from mbuniq.dist.perturb import (NoiseSpec, epsilon_noise, zero_witnesses,
                                 singularity_family)
from mbuniq.datagen import confounder_triangle, fig1_distribution
from mbuniq.errors import (NormalizationError, SupportError, MbuniqError,
                           OverlapError)
from corpus import corpus

@pytest.fixture
def xor():
    table = {(a, b, a ^ b): 0.25 for a in (0, 1) for b in (0, 1)}
    return DiscreteDistribution([("A", 2), ("B", 2), ("Y", 2)], table)

@pytest.fixture
def triangle():
    return confounder_triangle(copy=True)

def test_noise_spec():
    """Tests the validation of the noise channel."""
    assert NoiseSpec.uniform(0.1, 4).probs(4).tolist() == [0.25]*4
    assert NoiseSpec(0.2, {0: 0.5, 1: 0.5}).probs(2).tolist() == [0.5, 0.5]
    with pytest.raises(NormalizationError):
        NoiseSpec(1.5, [0.5, 0.5])
    with pytest.raises(NormalizationError):
        NoiseSpec(0.1, [1., 0.]).probs(2)
    with pytest.raises(NormalizationError):
        NoiseSpec(0.1, [0.5, 0.5]).probs(3)
    with pytest.raises(NormalizationError):
        NoiseSpec(0.1, {0: 0.5, 2: 0.5}).probs(2)

def test_noise_extremes(xor):
    """No noise keeps the law; full noise makes the variable independent of
    everything else with the noise law as its marginal.
    """
    same = epsilon_noise(xor, "A", NoiseSpec.uniform(0., 2))
    assert same.table == xor.table

    full = epsilon_noise(xor, "A", NoiseSpec(1., [0.3, 0.7]))
    assert full.prob({"A": 1}) == pytest.approx(0.7)
    assert m.mi_exact(full, "A", ["B", "Y"]).value == pytest.approx(0.,
                                                                   abs=1e-12)

def test_noise_keeps_others(xor):
    noised = epsilon_noise(xor, "A", NoiseSpec.uniform(0.3, 2))
    assert noised.ids == xor.ids
    assert total_variation(marginal(noised, ["B", "Y"]),
                           marginal(xor, ["B", "Y"])) == pytest.approx(0.)
    #P(A = a) is kept by symmetric noise on a fair coin, and every cell is
    #now possible.
    assert noised.prob({"A": 0}) == pytest.approx(0.5)
    assert len(noised) == 8
    assert noised.prob({"A": 0, "B": 0, "Y": 1}) == pytest.approx(0.25*0.15)

def test_strict_data_processing():
    """Noising `x` never raises CMI(x, Y | S) and strictly lowers it unless it
    was already zero.
    """
    for seed, d in corpus(200, offset=1000):
        rng = np.random.default_rng(seed)
        ids = list(d.ids)
        x, others = ids[0], ids[1:-1]
        cond = [v for v in others if rng.random() < 0.5]
        eps = float(rng.uniform(0.05, 0.95))
        noised = epsilon_noise(d, x, NoiseSpec.uniform(eps, d.meta(x).card))

        before = m.cmi_exact(d, x, "Y", cond).value
        after = m.cmi_exact(noised, x, "Y", cond).value
        assert after <= before + 1e-9, seed
        if before <= 1e-9:
            assert abs(after - before) <= 1e-9, seed
        elif before > 1e-6:
            assert after < before - 1e-10, seed

def test_zero_witnesses(triangle):
    pairs = zero_witnesses(triangle, "X", ["Z"])
    assert pairs == [({"X": 0}, {"Z": 1}), ({"X": 1}, {"Z": 0})]
    assert zero_witnesses(confounder_triangle(copy=False), "X", "Z") == []
    with pytest.raises(OverlapError):
        zero_witnesses(triangle, "X", ["X"])

def _family(base, eta, alpha):
    pairs = zero_witnesses(base, "X", ["Z"])
    return singularity_family(base, pairs[0][0], pairs[0][1], eta, alpha,
                              extra=pairs[1:])

def test_singularity_limits(triangle):
    """Two families that both converge to the degenerate triangle give causal
    strengths (and part mutual informations) with different limits.
    """
    eta = 1e-6
    flat = _family(triangle, eta, [0.5, 0.5])
    point = _family(triangle, eta, [1., 0.])
    for fam in (flat, point):
        assert total_variation(fam, triangle) == pytest.approx(eta, rel=1e-8)
        assert len(zero_witnesses(fam, "X", "Z")) == 0

    cs_flat = m.causal_strength(flat, "X", "Y", "Z")
    cs_point = m.causal_strength(point, "X", "Y", "Z")
    assert cs_flat.finite and cs_point.finite
    assert cs_flat.value == pytest.approx(0.1163, abs=2e-3)
    assert cs_point.value == pytest.approx(0.2370, abs=2e-3)
    assert abs(cs_flat.value - cs_point.value) > 0.05

    pmi_flat = m.pmi(flat, "X", "Y", "Z").value
    pmi_point = m.pmi(point, "X", "Y", "Z").value
    assert abs(pmi_flat - pmi_point) > 0.05

    #CMI does not care which way the family approaches.
    assert m.cmi_exact(flat, "X", "Y", "Z").value < 1e-4
    assert m.cmi_exact(point, "X", "Y", "Z").value < 1e-4

def test_singularity_witness_laws(triangle):
    """Each witness may carry its own law of the target."""
    fam = singularity_family(triangle, {"X": 0}, {"Z": 1}, 0.1, [0., 1.],
                             y="Y", extra=[({"X": 1}, {"Z": 0}, {0: 1.})])
    assert fam.prob({"X": 0, "Z": 1, "Y": 1}) == pytest.approx(0.05)
    assert fam.prob({"X": 1, "Z": 0, "Y": 0}) == pytest.approx(0.05)
    assert fam.prob({"X": 0, "Z": 0}) == pytest.approx(0.45)

def test_singularity_errors(triangle):
    with pytest.raises(MbuniqError):
        singularity_family(triangle, {"X": 0}, {"Z": 1}, 0., [0.5, 0.5])
    with pytest.raises(SupportError):
        singularity_family(triangle, {"X": 0}, {"Z": 0}, 0.1, [0.5, 0.5])
    with pytest.raises(SupportError):
        singularity_family(triangle, {"X": 0}, {"Z": 1}, 0.1, [0.5, 0.5],
                           extra=[({"X": 0}, {"Z": 1})])
    with pytest.raises(NormalizationError):
        singularity_family(triangle, {"X": 0}, {"Z": 1}, 0.1, [0.5, 0.4])

    #The four-variable example has two variables outside an (X, Z) witness,
    #so Y must be named.
    d = fig1_distribution()
    with pytest.raises(MbuniqError):
        singularity_family(d, {"X": 2}, {"Z": 0}, 0.1, [0.2, 0.4, 0.4])
    fam = singularity_family(d, {"X": 2}, {"Z": 0}, 0.1, [0.2, 0.4, 0.4],
                             y="Y")
    assert fam.ids == d.ids
    assert total_variation(fam, d) == pytest.approx(0.1)
    assert total_variation(marginal(fam, ["Z", "X", "Y"]),
                           marginal(d, ["Z", "X", "Y"])) == pytest.approx(0.1)
    #W keeps its law given Z = 0 on the filled cell.
    assert fam.prob({"X": 2, "Z": 0}) == pytest.approx(0.1)
    assert fam.prob({"X": 2, "Z": 0, "W": 0})/0.1 == \
        pytest.approx(d.prob({"Z": 0, "W": 0})/d.prob({"Z": 0}))

def test_singularity_warnings(triangle, capsys):
    """Families that leave causal strength or part mutual information
    undefined say so on stderr.
    """
    fam = singularity_family(triangle, {"X": 0}, {"Z": 1}, 0.01, [0.5, 0.5])
    assert "1 of 2 zero cells" in capsys.readouterr().err
    assert not m.causal_strength(fam, "X", "Y", "Z").finite
    assert not m.pmi(fam, "X", "Y", "Z").finite

    _family(triangle, 0.01, [1., 0.])
    assert "may stay undefined" in capsys.readouterr().err
    _family(triangle, 0.01, [0.5, 0.5])
    assert capsys.readouterr().err == ""
