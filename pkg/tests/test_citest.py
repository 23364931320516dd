"""Tests datasets, the G² and permutation CI tests and the deciders."""
import pytest
import numpy as np
from itertools import product
from scipy.stats import chi2_contingency
from mbuniq.citest.dataset import Dataset, read_csv, sample_distribution
from mbuniq.citest.stats import (g2_ci_test, permutation_ci_test, cmi_plugin,
                                 CITestResult)
from mbuniq.citest.decider import ExactDecider, TestDecider
from mbuniq.datagen import (SETTING_VARS, SettingSpec, confounder_triangle,
                            fig1_distribution, sample)
from mbuniq.dist.measures import cmi_exact
from mbuniq.errors import (MbuniqError, OverlapError, ConfigError,
                           UnknownVariableError)

@pytest.fixture
def balanced():
    """Every (A, B, Y) combination exactly five times: all empirical
    independences are exact.
    """
    rows = [r for r in product(range(2), range(3), range(2))]*5
    return Dataset([("A", 2), ("B", 3), ("Y", 2)], rows)

@pytest.fixture
def copied():
    """Y = A on 100 rows, B a third column unrelated to either."""
    rows = [(i % 2, (i//2) % 3, i % 2) for i in range(100)]
    return Dataset([("A", 2), ("B", 3), ("Y", 2)], rows)

@pytest.fixture(scope="module")
def triangle_rows():
    return sample_distribution(confounder_triangle(copy=False), 500, seed=0)

def test_dataset(balanced):
    assert balanced.n == 60
    assert len(balanced) == 60
    assert balanced.ids == ("A", "B", "Y")
    assert balanced.cards == {"A": 2, "B": 3, "Y": 2}
    assert balanced.contingency(["B", "A"]).tolist() == [[10]*3, [10]*3]
    assert int(balanced.contingency([])) == 60
    assert balanced.empirical().prob({"B": 2}) == pytest.approx(1./3)
    assert balanced.to_frame().shape == (60, 3)

    ds = Dataset([("A", 2), ("B", 3)], [{"B": 2, "A": 1}, {"A": 0, "B": 0}])
    assert ds.data.tolist() == [[1, 2], [0, 0]]

def test_dataset_errors(balanced):
    with pytest.raises(MbuniqError):
        Dataset([("A", 2)], [])
    with pytest.raises(MbuniqError):
        Dataset([("A", 2)], [(0,), (2,)])
    with pytest.raises(UnknownVariableError):
        balanced.contingency(["Q"])

def test_csv(triangle_rows, workdir):
    """Cardinalities survive a CSV round trip through the sidecar; without
    it they are inferred from the data.
    """
    target = str(workdir.join("triangle.csv"))
    triangle_rows.write_csv(target)
    loaded = read_csv(target)
    assert loaded.ids == triangle_rows.ids
    assert loaded.cards == triangle_rows.cards
    assert np.array_equal(loaded.data, triangle_rows.data)

    bare = str(workdir.join("bare.csv"))
    Dataset([("A", 5), ("B", 2)], [(0, 1), (2, 0)]).to_frame().to_csv(
        bare, index=False)
    assert read_csv(bare).cards == {"A": 3, "B": 2}

def test_sampling():
    d = fig1_distribution()
    a = sample_distribution(d, 300, seed=11)
    b = sample_distribution(d, 300, seed=11)
    assert np.array_equal(a.data, b.data)
    assert a.ids == d.ids
    #Every sampled row lies in the support.
    assert all(d.prob(dict(zip(d.ids, row))) > 0 for row in a.data[:50])
    with pytest.raises(MbuniqError):
        sample_distribution(d, 0)

def test_plugin_cmi(triangle_rows):
    """The plug-in estimate is the exact CMI of the empirical law."""
    emp = triangle_rows.empirical()
    for x, y, cond in [("X", "Y", ["Z"]), ("Z", "Y", []),
                       (["X", "Z"], "Y", [])]:
        assert cmi_plugin(triangle_rows, x, y, cond) == \
            pytest.approx(cmi_exact(emp, x, y, cond).value, abs=1e-12)

def test_g2_contingency(triangle_rows):
    """Without conditioning, G² is the log-likelihood chi-square of the
    two-way table.
    """
    table = triangle_rows.contingency(["X", "Y"])
    g, p, dof, _ = chi2_contingency(table, correction=False,
                                    lambda_="log-likelihood")
    result = g2_ci_test(triangle_rows, "X", "Y", alpha=0.05)
    assert result.statistic == pytest.approx(g)
    assert result.dof == dof == 1
    assert result.p_value == pytest.approx(p)
    assert result.test == "g2"

def test_g2_decisions(balanced, copied):
    exact = g2_ci_test(balanced, "A", "Y", ["B"])
    assert exact.statistic == pytest.approx(0., abs=1e-9)
    assert exact.dof == 3
    assert exact.p_value == pytest.approx(1.)
    assert exact.independent

    dep = g2_ci_test(copied, "A", "Y", ["B"])
    assert dep.p_value < 1e-6
    assert not dep.independent
    assert dep.statistic == pytest.approx(2*100*np.log(2.))

    #Given A, Y has a single observed state in each stratum: no degrees of
    #freedom are left and the test cannot reject.
    structural = g2_ci_test(copied, "B", "Y", ["A"])
    assert structural.dof == 0
    assert structural.p_value == 1.

def test_invalid_arguments(balanced):
    with pytest.raises(MbuniqError):
        g2_ci_test(balanced, [], "Y")
    with pytest.raises(OverlapError):
        g2_ci_test(balanced, "A", "Y", ["A"])
    with pytest.raises(ConfigError):
        g2_ci_test(balanced, "A", "Y", alpha=1.5)
    with pytest.raises(ConfigError):
        permutation_ci_test(balanced, "A", "Y", B=50)

def test_permutation(balanced, copied, triangle_rows):
    indep = permutation_ci_test(balanced, "A", "Y", ["B"], B=99, seed=1)
    assert indep.p_value == 1.
    assert indep.test == "permutation"

    dep = permutation_ci_test(copied, "A", "Y", ["B"], B=99, seed=1)
    assert dep.p_value == pytest.approx(0.01)
    assert not dep.independent

    first = permutation_ci_test(triangle_rows, "X", "Y", ["Z"], B=120, seed=5)
    again = permutation_ci_test(triangle_rows, "X", "Y", ["Z"], B=120, seed=5,
                                batch_size=7)
    pooled = permutation_ci_test(triangle_rows, "X", "Y", ["Z"], B=120,
                                 seed=5, n_jobs=2)
    assert first == again == pooled
    assert 1./121 <= first.p_value <= 1.

def test_result_dict(copied):
    r = g2_ci_test(copied, "A", "Y")
    d = r.to_dict()
    assert d["dof"] == 1 and d["test"] == "g2"
    assert CITestResult(d["statistic"], d["dof"], d["p_value"], d["alpha"],
                        d["test"]) == r

def test_exact_decider():
    ci = ExactDecider(fig1_distribution())
    assert ci.order == ("Z", "X", "Y", "W")
    assert ci.independent("X", "Y", ["Z", "W"])
    assert not ci.independent("W", "Y", ["Z", "X"])
    assert ci.calls == 2
    assert ci.delta("X", "Y", ["Z", "W"]) == pytest.approx(0., abs=1e-12)
    assert ci.describe() == {"kind": "exact", "tol": 1e-9}

def test_test_decider(triangle_rows):
    """Answers are cached per unordered pair and do not depend on the order
    in which they are asked.
    """
    ci = TestDecider(triangle_rows, "permutation", 0.05, seed=3,
                     permutations=99)
    r1 = ci.result("X", "Y", ["Z"])
    assert ci.result("Y", "X", ["Z"]) is r1
    r2 = ci.result("Z", "Y")

    other = TestDecider(triangle_rows, "permutation", 0.05, seed=3,
                        permutations=99)
    assert other.result("Z", "Y") == r2
    assert other.result("Y", "X", "Z") == r1
    assert ci.independent("X", "Y", ["Z"]) == r1.independent
    assert ci.calls == 1
    assert ci.delta("X", "Y", ["Z"]) == pytest.approx(
        cmi_plugin(triangle_rows, "X", "Y", ["Z"]))

    g2 = TestDecider(triangle_rows)
    assert g2.test == "g2"
    assert g2.alpha == 0.05
    with pytest.raises(ConfigError):
        TestDecider(triangle_rows, "chisq")

def test_g2_sparse_tables(copied):
    """Tables with fewer rows per observed cell than `rows_per_cell` are not
    tested. `copied` has 100 rows over 12 observed cells.
    """
    skipped = g2_ci_test(copied, "A", "Y", ["B"], rows_per_cell=10)
    assert skipped.p_value == 1.
    assert skipped.independent
    assert skipped.dof == 3
    assert skipped.statistic == pytest.approx(2*100*np.log(2.))
    assert g2_ci_test(copied, "A", "Y", ["B"], rows_per_cell=8).p_value < 1e-6
    with pytest.raises(ConfigError):
        g2_ci_test(copied, "A", "Y", ["B"], rows_per_cell=-1)

    #Nine binary conditioning variables leave about two rows per cell.
    ds = sample(SettingSpec("S1"), 5000, seed=0)
    rest = [v for v in SETTING_VARS[:-1] if v != "X5"]
    default = g2_ci_test(ds, "X5", "Y", rest)
    assert default.p_value == 1.
    forced = g2_ci_test(ds, "X5", "Y", rest, rows_per_cell=0)
    assert forced.dof == default.dof > 0
    assert forced.statistic == default.statistic

def _null_rows(rng, n):
    """X and Y independent given Z, with Z shifting both marginals."""
    z = rng.integers(0, 2, n)
    x = (rng.random(n) < np.where(z == 1, 0.7, 0.4)).astype(int)
    y = np.where(z == 1, rng.integers(0, 3, n), rng.choice(3, n, p=[.6, .3, .1]))
    return Dataset([("X", 2), ("Y", 3), ("Z", 2)], np.column_stack([x, y, z]))

def test_g2_calibration():
    """Under conditional independence the G2 test rejects about 5% of the
    time.
    """
    rng = np.random.default_rng(2024)
    rejected = [not g2_ci_test(_null_rows(rng, 300), "X", "Y", "Z",
                               alpha=0.05).independent for _ in range(400)]
    assert 0.02 <= np.mean(rejected) <= 0.09

def test_permutation_calibration():
    rng = np.random.default_rng(77)
    rejected = [not permutation_ci_test(_null_rows(rng, 300), "X", "Y", "Z",
                                        alpha=0.05, B=99, seed=i).independent
                for i in range(150)]
    assert 0.01 <= np.mean(rejected) <= 0.11

def test_permutation_matches_g2(triangle_rows):
    """On tables with plenty of rows per cell both tests give similar
    p-values.
    """
    rng = np.random.default_rng(5)
    gaps = []
    for i in range(20):
        ds = _null_rows(rng, 400)
        g2 = g2_ci_test(ds, "X", "Y", "Z")
        perm = permutation_ci_test(ds, "X", "Y", "Z", B=199, seed=i)
        assert perm.statistic == pytest.approx(g2.statistic)
        assert perm.dof == g2.dof
        gaps.append(abs(perm.p_value - g2.p_value))
    assert np.mean(gaps) < 0.06
    assert max(gaps) < 0.2

    assert not g2_ci_test(triangle_rows, "X", "Y", "Z").independent
    assert not permutation_ci_test(triangle_rows, "X", "Y", "Z", B=99,
                                   seed=0).independent

def test_parity_sampled():
    """In setting 3 neither half of the parity pair says anything about Y,
    but the pair together does.
    """
    ds = sample(SettingSpec("S3"), 5000, seed=0)
    for x in ("X1", "X2"):
        assert cmi_plugin(ds, x, "Y") < 2e-3
        assert g2_ci_test(ds, x, "Y").statistic < 20
    pair = g2_ci_test(ds, ["X1", "X2"], "Y")
    #P(Y = X1 xor X2) = 0.9
    h = -(0.9*np.log(0.9) + 0.1*np.log(0.1))
    assert pair.statistic == pytest.approx(2*5000*(np.log(2.) - h), rel=0.1)
    assert pair.p_value < 1e-10
