"""Constructors for the benchmark distributions: four simulation settings with
ten binary candidates `X1..X10` and a target `Y`, the four-variable example
whose target has two Markov boundaries, and the confounder triangle.

Each construction is available as an exact law (:func:`build_exact`) and as a
seeded sampler (:func:`sample`). The settings are:

- `S1`: `X1..X10` are independent fair coins; a latent selector picks `X1`,
  `X2` or `X3` with probabilities 0.8/0.1/0.1 and `Y` copies the selected
  column. Unique boundary `{X1, X2, X3}`.
- `S2`: as `S1` but `X4 = X2`. Boundaries `{X1, X2, X3}` and `{X1, X3, X4}`.
- `S3`: `X1..X8` are independent, `Z = X1 xor X2` is latent, `Y` copies `Z`,
  `X3` or `X4` with probabilities 0.8/0.1/0.1 and `X9 = X10` equal `Z` with
  probability 0.95 (`1 - Z` otherwise). Unique boundary `{X1..X4}`; the
  composition property fails because `X1` and `X2` are each independent of
  `Y`.
- `S4`: as `S3` but `X8 = X1` and `X9 = X2`; `X10` stays a noisy copy of `Z`.
  Either member of each copy pair can stand in for the other, so there are
  four boundaries.
"""
from collections import namedtuple
import numpy as np
from mbuniq.dist.distribution import DiscreteDistribution
from mbuniq.errors import ConfigError

SETTINGS = ("S1", "S2", "S3", "S4")
"""tuple: ids of the four simulation settings."""
KINDS = SETTINGS + ("Fig1", "Triangle")
"""tuple: every construction id :class:`SettingSpec` accepts."""
SETTING_VARS = tuple("X{}".format(i) for i in range(1, 11)) + ("Y",)
"""tuple: column order of the simulation settings."""

_defaults = {
    "S1": {"bias": 0.5, "p1": 0.8, "p2": 0.1, "p3": 0.1},
    "S2": {"bias": 0.5, "p1": 0.8, "p2": 0.1, "p3": 0.1},
    "S3": {"bias": 0.5, "p1": 0.8, "p2": 0.1, "p3": 0.1, "fidelity": 0.95},
    "S4": {"bias": 0.5, "p1": 0.8, "p2": 0.1, "p3": 0.1, "fidelity": 0.95},
    "Fig1": {"w_fidelity": 0.75},
    "Triangle": {"copy": 1.0},
}

def setting_id(text):
    """Normalizes user input such as `1`, `s3`, `fig1` or `triangle` to a
    construction id.

    Raises:
        ConfigError: for anything else.
    """
    key = str(text).strip().lower()
    if key in ("1", "2", "3", "4"):
        key = "s" + key
    for kind in KINDS:
        if kind.lower() == key:
            return kind
    raise ConfigError("Unknown setting {!r}; choose from {}."
                      .format(text, ", ".join(KINDS)))

class SettingSpec(object):
    """Identifies a benchmark construction and its parameters.

    Args:
        id_ (str): one of :data:`KINDS` (or an alias accepted by
          :func:`setting_id`).
        params (dict): overrides of the default parameters: `bias` (mean of
          the free bits), `p1`, `p2`, `p3` (source probabilities of `Y`),
          `fidelity` (agreement of the noisy `Z` copies), `w_fidelity` (how
          strongly `W` drives `Y` in `Fig1`) and `copy` (1 for `Z = X` in the
          triangle).
        seed (int): default seed of :func:`sample`.
    """
    def __init__(self, id_, params=None, seed=0):
        self.id = setting_id(id_)
        merged = dict(_defaults[self.id])
        unknown = set(params or {}) - set(merged)
        if unknown:
            raise ConfigError("Setting {} has no parameter(s) {}."
                              .format(self.id, sorted(unknown)))
        merged.update(params or {})
        self.params = merged
        self.seed = seed
        self._validate()

    def _validate(self):
        p = self.params
        for name, value in p.items():
            if not (0. <= float(value) <= 1.):
                raise ConfigError("Parameter {} of {} must lie in [0, 1], "
                                  "got {}.".format(name, self.id, value))
        #At the end points the known boundaries of the construction change.
        for name in ("bias", "p1", "p2", "p3", "fidelity"):
            if name in p and float(p[name]) in (0., 1.):
                raise ConfigError("Parameter {} of {} must lie strictly "
                                  "inside (0, 1).".format(name, self.id))
        if "w_fidelity" in p and abs(p["w_fidelity"] - 0.5) < 1e-12:
            raise ConfigError("w_fidelity = 0.5 makes W irrelevant to Y.")
        if "p1" in p and abs(p["p1"] + p["p2"] + p["p3"] - 1.) > 1e-9:
            raise ConfigError("Source probabilities of {} sum to {}, not 1."
                              .format(self.id, p["p1"] + p["p2"] + p["p3"]))

    @property
    def target(self):
        return "Y"

    def __repr__(self):
        return "SettingSpec({!r}, {}, seed={})".format(self.id, self.params,
                                                       self.seed)

GroundTruth = namedtuple("GroundTruth", ["boundaries", "unique",
                                         "composition_holds", "target",
                                         "scope"])
"""Known Markov boundary structure of a construction. `composition_holds` is
None when it is not characterized.
"""

def _truth(boundaries, composition, scope):
    sets = tuple(frozenset(b) for b in boundaries)
    return GroundTruth(sets, len(sets) == 1, composition, "Y", frozenset(scope))

def _bits(m):
    """Returns all `2**m` binary rows of width `m` in lexicographic order."""
    return (np.arange(2**m)[:, None] >> np.arange(m)[::-1]) & 1

def _plan(spec):
    """Returns `(free, copies, noisy)` for a simulation setting: the independent
    columns, the exact copies `{column: source}` and the noisy `Z` copies.
    """
    sid = spec.id
    if sid == "S1":
        return ["X{}".format(i) for i in range(1, 11)], {}, []
    if sid == "S2":
        return (["X{}".format(i) for i in range(1, 11) if i != 4],
                {"X4": "X2"}, [])
    if sid == "S3":
        return ["X{}".format(i) for i in range(1, 9)], {}, ["X9", "X10"]
    return (["X{}".format(i) for i in range(1, 8)],
            {"X8": "X1", "X9": "X2"}, ["X10"])

def _sources(spec, cols):
    if spec.id in ("S1", "S2"):
        return [cols["X1"], cols["X2"], cols["X3"]]
    return [cols["X1"] ^ cols["X2"], cols["X3"], cols["X4"]]

def _setting_law(spec):
    """Returns the exact law over :data:`SETTING_VARS` of a simulation
    setting by enumerating the free bits, the source selector and the noise
    branch of the `Z` copies.
    """
    p = spec.params
    free, copies, noisy = _plan(spec)
    rows = _bits(len(free))
    base = np.prod(np.where(rows == 1, p["bias"], 1. - p["bias"]), axis=1)
    cols = {v: rows[:, i] for i, v in enumerate(free)}
    for v, source in copies.items():
        cols[v] = cols[source]

    z = cols["X1"] ^ cols["X2"]
    fid = p.get("fidelity", 1.)
    branches = [(fid, z), (1. - fid, 1 - z)] if noisy else [(1., None)]
    states, probs = [], []
    for ps, source in zip([p["p1"], p["p2"], p["p3"]], _sources(spec, cols)):
        for pn, value in branches:
            block = dict(cols)
            block["Y"] = source
            for v in noisy:
                block[v] = value
            states.append(np.column_stack([block[v] for v in SETTING_VARS]))
            probs.append(base*ps*pn)
    return DiscreteDistribution.from_arrays(
        [(v, 2) for v in SETTING_VARS], np.vstack(states), np.concatenate(probs))

def _setting_truth(spec):
    scope = SETTING_VARS[:-1]
    if spec.id == "S1":
        return _truth([["X1", "X2", "X3"]], True, scope)
    if spec.id == "S2":
        return _truth([["X1", "X2", "X3"], ["X1", "X3", "X4"]], True, scope)
    if spec.id == "S3":
        return _truth([["X1", "X2", "X3", "X4"]], False, scope)
    return _truth([["X1", "X2", "X3", "X4"], ["X2", "X3", "X4", "X8"],
                   ["X1", "X3", "X4", "X9"], ["X3", "X4", "X8", "X9"]],
                  False, scope)

def fig1_distribution(w_fidelity=0.75):
    """Returns the four-variable example in which `Y` has the two Markov
    boundaries `{X, W}` and `{Z, W}`. `(Z, X)` is uniform over the pairs
    `00, 01, 10, 11, 22`, `W` is a fair coin, `Y = 0` whenever `X < 2` and for
    `X = 2` we have `Y = 1` with probability `w_fidelity` if `W = 0` and
    `1 - w_fidelity` if `W = 1` (`Y = 2` otherwise). `X = 2` happens exactly
    when `Z = 2`, so `X` and `Z` carry the same information about `Y`.

    Args:
        w_fidelity (float): must differ from 0.5 for `W` to matter.
    """
    table = {}
    for z, x in [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)]:
        for w in (0, 1):
            if x < 2:
                table[(z, x, 0, w)] = 0.1
                continue
            p1 = w_fidelity if w == 0 else 1. - w_fidelity
            for y, py in ((1, p1), (2, 1. - p1)):
                if py > 0:
                    table[(z, x, y, w)] = 0.1*py
    return DiscreteDistribution([("Z", 3), ("X", 3), ("Y", 3), ("W", 2)],
                                table)

_triangle_y = {(0, 0): 0.1, (0, 1): 0.3, (1, 0): 0.7, (1, 1): 0.9}
"""P(Y=1 | Z, X) of the confounder triangle."""

def confounder_triangle(copy=True):
    """Returns the binary triangle `Z -> X -> Y`, `Z -> Y` with a fair coin
    `Z`. With `copy`, `X = Z` almost surely; otherwise `X` agrees with `Z`
    with probability 0.8, so every assignment is possible.
    """
    agree = 1. if copy else 0.8
    table = {}
    for z in (0, 1):
        for x in (0, 1):
            px = agree if x == z else 1. - agree
            for y in (0, 1):
                py = _triangle_y[(z, x)] if y == 1 else 1. - _triangle_y[(z, x)]
                if px*py > 0:
                    table[(z, x, y)] = 0.5*px*py
    return DiscreteDistribution([("Z", 2), ("X", 2), ("Y", 2)], table)

def build_exact(spec):
    """Returns `(distribution, truth)` for the construction described by
    `spec`: the exact joint law and its :data:`GroundTruth`.
    """
    if spec.id in SETTINGS:
        return _setting_law(spec), _setting_truth(spec)
    if spec.id == "Fig1":
        d = fig1_distribution(spec.params["w_fidelity"])
        return d, _truth([["X", "W"], ["Z", "W"]], None, ["Z", "X", "W"])
    copy = spec.params["copy"] >= 0.5
    truth = [["X"], ["Z"]] if copy else [["Z", "X"]]
    return confounder_triangle(copy), _truth(truth, None, ["Z", "X"])

def _sample_setting(spec, n, rng):
    """Draws `n` rows of a simulation setting from its generative description.
    """
    p = spec.params
    free, copies, noisy = _plan(spec)
    bits = (rng.random((n, len(free))) < p["bias"]).astype(np.int64)
    cols = {v: bits[:, i] for i, v in enumerate(free)}
    for v, source in copies.items():
        cols[v] = cols[source]

    pick = rng.choice(3, size=n, p=[p["p1"], p["p2"], p["p3"]])
    cols["Y"] = np.choose(pick, _sources(spec, cols))
    if noisy:
        z = cols["X1"] ^ cols["X2"]
        agree = rng.random(n) < p["fidelity"]
        value = np.where(agree, z, 1 - z)
        for v in noisy:
            cols[v] = value
    return np.column_stack([cols[v] for v in SETTING_VARS])

def sample(spec, n, seed=None):
    """Returns a :class:`~mbuniq.citest.dataset.Dataset` of `n` i.i.d. rows of
    the construction; the same seed gives the same rows.

    Args:
        seed (int): overrides `spec.seed`.
    """
    from mbuniq.citest.dataset import Dataset, sample_distribution
    if n < 1:
        raise ConfigError("Sample size must be at least 1, got {}.".format(n))
    seed = spec.seed if seed is None else seed
    if spec.id in SETTINGS:
        rng = np.random.default_rng(seed)
        return Dataset([(v, 2) for v in SETTING_VARS],
                       _sample_setting(spec, n, rng))
    return sample_distribution(build_exact(spec)[0], n, seed)
