"""Conditional-independence tests on a :class:`~mbuniq.citest.dataset.Dataset`.

Both tests work on compound variables: a set of ids is encoded as one variable
over its observed product states, so `x`, `y` and `cond` may each be a single
id or a set of ids.
"""
import numpy as np
from scipy import stats
from mbuniq.dist.measures import cmi_codes
from mbuniq.errors import OverlapError, ConfigError, MbuniqError
from mbuniq.utility import idset

class CITestResult(object):
    """Outcome of a single conditional-independence test.

    Attributes:
        statistic (float): the G² statistic `2 n CMI`.
        dof (int): degrees of freedom from the observed states per stratum.
        p_value (float): in `[0, 1]`.
        independent (bool): `p_value > alpha`.
        alpha (float): significance level of the decision.
        test (str): `g2` or `permutation`.
    """
    __slots__ = ("statistic", "dof", "p_value", "independent", "alpha", "test")
    def __init__(self, statistic, dof, p_value, alpha, test):
        self.statistic = float(statistic)
        self.dof = int(dof)
        self.p_value = float(p_value)
        self.alpha = float(alpha)
        self.independent = self.p_value > self.alpha
        self.test = test

    def __eq__(self, other):
        return (isinstance(other, CITestResult) and
                all(getattr(self, a) == getattr(other, a)
                    for a in self.__slots__))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return ("CITestResult({}: G2={:.4g}, dof={}, p={:.4g}, independent={})"
                .format(self.test, self.statistic, self.dof, self.p_value,
                        self.independent))

    def to_dict(self):
        return {a: getattr(self, a) for a in self.__slots__}

def _default_alpha(alpha):
    if alpha is None:
        from mbuniq.config import get_option
        alpha = get_option("ci", "alpha", 0.05, float)
    if not (0. < alpha < 1.):
        raise ConfigError("alpha must lie in (0, 1), got {}.".format(alpha))
    return alpha

def _encode(ds, x, y, cond):
    """Returns the compound codes of `x`, `y` and `cond` after checking that the
    sets are non-empty where needed and pairwise disjoint.
    """
    xs, ys, ls = idset(x), idset(y), idset(cond)
    if len(xs) == 0 or len(ys) == 0:
        raise MbuniqError("Both sides of a CI test need at least one variable.")
    shared = (xs & ys) | (xs & ls) | (ys & ls)
    if shared:
        raise OverlapError(shared)
    if ds.n == 0:
        raise MbuniqError("Cannot test independence on an empty dataset.")
    return ds.codes(xs)[0], ds.codes(ys)[0], ds.codes(ls)[0]

def _plugin(xc, yc, lc):
    n = len(xc)
    return max(cmi_codes(xc, yc, lc, np.full(n, 1.0/n)), 0.0)

def cmi_plugin(ds, x, y, cond=None):
    """Returns the plug-in conditional mutual information (nats) of `x` and `y`
    given `cond` from the empirical frequencies of `ds`. This equals
    :func:`~mbuniq.dist.measures.cmi_exact` on `ds.empirical()`.
    """
    return _plugin(*_encode(ds, x, y, cond))

def _dof(xc, yc, lc):
    """Returns `(dof, cells)`: the sum over observed strata of
    `(r_x - 1)(r_y - 1)` and of `r_x r_y`, where `r_x` and `r_y` count the
    states of `x` and `y` observed in the stratum.
    """
    nl = int(lc.max()) + 1
    def observed(codes):
        width = int(codes.max()) + 1
        return np.bincount(np.unique(lc*width + codes)//width, minlength=nl)
    rx, ry = observed(xc), observed(yc)
    seen = rx > 0
    rx, ry = rx[seen], ry[seen]
    return int(np.sum((rx - 1)*(ry - 1))), int(np.sum(rx*ry))

def _rows_per_cell(rows_per_cell):
    if rows_per_cell is None:
        from mbuniq.config import get_option
        rows_per_cell = get_option("ci", "rows_per_cell", 5., float)
    if rows_per_cell < 0:
        raise ConfigError("rows_per_cell cannot be negative, got {}."
                          .format(rows_per_cell))
    return rows_per_cell

def g2_ci_test(ds, x, y, cond=None, alpha=None, rows_per_cell=None):
    """Runs the G² likelihood-ratio test of `x` independent of `y` given
    `cond`. Degrees of freedom count only the states observed in each
    stratum so that structural zeros do not inflate them; zero degrees of
    freedom give `p = 1`.

    The chi-square approximation only holds with enough rows per cell of the
    stratified table. When there are fewer than `rows_per_cell` rows per
    observed cell on average, the test is not performed and `p = 1`.

    Args:
        ds (Dataset): observed rows.
        alpha (float): significance level; defaults to `[ci] alpha`.
        rows_per_cell (float): smallest average count per observed cell for
          which the test is performed; defaults to `[ci] rows_per_cell`; 0
          always tests.
    """
    alpha = _default_alpha(alpha)
    rows_per_cell = _rows_per_cell(rows_per_cell)
    xc, yc, lc = _encode(ds, x, y, cond)
    g2 = 2*len(xc)*_plugin(xc, yc, lc)
    dof, cells = _dof(xc, yc, lc)
    if dof > 0 and len(xc) >= rows_per_cell*cells:
        p = float(stats.chi2.sf(g2, dof))
    else:
        p = 1.0
    return CITestResult(g2, dof, min(max(p, 0.), 1.), alpha, "g2")

def _stratified(xc, lc, rng):
    """Returns `xc` permuted within the strata of `lc`."""
    target = np.argsort(lc, kind="stable")
    source = np.lexsort((rng.random(len(lc)), lc))
    result = np.empty_like(xc)
    result[target] = xc[source]
    return result

def _batch(xc, yc, lc, seeds):
    out = np.empty(len(seeds))
    for j, ss in enumerate(seeds):
        out[j] = _plugin(_stratified(xc, lc, np.random.default_rng(ss)), yc, lc)
    return out

def permutation_ci_test(ds, x, y, cond=None, alpha=None, B=None, seed=None,
                        n_jobs=1, batch_size=50):
    """Runs a permutation test of `x` independent of `y` given `cond`: `x` is
    shuffled within each stratum of `cond` and the p-value is
    `(1 + #{permuted CMI >= observed}) / (B + 1)`.

    Args:
        B (int): number of permutations, at least 99; defaults to
          `[ci] permutations`.
        seed (int): seed of the permutations; the result does not depend on
          `n_jobs`.
        n_jobs (int): worker processes for :class:`joblib.Parallel`.
        batch_size (int): permutations per joblib task.
    """
    alpha = _default_alpha(alpha)
    if B is None:
        from mbuniq.config import get_option
        B = get_option("ci", "permutations", 199, int)
    if B < 99:
        raise ConfigError("A permutation test needs B >= 99, got {}.".format(B))
    xc, yc, lc = _encode(ds, x, y, cond)
    observed = _plugin(xc, yc, lc)

    seeds = np.random.SeedSequence(seed).spawn(int(B))
    batches = [seeds[i:i + batch_size] for i in range(0, B, batch_size)]
    if n_jobs == 1:
        permuted = np.concatenate([_batch(xc, yc, lc, b) for b in batches])
    else:
        from joblib import Parallel, delayed
        permuted = np.concatenate(Parallel(n_jobs=n_jobs)(
            delayed(_batch)(xc, yc, lc, b) for b in batches))

    exceed = int(np.sum(permuted >= observed - 1e-12))
    p = (1. + exceed)/(B + 1.)
    return CITestResult(2*len(xc)*observed, _dof(xc, yc, lc)[0], p, alpha,
                        "permutation")
