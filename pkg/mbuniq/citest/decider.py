"""Deciders answer "is `x` independent of `y` given `cond`?" either exactly
from a distribution or statistically from data, so that the boundary
algorithms in :mod:`mbuniq.algorithms` run unchanged in both regimes.
"""
from mbuniq import msg
from mbuniq.dist.measures import cmi_exact
from mbuniq.errors import ConfigError
from mbuniq.utility import idset, derive_seed, text_key

class CIDecider(object):
    """Base class for conditional-independence deciders.

    Attributes:
        order (tuple): variable ids in column order; algorithms break ties
          by position in this order.
        calls (int): number of independence decisions made (cache hits
          included).
    """
    def __init__(self, order):
        self.order = tuple(order)
        self.calls = 0

    def independent(self, x, y, cond=None):
        """Returns True if `x` and `y` are judged independent given `cond`.
        """
        raise NotImplementedError()

    def delta(self, x, y, cond=None):
        """Returns the association `x`-`y` given `cond` that the algorithms
        minimize over candidates (conditional mutual information).
        """
        raise NotImplementedError()

    def describe(self):
        """Returns a JSON-serializable description of the decider."""
        raise NotImplementedError()

class ExactDecider(CIDecider):
    """Decides independence by thresholding the exact CMI of a distribution.

    Args:
        d (DiscreteDistribution): the exact law.
        tol (float): CMI tolerance; defaults to `[measures] ci_tolerance`.
    """
    def __init__(self, d, tol=None):
        super(ExactDecider, self).__init__(d.ids)
        if tol is None:
            from mbuniq.config import get_option
            tol = get_option("measures", "ci_tolerance", 1e-9, float)
        self.d = d
        self.tol = tol

    def delta(self, x, y, cond=None):
        return cmi_exact(self.d, x, y, cond).value

    def independent(self, x, y, cond=None):
        self.calls += 1
        return self.delta(x, y, cond) <= self.tol

    def describe(self):
        return {"kind": "exact", "tol": self.tol}

class TestDecider(CIDecider):
    """Decides independence with a statistical test on a dataset. Results are
    cached per unordered `{x, y}` pair and conditioning set.

    Args:
        ds (Dataset): observed rows.
        test (str): `g2` or `permutation`; defaults to `[ci] engine`.
        alpha (float): significance level; defaults to `[ci] alpha`.
        seed (int): master seed of the permutation tests. Each test draws from
          a seed derived from this one and its variable sets, so answers do not
          depend on the order in which an algorithm asks.
        permutations (int): permutations per test for `test="permutation"`.
    """
    __test__ = False

    def __init__(self, ds, test=None, alpha=None, seed=0, permutations=None):
        super(TestDecider, self).__init__(ds.ids)
        from mbuniq.config import get_option
        if test is None:
            test = get_option("ci", "engine", "g2")
        if test not in ("g2", "permutation"):
            raise ConfigError("Unknown CI test {!r}; use g2 or permutation."
                              .format(test))
        self.ds = ds
        self.test = test
        self.alpha = alpha if alpha is not None else get_option("ci", "alpha",
                                                                0.05, float)
        self.seed = seed
        self.permutations = permutations
        self._cache = {}

    def _key(self, x, y, cond):
        return (frozenset([idset(x), idset(y)]), idset(cond))

    def _seed(self, key):
        parts = sorted(",".join(sorted(s)) for s in key[0])
        text = "|".join(parts + [",".join(sorted(key[1]))])
        return derive_seed(self.seed, text_key(text))

    def result(self, x, y, cond=None):
        """Returns the (cached) :class:`~mbuniq.citest.stats.CITestResult` for
        `x` against `y` given `cond`.
        """
        from mbuniq.citest.stats import g2_ci_test, permutation_ci_test
        key = self._key(x, y, cond)
        if key not in self._cache:
            #The permuted side must not depend on argument order.
            x, y = sorted([idset(x), idset(y)], key=sorted)
            if self.test == "g2":
                r = g2_ci_test(self.ds, x, y, cond, self.alpha)
            else:
                r = permutation_ci_test(self.ds, x, y, cond, self.alpha,
                                        self.permutations, self._seed(key))
            msg.std("CI {} vs {} | {}: {}".format(sorted(idset(x)),
                                                  sorted(idset(y)),
                                                  sorted(idset(cond)), r), 3)
            self._cache[key] = r
        return self._cache[key]

    def delta(self, x, y, cond=None):
        from mbuniq.citest.stats import cmi_plugin
        return cmi_plugin(self.ds, x, y, cond)

    def independent(self, x, y, cond=None):
        self.calls += 1
        return self.result(x, y, cond).independent

    def describe(self):
        return {"kind": "test", "test": self.test, "alpha": self.alpha,
                "seed": self.seed, "permutations": self.permutations}
