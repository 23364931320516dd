"""Markov boundary discovery over a :class:`~mbuniq.citest.decider.CIDecider`:
the assumption-free backward elimination and the randomized grow/shrink KIAMB
baseline.
"""
import numpy as np
from mbuniq import msg
from mbuniq.errors import ScopeError, ConfigError, UnknownVariableError
from mbuniq.utility import idset, ordered

tie_tolerance = 1e-12
"""float: association values within this distance of the optimum count as
ties; ties go to the lowest position in the decider's variable order.
"""

class MBResult(object):
    """A discovered Markov boundary together with the decisions that led to it.

    Attributes:
        boundary (frozenset): the returned variable set.
        target (str): id of the target.
        scope (frozenset): candidate variables searched.
        trace (list): of dicts with keys `phase`, `candidate`, `delta` and
          `independent`, one per decision in the order they were taken.
        algorithm (str): `alg1` or `kiamb`.
    """
    def __init__(self, boundary, target, scope, trace, algorithm, order=None):
        self.boundary = frozenset(boundary)
        self.target = target
        self.scope = frozenset(scope)
        self.trace = list(trace)
        self.algorithm = algorithm
        self.order = list(order) if order is not None else sorted(self.scope)

    def __repr__(self):
        return "MBResult({}: {})".format(self.algorithm,
                                         ordered(self.boundary, self.order))

    def to_dict(self):
        return {"algorithm": self.algorithm, "target": self.target,
                "scope": ordered(self.scope, self.order),
                "boundary": ordered(self.boundary, self.order),
                "trace": self.trace}

def _check(ci, scope, y):
    """Returns the scope as a list in decider order after validating it."""
    scope = idset(scope)
    if y in scope:
        raise ScopeError("Target {} cannot be part of the scope.".format(y))
    unknown = (scope | {y}) - set(ci.order)
    if unknown:
        raise UnknownVariableError(unknown, ci.order)
    return ordered(scope, ci.order)

def _argbest(values, sign):
    """Returns the index of the smallest (`sign=1`) or largest (`sign=-1`)
    value, the first one among ties.
    """
    scaled = sign*np.asarray(values, dtype=float)
    best = scaled.min()
    return int(np.nonzero(scaled <= best + tie_tolerance)[0][0])

def alg1_backward_elimination(ci, scope, y, delta=None):
    """Returns one Markov boundary of `y` by backward elimination: starting from
    the whole scope, the candidate with the weakest association to `y` given
    the others is removed while the decider finds it independent.

    Args:
        ci (CIDecider): independence decider.
        scope (set): candidate variables.
        y (str): target id.
        delta (callable): association `delta(x, y, cond)`; defaults to the
          decider's own CMI.
    """
    delta = delta or ci.delta
    current = _check(ci, scope, y)
    order = list(current)
    trace = []
    while len(current) > 0:
        values = [delta(x, y, set(current) - {x}) for x in current]
        i = _argbest(values, 1)
        x0 = current[i]
        rest = set(current) - {x0}
        independent = bool(ci.independent(x0, y, rest))
        trace.append({"phase": "eliminate", "candidate": x0,
                      "delta": float(values[i]), "independent": independent})
        if not independent:
            break
        msg.std("Removed {} (delta={:.4g}).".format(x0, values[i]), 3)
        current = [x for x in current if x != x0]

    return MBResult(current, y, order, trace, "alg1", ci.order)

def kiamb(ci, scope, y, k=None, seed=None):
    """Returns a Markov boundary estimate of `y` by KIAMB. In every growing
    step, the candidates dependent on `y` given the current blanket are
    sub-sampled to `max(1, floor(k |candidates|))` members and the most
    associated one joins; a shrinking pass then removes members independent of
    `y` given the rest. `k = 1` is IAMB. Correctness needs the composition
    property.

    Args:
        k (float): sub-sampling fraction in `[0, 1]`; defaults to `[kiamb] k`.
        seed (int): seed of the sub-sampling.
    """
    if k is None:
        from mbuniq.config import get_option
        k = get_option("kiamb", "k", 0.8, float)
    if not (0. <= k <= 1.):
        raise ConfigError("KIAMB k must lie in [0, 1], got {}.".format(k))
    order = _check(ci, scope, y)
    rng = np.random.default_rng(seed)
    blanket, trace = [], []

    while True:
        cond = set(blanket)
        candidates = [x for x in order if x not in cond and
                      not ci.independent(x, y, cond)]
        if len(candidates) == 0:
            break
        size = max(1, int(np.floor(len(candidates)*k)))
        picked = sorted(rng.choice(len(candidates), size=size, replace=False))
        pool = [candidates[i] for i in picked]
        values = [ci.delta(x, y, cond) for x in pool]
        i = _argbest(values, -1)
        trace.append({"phase": "grow", "candidate": pool[i],
                      "delta": float(values[i]), "independent": False})
        blanket = ordered(cond | {pool[i]}, order)

    for x in list(blanket):
        rest = set(blanket) - {x}
        independent = bool(ci.independent(x, y, rest))
        trace.append({"phase": "shrink", "candidate": x,
                      "delta": float(ci.delta(x, y, rest)),
                      "independent": independent})
        if independent:
            blanket = [v for v in blanket if v != x]

    return MBResult(blanket, y, order, trace, "kiamb", ci.order)
