"""Brute-force ground truth for Markov boundaries of exact distributions.

The oracle sweeps every subset of the scope, so it is meant for validating the
fast algorithms in :mod:`mbuniq.algorithms` and for small command-line
queries; scopes are capped at `[oracle] max_scope` variables (20 by default).
"""
from itertools import combinations
from mbuniq import msg
from mbuniq.dist.distribution import marginal
from mbuniq.dist.measures import is_ci_exact
from mbuniq.dist.perturb import NoiseSpec, epsilon_noise, zero_witnesses
from mbuniq.errors import ScopeError, NormalizationError
from mbuniq.utility import idset, ordered

def _sorted_sets(sets, order):
    """Sorts variable sets by size and then by the positions of their members
    in `order`.
    """
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted(sets, key=lambda s: (len(s), sorted(pos[v] for v in s))))

class BoundarySet(object):
    """All Markov boundaries of `target` within `scope`.

    Attributes:
        boundaries (tuple): of `frozenset`, ordered by size then variable order.
        target (str): id of the target variable.
        scope (frozenset): candidate variables.
        blankets (tuple): every Markov blanket met in the sweep (supersets of
          boundaries included), same ordering as `boundaries`.
    """
    def __init__(self, boundaries, target, scope, blankets=None, order=None):
        order = order if order is not None else sorted(scope)
        self.target = target
        self.scope = frozenset(scope)
        self.order = list(order)
        self.boundaries = _sorted_sets([frozenset(b) for b in boundaries], order)
        self.blankets = _sorted_sets([frozenset(b) for b in (blankets or [])],
                                     order)

    def __len__(self):
        return len(self.boundaries)

    def __iter__(self):
        return iter(self.boundaries)

    def __contains__(self, boundary):
        return frozenset(boundary) in self.boundaries

    @property
    def unique(self):
        """Returns True if the target has exactly one Markov boundary."""
        return len(self.boundaries) == 1

    @property
    def union(self):
        return frozenset().union(*self.boundaries)

    @property
    def intersection(self):
        """Returns the variables shared by every boundary."""
        if len(self.boundaries) == 0:
            return frozenset()
        return frozenset.intersection(*self.boundaries)

    def to_dict(self):
        return {"target": self.target,
                "scope": ordered(self.scope, self.order),
                "boundaries": [ordered(b, self.order) for b in self.boundaries],
                "unique": self.unique}

class EssentialSet(object):
    """Variables that every Markov boundary of the target contains.

    Attributes:
        members (frozenset): the essential variables.
    """
    def __init__(self, members, order=None):
        self.members = frozenset(members)
        self.order = list(order) if order is not None else sorted(self.members)

    def __iter__(self):
        return iter(ordered(self.members, self.order))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if isinstance(other, EssentialSet):
            return self.members == other.members
        return self.members == frozenset(other)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return "EssentialSet({})".format(ordered(self.members, self.order))

class ExactVerdict(object):
    """Uniqueness verdict computed from an exact distribution.

    Attributes:
        unique (bool): True if the target has a single Markov boundary.
        essential (EssentialSet): the essential variables.
        boundary (frozenset): the unique boundary (the essential set) when
          `unique`; otherwise None.
        witnesses (tuple): when not unique, variable sets outside the
          essential set that the target still depends on given it.
    """
    def __init__(self, unique, essential, witnesses=()):
        self.unique = unique
        self.essential = essential
        self.boundary = essential.members if unique else None
        self.witnesses = tuple(witnesses)

    def __repr__(self):
        if self.unique:
            return "Unique({})".format(list(self.essential))
        return "Multiple({})".format([sorted(w) for w in self.witnesses])

def _check_scope(d, y, scope, guard=True):
    """Validates the target and scope of an oracle query.

    Returns:
        tuple: `(scope, order)` with `scope` a frozenset and `order` its members
        in the column order of `d`.
    """
    from mbuniq.config import get_option
    scope = idset(scope)
    if y in scope:
        raise ScopeError("Target {} cannot be part of the scope.".format(y))
    d.index(scope | {y})
    limit = get_option("oracle", "max_scope", 20, int)
    if guard and len(scope) > limit:
        raise ScopeError("Scope has {} variables; the oracle sweeps at most {}."
                         .format(len(scope), limit))
    return scope, ordered(scope, d.ids)

def is_blanket(d, y, scope, m, tol=None):
    """Returns True if `m` is a Markov blanket of `y` within `scope`, i.e. if
    `y` is independent of `scope - m` given `m`.
    """
    scope = idset(scope)
    return is_ci_exact(d, y, scope - idset(m), idset(m), tol)

def enumerate_markov_boundaries(d, y, scope, tol=None):
    """Returns every Markov boundary of `y` within `scope` by sweeping all
    subsets of `scope` in order of increasing size.

    Args:
        d (DiscreteDistribution): exact joint distribution.
        y (str): target variable id.
        scope (set): candidate variable ids.
        tol (float): CMI tolerance for the blanket checks.

    Raises:
        ScopeError: if `y` is in `scope` or the scope is too large.
    """
    scope, order = _check_scope(d, y, scope)
    local = marginal(d, scope | {y})
    boundaries, blankets = [], []
    for size in range(len(order) + 1):
        for subset in combinations(order, size):
            m = frozenset(subset)
            if not is_blanket(local, y, scope, m, tol):
                continue
            blankets.append(m)
            if not any(b < m for b in boundaries):
                msg.std("Markov boundary of {}: {}".format(y, list(subset)), 2)
                boundaries.append(m)
    return BoundarySet(boundaries, y, scope, blankets, order)

def essential_set_exact(d, y, scope, tol=None):
    """Returns the variables `w` of `scope` that `y` depends on given all the
    other scope variables.
    """
    scope, order = _check_scope(d, y, scope, guard=False)
    members = [w for w in order
               if not is_ci_exact(d, y, {w}, scope - {w}, tol)]
    return EssentialSet(members, order)

def uniqueness_exact(d, y, scope, tol=None):
    """Decides whether `y` has a unique Markov boundary within `scope`: this
    holds exactly when the essential set is itself a Markov blanket.

    Returns:
        ExactVerdict: unique with boundary `E`, or multiple with the
        dependence witnesses outside `E`.
    """
    essential = essential_set_exact(d, y, scope, tol)
    scope, order = _check_scope(d, y, scope, guard=False)
    E = essential.members
    if is_blanket(d, y, scope, E, tol):
        return ExactVerdict(True, essential)

    rest = ordered(scope - E, order)
    witnesses = [frozenset([w]) for w in rest
                 if not is_ci_exact(d, y, {w}, E, tol)]
    if len(witnesses) == 0:
        witnesses = [frozenset(rest)]
    return ExactVerdict(False, essential, witnesses)

def variation_dependence_witness(d, x, rest):
    """Returns a pair `(x_val, k_val)` of assignments to `x` and to the
    variables `rest` that are each possible but never occur together, or None
    when `x` and `rest` are variation independent.
    """
    found = zero_witnesses(d, x, rest)
    return found[0] if len(found) > 0 else None

def noised_boundary_is_unique(d, y, scope, m0, eps, tol=None):
    """Noises every scope variable outside the boundary `m0` with uniform
    noise at level `eps` and checks that `m0` is then the only Markov boundary.

    Raises:
        NormalizationError: if `eps` is not in `(0, 1)`; zero noise changes
          nothing and full noise cuts the noised variables off from `y`.
        ScopeError: if `m0` is not a Markov boundary of `y` within `scope`.
    """
    if not (0. < float(eps) < 1.):
        raise NormalizationError("eps must lie in (0, 1), got {}.".format(eps))
    m0 = idset(m0)
    found = enumerate_markov_boundaries(d, y, scope, tol)
    if m0 not in found:
        raise ScopeError("{} is not a Markov boundary of {}; boundaries are {}."
                         .format(sorted(m0), y,
                                 [sorted(b) for b in found.boundaries]))
    noised = d
    for v in ordered(found.scope - m0, d.ids):
        noised = epsilon_noise(noised, v,
                               NoiseSpec.uniform(eps, d.meta(v).card))
    after = enumerate_markov_boundaries(noised, y, scope, tol)
    return after.boundaries == (m0,)
