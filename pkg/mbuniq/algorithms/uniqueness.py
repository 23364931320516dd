"""Tests for whether a target has a unique Markov boundary, all parameterized
over a :class:`~mbuniq.citest.decider.CIDecider`:

- :func:`alg2_uniqueness` re-discovers a boundary with each member of the
  first boundary left out and checks whether the new set shields the target
  from the old one.
- :func:`alg3_uniqueness` checks that every member of the first boundary is
  essential.
- :func:`alg4_uniqueness` builds the essential set directly and checks that it
  is a Markov blanket.

Algorithms 2 and 3 take a boundary-producing callable `omega(ci, scope, y)`
returning an :class:`~mbuniq.algorithms.boundary.MBResult`; build one with
:func:`omega_af` or :func:`omega_kiamb`.
"""
from collections import namedtuple
from mbuniq import msg
from mbuniq.algorithms.boundary import alg1_backward_elimination, kiamb
from mbuniq.utility import idset, ordered

Witness = namedtuple("Witness", ["index", "variable", "boundary"])
"""Evidence of a second boundary: the position `index` of the left-out
`variable` within the first boundary and the variable set `boundary` that
passed the test (for :func:`alg4_uniqueness` only `boundary` is set, to the
essential set).
"""

class UniquenessVerdict(object):
    """Outcome of a uniqueness test.

    Attributes:
        unique (bool): True if a unique Markov boundary was found.
        witness (Witness): evidence of multiplicity; None when `unique`.
        m0 (frozenset): the reference boundary (the essential set for
          :func:`alg4_uniqueness`).
        algorithm (str): name of the test that produced the verdict.
        trace (list): decisions taken, for the command-line `--trace` flag.
    """
    def __init__(self, unique, m0, algorithm, witness=None, trace=None,
                 order=None):
        self.unique = bool(unique)
        self.m0 = frozenset(m0)
        self.algorithm = algorithm
        self.witness = None if unique else witness
        self.trace = list(trace or [])
        self.order = list(order) if order is not None else sorted(self.m0)

    def __repr__(self):
        if self.unique:
            return "Unique({})".format(ordered(self.m0, self.order))
        return "Multiple({}, witness={})".format(ordered(self.m0, self.order),
                                                 self.witness)

    def to_dict(self):
        result = {"algorithm": self.algorithm, "unique": self.unique,
                  "m0": ordered(self.m0, self.order), "trace": self.trace}
        if self.witness is not None:
            result["witness"] = {
                "index": self.witness.index,
                "variable": self.witness.variable,
                "boundary": ordered(self.witness.boundary, self.order)}
        return result

def omega_af(delta=None):
    """Returns a boundary producer running backward elimination with the
    association `delta` (the decider's CMI by default).
    """
    def omega(ci, scope, y):
        return alg1_backward_elimination(ci, scope, y, delta)
    omega.name = "af"
    return omega

def omega_kiamb(k=None, seed=None):
    """Returns a boundary producer running KIAMB with fraction `k` and the
    sub-sampling `seed`; every call restarts from the same seed.
    """
    def omega(ci, scope, y):
        return kiamb(ci, scope, y, k, seed)
    omega.name = "kiamb"
    return omega

def alg2_uniqueness(ci, scope, y, omega=None):
    """Tests uniqueness by leave-one-out re-discovery. With `M0 = omega(scope)`,
    every member `Xi` of `M0` in turn is left out of the scope and a boundary
    `Mi` is found without it; if `y` is independent of `M0 - Mi` given `Mi`,
    then `Mi` is a second boundary and the verdict is multiple.

    Args:
        ci (CIDecider): independence decider.
        scope (set): candidate variables.
        y (str): target id.
        omega (callable): boundary producer; defaults to :func:`omega_af`.
    """
    omega = omega or omega_af()
    scope = idset(scope)
    first = omega(ci, scope, y)
    m0 = first.boundary
    trace = [{"step": "m0", "boundary": ordered(m0, ci.order)}]
    for i, xi in enumerate(ordered(m0, ci.order)):
        mi = omega(ci, scope - {xi}, y).boundary
        shielded = bool(ci.independent(y, m0 - mi, mi))
        trace.append({"step": "leave-out", "index": i, "variable": xi,
                      "boundary": ordered(mi, ci.order),
                      "independent": shielded})
        if shielded:
            msg.std("{} has a second boundary {} without {}."
                    .format(y, ordered(mi, ci.order), xi), 3)
            return UniquenessVerdict(False, m0, "alg2", Witness(i, xi, mi),
                                     trace, ci.order)
    return UniquenessVerdict(True, m0, "alg2", None, trace, ci.order)

def alg3_uniqueness(ci, scope, y, omega=None):
    """Tests uniqueness by checking that every member `Xi` of the boundary
    `M0 = omega(scope)` is essential, i.e. that `Xi` and `y` are dependent
    given `scope - {Xi}`. Conditioning on the whole scope costs power at small
    sample sizes, which shows up as spurious multiple verdicts.
    """
    omega = omega or omega_af()
    scope = idset(scope)
    m0 = omega(ci, scope, y).boundary
    trace = [{"step": "m0", "boundary": ordered(m0, ci.order)}]
    for i, xi in enumerate(ordered(m0, ci.order)):
        rest = scope - {xi}
        independent = bool(ci.independent(xi, y, rest))
        trace.append({"step": "essential", "index": i, "variable": xi,
                      "independent": independent})
        if independent:
            return UniquenessVerdict(False, m0, "alg3", Witness(i, xi, rest),
                                     trace, ci.order)
    return UniquenessVerdict(True, m0, "alg3", None, trace, ci.order)

def alg4_uniqueness(ci, scope, y):
    """Tests uniqueness by building the essential set `E` (members dependent on
    `y` given the rest of the scope) and checking that `y` is independent of
    `scope - E` given `E`.
    """
    scope = idset(scope)
    essential, trace = [], []
    for xi in ordered(scope, ci.order):
        dependent = not ci.independent(xi, y, scope - {xi})
        trace.append({"step": "essential", "variable": xi,
                      "independent": not dependent})
        if dependent:
            essential.append(xi)

    E = frozenset(essential)
    rest = scope - E
    unique = len(rest) == 0 or bool(ci.independent(y, rest, E))
    trace.append({"step": "blanket", "boundary": ordered(E, ci.order),
                  "independent": unique})
    witness = None if unique else Witness(None, None, E)
    return UniquenessVerdict(unique, E, "alg4", witness, trace, ci.order)
