"""Random distributions shared by the property tests. Every member is rebuilt
from its seed so that a failing case can be reproduced on its own.
"""
import numpy as np
from mbuniq.dist.distribution import DiscreteDistribution

def random_distribution(seed, nvars=None, structured=None):
    """Returns a random distribution over `X0..X{m-2}` and a target `Y`.

    Args:
        seed (int): seed of the draw.
        nvars (int): number of variables including `Y`; random in 3..5 by
          default.
        structured (bool): when True, some variables are exact copies or
          deterministic functions of earlier ones, which creates zero cells
          and, often, several Markov boundaries. Random by default.
    """
    rng = np.random.default_rng(seed)
    m = int(nvars or rng.integers(3, 6))
    if structured is None:
        structured = bool(rng.integers(0, 2))
    cards = [int(c) for c in rng.integers(2, 4, size=m)]
    ids = ["X{}".format(i) for i in range(m - 1)] + ["Y"]

    if not structured:
        grid = np.indices(cards).reshape(m, -1).T
        probs = rng.dirichlet(np.ones(len(grid)))
        return DiscreteDistribution.from_arrays(list(zip(ids, cards)), grid,
                                                probs)

    #Free variables come first; the rest copy or hash earlier ones.
    nfree = int(rng.integers(1, m))
    free = cards[:nfree]
    grid = np.indices(free).reshape(nfree, -1).T
    probs = rng.dirichlet(np.ones(len(grid)))
    cols = [grid[:, i] for i in range(nfree)]
    for j in range(nfree, m):
        parents = rng.choice(j, size=min(j, 2), replace=False)
        if rng.random() < 0.5:
            value = cols[parents[0]] % cards[j]
        else:
            value = (cols[parents[0]] + sum(cols[p] for p in parents[1:])) \
                    % cards[j]
        cols.append(value)
    states = np.column_stack(cols)
    return DiscreteDistribution.from_arrays(list(zip(ids, cards)), states,
                                            probs)

def corpus(count, offset=0, nvars=None, structured=None):
    """Yields `(seed, distribution)` pairs for `count` consecutive seeds."""
    for seed in range(offset, offset + count):
        yield seed, random_distribution(seed, nvars, structured)

def scope_of(d):
    """Returns the candidate variables of a corpus distribution."""
    return [i for i in d.ids if i != "Y"]
