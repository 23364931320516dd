"""Utility functions needed globally by all the sub-packages.
"""
def _get_reporoot():
    """Returns the absolute path to the repo root directory on the current
    system.
    """
    from os import path
    import mbuniq
    medpath = path.abspath(mbuniq.__file__)
    return path.dirname(path.dirname(medpath))

def abspath(fpath):
    """Returns the absolute path to the specified file/folder *relative to the
    repository root*.

    Args:
        fpath (str): path to a file or folder; doesn't need to exist.
    """
    from os import path
    expanded = path.expanduser(fpath)
    if path.isabs(expanded):
        return expanded
    return path.abspath(path.join(reporoot, expanded))

reporoot = _get_reporoot()
"""The absolute path to the repo root on the local machine.
"""

def idset(ids):
    """Normalizes a variable id or a collection of ids to a `frozenset`.

    Args:
        ids: `None`, a single id (str) or any iterable of ids.
    """
    if ids is None:
        return frozenset()
    if isinstance(ids, str):
        return frozenset([ids])
    return frozenset(ids)

def ordered(ids, order):
    """Returns the ids sorted by their position in `order`; ids missing from
    `order` go last in lexical order.

    Args:
        ids (iterable): variable ids to sort.
        order (list): reference ordering of variable ids.
    """
    pos = {v: i for i, v in enumerate(order)}
    return sorted(ids, key=lambda v: (pos.get(v, len(pos)), v))

def derive_seed(*keys):
    """Derives a 32-bit seed that is a pure function of the integer `keys`.
    Used for the seed lineage of Monte Carlo replications and for the per-test
    seeds of permutation tests.

    Args:
        keys (int): non-negative integers (master seed, cell indices, ...).
    """
    from numpy.random import SeedSequence
    entropy = [int(k) for k in keys]
    return int(SeedSequence(entropy).generate_state(1)[0])

def text_key(text):
    """Returns a stable non-negative integer for a string so that string keys
    can enter :func:`derive_seed` (python's `hash` is salted per process).
    """
    from zlib import crc32
    return crc32(text.encode("utf-8")) & 0xffffffff
