"""Observed discrete samples. A :class:`Dataset` is the object every statistical
conditional-independence test runs on; it round-trips through CSV files with
a JSON sidecar that declares the cardinalities.
"""
import numpy as np
from mbuniq.dist.distribution import (as_variables, encode,
                                      DiscreteDistribution)
from mbuniq.errors import MbuniqError, UnknownVariableError

def _sidecar(filepath):
    """Returns the path of the cardinality sidecar for a CSV file."""
    return filepath + ".json"

class Dataset(object):
    """Rows of observed full assignments over named finite variables.

    Args:
        variables (list): :class:`~mbuniq.dist.distribution.VariableMeta` or
          `(id, card)` pairs, in column order.
        rows: `(n, m)` integer array, a list of state tuples or a list of
          `{id: state}` dicts.

    Attributes:
        variables (tuple): of `VariableMeta` in column order.
        data (numpy.ndarray): read-only `(n, m)` state matrix.
    """
    def __init__(self, variables, rows):
        self.variables = as_variables(variables)
        ids = [v.id for v in self.variables]
        if len(rows) > 0 and isinstance(rows[0], dict):
            rows = [[r[i] for i in ids] for r in rows]
        data = np.array(rows, dtype=np.int64).reshape(len(rows), len(ids))
        if data.shape[0] < 1:
            raise MbuniqError("A dataset needs at least one row.")
        cards = np.array([v.card for v in self.variables], dtype=np.int64)
        if np.any(data < 0) or np.any(data >= cards):
            r, c = np.argwhere((data < 0) | (data >= cards))[0]
            raise MbuniqError("Row {} has state {} for {}, outside 0..{}."
                              .format(r, data[r, c], ids[c], cards[c] - 1))
        data.setflags(write=False)
        self.data = data
        self._pos = {v: i for i, v in enumerate(ids)}

    @property
    def n(self):
        """Returns the number of rows."""
        return self.data.shape[0]

    @property
    def ids(self):
        return tuple(v.id for v in self.variables)

    @property
    def cards(self):
        return {v.id: v.card for v in self.variables}

    def __len__(self):
        return self.n

    def __repr__(self):
        return "Dataset({}, n={})".format(list(self.ids), self.n)

    def index(self, ids):
        """Returns the column indices of `ids` sorted by column order.

        Raises:
            UnknownVariableError: if any id is not a column.
        """
        unknown = set(ids) - set(self._pos)
        if unknown:
            raise UnknownVariableError(unknown, self.ids)
        return sorted(self._pos[i] for i in ids)

    def codes(self, ids):
        """Returns `(codes, rows, cols)` for the compound variable over `ids`;
        see :func:`mbuniq.dist.distribution.encode`.
        """
        cols = self.index(ids)
        codes, rows = encode(self.data, cols, [v.card for v in self.variables])
        return codes, rows, cols

    def contingency(self, vars):
        """Returns the table of counts over the full product of the state
        spaces of `vars` (in column order), zero cells included. The empty set
        gives a 0-d array holding `n`.
        """
        cols = self.index(vars)
        if len(cols) == 0:
            return np.array(self.n, dtype=np.int64)
        shape = tuple(self.variables[c].card for c in cols)
        counts = np.zeros(shape, dtype=np.int64)
        np.add.at(counts, tuple(self.data[:, c] for c in cols), 1)
        return counts

    def empirical(self):
        """Returns the empirical distribution of the rows."""
        return DiscreteDistribution.from_dataset(self)

    def to_frame(self):
        """Returns the rows as a :class:`pandas.DataFrame` with one column per
        variable.
        """
        import pandas as pd
        return pd.DataFrame(np.array(self.data), columns=list(self.ids))

    @classmethod
    def from_frame(cls, frame, cards=None):
        """Builds a dataset from a data frame of integer states.

        Args:
            frame (pandas.DataFrame): one column per variable.
            cards (dict): cardinality per column; columns missing here get
              `max + 1`.
        """
        cards = cards or {}
        variables = []
        for col in frame.columns:
            card = cards.get(str(col))
            if card is None:
                card = int(frame[col].max()) + 1 if len(frame) > 0 else 1
            variables.append((str(col), card))
        return cls(variables, frame.to_numpy(dtype=np.int64))

    def write_csv(self, filepath):
        """Writes the rows to `filepath` and the cardinalities to its JSON
        sidecar.
        """
        import json
        self.to_frame().to_csv(filepath, index=False)
        with open(_sidecar(filepath), 'w') as f:
            json.dump({"variables": [v.to_dict() for v in self.variables]}, f,
                      indent=1)

def read_csv(filepath):
    """Loads a dataset from a CSV file with a header of variable ids. The
    cardinalities come from the JSON sidecar `<file>.json` when present and are
    otherwise inferred as `max + 1`.
    """
    import json
    import pandas as pd
    from os import path
    frame = pd.read_csv(filepath)
    cards = {}
    if path.isfile(_sidecar(filepath)):
        with open(_sidecar(filepath)) as f:
            cards = {v["id"]: v["card"] for v in json.load(f)["variables"]}
    return Dataset.from_frame(frame, cards)

def sample_distribution(d, n, seed=None):
    """Draws `n` i.i.d. rows from the exact distribution `d`.

    Args:
        d (DiscreteDistribution): law to sample from.
        n (int): number of rows; at least 1.
        seed (int): seed of the generator; same seed gives the same rows.
    """
    if n < 1:
        raise MbuniqError("Sample size must be at least 1, got {}.".format(n))
    rng = np.random.default_rng(seed)
    probs = np.array(d.probs)
    picks = rng.choice(len(probs), size=n, p=probs/probs.sum())
    return Dataset(d.variables, np.array(d.states)[picks])
