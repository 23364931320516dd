"""Monte Carlo comparison of the uniqueness tests across the simulation
settings and sample sizes.

Every replication draws its own dataset from a seed that is a pure function of
the master seed, the setting, the sample size, the algorithm and the
replication index, so any cell can be re-run in isolation and the whole grid
can run in parallel without changing the result.
"""
from itertools import product
from mbuniq import msg
from mbuniq.datagen import KINDS, SettingSpec, build_exact, sample, setting_id
from mbuniq.errors import ConfigError
from mbuniq.utility import derive_seed

ALGORITHMS = ("alg2-af", "alg2-ki", "alg3", "alg4")
"""tuple: uniqueness tests the harness can score."""

_laws = {}
"""dict: exact law and ground truth per setting id with default parameters."""

def _law(setting):
    if setting not in _laws:
        _laws[setting] = build_exact(SettingSpec(setting))
    return _laws[setting]

class ExperimentConfig(object):
    """Grid and options of a Monte Carlo run. Options left as None come from
    the `[simulate]`, `[ci]` and `[kiamb]` sections of the package settings.

    Args:
        settings (list): setting ids (see :func:`mbuniq.datagen.setting_id`).
        sample_sizes (list): sample sizes, each at least 200.
        reps (int): replications per cell.
        algorithms (list): subset of :data:`ALGORITHMS`.
        alpha (float): significance level of the CI tests.
        seed (int): master seed; `MBUNIQ_SEED` overrides the configured one.
        output (str): report name or path prefix; None skips saving.
        exact (bool): run the algorithms on the exact law instead of samples.
        test (str): `g2` or `permutation`.
        k (float): KIAMB fraction.
        jobs (int): joblib workers; `-1` uses every core.
    """
    def __init__(self, settings=None, sample_sizes=None, reps=None,
                 algorithms=None, alpha=None, seed=None, output=None,
                 exact=False, test=None, k=None, jobs=None):
        from mbuniq.config import get_option, master_seed
        self.settings = [setting_id(s) for s in
                         (settings or get_option("simulate", "settings",
                                                 ["S1", "S2", "S3", "S4"],
                                                 list))]
        self.sample_sizes = [int(n) for n in
                             (sample_sizes or
                              get_option("simulate", "ns",
                                         [200, 500, 1000, 2000, 5000],
                                         (list, int)))]
        self.reps = int(reps if reps is not None else
                        get_option("simulate", "reps", 500, int))
        self.algorithms = list(algorithms or
                               get_option("simulate", "algorithms",
                                          list(ALGORITHMS), list))
        self.alpha = float(alpha if alpha is not None else
                           get_option("ci", "alpha", 0.05, float))
        self.seed = int(seed if seed is not None else master_seed(0))
        self.output = output
        self.exact = bool(exact)
        self.test = test or get_option("ci", "engine", "g2")
        self.k = float(k if k is not None else get_option("kiamb", "k", 0.8,
                                                          float))
        self.jobs = int(jobs if jobs is not None else
                        get_option("simulate", "jobs", 1, int))
        self._validate()

    def _validate(self):
        if self.reps < 1:
            raise ConfigError("reps must be at least 1, got {}."
                              .format(self.reps))
        small = [n for n in self.sample_sizes if n < 200]
        if small:
            raise ConfigError("Sample sizes start at 200; got {}."
                              .format(small))
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ConfigError("Unknown algorithm(s) {}; choose from {}."
                              .format(sorted(unknown), ", ".join(ALGORITHMS)))
        if self.test not in ("g2", "permutation"):
            raise ConfigError("Unknown CI test {!r}.".format(self.test))
        if not (0. < self.alpha < 1.):
            raise ConfigError("alpha must lie in (0, 1).")

    def to_dict(self):
        return {"settings": self.settings, "sample_sizes": self.sample_sizes,
                "reps": self.reps, "algorithms": self.algorithms,
                "alpha": self.alpha, "seed": self.seed, "exact": self.exact,
                "test": self.test, "k": self.k}

def trial_seed(master, setting, n, algorithm, rep):
    """Returns the seed of one replication."""
    return derive_seed(master, KINDS.index(setting), n,
                       ALGORITHMS.index(algorithm), rep)

def run_algorithm(algorithm, ci, scope, y, k=None, seed=None):
    """Runs one of :data:`ALGORITHMS` and returns its
    :class:`~mbuniq.algorithms.uniqueness.UniquenessVerdict`.
    """
    from mbuniq.algorithms import uniqueness as u
    if algorithm == "alg2-af":
        return u.alg2_uniqueness(ci, scope, y, u.omega_af())
    if algorithm == "alg2-ki":
        return u.alg2_uniqueness(ci, scope, y, u.omega_kiamb(k, seed))
    if algorithm == "alg3":
        return u.alg3_uniqueness(ci, scope, y, u.omega_af())
    if algorithm == "alg4":
        return u.alg4_uniqueness(ci, scope, y)
    raise ConfigError("Unknown algorithm {!r}.".format(algorithm))

def trial(setting, n, algorithm, seed, exact=False, alpha=None, test=None,
          k=None):
    """Runs a single replication and returns its scored outcome.

    Returns:
        dict: with keys `correct` (bool), `verdict` (`unique`, `multiple`, or
        None when the algorithm failed) and `error` (exception text or None).
    """
    from mbuniq.citest.decider import ExactDecider, TestDecider
    setting = setting_id(setting)
    d, truth = _law(setting)
    try:
        if exact:
            ci = ExactDecider(d)
        else:
            ds = sample(SettingSpec(setting), n, seed)
            ci = TestDecider(ds, test, alpha, seed)
        verdict = run_algorithm(algorithm, ci, truth.scope, truth.target, k,
                                seed)
    except Exception as exc:
        msg.warn("{} on {} (n={}, seed={}) failed: {}"
                 .format(algorithm, setting, n, seed, exc), 2)
        return {"correct": False, "verdict": None,
                "error": "{}: {}".format(type(exc).__name__, exc)}

    return {"correct": verdict.unique == truth.unique,
            "verdict": "unique" if verdict.unique else "multiple",
            "error": None}

def run_trial(setting, n, algorithm, seed, exact=False, alpha=None, test=None,
              k=None):
    """Returns True if `algorithm` reaches the correct uniqueness verdict on a
    sample of size `n` from `setting` drawn with `seed` (or on the exact law
    when `exact`). Failures of the algorithm count as incorrect.
    """
    return trial(setting, n, algorithm, seed, exact, alpha, test, k)["correct"]

def _cell(setting, n, algorithm, seeds, options):
    """Runs every replication of one grid cell; returns the outcomes and the
    wall time.
    """
    from time import perf_counter
    start = perf_counter()
    outcomes = [trial(setting, n, algorithm, s, **options) for s in seeds]
    return outcomes, perf_counter() - start

class SimulationReport(object):
    """Aggregated outcome of a Monte Carlo run.

    Attributes:
        config (dict): echo of the :class:`ExperimentConfig`.
        cells (list): one dict per (setting, n, algorithm) with the rate of
          correct verdicts, the error breakdown and the replication seeds.
        timing (dict): wall seconds per cell, kept apart from the cells so that
          identical runs produce identical reports.
    """
    def __init__(self, config, cells, timing=None):
        self.config = config
        self.cells = list(cells)
        self.timing = dict(timing or {})

    def rate(self, setting, n, algorithm):
        """Returns the rate of correct verdicts of one cell."""
        for cell in self.cells:
            if (cell["setting"], cell["n"], cell["algorithm"]) == \
               (setting, n, algorithm):
                return cell["rate"]
        raise KeyError((setting, n, algorithm))

    def rows(self):
        """Returns the plot-ready `(setting, n, algorithm, rate)` rows."""
        return [{"setting": c["setting"], "n": c["n"],
                 "algorithm": c["algorithm"], "rate": c["rate"],
                 "reps": c["reps"]} for c in self.cells]

    def to_frame(self):
        """Returns :meth:`rows` as a :class:`pandas.DataFrame`."""
        import pandas as pd
        return pd.DataFrame(self.rows(), columns=["setting", "n", "algorithm",
                                                  "rate", "reps"])

    def to_dict(self):
        return {"config": self.config, "cells": self.cells}

    @classmethod
    def from_dict(cls, jdict, timing=None):
        return cls(jdict["config"], jdict["cells"], timing)

def _summarize(setting, n, algorithm, seeds, outcomes, unique):
    correct = sum(o["correct"] for o in outcomes)
    return {"setting": setting, "n": n, "algorithm": algorithm,
            "truth": "unique" if unique else "multiple",
            "measure": "TNR" if unique else "TPR",
            "reps": len(outcomes), "correct": correct,
            "rate": correct/float(len(outcomes)),
            "false_unique": sum(o["verdict"] == "unique" and not o["correct"]
                                for o in outcomes),
            "false_multiple": sum(o["verdict"] == "multiple" and
                                  not o["correct"] for o in outcomes),
            "errors": sum(o["error"] is not None for o in outcomes),
            "seeds": list(seeds)}

def run_monte_carlo(cfg):
    """Runs `cfg.reps` replications for every (setting, n, algorithm) cell of
    the grid, in parallel over cells with :mod:`joblib`, and saves the report
    when `cfg.output` is set.

    Returns:
        SimulationReport: cells in grid order (settings, then sample sizes,
        then algorithms).
    """
    from joblib import Parallel, delayed
    grid = list(product(cfg.settings, cfg.sample_sizes, cfg.algorithms))
    seeds = [[trial_seed(cfg.seed, s, n, a, r) for r in range(cfg.reps)]
             for s, n, a in grid]
    options = {"exact": cfg.exact, "alpha": cfg.alpha, "test": cfg.test,
               "k": cfg.k}
    for s in cfg.settings:
        _law(s)

    msg.info("Running {} cells x {} replications.".format(len(grid), cfg.reps),
             2)
    results = Parallel(n_jobs=cfg.jobs)(
        delayed(_cell)(s, n, a, cs, options)
        for (s, n, a), cs in zip(grid, seeds))

    cells, timing = [], {}
    for (s, n, a), cs, (outcomes, wall) in zip(grid, seeds, results):
        cell = _summarize(s, n, a, cs, outcomes, _law(s)[1].unique)
        msg.okay("{} n={} {}: rate={:.3f}".format(s, n, a, cell["rate"]), 2)
        cells.append(cell)
        timing["{}/{}/{}".format(s, n, a)] = wall

    report = SimulationReport(cfg.to_dict(), cells, timing)
    if cfg.output is not None:
        from mbuniq.harness.report import save
        save(report, cfg.output)
    return report
