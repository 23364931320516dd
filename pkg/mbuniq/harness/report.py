"""Persistence of :class:`~mbuniq.harness.simulation.SimulationReport`
instances. A report named `name` is stored in the report folder as

- `name.json`: configuration echo and per-cell results,
- `name.csv`: plot-ready `(setting, n, algorithm, rate, reps)` rows,
- `name.timing.json`: wall time per cell.

Only the timing file changes between two runs with the same configuration and
seed.
"""
import json
from mbuniq import msg
from mbuniq.errors import MbuniqError

reportdir = None
"""str: full path to the directory where reports are stored. If this is set
programmatically, the `[report] folder` setting is not consulted.
"""
def set_reportdir(reportdir_):
    """Sets the directory where reports are saved, side-stepping the
    `[report] folder` setting.

    Args:
        reportdir_ (str): path to the folder; can be relative to the repo root.
    """
    global reportdir
    reportdir = reportdir_

def _reportdir():
    """Returns the path to the directory where reports are stored, creating it
    if needed.
    """
    from os import path, makedirs
    from mbuniq.config import get_option
    from mbuniq.utility import abspath
    folder = reportdir
    if folder is None:
        folder = get_option("report", "folder", "./reports")
    folder = abspath(folder)
    if not path.isdir(folder):
        makedirs(folder)
    return folder

def _paths(name):
    """Returns the JSON, CSV and timing paths for the report `name`; a `name`
    with a directory part is used as given.
    """
    from os import path
    if path.dirname(name) == "":
        name = path.join(_reportdir(), name)
    if name.endswith(".json"):
        name = name[:-5]
    return {"json": name + ".json", "csv": name + ".csv",
            "timing": name + ".timing.json"}

def _json_clean(d):
    """Converts numpy scalars, tuples and sets in `d` to plain JSON types so
    that the serialized report does not depend on where the numbers came
    from.
    """
    import numpy as np
    if isinstance(d, dict):
        return {str(k): _json_clean(v) for k, v in d.items()}
    if isinstance(d, (list, tuple)):
        return [_json_clean(v) for v in d]
    if isinstance(d, (set, frozenset)):
        return sorted(_json_clean(v) for v in d)
    if isinstance(d, np.bool_):
        return bool(d)
    if isinstance(d, np.integer):
        return int(d)
    if isinstance(d, np.floating):
        return float(d)
    return d

def save(report, name):
    """Writes the report, its CSV rows and its timing sidecar.

    Returns:
        dict: paths keyed by `json`, `csv` and `timing`.
    """
    paths = _paths(name)
    jdict = _json_clean(report.to_dict())
    validate_report(jdict)
    with open(paths["json"], 'w') as f:
        json.dump(jdict, f, indent=1, sort_keys=True)
    report.to_frame().to_csv(paths["csv"], index=False)
    with open(paths["timing"], 'w') as f:
        json.dump(_json_clean(report.timing), f, indent=1, sort_keys=True)
    msg.okay("Saved report to {}.".format(paths["json"]), 2)
    return paths

def load(name):
    """Loads a report saved with :func:`save`; the timing sidecar is optional.
    """
    from os import path
    from mbuniq.harness.simulation import SimulationReport
    paths = _paths(name)
    with open(paths["json"]) as f:
        jdict = json.load(f)
    timing = None
    if path.isfile(paths["timing"]):
        with open(paths["timing"]) as f:
            timing = json.load(f)
    return SimulationReport.from_dict(jdict, timing)

def list_reports(target=None):
    """Returns the sorted names of the reports saved in `target` (the report
    folder by default).
    """
    from glob import glob
    from os import path
    if target is None:
        target = _reportdir()
    names = []
    for filename in glob(path.join(target, "*.json")):
        base = path.basename(filename)
        if not base.endswith(".timing.json"):
            names.append(base[:-5])
    return sorted(names)

def validate_report(jdict):
    """Checks a report dict against the shipped `report.schema.json`.

    Raises:
        MbuniqError: describing the first schema violation.
    """
    import jsonschema
    from mbuniq.config import schema_path
    with open(schema_path("report")) as f:
        schema = json.load(f)
    try:
        jsonschema.validate(jdict, schema)
    except jsonschema.ValidationError as exc:
        raise MbuniqError("Report does not match its schema: {}"
                          .format(exc.message))
    return True
