#!/usr/bin/python
"""Command-line front end of `mbuniq`. Run `mbq.py -examples` for a tour of
the sub-commands.
"""
import sys
from mbuniq import msg
from mbuniq.errors import MbuniqError

def examples():
    """Prints examples of using the script to the console using colored output.
    """
    script = "MBQ Markov boundary uniqueness toolkit"
    explain = ("Measures of causal influence (CMI, causal strength, part mutual "
               "information) become uninformative or undefined when the target "
               "variable has more than one Markov boundary. This script "
               "evaluates the measures on exact distributions or data, finds "
               "Markov boundaries, decides whether they are unique and runs the "
               "Monte Carlo comparison of the uniqueness tests.")
    contents = [(("Evaluate causal strength on the degenerate confounder "
                  "triangle where Z = X almost surely."),
                 "mbq.py measure --setting triangle --measure cs --x X --y Y "
                 "--cond Z",
                 "Prints `undefined` together with the zero-probability event "
                 "the measure conditions on."),
                (("List every Markov boundary of Y and the essential set on "
                  "the four-variable example."),
                 "mbq.py oracle --setting fig1 --target Y",
                 "Prints {Z, W} and {X, W} and the essential set {W}."),
                (("Test uniqueness from a CSV sample with the leave-one-out "
                  "test and KIAMB as boundary finder."),
                 "mbq.py uniqueness --data s2.csv --target Y --algorithm "
                 "alg2-ki --trace", ""),
                ("Write 1000 rows of setting 3 to a CSV file.",
                 "mbq.py generate --setting 3 --n 1000 --seed 7 --out s3.csv",
                 "The cardinalities go to the sidecar `s3.csv.json`."),
                ("Run a small Monte Carlo comparison.",
                 "mbq.py simulate --reps 10 --ns 200 --out smoke",
                 "Writes smoke.json, smoke.csv and smoke.timing.json to the "
                 "report folder."),
                (("Sweep the singularity families of the triangle for two "
                  "choices of the filled-in conditional law."),
                 "mbq.py perturb --setting triangle --kind singular --x X "
                 "--y Y --cond Z", ""),
                ("Copy the default settings to ~/.mbuniq for editing.",
                 "mbq.py configure", "")]
    required = ("Distributions are JSON files {\"variables\": [{\"id\": ..., "
                "\"card\": ...}], \"table\": [{\"a\": {...}, \"p\": ...}]}; "
                "datasets are CSV files with a header of variable ids.")
    output = ("Results are printed to stdout; errors go to stderr with exit "
              "code 1, usage errors exit with code 2.")
    details = ("Defaults for alpha, the CI test, KIAMB's k and the simulation "
               "grid come from `mbuniq.cfg`.")
    outputfmt = ("")

    msg.example(script, explain, contents, required, output, outputfmt, details)

_source = {
    "--dist": {"help": "Distribution JSON file."},
    "--data": {"help": "Dataset CSV file."},
    "--setting": {"help": "Built-in construction: 1-4, fig1 or triangle."},
    }
_decider = {
    "--alpha": {"type": float, "help": "Significance level of the CI tests."},
    "--test": {"choices": ["g2", "permutation"],
               "help": "CI test used with --data."},
    "--seed": {"type": int, "default": 0,
               "help": "Seed of permutation tests and KIAMB."},
    "--trace": {"action": "store_true",
                "help": "Print the decisions taken as JSON."},
    }
script_options = {
    "measure": {
        "help": "Evaluate CMI, MI, causal strength or PMI.",
        "options": dict(_source, **{
            "--measure": {"choices": ["cmi", "mi", "cs", "pmi", "all"],
                          "default": "all"},
            "--x": {"nargs": "+", "required": True},
            "--y": {"nargs": "+", "required": True},
            "--cond": {"nargs": "*", "default": []}})},
    "discover": {
        "help": "Find one Markov boundary by backward elimination or KIAMB.",
        "options": dict(_source, **dict(_decider, **{
            "--target": {"required": True},
            "--scope": {"nargs": "*"},
            "--algorithm": {"choices": ["alg1", "kiamb"], "default": "alg1"},
            "--k": {"type": float}}))},
    "uniqueness": {
        "help": "Decide whether the Markov boundary is unique.",
        "options": dict(_source, **dict(_decider, **{
            "--target": {"required": True},
            "--scope": {"nargs": "*"},
            "--algorithm": {"choices": ["alg2-af", "alg2-ki", "alg3", "alg4"],
                            "default": "alg2-af"},
            "--k": {"type": float}}))},
    "oracle": {
        "help": "Enumerate boundaries of an exact distribution.",
        "options": dict(_source, **{
            "--target": {"required": True},
            "--scope": {"nargs": "*"}})},
    "generate": {
        "help": "Sample a built-in construction or export its exact law.",
        "options": {
            "--setting": {"required": True},
            "--n": {"type": int},
            "--seed": {"type": int, "default": 0},
            "--out": {"required": True,
                      "help": "CSV file for samples, JSON file with --law."},
            "--law": {"action": "store_true",
                      "help": "Write the exact distribution instead."}}},
    "simulate": {
        "help": "Run the Monte Carlo comparison of the uniqueness tests.",
        "options": {
            "--settings": {"nargs": "+"},
            "--ns": {"nargs": "+", "type": int},
            "--reps": {"type": int},
            "--algorithms": {"nargs": "+"},
            "--alpha": {"type": float},
            "--seed": {"type": int},
            "--test": {"choices": ["g2", "permutation"]},
            "--k": {"type": float},
            "--jobs": {"type": int},
            "--exact": {"action": "store_true"},
            "--out": {"help": "Report name saved to the report folder."}}},
    "perturb": {
        "help": "Sweep epsilon-noise or singularity families.",
        "options": dict(_source, **{
            "--kind": {"choices": ["noise", "singular"], "default": "noise"},
            "--x": {"required": True},
            "--y": {"required": True},
            "--cond": {"nargs": "*", "default": []},
            "--var": {"help": "Variable to noise; defaults to --x."},
            "--eps": {"nargs": "+", "type": float,
                      "default": [0., 0.01, 0.05, 0.1, 0.2, 0.5, 1.]},
            "--etas": {"nargs": "+", "type": float,
                       "default": [1e-1, 1e-2, 1e-3, 1e-4, 1e-6]},
            "--alpha1": {"nargs": "+", "type": float,
                         "help": "First filled-in law of y; uniform by "
                                 "default."},
            "--alpha2": {"nargs": "+", "type": float,
                         "help": "Second law; point mass on state 0 by "
                                 "default."},
            "--out": {"help": "CSV file; stdout by default."}})},
    "configure": {
        "help": "Copy the default settings to ~/.mbuniq.",
        "options": {}},
    }
"""dict: sub-commands, their help and the
    :meth:`argparse.ArgumentParser.add_argument` keyword arguments of their
    options.
"""

def _parser_options(argv=None):
    """Parses the options and arguments from the command line."""
    import argparse
    from mbuniq import base
    pdescr = "Markov boundary uniqueness and causal influence measures"
    parser = argparse.ArgumentParser(description=pdescr)
    commands = parser.add_subparsers(dest="command")
    commands.required = True
    for name, spec in script_options.items():
        sub = commands.add_parser(name, parents=[base.bparser],
                                  help=spec["help"])
        for arg, options in spec["options"].items():
            sub.add_argument(arg, **options)

    return base.exhandler(examples, parser, argv)

def _load(args, exact=False):
    """Returns the distribution or dataset named by the source options.

    Args:
        exact (bool): when True, a dataset is not accepted.

    Returns:
        tuple: `(distribution, dataset)`; exactly one of them is None.
    """
    given = [k for k in ("dist", "data", "setting") if args.get(k)]
    if len(given) != 1:
        raise MbuniqError("Give exactly one of --dist, --data or --setting.")
    if args.get("dist"):
        from mbuniq.dist.distribution import load
        return load(args["dist"]), None
    if args.get("setting"):
        from mbuniq.datagen import SettingSpec, build_exact
        return build_exact(SettingSpec(args["setting"]))[0], None
    if exact:
        raise MbuniqError("This command needs an exact distribution; use "
                          "--dist or --setting.")
    from mbuniq.citest.dataset import read_csv
    return None, read_csv(args["data"])

def _scope(args, ids):
    target = args["target"]
    scope = args.get("scope") or [i for i in ids if i != target]
    return scope, target

def _decider(args):
    from mbuniq.citest.decider import ExactDecider, TestDecider
    d, ds = _load(args)
    if ds is None:
        return ExactDecider(d)
    return TestDecider(ds, args.get("test"), args.get("alpha"), args["seed"])

def _print_trace(result):
    import json
    from mbuniq.harness.report import _json_clean
    msg.std(json.dumps(_json_clean(result.to_dict()), indent=1, sort_keys=True))

def _run_measure(args):
    from mbuniq.dist import measures as m
    d, ds = _load(args)
    x, y, cond = args["x"], args["y"], args["cond"]
    label = "{}({}, {} | {})"
    names = ["cmi", "mi", "cs", "pmi"] if args["measure"] == "all" \
            else [args["measure"]]
    if ds is not None:
        d = ds.empirical()
        msg.info("Using the empirical distribution of {} rows.".format(ds.n), 2)
    funcs = {"cmi": lambda: m.cmi_exact(d, x, y, cond),
             "mi": lambda: m.mi_exact(d, x, y),
             "cs": lambda: m.causal_strength(d, x, y, cond),
             "pmi": lambda: m.pmi(d, x, y, cond)}
    for name in names:
        shown = cond if name != "mi" else []
        msg.measure(label.format(name, ",".join(x), ",".join(y),
                                 ",".join(shown)), funcs[name]())

def _run_discover(args):
    from mbuniq.algorithms.boundary import alg1_backward_elimination, kiamb
    ci = _decider(args)
    scope, target = _scope(args, ci.order)
    if args["algorithm"] == "alg1":
        result = alg1_backward_elimination(ci, scope, target)
    else:
        result = kiamb(ci, scope, target, args.get("k"), args["seed"])
    msg.okay("Markov boundary of {}: {{{}}}".format(
        target, ", ".join(sorted(result.boundary, key=ci.order.index))))
    if args["trace"]:
        _print_trace(result)

def _run_uniqueness(args):
    from mbuniq.harness.simulation import run_algorithm
    ci = _decider(args)
    scope, target = _scope(args, ci.order)
    verdict = run_algorithm(args["algorithm"], ci, scope, target,
                            args.get("k"), args["seed"])
    if verdict.unique:
        msg.okay("{} has a unique Markov boundary {{{}}}.".format(
            target, ", ".join(sorted(verdict.m0, key=ci.order.index))))
    else:
        msg.warn("{} has multiple Markov boundaries; witness {}."
                 .format(target, verdict.witness), 1, prefix=False)
    if args["trace"]:
        _print_trace(verdict)

def _run_oracle(args):
    from mbuniq import oracle
    d, _ = _load(args, exact=True)
    scope, target = _scope(args, d.ids)
    found = oracle.enumerate_markov_boundaries(d, target, scope)
    essential = oracle.essential_set_exact(d, target, scope)
    for b in found.boundaries:
        msg.info("Markov boundary: {{{}}}".format(
            ", ".join(sorted(b, key=d.ids.index))))
    msg.std("Essential set E = {{{}}}".format(", ".join(essential)))
    if found.unique:
        msg.okay("{} has a unique Markov boundary.".format(target))
    else:
        msg.warn("{} has {} Markov boundaries.".format(target, len(found)),
                 1, prefix=False)

def _run_generate(args):
    from mbuniq.datagen import SettingSpec, build_exact, sample
    spec = SettingSpec(args["setting"], seed=args["seed"])
    if args["law"]:
        from mbuniq.dist.distribution import dump
        dump(build_exact(spec)[0], args["out"])
        msg.okay("Wrote the exact law of {} to {}.".format(spec.id,
                                                          args["out"]))
        return
    if args.get("n") is None:
        raise MbuniqError("generate needs --n unless --law is given.")
    ds = sample(spec, args["n"])
    ds.write_csv(args["out"])
    msg.okay("Wrote {} rows of {} to {}.".format(ds.n, spec.id, args["out"]))

def _run_simulate(args):
    from mbuniq.harness.simulation import ExperimentConfig, run_monte_carlo
    cfg = ExperimentConfig(args.get("settings"), args.get("ns"),
                           args.get("reps"), args.get("algorithms"),
                           args.get("alpha"), args.get("seed"),
                           args.get("out"), args["exact"], args.get("test"),
                           args.get("k"), args.get("jobs"))
    report = run_monte_carlo(cfg)
    msg.rates(report.rows())

def _noise_curve(d, args):
    from mbuniq.dist import measures as m
    from mbuniq.dist.perturb import NoiseSpec, epsilon_noise
    var = args.get("var") or args["x"]
    rows = []
    for eps in args["eps"]:
        noised = epsilon_noise(d, var, NoiseSpec.uniform(eps,
                                                         d.meta(var).card))
        x, y, cond = args["x"], args["y"], args["cond"]
        rows.append({"eps": eps,
                     "cmi": float(m.cmi_exact(noised, x, y, cond)),
                     "cs": float(m.causal_strength(noised, x, y, cond)),
                     "pmi": float(m.pmi(noised, x, y, cond))})
    return rows

def _singular_curve(d, args):
    from mbuniq.dist import measures as m
    from mbuniq.dist.distribution import marginal, total_variation
    from mbuniq.dist.perturb import singularity_family, zero_witnesses
    x, y, cond = args["x"], args["y"], args["cond"]
    base = marginal(d, [x, y] + list(cond))
    pairs = zero_witnesses(base, x, cond)
    if len(pairs) == 0:
        raise MbuniqError("{} and {} are variation independent; there is no "
                          "zero cell to fill.".format(x, cond))
    card = base.meta(y).card
    alphas = {"alpha1": args.get("alpha1") or [1./card]*card,
              "alpha2": args.get("alpha2") or [1.] + [0.]*(card - 1)}
    rows = []
    for family in ("alpha1", "alpha2"):
        for eta in args["etas"]:
            fam = singularity_family(base, pairs[0][0], pairs[0][1], eta,
                                     alphas[family], y, pairs[1:])
            rows.append({"family": family, "eta": eta,
                         "cs": float(m.causal_strength(fam, x, y, cond)),
                         "pmi": float(m.pmi(fam, x, y, cond)),
                         "tv": total_variation(fam, base)})
    return rows

def _run_perturb(args):
    import pandas as pd
    d, _ = _load(args, exact=True)
    if args["kind"] == "noise":
        frame = pd.DataFrame(_noise_curve(d, args))
    else:
        frame = pd.DataFrame(_singular_curve(d, args))
    if args.get("out"):
        frame.to_csv(args["out"], index=False)
        msg.okay("Wrote {} rows to {}.".format(len(frame), args["out"]))
    else:
        frame.to_csv(sys.stdout, index=False)

def _run_configure(args):
    """Copies the default configuration files into `~/.mbuniq`."""
    from mbuniq.config import config_dir
    from os import path
    from mbuniq.base import testmode
    from mbuniq.utility import reporoot
    from glob import glob
    from shutil import copy
    target = config_dir(True)
    alternate = path.join(path.abspath(path.expanduser("~")), ".mbuniq")
    if not testmode and target != alternate:# pragma: no cover
        raise MbuniqError("Could not configure custom ~/.mbuniq directory.")

    source = path.join(reporoot, "mbuniq", "config")
    count = 0
    #Unit tests must not clobber the user's settings, so copies are skipped.
    for pattern in ("*.cfg", "*.json"):
        for filename in sorted(glob(path.join(source, pattern))):
            if not testmode:# pragma: no cover
                copy(filename, target)
            count += 1
    msg.okay("Copied {0:d} configuration files to {1}.".format(count, target))

def run(args):
    """Runs the sub-command selected in the parsed `args`."""
    if args is None:
        return
    msg.nocolor = args.get("nocolor", False)
    from mbuniq.dist.measures import configure
    configure()
    maps = {"measure": _run_measure, "discover": _run_discover,
            "uniqueness": _run_uniqueness, "oracle": _run_oracle,
            "generate": _run_generate, "simulate": _run_simulate,
            "perturb": _run_perturb, "configure": _run_configure}
    maps[args["command"]](args)

def cli_dispatch(argv=None):
    """Parses `argv` and runs the sub-command.

    Returns:
        int: 0 on success, 2 on a usage error and 1 on a runtime error.
    """
    try:
        args = _parser_options(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        run(args)
    except (MbuniqError, IOError, OSError) as exc:
        msg.err(str(exc))
        return 1
    return 0

def main():
    sys.exit(cli_dispatch())

if __name__ == '__main__': # pragma: no cover
    main()
