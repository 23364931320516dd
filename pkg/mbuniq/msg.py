"""Terminal output for the `mbuniq` scripts. Results go to `stdout`; warnings
and errors go to `stderr` so that CSV written to `stdout` stays clean.

Every printer takes a `level`. Level 1 (the default) is shown unless quiet
mode is on; higher levels need :func:`set_verbosity` (`-verbose` gives 2,
`-debug` gives 3).
"""
from __future__ import print_function
import sys
from termcolor import cprint
verbosity = None
"""int: highest message level that is printed beyond level 1."""
quiet = None
"""bool: when True, level 1 messages are suppressed as well."""
nocolor = False
"""bool: print plain text instead of terminal colors."""

def printer(text, color=None, **kwargs):
    """Prints `text` in `color` unless :data:`nocolor` is set."""
    if nocolor or color is None:
        print(text, **kwargs)
    else:
        cprint(text, color, **kwargs)

def set_verbosity(level):
    """Sets the highest message level that gets printed.

    Args:
        level (int): 2 for progress, 3 for per-decision detail.
    """
    global verbosity
    verbosity = level

def set_quiet(is_quiet):
    """Turns quiet mode on or off; errors are still printed."""
    global quiet
    quiet = is_quiet

def will_print(level=1):
    """Returns True if a message at `level` would be printed."""
    if level <= 1:
        return not quiet
    return isinstance(verbosity, int) and level <= verbosity

def warn(msg, level=0, prefix=True):
    if will_print(level):
        printer(("WARNING: " if prefix else "") + msg, "yellow",
                file=sys.stderr)

def err(msg, level=-1, prefix=True):
    printer(("ERROR: " if prefix else "") + msg, "red", file=sys.stderr)

def info(msg, level=1):
    if will_print(level):
        printer(msg, "cyan")

def okay(msg, level=1):
    if will_print(level):
        printer(msg, "green")

def gen(msg, level=1):
    if will_print(level):
        printer(msg, "blue")

def std(msg, level=1):
    """Prints `msg` without color."""
    if will_print(level):
        print(msg)

def example(script, explain, contents, requirements, output, outputfmt, details):
    """Prints the `-examples` page of a script.

    Args:
        script (str): title of the page.
        explain (str): what the script is for.
        contents (list): of `(before, command, after)` tuples.
        requirements (str): input formats, printed in red.
        output (str): where results go, printed in green.
        outputfmt (str): optional description of the output format.
        details (str): optional closing remarks on configuration.
    """
    rule = "=" * 70
    print("")
    cprint(script.upper(), "yellow")
    cprint(rule + "\n", "yellow")
    cprint("DETAILS", "blue")
    print(explain + "\n")
    for text, color in ((requirements, "red"), (output, "green")):
        if text:
            cprint(text, color)
    print("")
    for heading, text in (("", details), ("OUTPUT FORMAT", outputfmt)):
        if not text:
            continue
        if heading:
            cprint(heading, "blue")
        print(text + "\n")

    cprint("EXAMPLES", "blue")
    for i, (before, command, after) in enumerate(contents):
        print("{}) {}".format(i + 1, before))
        cprint("    " + command, "cyan")
        if after:
            print("\n" + after)
        print("")

def measure(name, value, level=1):
    """Prints a measure result; finite values in green, undefined values in
    yellow together with the zero-probability event that made them undefined.

    Args:
        name (str): label of the measure, e.g. `cs(X, Y | Z)`.
        value (mbuniq.dist.measures.MeasureValue): value to print.
    """
    if not will_print(level):
        return
    if value.finite:
        printer("{} = {:.10g}".format(name, value.value), "green")
    else:
        printer("{} = undefined ({}; event {})".format(name, value.reason,
                                                      value.event), "yellow")

def rates(rows, level=1):
    """Prints the rate grid of a simulation report, one line per cell. Rates
    below 0.5 are printed in red so that failing algorithms stand out.

    Args:
        rows (list): of `dict` with keys `setting`, `n`, `algorithm`, `rate`
          and `reps`.
    """
    if not will_print(level):
        return
    header = "{0:<9} {1:>6} {2:<8} {3:>6} {4:>5}"
    printer(header.format("setting", "n", "algo", "rate", "reps"), "blue")
    for row in rows:
        line = "{0:<9} {1:>6d} {2:<8} {3:>6.3f} {4:>5d}".format(
            row["setting"], row["n"], row["algorithm"], row["rate"], row["reps"])
        printer(line, "red" if row["rate"] < 0.5 else "green")
