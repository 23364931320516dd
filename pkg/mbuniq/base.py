"""Shared command-line machinery for the `mbuniq` scripts and the package-wide
test-mode switch.
"""
def _common_parser():
    """Returns the parent parser with the switches every `mbuniq` script
    accepts.
    """
    import argparse
    parser = argparse.ArgumentParser(add_help=False)
    switches = {
        "-examples": "Print a tour of the script with worked examples.",
        "-verbose": "Report progress of long computations.",
        "-debug": "Report every CI decision as it is taken.",
        "-nocolor": "Print plain text (for piping into files)."}
    for switch, help_ in switches.items():
        parser.add_argument(switch, action="store_true", help=help_)
    return parser

bparser = _common_parser()
"""argparse.ArgumentParser: parent parser of every sub-command."""

def exhandler(function, parser, argv=None):
    """Parses `argv` with the script `parser` unless `-examples` was given, in
    which case `function` prints the examples and None is returned.

    Args:
        function: prints the examples of the script.
        parser (argparse.ArgumentParser): script parser; usage errors raise
          `SystemExit(2)` as usual.
        argv (list): arguments to parse; `sys.argv[1:]` when None.

    Returns:
        dict: the parsed arguments.
    """
    common = vars(bparser.parse_known_args(argv)[0])
    if common["examples"]:
        function()
        return None
    if common["verbose"] or common["debug"]:
        from mbuniq.msg import set_verbosity
        set_verbosity(3 if common["debug"] else 2)

    common.update(vars(parser.parse_args(argv)))
    return common

testmode = False
"""bool: when True, the package is running its unit tests; the user's
`~/.mbuniq` settings are ignored and nothing is copied there.
"""
def set_testmode(testing):
    global testmode
    testmode = testing
