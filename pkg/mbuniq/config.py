"""Config parser for the package-wide `mbuniq` settings: measure tolerances,
conditional-independence test defaults, the KIAMB `k` and the Monte Carlo grid.
The shipped defaults live in `mbuniq/config/mbuniq.cfg`; a user copy in
`~/.mbuniq` takes precedence when it exists.
"""
packages = {}
"""dict: keys are configuration names, values are ConfigParser() instances with
the parsed settings.
"""
from six.moves.configparser import ConfigParser
class CaseConfigParser(ConfigParser):
    """Case-sensitive configuration parser; variable ids and setting names are
    case-sensitive (`X1` vs `x1`).
    """
    def optionxform(self, optionstr):
        return optionstr

def config_dir(mkcustom=False):
    """Returns the configuration directory for custom settings.

    Args:
        mkcustom (bool): when True, create `~/.mbuniq` if it does not exist.
    """
    from mbuniq.utility import reporoot
    from mbuniq.base import testmode
    from os import path
    alternate = path.join(path.abspath(path.expanduser("~")), ".mbuniq")
    if testmode or (not path.isdir(alternate) and not mkcustom):
        return path.join(reporoot, "mbuniq", "config")
    else:
        if mkcustom and not path.isdir(alternate):# pragma: no cover
            #This never gets reached when we are in testmode because we don't
            #want to clobber the user's local config cache.
            from os import mkdir
            mkdir(alternate)
        return alternate

def _config_path(name):
    """Returns the full path to the configuration file `name.cfg`.
    """
    from os import path
    return path.join(config_dir(), "{}.cfg".format(name))

def _read_single(parser, filepath):
    """Reads a single config file into the parser, silently failing if the file
    does not exist.

    Args:
        parser (ConfigParser): parser to read the file into.
        filepath (str): full path to the config file.
    """
    from os import path
    if path.isfile(filepath):
        with open(filepath) as f:
            parser.read_file(f)

def settings(name="mbuniq", reload_=False):
    """Returns the config settings with the specified name.

    Args:
        name (str): name of the configuration file (without `.cfg`).
        reload_ (bool): when True, re-read the file from disk.
    """
    global packages
    if name not in packages or reload_:
        result = CaseConfigParser()
        _read_single(result, _config_path(name))
        packages[name] = result

    return packages[name]

def get_option(section, option, default=None, cast=None):
    """Returns the value of an option in the global `mbuniq` settings.

    Args:
        section (str): name of the config section, e.g. `ci`.
        option (str): name of the option within the section.
        default: value returned when the option is not configured.
        cast: callable applied to the raw string value; `list` splits on `$`
          and `(list, int)` additionally casts each item.
    """
    config = settings("mbuniq")
    if not (config.has_section(section) and config.has_option(section, option)):
        return default

    result = config.get(section, option)
    if cast is None:
        return result
    if cast is list:
        return [v.strip() for v in result.split('$') if v.strip() != ""]
    if isinstance(cast, tuple):
        return [cast[1](v) for v in get_option(section, option, cast=list)]
    if cast is bool:
        return result.strip().lower() in ["1", "true", "yes", "on"]
    return cast(result)

def master_seed(default=None):
    """Returns the master seed for simulations. The `MBUNIQ_SEED` environment
    variable overrides the configured `[simulate] seed`.
    """
    from os import environ
    if environ.get("MBUNIQ_SEED", "").strip() != "":
        from mbuniq.errors import ConfigError
        try:
            return int(environ["MBUNIQ_SEED"])
        except ValueError:
            raise ConfigError("MBUNIQ_SEED must be an integer, got {!r}."
                              .format(environ["MBUNIQ_SEED"]))
    return get_option("simulate", "seed", default, int)

def schema_path(name="report"):
    """Returns the full path to a shipped JSON schema file.
    """
    from os import path
    from mbuniq.utility import reporoot
    return path.join(reporoot, "mbuniq", "config", "{}.schema.json".format(name))
