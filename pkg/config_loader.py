# ==============================================================================
# Configuration Loader for frobkit
# Version: 3.1.0
# ==============================================================================
# Loads engine and report settings from an .ini file and resolves the values
# the toolkit actually runs with.
#
# Precedence, highest first: command-line flag, environment variable, .ini
# file, built-in default.
#
# Changelog:
# - v2.2.0: Class-based ConfigLoader.
# - v3.0.0: ToolkitSettings resolves engine caps (degree guard, workers, term
#           cap) and pushes them into the Groebner engine and the criteria
#           module. A missing file means built-in defaults.
# - v3.1.0: ConfigLoader keeps only the accessors ToolkitSettings reads
#           (get, getint, has_option).
# ==============================================================================

import configparser
import logging
import os

from errors import UsageError

__version__ = "3.1.0"

DEFAULT_CONFIG_FILE = "frobkit_config.ini"
CONFIG_ENV = "FROBKIT_CONFIG"

# (attribute, section, key, environment variable, default, type)
SETTINGS = (
    ("degree_guard", "Engine", "Degree_Guard", "FROBKIT_DEGREE_GUARD", 60, int),
    ("workers", "Engine", "Workers", "FROBKIT_WORKERS", 1, int),
    ("term_cap", "Criteria", "Term_Cap", "FROBKIT_TERM_CAP", 5_000_000, int),
    ("default_e", "Criteria", "Default_E", None, 1, int),
    ("indent", "Report", "Indent", None, 2, int),
    ("log_level", "Logging", "Log_Level", None, "WARNING", str),
)


class ConfigLoader:
    """
    A class to load and manage configuration from an INI file.
    """
    def __init__(self, config_path=None):
        """
        Initializes the ConfigLoader. Without a path, or when the file is
        missing, every lookup returns its fallback.

        Args:
            config_path (str, optional): Path to the configuration .ini file.
        """
        self.config_path = config_path
        self.config = configparser.ConfigParser()
        if not config_path:
            return
        try:
            if not self.config.read(self.config_path):
                logging.warning(f"Configuration file not found or is empty: {self.config_path}")
        except configparser.Error as e:
            logging.error(f"Failed to parse configuration file {self.config_path}: {e}")
            self.config = configparser.ConfigParser()

    def get(self, section, key, fallback=None):
        return self.config.get(section, key, fallback=fallback)

    def getint(self, section, key, fallback=None):
        try:
            return self.config.getint(section, key, fallback=fallback)
        except ValueError:
            raise UsageError(f"[{section}] {key} in {self.config_path} must be an integer.") from None

    def has_option(self, section, option):
        return self.config.has_option(section, option)


def default_config_path(environ=None):
    """FROBKIT_CONFIG if set, else frobkit_config.ini in the working directory when present."""
    environ = os.environ if environ is None else environ
    if environ.get(CONFIG_ENV):
        return environ[CONFIG_ENV]
    if os.path.exists(DEFAULT_CONFIG_FILE):
        return DEFAULT_CONFIG_FILE
    return None


class ToolkitSettings:
    """
    Effective settings for one toolkit run.

    Args:
        loader (ConfigLoader, optional): Parsed .ini file.
        overrides (dict, optional): Values given on the command line; None
            entries are ignored.
        environ (dict, optional): Environment to read (os.environ by default).
    """
    def __init__(self, loader=None, overrides=None, environ=None):
        self.loader = loader or ConfigLoader(None)
        self.environ = os.environ if environ is None else environ
        self.sources = {}
        overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
        for attr, section, key, env, default, kind in SETTINGS:
            value, source = self._resolve(attr, section, key, env, default, kind, overrides)
            setattr(self, attr, value)
            self.sources[attr] = source
        for attr in ("degree_guard", "workers", "term_cap", "default_e", "indent"):
            if getattr(self, attr) < (0 if attr == "indent" else 1):
                raise UsageError(f"Setting {attr} is out of range: {getattr(self, attr)}.")

    def _resolve(self, attr, section, key, env, default, kind, overrides):
        if attr in overrides:
            return kind(overrides[attr]), "flag"
        if env and self.environ.get(env):
            raw = self.environ[env]
            try:
                return kind(raw), "environment"
            except ValueError:
                raise UsageError(f"Environment variable {env} must be an integer, got '{raw}'.") from None
        if self.loader.has_option(section, key):
            if kind is int:
                return self.loader.getint(section, key), "config"
            return self.loader.get(section, key), "config"
        return default, "default"

    @classmethod
    def load(cls, config_path=None, overrides=None, environ=None):
        path = config_path or default_config_path(environ)
        if path:
            logging.info(f"Loading configuration from {path}")
        return cls(ConfigLoader(path), overrides, environ)

    def apply(self):
        """Pushes engine limits into the Groebner engine and the criteria module."""
        import groebner
        import fcriteria
        groebner.set_engine_limits(degree_guard=self.degree_guard, workers=self.workers)
        fcriteria.set_term_cap(self.term_cap)
        logging.debug(f"Settings applied: {self.as_dict()} from {self.sources}")

    def as_dict(self):
        return {attr: getattr(self, attr) for attr, *_ in SETTINGS}
