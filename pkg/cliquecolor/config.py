#!/usr/bin/env python
"""Configuration values for :mod:`cliquecolor`.

Values are registered by name with a default, in the same spirit as
``app.add_config_value()`` in `Sphinx`_ extensions. The process-wide
configuration is read once from the environment by :func:`get_config`:

=============================   ==============================================
**Environment variable**        **Effect**
-----------------------------   ----------------------------------------------
``CLIQUECOLOR_MAX_EXACT``       Overrides both ``max_exact_chromatic`` and
                                ``max_exact_clique``
``CLIQUECOLOR_<NAME>``          Overrides the value registered as ``<name>``
=============================   ==============================================
"""
import os
import copy
import logging

from cliquecolor.errors import ConfigError

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

logger = logging.getLogger(__name__)

#===============================================================================
# INDEX: registry
#===============================================================================

_ENV_PREFIX = "CLIQUECOLOR_"
_SHARED_BOUND = "CLIQUECOLOR_MAX_EXACT"


class Config(object):
    """Registry of named configuration values

    Attributes
    ----------
    values : dict
        Current value of each registered name

    kinds : dict
        Category of each registered name (`'bound'`, `'search'` or `'seed'`)
    """

    def __init__(self):
        self.values = {}
        self.kinds = {}
        self._types = {}
        self.add_config_value("max_exact_chromatic", 30, "bound")
        self.add_config_value("max_exact_clique", 40, "bound")
        self.add_config_value("max_choosability", 10, "bound")
        self.add_config_value("max_naive_choosability", 7, "bound")
        self.add_config_value("max_naive_list_total", 12, "bound")
        self.add_config_value("search_node_limit", 2000000, "search")
        self.add_config_value("tabu_iterations", 20000, "search")
        self.add_config_value("seed", 0, "seed")

    def add_config_value(self, name, default, kind):
        """Register a configuration value

        Parameters
        ----------
        name : str
            Name of value

        default : int
            Default value. Its type is enforced on later updates.

        kind : str
            Category of value
        """
        self.values[name] = default
        self.kinds[name] = kind
        self._types[name] = type(default)

    def __getattr__(self, name):
        values = self.__dict__.get("values", {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    def copy(self, **overrides):
        """Return a copy of this configuration with some values replaced

        Parameters
        ----------
        overrides
            Names and new values

        Returns
        -------
        :class:`Config`
        """
        other = copy.deepcopy(self)
        other.update(overrides)
        return other

    def update(self, overrides):
        """Replace values, coercing them to their registered types

        Parameters
        ----------
        overrides : dict
            Names and new values

        Raises
        ------
        :class:`~cliquecolor.errors.ConfigError`
            If any name is unknown or any value cannot be coerced. All
            problems are reported together.
        """
        errmsg = ""
        for name, value in sorted(overrides.items()):
            if name not in self.values:
                errmsg += "Unknown configuration value '%s'.\n" % name
                continue
            try:
                self.values[name] = self._types[name](value)
            except (TypeError, ValueError):
                errmsg += "Configuration value '%s' must be %s, got '%s'.\n" % (name, self._types[name].__name__, value)

        if len(errmsg) > 0:
            raise ConfigError(errmsg)

        self.validate()

    def validate(self):
        """Check that all values are in range

        Raises
        ------
        :class:`~cliquecolor.errors.ConfigError`
            Listing every out-of-range value
        """
        errmsg = ""
        for name in sorted(self.values):
            value = self.values[name]
            if self.kinds[name] == "bound" and value < 1:
                errmsg += "Bound '%s' must be positive, got %s.\n" % (name, value)
            elif self.kinds[name] == "search" and value < 1:
                errmsg += "Search limit '%s' must be positive, got %s.\n" % (name, value)

        if len(errmsg) > 0:
            raise ConfigError(errmsg)

    @classmethod
    def from_environ(cls, environ=None):
        """Build a configuration from environment variables

        Parameters
        ----------
        environ : dict, optional
            Mapping to read (Default: :data:`os.environ`)

        Returns
        -------
        :class:`Config`
        """
        environ = os.environ if environ is None else environ
        config = cls()
        overrides = {}
        if _SHARED_BOUND in environ:
            overrides["max_exact_chromatic"] = environ[_SHARED_BOUND]
            overrides["max_exact_clique"] = environ[_SHARED_BOUND]

        for name in config.values:
            key = _ENV_PREFIX + name.upper()
            if key in environ:
                overrides[name] = environ[key]

        if len(overrides) > 0:
            logger.debug("[config] environment overrides: %s" % sorted(overrides))
            config.update(overrides)

        return config


_CONFIG = None


def get_config():
    """Return the process-wide configuration, reading the environment once

    Returns
    -------
    :class:`Config`
    """
    global _CONFIG
    if _CONFIG is None:
        _CONFIG = Config.from_environ()
    return _CONFIG


def reset_config():
    """Forget the process-wide configuration so that the next call to
    :func:`get_config` rereads the environment
    """
    global _CONFIG
    _CONFIG = None
