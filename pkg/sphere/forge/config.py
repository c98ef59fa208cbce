#!/usr/bin/env python
# coding=utf-8

"""Reads and treats configuration files"""


import configparser
import os

from .constants import DEFAULT_GB_STEPS, DEFAULT_ORDER, DEFAULT_TIMEOUT
from .log import get_logger

logger = get_logger(__name__)


ORDER_ENVIRONMENT = "SPHERE_FORGE_ORDER"
"""Environment variable selecting the default monomial order"""


def read_config(path="~/.sphereforgerc"):
    """Reads and resolves configuration files, returns a dictionary with read
    values"""

    data = configparser.ConfigParser()
    cfg = os.path.expanduser(path)
    if os.path.exists(cfg):
        data.read(cfg)
    return data


def default_budgets(data=None):
    """Returns the ``(steps, timeout)`` budget pair configured for this user

    Values in the ``[budgets]`` section of the configuration file replace the
    built-in defaults.  A missing section keeps the defaults.
    """

    data = read_config() if data is None else data
    steps, timeout = DEFAULT_GB_STEPS, DEFAULT_TIMEOUT
    if "budgets" in data:
        section = data["budgets"]
        steps = section.getint("steps", fallback=steps)
        timeout = section.getfloat("timeout", fallback=timeout)
    return steps, timeout


def default_order(data=None, env=os.environ):
    """Returns the name of the default monomial order

    The environment variable :py:data:`ORDER_ENVIRONMENT` wins over the
    ``[order]`` section of the configuration file.
    """

    name = env.get(ORDER_ENVIRONMENT)
    if name:
        logger.debug("default order %s taken from %s", name, ORDER_ENVIRONMENT)
    else:
        data = read_config() if data is None else data
        name = DEFAULT_ORDER
        if "order" in data:
            name = data["order"].get("default", fallback=name)

    name = name.strip().lower()
    if name not in ("grevlex", "lex"):
        raise ValueError(
            "Default monomial order must be 'grevlex' or 'lex' (got %r) - "
            "block orders need an explicit variable list" % name
        )
    return name
