#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Logging set-up shared by the library and the command-line tools.

Records up to INFO are written to the standard output, warnings and errors to
the standard error, both through the handlers of the ``sphere`` logger.
Colors are only used on terminals.
"""

import logging
import sys

import click
import termcolor

ROOT = "sphere"
"""Name of the logger every module of the toolkit logs under"""

_logger = logging.getLogger(ROOT)


LEVEL_COLORS = dict(
    debug=dict(),
    info=dict(attrs=["bold"]),
    warning=dict(color="yellow", attrs=["bold"]),
    error=dict(color="red"),
    exception=dict(color="red", attrs=["bold"]),
    critical=dict(color="red", attrs=["bold"]),
)
"""termcolor attributes of each logging method"""


VERBOSITY = (logging.ERROR, logging.WARNING, logging.INFO, logging.DEBUG)
"""Logging level for 0, 1, 2 or 3 ``-v`` flags"""


def _handler(stream, level, upto=None):
    handler = logging.StreamHandler(stream)
    handler.setLevel(level)
    if upto is not None:
        handler.addFilter(lambda record: record.levelno <= upto)
    return handler


_warn_err = _handler(sys.stderr, logging.WARNING)
_debug_info = _handler(sys.stdout, logging.DEBUG, upto=logging.INFO)
_logger.addHandler(_warn_err)
_logger.addHandler(_debug_info)


def _on_terminal():
    isatty = getattr(sys.stdout, "isatty", None)
    return sys.platform != "win32" and isatty is not None and isatty()


class ColorLog(object):
    """Wraps a logger, coloring the messages of its logging methods"""

    def __init__(self, logger):
        self._log = logger

    def __getattr__(self, name):
        method = getattr(self._log, name)
        if name not in LEVEL_COLORS or not _on_terminal():
            return method
        colors = LEVEL_COLORS[name]

        def colored(msg, *args, **kwargs):
            return method(termcolor.colored(msg, **colors), *args, **kwargs)

        return colored


def get_logger(name):
    """Returns the (colored) logger ``name``, use with ``__name__``"""

    return ColorLog(logging.getLogger(name))


def echo_normal(text):
    """Prints report tables, JSON documents and scripts as they are"""

    click.echo(text)


def echo_info(text):
    """Prints a summary line of passed verifications"""

    click.echo(termcolor.colored(text, "green"))


def echo_warning(text):
    """Prints failed or indeterminate verifications and script errors"""

    click.echo(termcolor.colored(text, **LEVEL_COLORS["warning"]))


def setup(logger_name, format="%(levelname)s:%(name)s@%(asctime)s: %(message)s"):
    """Returns the logger ``logger_name`` writing through the toolkit handlers

    Loggers outside of the ``sphere`` hierarchy receive the same handlers.
    ``format`` (see :py:class:`logging.LogRecord`) is applied to every handler
    involved.
    """

    logger = logging.getLogger(logger_name)
    if not logger_name.startswith(ROOT) and not logger.handlers:
        logger.addHandler(_warn_err)
        logger.addHandler(_debug_info)

    formatter = logging.Formatter(format)
    for handler in set(logger.handlers) | set(_logger.handlers):
        handler.setFormatter(formatter)

    return ColorLog(logger)


def set_verbosity_level(logger, level):
    """Sets the level of ``logger`` (a logger or its name) and of the toolkit

    Raises :py:class:`ValueError` unless ``level`` is 0 (errors), 1
    (warnings), 2 (info) or 3 (debug).
    """

    if level not in range(len(VERBOSITY)):
        raise ValueError(
            "verbosity level %d does not exist, use at most %d '-v' flags"
            % (level, len(VERBOSITY) - 1)
        )
    if isinstance(logger, str):
        logger = logging.getLogger(logger)
    logger.setLevel(VERBOSITY[level])
    _logger.setLevel(VERBOSITY[level])


def verbosity_option(**kwargs):
    """Click decorator adding a counted ``-v/--verbose`` option"""

    def callback(ctx, param, value):
        try:
            set_verbosity_level(_logger, value)
        except ValueError as e:
            raise click.BadParameter(str(e), ctx=ctx, param=param)
        _logger.debug("logging level of %s set to %d", ROOT, value)
        return value

    def custom_verbosity_option(f):
        return click.option(
            "-v",
            "--verbose",
            count=True,
            expose_value=False,
            default=0,
            help="Prints warnings (-v), the progress of each command (-vv) or "
            "Groebner basis statistics (-vvv) besides errors",
            callback=callback,
            **kwargs,
        )(f)

    return custom_verbosity_option
