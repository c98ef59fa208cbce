#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Main entry point for sphere-forge."""

import functools

import click
import pkg_resources

from click_plugins import with_plugins

from ..constants import EXIT_BUDGET, EXIT_FAILED, EXIT_USAGE
from ..log import setup

logger = setup("sphere")


EXIT_MEANING = {
    EXIT_FAILED: "a check failed",
    EXIT_BUDGET: "a budget ran out",
    EXIT_USAGE: "usage error",
}


class AliasedGroup(click.Group):
    """Resolves unambiguous prefixes of sub-command names (``r`` for ``run``)"""

    def get_command(self, ctx, cmd_name):
        rv = super().get_command(ctx, cmd_name)
        if rv is not None:
            return rv
        matches = [x for x in self.list_commands(ctx) if x.startswith(cmd_name)]
        if len(matches) > 1:
            ctx.fail("Too many matches: %s" % ", ".join(sorted(matches)))
        if matches:
            return super().get_command(ctx, matches[0])
        return None


def raise_on_error(view_func):
    """Makes the value returned by a command the process exit code

    Click exits with 0 whatever a command returns, so a non-zero value is
    raised as a :py:class:`click.ClickException` carrying it.
    """

    @functools.wraps(view_func)
    def _decorator(*args, **kwargs):
        value = view_func(*args, **kwargs)
        if value:
            exception = click.ClickException(
                "Finished with exit code %d (%s)"
                % (value, EXIT_MEANING.get(value, "unknown"))
            )
            exception.exit_code = value
            raise exception
        return value

    return _decorator


@with_plugins(pkg_resources.iter_entry_points("sphere_forge.cli"))
@click.group(
    cls=AliasedGroup,
    context_settings=dict(help_option_names=["-?", "-h", "--help"]),
)
def main():
    """Sphere Forge - constructs and verifies A1-bundle threefolds"""

    pass
