#!/usr/bin/env python

import click

from ..constants import EXIT_USAGE
from ..log import echo_normal, echo_warning, get_logger, verbosity_option
from ..script import ScriptError, format_script, parse_script
from . import sf

logger = get_logger(__name__)


@click.command(
    epilog="""
Examples:

  1. Prints the canonical form of a script:

     $ sphere-forge fmt pairs.sfs


  2. Rewrites a script in place:

     $ sphere-forge fmt --in-place pairs.sfs
"""
)
@click.argument("script", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option(
    "-i",
    "--in-place",
    is_flag=True,
    default=False,
    help="Overwrites SCRIPT instead of printing its canonical form",
)
@verbosity_option()
@sf.raise_on_error
def fmt(script, in_place):
    """Pretty-prints SCRIPT, one canonical statement per line.

    Comments are dropped.  The output parses back to the same statements.
    """

    if in_place and script == "-":
        raise click.BadParameter(
            "cannot rewrite the standard input", param_hint="'--in-place'"
        )

    with click.open_file(script, "rb") as f:
        data = f.read()

    try:
        text = format_script(parse_script(data))
    except ScriptError as e:
        echo_warning("%s: %s" % (script, e))
        return EXIT_USAGE

    if in_place:
        logger.info("rewriting %s", script)
        with open(script, "wt") as f:
            f.write(text)
    else:
        echo_normal(text.rstrip("\n"))
