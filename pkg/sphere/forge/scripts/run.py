#!/usr/bin/env python

import click

from ..config import default_order
from ..constants import EXIT_OK, EXIT_USAGE
from ..log import echo_info, echo_normal, echo_warning, get_logger, verbosity_option
from ..runner import execute
from ..script import ScriptError, parse_script
from . import sf
from .common_options import budget_options

logger = get_logger(__name__)


@click.command(
    epilog="""
Examples:

  1. Runs a script and prints the report as an aligned table:

     $ sphere-forge run sl2.sfs


  2. Prints the JSON report only, stopping every command after 10000 S-pair
     reductions:

     $ sphere-forge run --emit=json --gb-steps=10000 brieskorn.sfs


  3. Keeps certificates of verified memberships and isomorphisms:

     $ sphere-forge run -vv --cert-out=certs pairs.sfs


  4. Reads the script from the standard input:

     $ sphere-forge new diagonal | sphere-forge run -


Exit codes: 0 all checks passed, 1 a check failed, 2 a budget ran out, 3
usage error (syntax, undeclared names, invalid parameters).
"""
)
@click.argument("script", type=click.File("rb"))
@click.option(
    "-e",
    "--emit",
    type=click.Choice(["text", "json", "both"]),
    default="text",
    show_default=True,
    help="Report format.  With 'both', the table goes to the standard error "
    "and the JSON document to the standard output",
)
@budget_options()
@click.option(
    "-c",
    "--cert-out",
    type=click.Path(file_okay=False),
    default=None,
    help="Directory where certificates of verified checks are written as "
    "re-runnable scripts",
)
@verbosity_option()
@sf.raise_on_error
def run(script, emit, gb_steps, timeout, cert_out):
    """Executes the statements of SCRIPT and reports a verdict per command."""

    try:
        parsed = parse_script(script.read())
    except ScriptError as e:
        echo_warning("%s: %s" % (getattr(script, "name", "<stdin>"), e))
        return EXIT_USAGE

    try:
        order = default_order()
    except ValueError as e:
        echo_warning(str(e))
        return EXIT_USAGE

    logger.info(
        "running %d statement(s) of %s (default order %s)",
        len(parsed),
        getattr(script, "name", "<stdin>"),
        order,
    )
    report = execute(
        parsed, steps=gb_steps, timeout=timeout, cert_out=cert_out, order=order
    )

    if emit in ("text", "both"):
        err = emit == "both"
        click.echo(report.to_text(), err=err)
    if emit in ("json", "both"):
        echo_normal(report.to_json())

    if emit == "text":
        if report.exit_code == EXIT_OK:
            echo_info("all checks passed")
        else:
            echo_warning("some checks did not pass")
    return report.exit_code
