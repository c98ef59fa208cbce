#!/usr/bin/env python

import os

import click
import jinja2

from ..config import default_order
from ..constants import EXAMPLES, TEMPLATES
from ..log import echo_normal, get_logger, verbosity_option
from . import sf

logger = get_logger(__name__)


PARAMETERS = dict(
    sl2=dict(order=None),
    brieskorn=dict(p=2, q=3, r=7, timeout=60),
    xmn=dict(m=1, n=1, order=None),
    diagonal=dict(p1=0, p2=0),
    pairs=dict(order=None),
)
"""Template parameters of each example and their defaults"""


def parse_assignments(example, assignments):
    """Turns ``KEY=VALUE`` strings into the jinja context of ``example``"""

    context = dict(PARAMETERS[example])
    for item in assignments:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in context:
            raise click.BadParameter(
                "%r is not KEY=VALUE with KEY one of %s"
                % (item, ", ".join(sorted(context)) or "(none)"),
                param_hint="'--set'",
            )
        value = value.strip()
        try:
            value = int(value)
        except ValueError:
            pass
        context[key] = value
    if "order" in context and context["order"] is None:
        context["order"] = default_order()
    return context


def render_template(jenv, template, context, output):
    """Renders a template to a file, or to the standard output

    Args:

      jenv: The Jinja2 environment to use for rendering the template
      template: The path to the template, from the internal templates directory
      context: A dictionary with the context to render the template with
      output: Path of the output file, ``None`` for the standard output
    """

    T = jenv.get_template(template)
    text = T.render(**context)
    if output is None:
        echo_normal(text.rstrip("\n"))
        return

    basedir = os.path.dirname(output)
    if basedir and not os.path.exists(basedir):
        logger.info("mkdir %s", basedir)
        os.makedirs(basedir)
    logger.info("rendering %s", output)
    with open(output, "wt") as f:
        f.write(text)


@click.command(
    epilog="""
Examples:

  1. Prints the SL(2) example:

     $ sphere-forge new sl2


  2. Writes the threefold over the Brieskorn surface S(2, 3, 11):

     $ sphere-forge new -vv brieskorn --set r=11 -o s2311.sfs


  3. Renders and runs the centers (x^2, y^3):

     $ sphere-forge new xmn -s m=2 -s n=3 | sphere-forge run -
"""
)
@click.argument("example", type=click.Choice(EXAMPLES))
@click.option(
    "-s",
    "--set",
    "assignments",
    multiple=True,
    help="Replaces a template parameter, as KEY=VALUE (may be repeated)",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="File where to write the script (must not exist), instead of the "
    "standard output",
)
@verbosity_option()
@sf.raise_on_error
def new(example, assignments, output):
    """Renders the EXAMPLE script from its template."""

    context = parse_assignments(example, assignments)

    if output is not None and os.path.exists(output):
        raise IOError(
            "The file %s already exists - cannot overwrite!" % output
        )

    env = jinja2.Environment(
        loader=jinja2.FileSystemLoader(TEMPLATES),
        keep_trailing_newline=True,
    )
    render_template(env, "examples/%s.sfs" % example, context, output)
