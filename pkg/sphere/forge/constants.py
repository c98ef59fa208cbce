#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Constants used for computing and reporting."""

import pkg_resources

DEFAULT_GB_STEPS = 2_000_000
"""Default number of S-pair reductions a single command may spend"""


DEFAULT_TIMEOUT = 300.0
"""Default wall-clock budget (in seconds) of a single command"""


DEFAULT_ORDER = "grevlex"
"""Default monomial order for rings declared without an explicit order"""


TEMPLATES = pkg_resources.resource_filename(__name__, "templates")
"""Directory holding the jinja2 templates for scripts and certificates"""


EXAMPLES = ("sl2", "brieskorn", "xmn", "diagonal", "pairs")
"""Example scripts that ``sphere-forge new`` knows how to render"""


REPORT_SCHEMA_VERSION = 1
"""Version of the key layout of the machine-readable report"""


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3
