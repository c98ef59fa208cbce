#!/usr/bin/env python
# -*- coding: utf-8 -*-

import time

import pkg_resources
import sphinx_rtd_theme

# -- General configuration -----------------------------------------------------

needs_sphinx = "1.3"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
]

# the report and script pages only point to the API, never the reverse
nitpicky = False

autosummary_generate = True

source_suffix = ".rst"
master_doc = "index"

project = "sphere.forge"
copyright = "%s, Sphere Forge Developers" % time.strftime("%Y")

# versions come from the installed distribution, doc builds run after install
distribution = pkg_resources.require(project)[0]
version = distribution.version
release = distribution.version

# links.rst is only included
exclude_patterns = ["links.rst"]

pygments_style = "sphinx"

# -- Options for HTML output ---------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = project.replace(".", "_") + "_doc"

# -- Post configuration --------------------------------------------------------

rst_epilog = """
.. |project| replace:: Sphere Forge
.. |version| replace:: %s
.. |current-year| date:: %%Y
""" % (
    version,
)

# signatures of the exact-arithmetic classes are documented on the class
autoclass_content = "both"
autodoc_member_order = "bysource"
autodoc_default_options = {
    "members": True,
    "show-inheritance": True,
}

intersphinx_mapping = {"python": ("https://docs.python.org/3", None)}
