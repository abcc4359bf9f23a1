#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# weakestlink documentation build configuration file.
import json
import os
import sys

from recommonmark.parser import CommonMarkParser

sys.path.insert(0, os.path.abspath("../src"))

with open("../version.json") as filehandle:
    version_info = json.load(filehandle)
    version_string = version_info["version_string"]
    short_version = ".".join([str(i) for i in version_info["version"][0:3]])

extensions = ["sphinx.ext.autodoc", "sphinx.ext.napoleon"]

# Napoleon settings
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True

templates_path = ["_templates"]
source_parsers = {".md": CommonMarkParser}
source_suffix = [".rst", ".md"]
master_doc = "index"

project = "weakestlink"
version = short_version
release = version_string
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"

html_theme = "sphinx_rtd_theme"
html_title = "weakestlink %s" % version_string
html_last_updated_fmt = "%Y-%m-%d"
html_show_copyright = False
htmlhelp_basename = "weakestlinkdoc"

man_pages = [(master_doc, "weakestlink", "weakestlink Documentation", [], 1)]
