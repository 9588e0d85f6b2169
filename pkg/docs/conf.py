#!/usr/bin/env python
#
# Sphinx configuration for normlab.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join("..", "src")))

import normlab

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode"]
templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "normlab"
copyright = "normlab developers"
author = "normlab developers"

version = normlab.__version__
release = normlab.__version__

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"
todo_include_todos = False

html_theme = "alabaster"
html_static_path = []
htmlhelp_basename = "normlabdoc"

latex_documents = [
    (master_doc, "normlab.tex", "normlab Documentation", author, "manual"),
]
man_pages = [(master_doc, "normlab", "normlab Documentation", [author], 1)]
