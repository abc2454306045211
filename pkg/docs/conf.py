#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# score.ainf documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package lives one level up.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

# Do not change order of class members in documentation.
autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'score.ainf'
copyright = '2018, strg.at'

version = '0.1'
release = '0.1.0'

# The *_include.rst files are pulled into other documents.
exclude_patterns = ['_build', '*_include.rst']

pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'strg-default'
html_theme_options = {
    'sidebarwidth': '300',
}
html_theme_path = ['.']
htmlhelp_basename = 'scoreainfdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
  ('index', 'scoreainf.tex', 'score.ainf Documentation',
   'strg.at', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'scoreainf', 'score.ainf Documentation',
     ['strg.at'], 1)
]


intersphinx_mapping = {
    'python': ('http://docs.python.org/3/', None),
    'click': ('https://click.palletsprojects.com/en/7.x/', None),
    'sympy': ('https://docs.sympy.org/latest/', None),
}
