# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

project = 'exactriemann'
copyright = '2024, exactriemann developers'
author = 'exactriemann developers'
release = '0.1.0'

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.mathjax',
              'sphinx_rtd_theme',
              'sphinx.ext.todo'
              ]

# reST docstrings use :param: fields, keep the members in source order
autodoc_member_order = 'bysource'

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']

todo_include_todos = True
