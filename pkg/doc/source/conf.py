# -*- coding: utf-8 -*-
#
# pyCBT documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import re
import sys

# the package is documented from the build tree when available (python setup.py build_doc)
sys.path.insert(0, os.path.abspath(os.path.join("..", "..", "build", "lib")))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyCBT'
copyright = u'2026, the pyCBT developers'

# The short X.Y version and the full version, read from the package
release = [eval(l.split("=")[1]) for l in open(os.path.join("..", "..", "pyCBT-src", "__init__.py"))
           if l.strip().startswith("version")][0]
version = ".".join(release.split(".")[:2])

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'pyCBTdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {}
latex_documents = [
  ('index', 'pyCBT.tex', u'pyCBT Documentation',
   u'the pyCBT developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'pycbt', u'pyCBT Documentation', [u'the pyCBT developers'], 1),
    ('man/pyCBT-risk', 'pyCBT-risk', u'two-agent Bayes risk surface', [u'the pyCBT developers'], 1),
    ('man/pyCBT-curves', 'pyCBT-curves', u'optimal belief curves', [u'the pyCBT developers'], 1),
    ('man/pyCBT-fixedpoints', 'pyCBT-fixedpoints', u'priors with unbiased optimal predecessor',
     [u'the pyCBT developers'], 1),
    ('man/pyCBT-selection', 'pyCBT-selection', u'predecessor selection region', [u'the pyCBT developers'], 1),
    ('man/pyCBT-prelec', 'pyCBT-prelec', u'Prelec fit of the optimal beliefs', [u'the pyCBT developers'], 1),
    ('man/pyCBT-simulate', 'pyCBT-simulate', u'Monte Carlo cascade simulation', [u'the pyCBT developers'], 1),
    ('man/pyCBT-posterior', 'pyCBT-posterior', u'posterior beliefs per decision history',
     [u'the pyCBT developers'], 1),
    ('man/pyCBT-condition', 'pyCBT-condition', u'fixed point multiplicity map', [u'the pyCBT developers'], 1),
]

texinfo_documents = [
  ('index', 'pyCBT', u'pyCBT Documentation',
   u'the pyCBT developers', 'pyCBT', 'Cascading binary hypothesis testing.',
   'Miscellaneous'),
]

# epydoc fields are rendered as sphinx fields
re_field = re.compile('@(param|type|rtype|return)')


def fix_docstring(app, what, name, obj, options, lines):
    for i in range(len(lines)):
        lines[i] = re_field.sub(r':\1', lines[i])


def setup(app):
    app.connect('autodoc-process-docstring', fix_docstring)
