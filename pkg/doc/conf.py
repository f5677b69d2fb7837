# -*- coding: utf-8 -*-
#
# WeilKit documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Make the weillib package importable without installing it.
sys.path.insert(0, os.path.abspath('..'))
from weillib import __version__

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.ifconfig',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
]

# Napoleon settings
napoleon_google_docstring = False
napoleon_numpy_docstring = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'WeilKit'
copyright = u'2016, the WeilKit developers'

# The short X.Y version.
version = '.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_static_path = ['_static']
htmlhelp_basename = 'weilkitdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'weilkit.tex', u'WeilKit Documentation',
   u'The WeilKit developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'weilkit', u'WeilKit Documentation',
     [u'The WeilKit developers'], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
  ('index', 'weilkit', u'WeilKit Documentation',
   u'The WeilKit developers', 'WeilKit',
   'Exact character sums and L-polynomials over finite fields.',
   'Miscellaneous'),
]
