# -*- coding: utf-8 -*-
#
# zpoly documentation build configuration file, for sphinx-build.
#
# Only the values that differ from the sphinx-quickstart defaults are set.

import os
import sys

# the package is documented from the source tree
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

import zpoly._version

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'zpoly'
copyright = u'2026, zpoly developers'

version = zpoly._version.__version__
release = version

exclude_patterns = []

pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

html_static_path = []

htmlhelp_basename = 'zpolydoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'zpoly.tex', u'zpoly Documentation',
   u'zpoly developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'zpoly', u'zpoly Documentation',
     [u'zpoly developers'], 1)
]
