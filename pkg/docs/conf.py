# Sphinx configuration for the pyquadri documentation.
#
# See https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../'))


# -- Project information -----------------------------------------------------

project = 'PyQuadri'
copyright = '2026, PyQuadri developers'
author = 'PyQuadri developers'

release = '0.1.0'

master_doc = 'index'

# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

exclude_patterns = []


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_static_path = []
