# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------
import os
import sys
from datetime import date
sys.path.insert(0, os.path.abspath('../..'))


# -- Import ChevCert version -------------------------------------------------
from chevcert import __version__  # noqa: E402


# -- Project information -----------------------------------------------------
project = 'ChevCert'
project_copyright = '2024-%s, the ChevCert developers' % date.today().year
author = 'The ChevCert developers'

# The full version, including alpha/beta/rc tags
release = __version__


# -- General configuration ---------------------------------------------------
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx_design',
    'numpydoc'
]

exclude_patterns = []


# -- Options for HTML output -------------------------------------------------
html_theme = 'pydata_sphinx_theme'

html_theme_options = {
    "pygment_light_style": "default",
    "pygment_dark_style": "monokai",
}

# Do not show type hints.
autodoc_typehints = 'none'

# Do  not use numpydoc to generate autosummary.
numpydoc_show_class_members = False

# Create autosummary for all files.
autosummary_generate = True
