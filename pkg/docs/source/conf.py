# conf.py
import os
import sys
from datetime import datetime

import sphinx_bootstrap_theme

"""
Sphinx configuration for the layerscore documentation.

The ``src`` directory is added to ``sys.path`` so autodoc can import the
package; docstrings are Google style and are parsed by Napoleon.
"""

# -- Path setup --------------------------------------------------------------

sys.path.insert(0, os.path.abspath("../../src"))

# -- Project information -----------------------------------------------------

project = "layerscore"
author = "Michael Smith"
release = "0.1.0"
version = "0.1"
copyright = f"{datetime.now().year}, Michael Smith"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx_autodoc_typehints",
    "sphinx_copybutton",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "pandas": ("https://pandas.pydata.org/docs", None),
}

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "bootstrap"
html_theme_path = [sphinx_bootstrap_theme.get_html_theme_path()]
html_theme_options = {
    "navbar_title": "layerscore",
    "globaltoc_depth": 2,
    "source_link_position": "footer",
}
html_static_path = []

# -- Options for autodoc -----------------------------------------------------

autodoc_member_order = "bysource"
autodoc_typehints = "description"
typehints_fully_qualified = False

# -- Options for sphinx_copybutton -------------------------------------------

copybutton_prompt_text = r"^\s*\$\s*"
copybutton_prompt_is_regexp = True

# -- Napoleon settings -------------------------------------------------------

napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_init_with_doc = False
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True

pygments_style = "sphinx"

rst_epilog = """
.. |project| replace:: layerscore
.. |release| replace:: 0.1.0
"""
