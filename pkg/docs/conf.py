# -*- coding: utf-8 -*-

import os
import sys


sys.path.insert(0, os.path.abspath('..'))


from foodsubs._metadata import __copyright__, __version__


project = u'foodsubs'
copyright = __copyright__
author = u'The foodsubs developers'
version = __version__
release = __version__
language = 'en'


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]


master_doc = 'index'
source_suffix = '.rst'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
templates_path = ['_templates']
pygments_style = 'sphinx'


add_module_names = False
autodoc_member_order = 'bysource'
autodoc_default_options = {
    'members': None,
    'undoc-members': None,
}


todo_include_todos = True



# -- Options for HTML output ----------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_theme_options = {
    'collapse_navigation': False
}

# Output file base name for HTML help builder.
htmlhelp_basename = 'foodsubsdoc'



# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'foodsubs.tex', u'foodsubs Documentation',
     author, 'manual'),
]



# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'foodsubs', u'foodsubs Documentation',
     [author], 1)
]



# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'foodsubs', u'foodsubs Documentation',
     author, 'foodsubs', 'Food substitutes from meal co-occurrence.',
     'Miscellaneous'),
]


intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
