# -*- coding: utf-8 -*-
#
# Coaster documentation build configuration file.

import sys, os

import coaster

sys.path.insert(0, os.path.dirname(coaster.__file__))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Coaster'
copyright = u'2026, The coaster authors'

version = '.'.join(coaster.__version__.split('.')[:2])
release = coaster.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'Coasterdoc'

latex_documents = [
    ('index', 'Coaster.tex', u'Coaster Documentation',
     u'The coaster authors', 'manual'),
]

man_pages = [
    ('index', 'coaster', u'Coaster Documentation',
     [u'The coaster authors'], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}
