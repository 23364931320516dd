# -*- coding: utf-8 -*-
#
# mbuniq documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
import os
import sys
sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinxcontrib.napoleon'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'mbuniq'
copyright = u'2019, mbuniq developers'
author = u'mbuniq developers'

# The short X.Y version.
version = u'0.1'
# The full version, including alpha/beta/rc tags.
release = u'0.1.1'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'alabaster'
htmlhelp_basename = 'mbuniqdoc'

latex_documents = [
    (master_doc, 'mbuniq.tex', u'mbuniq Documentation',
     u'mbuniq developers', 'manual'),
]
man_pages = [
    (master_doc, 'mbuniq', u'mbuniq Documentation',
     [author], 1)
]

intersphinx_mapping = {'https://docs.python.org/': None,
                       'https://numpy.org/doc/stable/': None}
