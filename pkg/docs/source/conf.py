# -*- coding: utf-8 -*-
#
# cliquecolor documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# Note that not all possible configuration values are present in this
# autogenerated file.
#
# All configuration values have a default; values that are commented out
# serve to show the default.
import os
import sys
import datetime

sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))
import cliquecolor

# -- General configuration ------------------------------------------------------

# include these in all pages
rst_prolog = """
.. include:: /links.txt
"""

master_doc = 'master_toctree'
modindex_common_prefix = ["cliquecolor."]

# Add any Sphinx extension module names here, as strings. They can be extensions
# coming with Sphinx (named 'sphinx.ext.*') or your custom ones.
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinxcontrib.argdoc',
    'sphinx.ext.viewcode',
    'numpydoc',
    ]

numpydoc_show_class_members = False

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]


# sphinx autodoc config -------------------------------------------------------

autodoc_default_flags = [
    "show-inheritance",
    "undoc-members",
]
autodoc_member_order = "bysource"

# never document these methods/attributes
exclude_always = {
    "__dict__",
    "__module__",
    "__weakref__",
    "__slots__",
    "__nonzero__",
}


def autodoc_skip_member(app, what, name, obj, skip, options):
    """Do not generate documentation for attributes in ``exclude_always``,
    or for the picklable job runners of :mod:`cliquecolor.suites`

    Parameters
    ----------
    app
        Sphinx application

    what : str
        Type of object (e.g. "module", "function", "class")

    name : str
        Fully-qualified name of object

    obj : object
        Object to skip or not

    skip : bool
        Whether or not Sphinx would skip this, given pre-set options

    options : object
        Options given to the directive

    Returns
    -------
    bool
        True if object should be skipped, False otherwise
    """
    if skip == False:
        if name in exclude_always:
            skip = True
        elif name.startswith("_job_"):
            skip = True
    return skip


def setup(app):
    """Activate custom event handlers for autodoc"""
    app.connect("autodoc-skip-member", autodoc_skip_member)


# intersphinx config ------------------------------------------------------------
intersphinx_mapping = { "python"   : ("https://docs.python.org/3", None),
                        "networkx" : ("https://networkx.org/documentation/stable/", None),
                        "pytest"   : ("https://docs.pytest.org/en/stable/", None),
                        }

# other -------------------------------------------------------------------------

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# The suffix of source filenames.
source_suffix = '.rst'

# General information about the project.
project = u'cliquecolor'
copyright = u'2026, Joshua G. Dunn'

# Short version number, for |version|
version = str(cliquecolor.__version__)
# The full version, including alpha/beta/rc tags, for |release|
release = "%s-r%s" % (cliquecolor.__version__, str(datetime.date.today()).replace("-", "_"))

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['links.txt']

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

# Output file base name for HTML help builder.
htmlhelp_basename = 'cliquecolor_doc'

# One entry per manual page. List of tuples
# (source start file, name, description, authors, manual section).
man_pages = [
    ('index', 'cliquecolor', u'cliquecolor Documentation',
     [u'Joshua G. Dunn'], 1)
]
