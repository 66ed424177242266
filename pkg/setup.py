# -*- coding: utf-8 -*-
"""Setup file for cliquecolor"""
from setuptools import setup, find_packages
import cliquecolor

with open("README.rst") as f:
    long_description = f.read()

config_info = { "version"          : cliquecolor.__version__,
                "packages"         : find_packages(),
                "long_description" : long_description,
              }

setup(
    name = "cliquecolor",
    description = "Color graphs with Delta-1 colors or certify a large clique",

    author           = "Joshua Griffin Dunn",
    author_email     = "joshua.g.dunn@gmail.com",
    maintainer       = "Joshua Griffin Dunn",
    maintainer_email = "joshua.g.dunn@gmail.com",

    license   = "BSD 3-Clause",
    keywords  = "graph coloring Brooks clique list-coloring choosability certificate",
    platforms = "any",

    zip_safe = False,

    install_requires = [
                "networkx>=2.5",
                ],

    extras_require = {
                "docs" : ["sphinx>=1.3.1", "sphinxcontrib-argdoc", "numpydoc", "sphinx_rtd_theme"],
                },

    tests_require=["pytest>=6.0"],
    include_package_data=True,
    package_data={ '' : ['*rst',
                   'cliquecolor/test/cases/*.col',
                   ],
                   'cliquecolor.test.cases' : ['*.col'],
                  },

    entry_points = {
                "console_scripts" : [
                    "cliquecolor = cliquecolor.cli:main",
                    ],
                },

    classifiers=[
         'Development Status :: 3 - Alpha',
         'Environment :: Console',
         'Programming Language :: Python',
         'Programming Language :: Python :: 3',

         'Topic :: Scientific/Engineering :: Mathematics',
         'Topic :: Utilities',

         'Intended Audience :: Science/Research',
         'License :: OSI Approved :: BSD License',
         'Natural Language :: English',
         'Operating System :: OS Independent',
        ],
    **config_info
)
