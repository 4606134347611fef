"""Build script for the optional compiled traversal kernel.

The package works without the extension (a pure-Python backend is selected
at import time); set SCHOLARGRAPH_SKIP_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("SCHOLARGRAPH_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "scholargraph.query._traversal_cy",
                    ["src/scholargraph/query/_traversal_cy.pyx"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=extensions)
