"""Build script.  The compiled kernel is optional: if Cython or a C compiler
is unavailable the package installs anyway and falls back to the pure-Python
kernels at import time (see jetfibers.kernel)."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("JETFIBERS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/jetfibers/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
