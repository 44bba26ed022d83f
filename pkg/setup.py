import os

from setuptools import setup

ext_modules = []
if os.environ.get("DISCPROX_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(["src/discprox/_kernels.pyx"], language_level=3)
    except ImportError:
        # No Cython: the pure-Python kernels are selected at import time.
        pass

setup(ext_modules=ext_modules)
