import os

from setuptools import setup

ext_modules = []
if os.environ.get("WEAKCP_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("weakcp._speedups", ["src/weakcp/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python fallback kernels are used when Cython is unavailable.
        ext_modules = []

setup(ext_modules=ext_modules)
