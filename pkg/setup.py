import os

from setuptools import Extension, setup

# The compiled kernel is optional: without it the package falls back to the
# pure-Python implementation in runslab._pykernel (same results, slower).
# Set RUNSLAB_PURE=1 to skip the extension build entirely.
ext_modules = []
if os.environ.get("RUNSLAB_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("runslab._kernel", ["src/runslab/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
