import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: synopsviz.kernels falls back
# to the pure-Python implementation when the extension is missing.
ext_modules = []
if os.environ.get("SYNOPSVIZ_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("synopsviz._kernels", ["src/synopsviz/_kernels.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
