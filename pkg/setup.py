import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: the package falls back to
# pure-Python implementations at import time if the extension is missing.
ext_modules = []
if os.environ.get("CUBICTRACE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cubictrace._speedups", ["src/cubictrace/_speedups.pyx"])],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
