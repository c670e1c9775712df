"""Builds the optional compiled kernels; the package works without them."""

import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("braidrev._ckernels", ["src/braidrev/_ckernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

if os.environ.get("BRAIDREV_PURE") == "1":
    ext_modules = []

setup(ext_modules=ext_modules)
