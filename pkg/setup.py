"""Build script; compiles the optional C kernel extension.

Set SOCLE_PURE_PYTHON=1 to skip the extension entirely (the package then
runs on the pure-Python kernels).
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SOCLE_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "socle._ckern",
                    ["src/socle/_ckern.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available, building without the C kernels")

setup(ext_modules=ext_modules)
