"""Build hook for the optional compiled kernel core.

A pure-python install (numpy kernels only) still works if Cython or a C
compiler is unavailable; the package selects the backend at import time.
"""
import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "pivotlab.kernels._ckernels",
        ["src/pivotlab/kernels/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("Cython unavailable: building without compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
