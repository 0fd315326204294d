"""Build the optional compiled kernel.

The package works without it (pvcalc._kernel falls back to the pure
Python implementation), so the extension is marked optional: a missing
or broken C toolchain degrades the install instead of failing it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pvcalc._kernel._ckernel",
                ["src/pvcalc/_kernel/_ckernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)
