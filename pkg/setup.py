"""Build the optional Smith-normal-form kernel.

The package is fully functional without the extension (the pure-Python path
is always present); when Cython and a C compiler are available the kernel is
compiled and picked up automatically at import.
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
                "towercalc._snfcore",
                ["src/towercalc/_snfcore.pyx"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
