import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("STAIRCASE_SUMS_SKIP_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "staircase_sums._kernels_c",
                ["src/staircase_sums/_kernels_c.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
