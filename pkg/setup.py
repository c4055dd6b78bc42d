"""Build script: compiles the optional Cython census kernels.

The package works without the extension (a pure-Python fallback is selected
at import time); building it makes the census inner loops 1-2 orders of
magnitude faster.  `SRPVEC_NO_EXT=1 pip install ...` skips compilation.
"""

import os

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("SRPVEC_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "srpvec._kernels_cy",
                ["src/srpvec/_kernels_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
