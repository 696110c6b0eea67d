"""Build script: compiles the optional Cython fixpoint kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so the build is marked optional and a failed compile only
prints a warning.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "copsrobbers._fixpoint",
                ["src/copsrobbers/_fixpoint.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
