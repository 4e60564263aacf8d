"""Build script for the compiled kernel extension.

The package works without the extension (a pure-numpy fallback is selected
at import time), but the compiled kernels are strongly recommended: the
MCMC likelihood loop and the cycle-level readout simulation dominate the
runtime of any realistic analysis.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "qpburst._kernels._core",
                ["src/qpburst/_kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install pure-python only.
    extensions = []

setup(ext_modules=extensions)
