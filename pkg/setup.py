"""Builds the optional compiled kernel extension.

The package works without it (pure-numpy kernels are selected at import
time when the extension is missing), so a failed compile is not fatal to
`pip install` -- run with MLFM_SKIP_NATIVE=1 to skip the extension.
"""

import os

from setuptools import Extension, setup

if os.environ.get("MLFM_SKIP_NATIVE"):
    setup()
else:
    import numpy as np
    from Cython.Build import cythonize

    ext = Extension(
        "mlfm.kernels._native",
        sources=["src/mlfm/kernels/_native.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    setup(ext_modules=cythonize([ext], language_level="3"))
