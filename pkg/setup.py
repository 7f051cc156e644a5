"""Build script: compiles the optional fast-kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so a failed compile only costs speed.  Set KOTHE_SKIP_EXT=1
to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("KOTHE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/kothe/_kernels/_ckernels.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
