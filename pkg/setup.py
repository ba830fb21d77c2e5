"""Builds the optional compiled kernel.

A failed compile (missing Cython or compiler) degrades gracefully: the
package installs without the extension and the pure-Python kernels are
used at import time.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/matchcover/kernels/_fast.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"warning: compiled kernel disabled ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
