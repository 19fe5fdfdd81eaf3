"""Build script: compiles the optional gain-computation extension.

The package works without the compiled module (a pure-Python fallback is
selected at import time), so compilation failures are downgraded to a
warning instead of aborting the install.
"""

from __future__ import annotations

import warnings

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    extensions = cythonize(
        [
            Extension(
                "apidialog.treecore._gainkernel",
                ["src/apidialog/treecore/_gainkernel.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    warnings.warn(f"compiled gain kernel unavailable, using pure-Python fallback: {exc}")
    extensions = []

setup(ext_modules=extensions)
