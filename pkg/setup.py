"""Build script: compiles the optional _speedups extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
install proceeds without it and the package falls back to the pure-Python
kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "frobgrow._kernels._speedups",
                ["src/frobgrow/_kernels/_speedups.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"skipping compiled kernels ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
