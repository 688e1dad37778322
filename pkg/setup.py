"""Build script for the optional compiled kernels.

The package is fully functional without the extension: mtrsched.kernels
falls back to the pure-Python twin at import time when the compiled
module is missing.  Set MTRSCHED_PURE=1 to skip the extension build.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Try to build the speedup extension; warn and continue on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing entirely
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"WARNING: compiled kernels not built ({exc}); "
              "the pure-Python fallback will be used")


def extensions():
    if os.environ.get("MTRSCHED_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython unavailable; building without compiled kernels")
        return []
    return cythonize(
        [Extension("mtrsched._ckernels", ["src/mtrsched/_ckernels.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
