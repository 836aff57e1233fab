"""Build script: compiles the optional fast kernels.

The compiled extension is a speedup only; every routine has a pure
numpy fallback selected at import time, so a failed compile must not
abort the install.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"nckepler: skipping compiled kernels ({exc}); "
                  "falling back to pure-python backend", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"nckepler: failed to build {ext.name} ({exc}); "
                  "falling back to pure-python backend", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("nckepler: Cython not available; building pure-python only",
              file=sys.stderr)
        return []
    ext = Extension(
        "nckepler.kernels._fast",
        ["src/nckepler/kernels/_fast.pyx"],
        extra_compile_args=["-O3", "-fopenmp"],
        extra_link_args=["-fopenmp"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
