"""Build script: compiles the sweep kernel extension when a toolchain is available.

The package works without the extension (a pure-Python fallback is selected at
import time), so a failed compile downgrades to a warning instead of aborting
the install.  Set STEINERLOOPS_PURE=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing or broken
            print(f"warning: skipping compiled sweep kernels ({exc}); "
                  "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "the pure-Python fallback will be used")


ext_modules = []
if not os.environ.get("STEINERLOOPS_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("steinerloops._fastsweep", ["src/steinerloops/_fastsweep.pyx"])],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
