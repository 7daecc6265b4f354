"""Build glue for the optional compiled kernel.

The package is pure Python except for oddwalk.kernels._native, a small
Cython module holding the hot path-propagation loop.  If Cython or a C
compiler is unavailable the build falls back to the pure-Python kernel
and the package still works (set ODDWALK_NO_EXT=1 to skip the extension
on purpose).
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue if not."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the oddwalk._native kernel failed (%s); "
            "falling back to the pure-Python kernel." % (exc,),
            file=sys.stderr,
        )


extensions = []
if not os.environ.get("ODDWALK_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "oddwalk.kernels._native",
                    ["src/oddwalk/kernels/_native.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        print(
            "WARNING: Cython not available; skipping the compiled kernel.",
            file=sys.stderr,
        )

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
