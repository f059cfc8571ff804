"""Build script: compiles the optional fast kernel extension.

The package works without the extension (a pure-Python twin of every
kernel ships alongside it), so a failed compile only costs speed.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Build the extension if possible, otherwise install pure-Python only."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping fast kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"warning: could not compile {ext.name} ({exc})", file=sys.stderr)


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("scx._fastcore", ["src/scx/_fastcore.pyx"])],
        language_level=3,
    )
except Exception as exc:
    print(f"warning: Cython unavailable, building pure-Python only ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": _OptionalBuildExt})
