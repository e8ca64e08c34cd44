import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the coloring accelerator if possible; the package falls back
    to the pure-Python kernel when the extension is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: skipped building hexchan._zykov ({exc}); "
            "using the pure-Python coloring kernel",
            file=sys.stderr,
        )


extensions = []
if not os.environ.get("HEXCHAN_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [Extension("hexchan._zykov", ["src/hexchan/_zykov.pyx"], extra_compile_args=["-O2"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; using the pure-Python coloring kernel", file=sys.stderr)

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
