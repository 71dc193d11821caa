"""Build script: compiles the optional bit-matrix kernel extension.

The package is fully functional without the extension (a pure-Python
twin of every kernel ships in kappalat._pure); the build therefore
tolerates a missing compiler or missing Cython and falls back to a
pure build.  Set KAPPALAT_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            print(f"warning: skipping compiled kernels ({exc}); using pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); using pure-Python backend")


ext_modules = []
if os.environ.get("KAPPALAT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("kappalat._fast", ["src/kappalat/_fast.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; using pure-Python backend")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
