"""Build script; the compiled kernels are optional speedups.

If Cython or a C compiler is missing, the build degrades to the pure
numpy fallback in kmm.kernels._pykernels.  Set KMM_NO_EXT=1 to skip
the extension entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._fallback(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._fallback(exc)

    @staticmethod
    def _fallback(exc):
        print(f"WARNING: building compiled kernels failed ({exc!r}); "
              "kmm will use the pure-Python kernels")


def extensions():
    if os.environ.get("KMM_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "kmm.kernels._ckernels",
        ["src/kmm/kernels/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
