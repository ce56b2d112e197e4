"""Builds the optional compiled kernel; the package works without it."""

from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "smoothwords._ckernel",
                ["src/smoothwords/_ckernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler: fall back to _pykernel
            print(f"warning: compiled kernel not built ({exc}); using pure-Python kernel")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
