"""Build script for the optional compiled kernel.

The package is pure Python plus one optional Cython extension holding the hot
exact-arithmetic loops.  If Cython or a C compiler is unavailable the build
falls through and the package runs on the pure-Python kernel instead.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compile failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: skipping compiled kernel ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: could not build {ext.name} ({exc}); using pure-Python fallback")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "alphadet.kernels._kernel_c",
                ["src/alphadet/kernels/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:  # pragma: no cover - depends on toolchain
    pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
