import os

from setuptools import Extension, setup

# The compiled search kernel is optional: if Cython (or a C compiler) is
# unavailable the package installs anyway and circlefp._kernel falls back to
# the pure-Python twin.
ext_modules = []
if os.environ.get("CIRCLEFP_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "circlefp._core",
                    sources=["src/circlefp/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
