"""Build shim: compiles the optional word-kernel extension when Cython and a C
toolchain are available, and falls back to the pure-Python kernel otherwise."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/dehnkit/_wordops_c.pyx"],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
