from setuptools import setup
from setuptools.extension import Extension

# The compiled search kernel is an accelerator only; conjtri.core falls back
# to the pure-Python twin when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                name="conjtri._core",
                sources=["src/conjtri/_core.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
