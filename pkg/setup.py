import os

from setuptools import setup

# The compiled straightening kernel is optional: the package falls back to
# the pure-Python kernel when the extension is absent or fails to build.
ext_modules = []
if os.environ.get("FOCKCANON_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/fockcanon/_straighten.pyx"],
            language_level="3",
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
