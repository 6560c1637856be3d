import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SKEWSUPPORT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("skewsupport._kernels", ["src/skewsupport/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # the package works without the compiled core; kernels.py falls back
        ext_modules = []

setup(ext_modules=ext_modules)
