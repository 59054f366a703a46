"""Build script: compiles the optional fast kernel if Cython is available.

The package is fully functional without the extension (a pure-Python
implementation of the same kernel is selected at import time), so any
failure here degrades to the slow lane instead of breaking the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hbcomplex._kernel._core", ["src/hbcomplex/_kernel/_core.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
