"""Build hook: compile the optional fast kernel when Cython is available.

The package works without it; ``dyerlashof.kernels`` falls back to the
pure-Python implementation at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dyerlashof._fastkernel", ["src/dyerlashof/_fastkernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
