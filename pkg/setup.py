"""Build shim for the optional compiled kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed compile should not block installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("orispec._kernel_c", ["src/orispec/_kernel_c.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
