import sys

from setuptools import setup
from setuptools.extension import Extension

# The compiled kernels are an optional speedup; the package falls back to
# pure-Python twins at import time when the extension is missing.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("quandles._kernels", ["src/quandles/_kernels.pyx"])],
        language_level="3",
    )
except Exception as exc:  # noqa: BLE001 - any build problem means "no extension"
    print(f"quandles: building without compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
