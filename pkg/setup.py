"""Build script: compiles the optional Cython kernel extension.

The package is pure Python apart from resverify._speedups, which only
accelerates the inner loops (sparse multiplication, term elimination,
integer Bareiss).  If the extension cannot be built the install still
succeeds and the pure-Python kernels are used at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/resverify/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"resverify: skipping Cython extension ({exc}); pure-Python kernels will be used")

setup(ext_modules=ext_modules)
