"""Build hook for the optional compiled coefficient kernel.

The package is pure Python with one optional Cython extension
(iqsl2._kernel_cy) that accelerates the Laurent term-dict kernels.
If Cython or a C compiler is unavailable the extension is skipped and
the pure-Python twin is used at import time; installation must never
fail on that account.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/iqsl2/_kernel_cy.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print(f"iqsl2: skipping compiled kernel ({exc!r}); pure-Python kernel will be used")

setup(ext_modules=ext_modules)
