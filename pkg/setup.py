"""Build shim: compiles the optional accelerator extension when Cython is available.

The package is fully functional without the extension (a numpy fallback is
selected at import time). Set VOLASYM_NO_EXTENSION=1 to skip compilation.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("VOLASYM_NO_EXTENSION") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "volasym._kernels",
        sources=["src/volasym/_kernels.pyx"],
        # keep C arithmetic un-fused so results are bit-identical to the
        # numpy fallback (no FMA contraction)
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    return cythonize(
        [ext],
        language_level=3,
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions())
