import os
import shutil

from Cython.Build import cythonize
from setuptools import Extension, setup

# clang generates noticeably better 128-bit arithmetic than gcc for the
# hot kernels; prefer it when present unless the user pinned a compiler.
if "CC" not in os.environ and shutil.which("clang"):
    os.environ["CC"] = "clang"

extensions = [
    Extension(
        "latticerect._fast",
        ["src/latticerect/_fast.pyx"],
        extra_compile_args=["-O2"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
