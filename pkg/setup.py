from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "gaplab._ckernels",
        sources=["src/gaplab/_ckernels.pyx", "src/gaplab/csrc/gapcore.c"],
        include_dirs=["src/gaplab/csrc"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
