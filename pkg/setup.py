from setuptools import Extension, setup
from Cython.Build import cythonize

ext_modules = [
    Extension("splitcount._gfcore", sources=["src/splitcount/_gfcore.pyx"]),
]

setup(
    ext_modules=cythonize(
        ext_modules,
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
        },
    )
)
