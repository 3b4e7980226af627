from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [Extension("vizing8._core", ["src/vizing8/_core.py"])]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
