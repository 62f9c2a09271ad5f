from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python kernels are used instead
    ext_modules = []
else:
    ext_modules = cythonize(
        "src/stanleydepth/_ckernels.pyx",
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
