from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a C compiler) the
# package installs anyway and falls back to the pure-Python implementations.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "milnezeta._kernels",
                ["src/milnezeta/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
