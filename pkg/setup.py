from setuptools import setup

# The compiled kernels are an optional speedup; the package falls back to
# the pure-Python twins in nonres._kernels._pure when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/nonres/_kernels/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
