import sys

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in excite_iter._kernels_py when the extension is absent.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "excite_iter._kernels_c",
                ["src/excite_iter/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("Cython not available; building without the compiled kernel",
          file=sys.stderr)

setup(ext_modules=ext_modules)
