"""Build the optional compiled kernels; fall back to pure Python without Cython."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    pass
else:
    try:
        ext_modules = cythonize(
            [Extension("cylskew._ckernels", ["src/cylskew/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except Exception:  # compiler or Cython failure: ship the fallback only
        ext_modules = []

setup(ext_modules=ext_modules)
