import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("APERYFIB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("aperyfib._kernel", ["src/aperyfib/_kernel.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
