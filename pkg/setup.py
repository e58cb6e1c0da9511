from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "lscat._gf2c",
                ["src/lscat/_gf2c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: the pure-Python backend is used at runtime.
    extensions = []

setup(ext_modules=extensions)
