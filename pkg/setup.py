from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "loopforge._wordops_c",
                ["src/loopforge/_wordops_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback is selected at import time; the extension is a
    # performance layer only.
    ext_modules = []

setup(ext_modules=ext_modules)
