from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "socialchoice._core",
        sources=[
            "bindings/module.cpp",
            "src/rational.cpp",
            "src/profile.cpp",
            "src/dominance.cpp",
            "src/rules.cpp",
            "src/process.cpp",
            "src/properties.cpp",
            "src/fixtures.cpp",
        ],
        include_dirs=["include", "vendor"],
        libraries=["gmpxx", "gmp"],
        cxx_std=20,
    ),
]

setup(
    package_dir={"": "python"},
    packages=["socialchoice"],
    ext_modules=ext_modules,
    cmdclass={"build_ext": build_ext},
)
