"""CMake-driven build of the _abacore extension for pip installs."""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        source = Path(__file__).resolve().parent
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build_temp),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DABACORE_BUILD_TESTS=OFF",
                f"-DABACORE_PYTHON_OUTPUT={extdir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "_abacore",
             "--parallel"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("abacore._abacore")],
    cmdclass={"build_ext": CMakeBuild},
)
