import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Drive the repository's CMake build and collect the _rissec module."""

    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            "-S",
            str(source_dir),
            "-B",
            str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_rissec", "-j"],
            check=True,
        )

        module_dir = build_dir / "python" / "rissec"
        candidates = list(module_dir.glob("_rissec*"))
        if not candidates:
            raise RuntimeError(
                "CMake build did not produce the _rissec module; "
                "check that pybind11 is installed for this interpreter"
            )
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(candidates[0], target)


setup(
    ext_modules=[CMakeExtension("rissec._rissec")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
