"""Build the hermite_hj_py extension module by delegating to cargo.

Neither maturin nor setuptools-rust is assumed to be available, so this
uses a plain setuptools Extension whose build step runs
`cargo build --release` and copies the resulting cdylib into place.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

HERE = Path(__file__).resolve().parent


class CargoBuildExt(build_ext):
    def build_extension(self, ext):
        subprocess.run(
            ["cargo", "build", "--release", "--manifest-path", str(HERE / "Cargo.toml")],
            check=True,
        )
        # The workspace target directory sits two levels up from this crate.
        release = HERE.parent.parent / "target" / "release"
        if sys.platform == "darwin":
            built = release / "libhermite_hj_py.dylib"
        elif sys.platform == "win32":
            built = release / "hermite_hj_py.dll"
        else:
            built = release / "libhermite_hj_py.so"
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built, dest)


setup(
    ext_modules=[Extension("hermite_hj_py", sources=[])],
    cmdclass={"build_ext": CargoBuildExt},
)
