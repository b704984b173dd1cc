"""Build script for the optional compiled clique kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so the build degrades gracefully when Cython or a C compiler is
unavailable.
"""

import os
import subprocess
import tempfile

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


def _flag_works(flag):
    """Probe whether the C compiler accepts ``flag``."""
    cc = os.environ.get("CC", "cc")
    with tempfile.NamedTemporaryFile(suffix=".c", mode="w") as src:
        src.write("int main(void){return 0;}\n")
        src.flush()
        try:
            rc = subprocess.run(
                [cc, flag, "-x", "c", src.name, "-o", os.devnull],
                capture_output=True, timeout=30).returncode
        except (OSError, subprocess.TimeoutExpired):
            return False
    return rc == 0


class optional_build_ext(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: compiled kernel skipped ({exc}); "
                  f"pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  f"pure-Python fallback will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    source = "src/geoclique/cliques/_kernel_cy.pyx"
    if not os.path.exists(source):
        return []
    args = ["-O3"]
    # The hot loops live on popcount; without a word-popcount instruction
    # the kernel loses most of its advantage over the pure fallback.
    for flag in ("-march=native", "-mpopcnt"):
        if _flag_works(flag):
            args.append(flag)
            break
    ext = Extension(
        "geoclique.cliques._kernel_cy",
        [source],
        extra_compile_args=args,
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
