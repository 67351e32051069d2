"""
betti-utilities - scripts/betti.py

Launcher for the betti-utils command line, usable without installing the package.

Licensed under the MIT License.
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.realpath(__file__))))

from betti_utils.cli.main import run  # noqa: E402

if __name__ == "__main__":
    run()
