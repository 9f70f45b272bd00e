"""Runs one pytest file; exit 77 (skipped) when the extension module is required but missing."""
import sys

import pytest

target = sys.argv[1]
if target.endswith("test_smoke.py"):
    try:
        import mdsum  # noqa: F401
    except ImportError:
        print("mdsum extension not installed (pip install --no-build-isolation -e .)")
        sys.exit(77)
sys.exit(pytest.main(["-q", "-p", "no:cacheprovider", target]))
