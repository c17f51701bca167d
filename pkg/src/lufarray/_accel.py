"""Selects the compiled kernels when they are importable.

Set ``LUFARRAY_PURE=1`` to force the pure-Python path.
"""

import os

kernels = None
if not os.environ.get("LUFARRAY_PURE"):
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = None

HAVE_EXT = kernels is not None


def use_ext(impl: str) -> bool:
    if impl not in ("auto", "ext", "py"):
        raise ValueError(f"unknown impl {impl!r}")
    if impl == "ext" and not HAVE_EXT:
        raise RuntimeError("compiled kernels are not available; "
                           "build with `pip install -e . --no-build-isolation`")
    return HAVE_EXT and impl != "py"
