"""Kernel selection.

The compiled kernels are used when the extension imports cleanly, unless
``REGPOLY_PURE=1`` is set in the environment.
"""

import os

from . import _purekernels as pure

kernels = pure
if os.environ.get("REGPOLY_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as kernels  # noqa: F811
    except ImportError:
        kernels = pure

BACKEND = kernels.BACKEND
closure_frames = kernels.closure_frames
enumerate_hlt = kernels.enumerate_hlt
enumerate_felsch = kernels.enumerate_felsch
