"""Kernel backend selection.

The hot inner loops (convolution, pooling, periodized wavelet passes) exist
twice: a compiled Cython extension (`mlfm.kernels._native`) and a pure-numpy
fallback (`mlfm.kernels._numpy`).  The extension is preferred when it
imports; set MLFM_KERNELS=numpy or MLFM_KERNELS=native to force a backend.
Both implement the same contracts and agree to float rounding, which the
test suite checks whenever the extension is present.
"""

import os

from . import _numpy

_choice = os.environ.get("MLFM_KERNELS", "auto").lower()
_impl = None
if _choice in ("auto", "native"):
    try:
        from . import _native as _impl  # compiled at install time
    except ImportError:
        if _choice == "native":
            raise ImportError(
                "MLFM_KERNELS=native but mlfm.kernels._native is not built; "
                "reinstall the package or use MLFM_KERNELS=numpy")
        _impl = None
elif _choice != "numpy":
    raise ValueError(f"MLFM_KERNELS must be auto|native|numpy, got {_choice!r}")

if _impl is None:
    _impl = _numpy
    BACKEND = "numpy"
else:
    BACKEND = "native"

conv2d_forward = _impl.conv2d_forward
conv2d_backward_x = _impl.conv2d_backward_x
conv2d_backward_w = _impl.conv2d_backward_w
pool2d_forward = _impl.pool2d_forward
pool2d_backward = _impl.pool2d_backward
dwt_down = _impl.dwt_down
dwt_up = _impl.dwt_up
dwt_down_pair = _impl.dwt_down_pair
dwt_up_pair = _impl.dwt_up_pair
