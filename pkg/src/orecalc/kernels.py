"""Kernel dispatch: the compiled extension when built, else pure Python.

Set ``ORECALC_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and the parity tests).
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("ORECALC_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # noqa: F811

        BACKEND = "cython"
    except ImportError:
        pass

trim = _impl.trim
add = _impl.add
sub = _impl.sub
scale = _impl.scale
mul = _impl.mul
divmod_ = _impl.divmod_
monic = _impl.monic
gcd = _impl.gcd
deriv = _impl.deriv
rref = _impl.rref
