"""Kernel backend selection.

The compiled Cython kernel is used when available; set CLUSTERKIT_PURE=1
to force the pure-Python fallback (the benchmark and the test suite use
this to compare the two).
"""

import os

if os.environ.get("CLUSTERKIT_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND

norm_coef = _impl.norm_coef
add_terms = _impl.add_terms
sub_terms = _impl.sub_terms
neg_terms = _impl.neg_terms
mul_terms = _impl.mul_terms
scale_terms = _impl.scale_terms
mul_monomial = _impl.mul_monomial
isub_scaled = _impl.isub_scaled
