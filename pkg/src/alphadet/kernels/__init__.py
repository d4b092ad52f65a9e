"""Kernel backend selection.

Imports the compiled kernel when the extension was built, otherwise the
pure-Python fallback.  `BACKEND` names the active implementation; both expose
an identical API (see `_kernel_py` for the reference semantics).
"""

try:
    from alphadet.kernels import _kernel_c as _impl
except ImportError:
    from alphadet.kernels import _kernel_py as _impl

BACKEND = _impl.BACKEND_NAME

zp_trim = _impl.zp_trim
zp_add = _impl.zp_add
zp_sub = _impl.zp_sub
zp_mul = _impl.zp_mul
zp_divexact = _impl.zp_divexact
zp_row_combine = _impl.zp_row_combine
zp_row_strip = _impl.zp_row_strip
zpm_rank = _impl.zpm_rank
q_row_axpy = _impl.q_row_axpy
qm_rref = _impl.qm_rref
