"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PVCALC_PURE_PYTHON=1 to force the fallback (used by the benchmark
and to debug kernel parity).
"""

import os

if os.environ.get("PVCALC_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernel as impl
else:
    try:
        from . import _ckernel as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as impl

IMPL_NAME = impl.IMPL_NAME
KEY_SHIFT = impl.KEY_SHIFT
KEY_MASK = impl.KEY_MASK
mkkey = impl.mkkey
key_t = impl.key_t
key_c = impl.key_c
padd = impl.padd
pneg = impl.pneg
psub = impl.psub
pscale = impl.pscale
pshift = impl.pshift
pcyclo_mul = impl.pcyclo_mul
pcyclo_div = impl.pcyclo_div
pwmin = impl.pwmin
pwdiv = impl.pwdiv
pmul = impl.pmul

__all__ = [
    "IMPL_NAME", "KEY_SHIFT", "KEY_MASK", "mkkey", "key_t", "key_c",
    "padd", "pneg", "psub", "pscale", "pshift", "pcyclo_mul",
    "pcyclo_div", "pwmin", "pwdiv", "pmul",
]
