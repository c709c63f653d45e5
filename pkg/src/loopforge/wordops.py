"""Kernel selection: compiled word operations when available, else pure Python.

Set ``LOOPFORGE_PURE=1`` to force the pure-Python kernel (used by the parity
tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _wordops_py as _py

if os.environ.get("LOOPFORGE_PURE") == "1":
    _impl = _py
else:
    try:
        from . import _wordops_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

IMPL = _impl.IMPL

free_reduce = _impl.free_reduce
inverse_word = _impl.inverse_word
mul = _impl.mul
min_rotation = _impl.min_rotation
cyclic_free_reduce = _impl.cyclic_free_reduce
dehn_shorten = _impl.dehn_shorten
element_nf = _impl.element_nf
conj_canonical_bytes = _impl.conj_canonical_bytes

PURE = _py
