"""Kernel selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` take over. Set ``BRAIDREV_PURE=1`` to force the
pure-Python path.
"""

import os

from . import _pykernels

_impl = _pykernels
if os.environ.get("BRAIDREV_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

RIGHT, LEFT, COMMUTE, BRAID = _pykernels.RIGHT, _pykernels.LEFT, _pykernels.COMMUTE, _pykernels.BRAID
PLAIN, REDUCED, STRONG = _pykernels.PLAIN, _pykernels.REDUCED, _pykernels.STRONG
FLAG_RIGHT = _pykernels.FLAG_RIGHT
FLAG_LEFT = _pykernels.FLAG_LEFT
FLAG_COMMUTE = _pykernels.FLAG_COMMUTE
FLAG_BRAID = _pykernels.FLAG_BRAID

free_reduce = _impl.free_reduce
strong_reduce = _impl.strong_reduce
reverse_right = _impl.reverse_right
reverse_left = _impl.reverse_left
raw_moves = _impl.raw_moves
successors = _impl.successors
expand = _impl.expand
right_step = _pykernels.right_step
left_step = _pykernels.left_step


def implementations():
    """Both backends that are importable, keyed by name."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["compiled"] = _ckernels
    return out
