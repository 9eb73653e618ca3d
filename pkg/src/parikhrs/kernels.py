"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module with the same functions.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _kernels as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

count_subword = _impl.count_subword
parikh_entries = _impl.parikh_entries
RuleSet = _impl.RuleSet


def backends() -> dict:
    """All importable kernel modules keyed by name."""
    found = {"python": _pykernels}
    try:
        from . import _kernels

        found["compiled"] = _kernels
    except ImportError:
        pass
    return found
