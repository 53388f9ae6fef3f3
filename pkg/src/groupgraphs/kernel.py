"""Flow-kernel backend selection.

Prefers the compiled extension (``_flowcore``); falls back to the pure-Python
implementation when the extension is missing or ``GG_PURE=1`` is set.
"""

from __future__ import annotations

import os

from . import _flowpure

if os.environ.get("GG_PURE", "") not in ("", "0"):
    _impl = _flowpure
else:
    try:
        from . import _flowcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _flowpure

max_flow = _impl.max_flow
edge_conn = _impl.edge_conn
vertex_conn = _impl.vertex_conn
mec_witness = _impl.mec_witness
mc_witness = _impl.mc_witness


def backend_name() -> str:
    return "compiled" if _impl.__name__.endswith("_flowcore") else "pure"
