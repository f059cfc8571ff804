"""Kernel backend selection.

Imports the compiled kernels when the extension built, otherwise the
pure-Python twins.  Set ``SCX_PURE=1`` to force the pure backend.  Both
backends implement:

- ``gf2_rank(rows, ncols)``: rank over GF(2); each row is an int bitmask
  that must fit in ``ncols`` bits.
- ``unit_maxflow(num_nodes, tails, heads, caps, source, sink)``: BFS
  augmenting-path max flow with deterministic arc order.
"""

import os

from . import _kernels_py

if os.environ.get("SCX_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
gf2_rank = _impl.gf2_rank
unit_maxflow = _impl.unit_maxflow
