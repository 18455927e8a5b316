"""Kernel dispatch: compiled extension when present, numpy fallback otherwise.

Set WEPART_NO_EXT=1 in the environment to force the pure implementation
(used by the benchmark and to test both backends).
"""

from __future__ import annotations

import os

if os.environ.get("WEPART_NO_EXT"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:  # pragma: no cover - build environment dependent
        from . import _pykernels as _impl  # type: ignore[no-redef]

        BACKEND = "python"

we_deviation = _impl.we_deviation
eq_deviation = _impl.eq_deviation
commutator_deviation = _impl.commutator_deviation
