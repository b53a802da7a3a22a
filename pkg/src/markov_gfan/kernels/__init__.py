"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it was built and the inputs pass the
magnitude guards; otherwise the Python reference runs.  Setting
``GFAN_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

# planar coordinates below this keep orientation tests inside int64
PLANAR_LIMIT = 1 << 29
TREE_LIMIT = 1 << 62


def compiled_available() -> bool:
    return _compiled is not None


def default_backend() -> str:
    if _compiled is None or os.environ.get("GFAN_PURE_PYTHON", "") not in ("", "0"):
        return "python"
    return "c"


def _choose(backend: str | None) -> str:
    backend = backend or default_backend()
    if backend not in ("c", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "c" and _compiled is None:
        raise RuntimeError("compiled kernels are not built")
    return backend


def expand_tree(c0, g0, kst0, trunk0: bool, depth: int, backend: str | None = None):
    """All role-ordered c/g rows of a complete S/T tree of the given depth.

    Returns ``(C, G, KST, TRUNK)`` as lists indexed by heap position.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    backend = _choose(backend)
    if backend == "c":
        top = max(abs(x) for x in (*c0, *g0))
        if depth <= 36 and top * 3**depth < TREE_LIMIT:
            import numpy as np

            C, G, K, T = _compiled.expand_tree(
                np.asarray(c0, dtype=np.int64),
                np.asarray(g0, dtype=np.int64),
                np.asarray(kst0, dtype=np.int64),
                bool(trunk0),
                depth,
            )
            return (
                [tuple(r) for r in C.tolist()],
                [tuple(r) for r in G.tolist()],
                [tuple(r) for r in K.tolist()],
                [bool(x) for x in T.tolist()],
            )
    return _pure.expand_tree(c0, g0, kst0, trunk0, depth)


def _fits(rows) -> bool:
    return all(abs(x) < PLANAR_LIMIT for row in rows for x in row)


def triangle_pairs(tris, backend: str | None = None):
    backend = _choose(backend)
    if backend == "c" and tris and _fits(tris):
        import numpy as np

        return _compiled.triangle_pairs(np.ascontiguousarray(tris, dtype=np.int64))
    return _pure.triangle_pairs(tris)


def rays_vs_triangles(rays, tris, backend: str | None = None):
    backend = _choose(backend)
    if backend == "c" and rays and tris and _fits(tris) and _fits(rays):
        import numpy as np

        return _compiled.rays_vs_triangles(
            np.ascontiguousarray(rays, dtype=np.int64), np.ascontiguousarray(tris, dtype=np.int64)
        )
    return _pure.rays_vs_triangles(rays, tris)
