"""Reference implementations of the enumeration and intersection kernels.

These operate on Python ints and therefore never overflow.  The compiled
module mirrors them function by function on int64 data.

Tree layout: node 0 is the root, node q has children 2q+1 (letter S) and
2q+2 (letter T).  Rows of ``C``/``G`` are role-ordered (K, S, T), each a
3-vector, flattened to 9 ints per node.
"""

from __future__ import annotations


def expand_tree(c0, g0, kst0, trunk0: bool, depth: int):
    n = (1 << (depth + 1)) - 1
    C = [None] * n
    G = [None] * n
    KST = [None] * n
    TR = [False] * n
    C[0], G[0], KST[0], TR[0] = tuple(c0), tuple(g0), tuple(kst0), bool(trunk0)
    internal = (1 << depth) - 1
    for q in range(internal):
        c, g, (k, s, t), trunk = C[q], G[q], KST[q], TR[q]
        cK, cS, cT = c[0:3], c[3:6], c[6:9]
        gK, gS, gT = g[0:3], g[3:6], g[6:9]
        # S child
        a = 2 * q + 1
        C[a] = tuple(-x for x in cS) + tuple(x + 2 * y for x, y in zip(cK, cS)) + cT
        G[a] = tuple(2 * x - y for x, y in zip(gK, gS)) + gK + gT
        KST[a] = (s, k, t)
        TR[a] = trunk
        # T child
        b = a + 1
        if trunk:
            C[b] = tuple(-x for x in cT) + tuple(x + 2 * y for x, y in zip(cS, cT)) + cK
            G[b] = tuple(2 * x - y for x, y in zip(gS, gT)) + gS + gK
            KST[b] = (t, s, k)
        else:
            C[b] = tuple(-x for x in cT) + tuple(x + 2 * y for x, y in zip(cK, cT)) + cS
            G[b] = tuple(2 * x - y for x, y in zip(gK, gT)) + gK + gS
            KST[b] = (t, k, s)
        TR[b] = False
    return C, G, KST, TR


def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _sgn(x):
    return (x > 0) - (x < 0)


def _pair_ok(A, B) -> bool:
    """True when closed triangles A and B meet in a common face or not at all."""
    if set(A) == set(B):
        return True
    for P, Q in ((A, B), (B, A)):
        for e in range(3):
            p0, p1, p2 = P[e], P[(e + 1) % 3], P[(e + 2) % 3]
            side = _sgn(_orient(*p0, *p1, *p2))
            vals = [side * _orient(*p0, *p1, *q) for q in Q]
            if any(v > 0 for v in vals):
                continue
            # the edge line separates; only points on it can be shared
            on = [q for q, v in zip(Q, vals) if v == 0]
            if not on:
                return True
            dx, dy = p1[0] - p0[0], p1[1] - p0[1]
            span = dx * dx + dy * dy

            def pos(pt):
                return (pt[0] - p0[0]) * dx + (pt[1] - p0[1]) * dy

            if len(on) == 1:
                t = pos(on[0])
                if t < 0 or t > span:
                    return True
                return t == 0 or t == span
            t0, t1 = sorted(pos(q) for q in on)
            lo, hi = max(0, t0), min(span, t1)
            if lo > hi:
                return True
            if lo == hi:
                return lo in (0, span) and lo in (t0, t1)
            return (lo, hi) == (0, span) and (lo, hi) == (t0, t1)
    return False


def triangle_pairs(tris):
    """Indices (i, j), i < j, of triangle pairs that overlap improperly.

    ``tris`` is a sequence of 6-tuples (x0, y0, x1, y1, x2, y2) of ints.
    """
    pts = [((t[0], t[1]), (t[2], t[3]), (t[4], t[5])) for t in tris]
    boxes = [
        (min(p[0] for p in P), max(p[0] for p in P), min(p[1] for p in P), max(p[1] for p in P))
        for P in pts
    ]
    bad = []
    n = len(pts)
    for i in range(n):
        bi = boxes[i]
        for j in range(i + 1, n):
            bj = boxes[j]
            if bi[1] < bj[0] or bj[1] < bi[0] or bi[3] < bj[2] or bj[3] < bi[2]:
                continue
            if not _pair_ok(pts[i], pts[j]):
                bad.append((i, j))
    return bad


def _ray_hits(bx, by, dx, dy, T) -> bool:
    """Does {base + s*dir : s > 0} meet the closed triangle T?"""
    # lower bound lo_n/lo_d (strict while it is the s > 0 constraint), upper hi_n/hi_d
    lo_n, lo_d, strict = 0, 1, True
    hi_n, hi_d = 1, 0  # +infinity
    for e in range(3):
        (ax, ay), (cx, cy), (ox, oy) = T[e], T[(e + 1) % 3], T[(e + 2) % 3]
        side = _sgn(_orient(ax, ay, cx, cy, ox, oy))
        f0 = side * _orient(ax, ay, cx, cy, bx, by)
        f1 = side * ((cx - ax) * dy - (cy - ay) * dx)
        if f1 == 0:
            if f0 < 0:
                return False
        elif f1 > 0:
            # s >= -f0 / f1
            n_, d_ = -f0, f1
            if n_ * lo_d > lo_n * d_:
                lo_n, lo_d, strict = n_, d_, False
        else:
            # s <= f0 / (-f1)
            n_, d_ = f0, -f1
            if hi_d == 0 or n_ * hi_d < hi_n * d_:
                hi_n, hi_d = n_, d_
    if hi_d == 0:
        return True
    c = lo_n * hi_d - hi_n * lo_d
    return c < 0 or (c == 0 and not strict)


def rays_vs_triangles(rays, tris):
    """Pairs (ray index, triangle index) where an open ray meets a closed triangle.

    ``rays`` holds 4-tuples (bx, by, dx, dy).
    """
    pts = [((t[0], t[1]), (t[2], t[3]), (t[4], t[5])) for t in tris]
    hits = []
    for r, (bx, by, dx, dy) in enumerate(rays):
        for j, T in enumerate(pts):
            if _ray_hits(bx, by, dx, dy, T):
                hits.append((r, j))
    return hits
