"""Pure-Python implementations of the hot kernels.

Mirrors ``_ckernels.pyx`` function for function; selected at import time when
the extension is unavailable or ``ORTHOGUARD_PURE`` is set.
"""

import numpy as np

_RC = 1


class ActiveChain:
    """Doubly linked list over the surviving vertex indices.

    Removal only ever shrinks the live set; ``prev``/``next`` always link live
    vertices in index order.
    """

    __slots__ = ("prev", "next", "live")

    def __init__(self, n):
        self.prev = list(range(-1, n - 1))
        self.next = list(range(1, n + 1))
        self.live = [True] * n

    def remove_between(self, a, b):
        """Drop every live vertex strictly between live vertices ``a < b``."""
        prev = self.prev
        live = self.live
        u = prev[b]
        while u > a:
            live[u] = False
            u = prev[u]
        prev[b] = a
        self.next[a] = b

    def live_indices(self):
        return [i for i, ok in enumerate(self.live) if ok]


def sees(xs, ys, i, j):
    if i > j:
        i, j = j, i
    if i == j:
        return True
    xp = int(xs[i])
    yp = int(ys[i])
    dx = int(xs[j]) - xp
    dy = int(ys[j]) - yp
    if dx == 0:
        return True
    for k in range(i + 1, j):
        if dx * (int(ys[k]) - yp) - dy * (int(xs[k]) - xp) > 0:
            return False
    return True


def visibility_matrix(xs, ys):
    n = len(xs)
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    vis = np.eye(n, dtype=bool)
    for i in range(n - 1):
        xj = xs[i + 1:] - xs[i]
        yj = ys[i + 1:] - ys[i]
        # cross[j, k] > 0: vertex k strictly above the line i -> j
        cross = xj[:, None] * yj[None, :] - yj[:, None] * xj[None, :]
        above = np.tril(cross > 0, k=-1)
        row = ~above.any(axis=1)
        row |= xj == 0
        vis[i, i + 1:] = row
        vis[i + 1:, i] = row
    return vis


def leftmost_visible(xs, ys, classes):
    xs = xs.tolist()
    ys = ys.tolist()
    classes = classes.tolist()
    n = len(xs)
    out = [-1] * n
    stack = []
    for i in range(n):
        xc = xs[i]
        yc = ys[i]
        while len(stack) >= 2:
            a = stack[-2]
            b = stack[-1]
            xa = xs[a]
            ya = ys[a]
            if (xs[b] - xa) * (yc - ya) - (ys[b] - ya) * (xc - xa) >= 0:
                stack.pop()
            else:
                break
        if classes[i] == _RC:
            out[i] = stack[-1] if stack else i
        stack.append(i)
    return np.array(out, dtype=np.int64)


def visible_left(xs, ys, i, stop):
    """Indices ``u`` in ``[stop, i)`` that see vertex ``i``, nearest first.

    ``i - 1`` must lie strictly left of ``i`` (true for right convex ``i``).
    """
    xv = int(xs[i])
    yv = int(ys[i])
    out = []
    px = py = 0
    have = False
    for u in range(i - 1, stop - 1, -1):
        xu = int(xs[u])
        yu = int(ys[u])
        if not have or (px - xv) * (yu - yv) - (py - yv) * (xu - xv) <= 0:
            out.append(u)
            px, py, have = xu, yu, True
    return out


def solve_right_fast(xs, ys, classes, left):
    xs = xs.tolist()
    ys = ys.tolist()
    classes = classes.tolist()
    left = left.tolist()
    n = len(xs)
    chain = ActiveChain(n)
    prev = chain.prev
    is_guard = [False] * n
    assign = [-1] * n
    guards = []
    witnesses = []
    visits = 0
    degenerate = False
    for i in range(n):
        if classes[i] != _RC:
            continue
        visits += 1
        li = left[i]
        found = -1
        if li < i:
            xv = xs[i]
            yv = ys[i]
            have = False
            px = py = 0
            u = prev[i]
            while u >= li:
                visits += 1
                xu = xs[u]
                yu = ys[u]
                if not have or (px - xv) * (yu - yv) - (py - yv) * (xu - xv) <= 0:
                    if is_guard[u]:
                        found = u
                        break
                    px, py, have = xu, yu, True
                if u == li:
                    break
                u = prev[u]
        if found < 0:
            g = li
            if i + 1 < n:
                visits += 1
                if ys[i + 1] > ys[li]:
                    g = i + 1
            is_guard[g] = True
            guards.append(g)
            witnesses.append(i)
            if classes[g] <= _RC:
                degenerate = True
            found_left = li
            found = g
        else:
            found_left = found
        assign[i] = found
        if found_left < i:
            chain.remove_between(found_left, i)
    guards.sort()
    return (
        np.array(guards, dtype=np.int64),
        np.array(assign, dtype=np.int64),
        np.array(witnesses, dtype=np.int64),
        visits,
        degenerate,
    )
