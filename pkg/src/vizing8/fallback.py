"""Misra-Gries edge coloring with at most Delta + 1 colors.

Used only when a graph has no reducible edge, so it favours clarity over
speed.
"""
from __future__ import annotations

from collections import defaultdict


def misra_gries(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """Proper edge coloring of a simple graph; returns colors 1..Delta+1."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    k = max(deg, default=0) + 1
    col: dict[tuple[int, int], int] = {}
    at: list[dict[int, int]] = [dict() for _ in range(n)]  # color -> neighbor
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def free(v: int) -> int:
        for c in range(1, k + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color")

    def is_free(v: int, c: int) -> bool:
        return c not in at[v]

    def setc(a: int, b: int, c: int) -> None:
        col[key(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    def unset(a: int, b: int) -> None:
        c = col.pop(key(a, b), 0)
        if c:
            del at[a][c]
            del at[b][c]

    for u, v in edges:
        # maximal fan at u starting with v
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for w in adj[u]:
                if w in in_fan or key(u, w) not in col:
                    continue
                if is_free(last, col[key(u, w)]):
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = free(u)
        d = free(fan[-1])
        if not is_free(u, d):
            # invert the cd-path starting at u
            path = []
            cur, want = u, d
            while want in at[cur]:
                nb = at[cur][want]
                path.append((cur, nb, want))
                cur, want = nb, (c if want == d else d)
            for a, b, _ in path:
                unset(a, b)
            for a, b, cc in path:
                setc(a, b, c if cc == d else d)
        # first fan vertex with d free whose prefix is still a fan
        j = -1
        for i in range(len(fan)):
            if i and not is_free(fan[i - 1], col[key(u, fan[i])]):
                break
            if is_free(fan[i], d):
                j = i
                break
        if j < 0:
            raise AssertionError("fan rotation point not found")
        for i in range(j):
            nc = col[key(u, fan[i + 1])]
            unset(u, fan[i + 1])
            setc(u, fan[i], nc)
        setc(u, fan[j], d)
    return [col[key(u, v)] for u, v in edges]
