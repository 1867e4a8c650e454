"""Independent reference values for the C++ tests.

Plain Fractions and brute force only; writes frozen.json next to this file.
Run: python3 tests/oracles/srs_oracle.py
"""
import json
import os
import re
from fractions import Fraction as F
from math import floor


def tau(r, a):
    return tuple(a[1:]) + (-floor(sum(x * y for x, y in zip(r, a))),)


def tau_star(r, a):
    return tuple(-x for x in tau(r, tuple(-y for y in a)))


def orbit(r, a):
    seen = {}
    path = []
    while a not in seen:
        seen[a] = len(path)
        path.append(a)
        a = tau(r, a)
    k = seen[a]
    return path[:k], path[k:]


def witness_set(r):
    d = len(r)
    units = []
    for i in range(d):
        for s in (1, -1):
            units.append(tuple(s if j == i else 0 for j in range(d)))
    seen = set(units)
    frontier = list(units)
    while frontier:
        nxt = []
        for a in frontier:
            for b in (tau(r, a), tau_star(r, a)):
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def decide(r):
    V = witness_set(r)
    for a in sorted(V):
        _, cyc = orbit(r, a)
        if any(cyc[0]):
            return "NonFinite", len(V)
    return "Finite", len(V)


def cutout_constraints(cycle):
    # rows (a, b, strict): a.r + b >= 0, or > 0 when strict
    out = []
    m = len(cycle)
    for i in range(m):
        a = cycle[i]
        nxt = cycle[(i + 1) % m]
        out.append((a, nxt[-1], False))
        out.append((tuple(-x for x in a), 1 - nxt[-1], True))
    return out


def holds(cons, p):
    for a, b, strict in cons:
        v = sum(x * y for x, y in zip(a, p)) + b
        if v < 0 or (strict and v == 0):
            return False
    return True


def shuffle(ts):
    out = []
    i = 0
    while any(i < len(t) for t in ts):
        for t in ts:
            if i < len(t):
                out.append(t[i])
        i += 1
    return out


def R(f, lo, hi):
    return [f(k) for k in range(lo, hi + 1)]


def family(fid, n):
    if fid == "C0":
        return {1: [(-3, 3), (3, -2), (-2, 1), (1, 1), (1, -2), (-2, 3), (3, -3)],
                2: [(-5, 1), (1, 5), (5, -3), (-3, -3), (-3, 5), (5, 1), (1, -5), (-5, 2), (2, 4), (4, -4),
                    (-4, -1), (-1, 5), (5, -1), (-1, -4), (-4, 4), (4, 2), (2, -5)]}[n]
    if fid == "C1":
        a = (R(lambda k: (-2 * n, 2 * k), 1, n) + R(lambda k: (-2 * n + 2 * k, 2 * n), 1, n - 1)
             + R(lambda k: (2 * k - 1, 2 * n - 2 * k), 1, n - 1) + R(lambda k: (2 * n - 1, -2 * k + 1), 1, n)
             + R(lambda k: (2 * n - 2 * k - 1, -2 * n + 1), 1, n - 1) + R(lambda k: (-2 * k, -2 * n + 2 * k + 1), 1, n - 1))
        b = (R(lambda k: (2 * k, 2 * n - 2 * k), 1, n - 1) + R(lambda k: (2 * n, -2 * k + 1), 1, n)
             + R(lambda k: (2 * n - 2 * k, -2 * n + 1), 1, n - 1) + R(lambda k: (-2 * k + 1, -2 * n + 2 * k + 1), 1, n - 1)
             + R(lambda k: (-2 * n + 1, 2 * k), 1, n) + R(lambda k: (-2 * n + 2 * k + 1, 2 * n), 1, n - 1))
        c = (R(lambda k: (2 * n - 2 * k, -2 * n), 1, n - 1) + R(lambda k: (-2 * k + 1, -2 * n + 2 * k), 1, n - 1)
             + R(lambda k: (-2 * n + 1, 2 * k - 1), 1, n) + R(lambda k: (-2 * n + 2 * k + 1, 2 * n - 1), 1, n - 1)
             + R(lambda k: (2 * k, 2 * n - 2 * k - 1), 1, n - 1) + R(lambda k: (2 * n, -2 * k), 1, n))
        return shuffle([a, b, c])
    if fid == "C2":
        a = R(lambda k: (-2 * n, 2 * k - 1), 1, n + 1) + R(lambda k: (-2 * n + 2 * k, 2 * n + 1), 1, n - 1)
        b = R(lambda k: (2 * k - 1, 2 * n - 2 * k + 1), 1, n) + R(lambda k: (2 * n + 1, -2 * k), 1, n)
        c = R(lambda k: (2 * n - 2 * k + 1, -2 * n), 1, n) + R(lambda k: (-2 * k, -2 * n + 2 * k), 1, n - 1)
        return shuffle([a, b, c])
    if fid == "C3":
        a = [(-2 * n - 1, 1)] + R(lambda k: (-2 * n + 2 * k - 2, -2 * k), 1, n) + R(lambda k: (2 * k - 1, -2 * n - 1), 1, n)
        b = ([(1, 2 * n + 1)] + R(lambda k: (-2 * k, 2 * n + 2), 1, n - 1) + [(-2 * n, 2 * n + 1)]
             + R(lambda k: (-2 * n - 1, 2 * n - 2 * k + 1), 1, n - 1))
        c = [(2 * n + 1, -2 * n)] + R(lambda k: (2 * n + 2, -2 * n + 2 * k), 1, n - 1) + R(lambda k: (2 * n - 2 * k + 3, 2 * k - 1), 1, n)
        return shuffle([a, b, c])
    if fid == "C4":
        a = ([(-2 * n - 1, 2)] + R(lambda k: (-2 * n + 2 * k - 2, -2 * k + 1), 1, n) + R(lambda k: (2 * k - 1, -2 * n), 1, n - 1)
             + [(2 * n - 1, -2 * n + 1)] + R(lambda k: (2 * n, -2 * n + 2 * k + 1), 1, n - 1)
             + R(lambda k: (2 * n - 2 * k + 1, 2 * k), 1, n) + R(lambda k: (-2 * k, 2 * n + 1), 1, n - 1)
             + [(-2 * n, 2 * n)] + R(lambda k: (-2 * n - 1, 2 * n - 2 * k), 1, n - 2))
        b = ([(2, 2 * n)] + R(lambda k: (-2 * k + 1, 2 * n + 1), 1, n - 1) + [(-2 * n + 1, 2 * n)]
             + R(lambda k: (-2 * n, 2 * n - 2 * k), 1, n - 1) + R(lambda k: (-2 * n + 2 * k - 1, -2 * k + 1), 1, n)
             + R(lambda k: (2 * k, -2 * n), 1, n - 1) + [(2 * n, -2 * n + 1)]
             + R(lambda k: (2 * n + 1, -2 * n + 2 * k + 1), 1, n - 1) + R(lambda k: (2 * n - 2 * k + 2, 2 * k), 1, n - 1))
        c = ([(2 * n, -2 * n)] + R(lambda k: (2 * n + 1, -2 * n + 2 * k), 1, n - 1)
             + R(lambda k: (2 * n - 2 * k + 2, 2 * k - 1), 1, n) + R(lambda k: (-2 * k + 1, 2 * n), 1, n - 1)
             + [(-2 * n + 1, 2 * n - 1)] + R(lambda k: (-2 * n, 2 * n - 2 * k - 1), 1, n - 1)
             + R(lambda k: (-2 * n + 2 * k - 1, -2 * k), 1, n) + R(lambda k: (2 * k, -2 * n - 1), 1, n - 1))
        return shuffle([a, b, c])
    if fid == "C5":
        a = [(-n - 1, 1)] + R(lambda k: (-n + k - 1, k + 2), 1, n - 1)
        b = [(1, n + 1)] + R(lambda k: (k + 2, n - k + 1), 1, n - 2) + [(n + 1, 1)]
        c = R(lambda k: (n - k + 2, -k - 1), 1, n - 1) + [(1, -n - 1)]
        d = R(lambda k: (-k - 1, -n + k - 1), 1, n - 1)
        return shuffle([a, b, c, d])
    if fid == "C6":
        a = R(lambda k: (-n + k - 1, -k), 1, n) + [(1, -n)]
        b = R(lambda k: (-k, n - k + 1), 1, n) + R(lambda k: (n - k + 1, k + 1), 1, n)
        c = R(lambda k: (k + 1, -n + k), 1, n - 1) + [(n + 1, 1)]
        return shuffle([a, b, c])
    raise ValueError(fid)


def compatible(c):
    m = len(c)
    return all(c[i][1] == c[(i + 1) % m][0] for i in range(m))


def reorder(c):
    m = len(c)
    byhead = {}
    for p in c:
        byhead.setdefault(p[0], []).append(p)

    def dfs(path, used):
        if len(path) == m:
            return path if path[-1][1] == path[0][0] else None
        for q in byhead.get(path[-1][1], []):
            if q not in used:
                res = dfs(path + [q], used | {q})
                if res:
                    return res
        return None

    return dfs([c[0]], {c[0]})


def polygon(cons):
    pts = set()
    for i in range(len(cons)):
        for j in range(i + 1, len(cons)):
            (a1, a2), b, _ = cons[i]
            (c1, c2), d, _ = cons[j]
            det = a1 * c2 - a2 * c1
            if det == 0:
                continue
            x = F(-b * c2 + d * a2, det)
            y = F(-a1 * d + c1 * b, det)
            if all(p * x + q * y + o >= 0 for (p, q), o, _ in cons):
                pts.add((x, y))
    pts = sorted(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lo, up = [], []
    for p in pts:
        while len(lo) >= 2 and cross(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    for p in reversed(pts):
        while len(up) >= 2 and cross(up[-2], up[-1], p) <= 0:
            up.pop()
        up.append(p)
    h = lo[:-1] + up[:-1] if len(pts) > 1 else pts
    vf = [holds(cons, p) for p in h]
    ef = []
    if len(h) >= 2:
        count = len(h) if len(h) > 2 else 1
        for i in range(count):
            p, q = h[i], h[(i + 1) % len(h)]
            ef.append(holds(cons, ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)))
    return h, vf, ef


def fs(q):
    return str(q)


def catalog(path):
    txt = open(path).read()
    out = []
    for body in re.findall(r"\(([^()]*)\)", txt):
        f = [s.strip() for s in body.split(",")]
        if len(f) != 5:
            continue
        n, x, y, a1, a2 = map(int, f)
        r = (F(x, n), F(y, n))
        a = (a1, a2)
        cur, m = a, None
        for k in range(1, 100001):
            cur = tau(r, cur)
            if cur == a:
                m = k
                break
            if max(abs(cur[0]), abs(cur[1])) > 2 ** 62:
                break
        status = "Valid" if m is not None and a != (0, 0) else "NotPeriodic"
        out.append({"tuple": [n, x, y, a1, a2], "status": status, "period": m})
    return out


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.dirname(os.path.dirname(here))
    frozen = {}

    t = []
    for r, a in [((F(1), F(-2, 3)), (2, 1)), ((F(-1, 3), F(1, 3)), (0, 1)), ((F(93, 100), F(153, 100)), (-2, 1)),
                 ((F(1, 2), F(1, 2)), (7, -3)), ((F(-7, 5), F(9, 11)), (-4, 6))]:
        t.append({"r": [fs(x) for x in r], "a": list(a), "tau": list(tau(r, a)), "tau_star": list(tau_star(r, a))})
    frozen["tau"] = t

    orbits = []
    for r, a in [((F(-1, 3), F(1, 3)), (1, 1)), ((F(0), F(0)), (3, 4)), ((F(1), F(-2, 3)), (1, -1)),
                 ((F(9, 10), F(1, 2)), (5, -2))]:
        pre, cyc = orbit(r, a)
        orbits.append({"r": [fs(x) for x in r], "a": list(a), "preperiod": [list(p) for p in pre], "cycle": [list(p) for p in cyc]})
    frozen["orbits"] = orbits

    wits = []
    for r in [(F(0), F(0)), (F(-1, 3), F(1, 3)), (F(1, 2), F(1, 2)), (F(41, 50), F(37, 100)), (F(93, 100), F(11, 25)),
              (F(92, 93), F(16, 31)), (F(-1, 2), F(1, 5))]:
        V = witness_set(r)
        verdict, _ = decide(r)
        wits.append({"r": [fs(x) for x in r], "count": len(V), "points": sorted(list(p) for p in V), "verdict": verdict})
    frozen["witness_sets"] = wits

    fams = []
    for fid, ns in [("C0", [1, 2]), ("C1", range(2, 7)), ("C2", range(1, 7)), ("C3", range(2, 7)), ("C4", range(2, 7)),
                    ("C5", range(2, 7)), ("C6", range(1, 7))]:
        for n in ns:
            c = family(fid, n)
            shuffled = list(c)
            reordered = not compatible(c)
            if reordered:
                c = reorder(c)
            h, vf, ef = polygon(cutout_constraints(c))
            fams.append({"family": fid, "n": n, "shuffled": [list(p) for p in shuffled], "cycle": [list(p) for p in c],
                         "reordered": reordered, "vertices": [[fs(x), fs(y)] for x, y in h],
                         "vertex_contained": vf, "edge_contained": ef})
    frozen["families"] = fams

    rows = catalog(os.path.join(root, "data", "cutout_catalog.txt"))
    frozen["catalog"] = {"well_formed": len(rows), "valid": sum(r["status"] == "Valid" for r in rows), "rows": rows}

    with open(os.path.join(here, "frozen.json"), "w") as f:
        json.dump(frozen, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
