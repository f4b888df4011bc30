#!/usr/bin/env python3
# Copyright 2026 The kohnert authors.
# SPDX-License-Identifier: Apache-2.0
"""Independent reference values, frozen into tests/data/oracle.json.

Polynomials come from sympy rational arithmetic using the recursive
definitions (kappa_a = pi_i kappa_{s_i a} when a_i < a_{i+1};
S_{w s_i} = d_i S_w when w(i) > w(i+1)), and Kohnert sets from a
straightforward closure over frozensets. Nothing here shares code or
conventions with the C++ library beyond the coordinate system.
"""

import itertools
import json
import pathlib

import sympy

N = 8
X = sympy.symbols(f"x1:{N + 1}")


def swap(f, i):
    return f.subs({X[i - 1]: X[i], X[i]: X[i - 1]}, simultaneous=True)


def ddiff(f, i):
    return sympy.cancel((f - swap(f, i)) / (X[i - 1] - X[i]))


def pi_op(f, i):
    return ddiff(sympy.expand(X[i - 1] * f), i)


def key(a):
    a = list(a)
    for i in range(len(a) - 1):
        if a[i] < a[i + 1]:
            b = a[:]
            b[i], b[i + 1] = b[i + 1], b[i]
            return sympy.expand(pi_op(key(b), i + 1))
    return sympy.Mul(*[X[i] ** a[i] for i in range(len(a))])


def schubert(w):
    n = len(w)
    w0 = tuple(range(n, 0, -1))
    if tuple(w) == w0:
        return sympy.Mul(*[X[i] ** (n - 1 - i) for i in range(n)])
    # find i with w(i) < w(i+1); then S_w = d_i S_{w s_i}
    for i in range(n - 1):
        if w[i] < w[i + 1]:
            v = list(w)
            v[i], v[i + 1] = v[i + 1], v[i]
            return sympy.expand(ddiff(schubert(tuple(v)), i + 1))
    raise AssertionError


def slide(a):
    n = len(a)
    flat = [p for p in a if p]
    size = sum(a)
    out = sympy.Integer(0)
    for b in itertools.product(range(size + 1), repeat=n):
        if sum(b) != size:
            continue
        if any(sum(b[:k]) < sum(a[:k]) for k in range(1, n + 1)):
            continue
        fb = [p for p in b if p]
        # flat(b) refines flat(a): consecutive parts of fb sum to parts of flat
        j, ok = 0, True
        for part in flat:
            s = 0
            while s < part and j < len(fb):
                s += fb[j]
                j += 1
            ok = ok and s == part
        if ok and j == len(fb):
            out += sympy.Mul(*[X[i] ** b[i] for i in range(n)])
    return out


def terms(f, n):
    poly = sympy.Poly(sympy.expand(f), *X[:n])
    rows = [[list(m), int(c)] for m, c in poly.terms()]
    rows.sort(reverse=True)
    return rows


def kohnert_closure(cells):
    start = frozenset(cells)
    seen = {start}
    stack = [start]
    while stack:
        d = stack.pop()
        for r in {row for _, row in d}:
            if r < 2:
                continue
            c = max(col for col, row in d if row == r)
            for s in range(r - 1, 0, -1):
                if (c, s) not in d:
                    t = (d - {(c, r)}) | {(c, s)}
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
                    break
    return seen


def rothe(w):
    n = len(w)
    return {(w[j], i + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]}


def comp_diagram(a):
    return {(c, r + 1) for r, p in enumerate(a) for c in range(1, p + 1)}


def main():
    two = {(3, 4), (1, 3), (1, 2), (2, 2), (3, 2)}
    out = {
        "key": {},
        "slide": {},
        "schubert": {},
        "kd_count": {},
        "two_components_polynomial": terms(sum(sympy.Mul(*[X[r - 1] for _, r in t]) for t in kohnert_closure(two)), 4),
    }
    for a in [(0, 2), (2, 0), (1, 1), (0, 3, 2), (0, 3, 1, 1), (1, 0, 2), (2, 0, 1, 1), (0, 1, 2, 0)]:
        out["key"][",".join(map(str, a))] = terms(key(a), len(a))
    for a in [(0, 2), (1, 2), (0, 2, 1), (2, 0, 1), (1, 0, 1, 1)]:
        out["slide"][",".join(map(str, a))] = terms(slide(a), len(a))
    for w in itertools.permutations(range(1, 5)):
        out["schubert"]["".join(map(str, w))] = terms(schubert(w), 4)
    named = {
        "two_components": two,
        "comp_0_2": comp_diagram((0, 2)),
        "comp_0_3_2": comp_diagram((0, 3, 2)),
        "comp_2_0_2_1": comp_diagram((2, 0, 2, 1)),
        "rothe_13625847": rothe((1, 3, 6, 2, 5, 8, 4, 7)),
        "rothe_2143": rothe((2, 1, 4, 3)),
        "single": {(1, 1)},
    }
    for name, cells in named.items():
        out["kd_count"][name] = len(kohnert_closure(cells))
    path = pathlib.Path(__file__).resolve().parent.parent / "data" / "oracle.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
