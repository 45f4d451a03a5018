#!/usr/bin/env python3
"""Brute-force good/bad pair counts in S_n straight from the chain definition.

Independent of the Rust crate: Bruhat order is the transitive closure of
length-increasing reflection steps, E_w = im(w - id) is computed by exact
Gaussian elimination over Fractions, and the chain search is a plain BFS.

Usage: python3 tools/chain_oracle.py N > crates/core/tests/fixtures/chain_oracle_sN.json
"""
import itertools
import json
import sys
from fractions import Fraction


def length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def compose(a, b):
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inverse(w):
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def transposition(n, i, j):
    t = list(range(1, n + 1))
    t[i - 1], t[j - 1] = j, i
    return tuple(t)


def rank(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c] / rows[r][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        r += 1
    return r


def root(n, i, j):
    v = [0] * n
    v[i - 1] += 1
    v[j - 1] -= 1
    return v


def min_gen_roots(w):
    n = len(w)
    # columns of (w - id): w e_k - e_k = e_{w(k)} - e_k
    gens = [root(n, w[k], k + 1) for k in range(n) if w[k] != k + 1]
    base = rank(gens) if gens else 0
    out = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            r = root(n, i, j)
            if rank(gens + [r]) == base:
                out.add((i, j))
    return out


def main():
    n = int(sys.argv[1])
    perms = list(itertools.permutations(range(1, n + 1)))
    refl = [((i, j), transposition(n, i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    # Bruhat order: closure of u -> t u with length(t u) > length(u)
    up = {u: set() for u in perms}
    for u in perms:
        for _, t in refl:
            v = compose(t, u)
            if length(v) > length(u):
                up[u].add(v)
    above = {}
    for u in sorted(perms, key=length, reverse=True):
        s = {u}
        for v in up[u]:
            s |= above[v]
        above[u] = s
    total = 0
    bad = 0
    bad_pairs = []
    for w1 in perms:
        for w2 in perms:
            if w2 not in above[w1]:
                continue
            total += 1
            allowed = min_gen_roots(compose(w1, inverse(w2)))
            ts = [t for (ij, t) in refl if ij in allowed]
            seen = {w1}
            frontier = [w1]
            while frontier:
                nxt = []
                for u in frontier:
                    for t in ts:
                        v = compose(t, u)
                        if v in seen or length(v) <= length(u) or w2 not in above[v]:
                            continue
                        seen.add(v)
                        nxt.append(v)
                frontier = nxt
            if w2 not in seen:
                bad += 1
                bad_pairs.append(["".join(map(str, w1)), "".join(map(str, w2))])
    json.dump({"n": n, "total_comparable": total, "bad_count": bad, "bad_pairs": sorted(bad_pairs)},
              sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
