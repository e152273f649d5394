#!/usr/bin/env python3
"""Regenerate oracles.json. Independent of the C++ engine: closed forms,
brute-force GF(2) ranks, binomials via math.comb, polynomial powers via dicts.
The output is frozen; tests read it and never rewrite it."""
import itertools
import json
import math
import os

R2 = list(itertools.product(range(-2, 3), repeat=4))


def gf2_rank(rows):
    piv = {}
    r = 0
    for x in rows:
        while x:
            h = x.bit_length() - 1
            if h in piv:
                x ^= piv[h]
            else:
                piv[h] = x
                r += 1
                break
    return r


# R = F2[x0,x1,x2]/(x0x1+x0x2+x1x2), graded by total degree
def r_dim(d):
    mons = [m for m in itertools.product(range(d + 1), repeat=3) if sum(m) == d]
    idx = {m: i for i, m in enumerate(mons)}
    rel = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    rows = []
    for m in itertools.product(range(d + 1), repeat=3):
        if sum(m) != d - 2:
            continue
        v = 0
        for t in rel:
            v ^= 1 << idx[tuple(a + b for a, b in zip(m, t))]
        rows.append(v)
    return len(mons) - gf2_rank(rows)


# t-form: u-exponents are forced, t0^i t1^j with i+j = c+x+y+z
def tform_dim(g):
    c, x, y, z = g
    n = c + x + y + z
    return n + 1 if n >= 0 else 0


# Euler form by brute force: a-exponents (i,j,k) with i+j+k = N, relation
# multiples of the a-monomials of weight N-1 (u's are units)
def euler_dim(g):
    c, x, y, z = g
    n = c + x + y + z
    if n < 0:
        return 0
    mons = [m for m in itertools.product(range(n + 1), repeat=3) if sum(m) == n]
    idx = {m: i for i, m in enumerate(mons)}
    rows = []
    for m in itertools.product(range(n + 1), repeat=3):
        if sum(m) != n - 1:
            continue
        v = 0
        for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
            v ^= 1 << idx[tuple(a + b for a, b in zip(m, e))]
        rows.append(v)
    return len(mons) - gf2_rank(rows)


# F2[t,u_b^+-,w^+-][a_a0,u_a0] + Sigma^-1 <1/(a_a0^j u_a0^m)>[t,u_b^+-,w^+-]
def comh1_dim(g):
    c, x, y, z = g
    pos = sum(1 for k in range(0, x + y + 1) if c + z + k >= 0)
    s = -(x + y)
    neg = sum(1 for m in range(1, s) if c - 1 + z - m >= 0)
    return pos + neg


def poly_mul(p, q):
    out = {}
    for a in p:
        for b in q:
            e = tuple(x + y for x, y in zip(a, b))
            out[e] = out.get(e, 0) ^ 1
    return {e for e, v in out.items() if v}


def poly_pow(p, k, trunc=None):
    r = {(0, 0, 0)}
    for _ in range(k):
        r = poly_mul(r, p)
        if trunc is not None:
            r = {e for e in r if e[0] < trunc}
    return r


def main():
    # exponents (c, t, t')
    p0 = {(0, 2, 1), (0, 1, 2)}
    p1 = {(0, 2, 0), (0, 1, 1), (0, 0, 2)}
    phi_y = {(1, 2, 1), (1, 1, 2), (2, 2, 0), (2, 1, 1), (2, 0, 2), (4, 0, 0)}
    hp_inf = {str(k): sorted(poly_pow(phi_y, k)) for k in range(0, 9)}
    # HP^n: truncation c^{n+1} = 0 applied to the product of the truncated Phi(y)
    hp_trunc = {}
    for n in range(0, 9):
        base = {e for e in phi_y if e[0] <= n}
        hp_trunc[str(n)] = {str(k): sorted(poly_pow(base, k, n + 1)) for k in range(0, n + 1)}
    # C2: (c t + c^2)^k, exponents (c, t)
    cp_inf = {}
    for k in range(0, 9):
        r = {(0, 0)}
        for _ in range(k):
            nr = {}
            for a in r:
                for b in [(1, 1), (2, 0)]:
                    e = (a[0] + b[0], a[1] + b[1])
                    nr[e] = nr.get(e, 0) ^ 1
            r = {e for e, v in nr.items() if v}
        cp_inf[str(k)] = sorted(r)

    sq_on_power = [[math.comb(a, i) % 2 for i in range(17)] for a in range(17)]
    # Sq(r1,r2)(t^a) = multinomial(a; a-r1-r2, r1, r2) t^{a+r1+3 r2}
    milnor2 = []
    for a in range(13):
        for r1 in range(7):
            for r2 in range(5):
                rest = a - r1 - r2
                coef = 0
                if rest >= 0:
                    coef = (math.factorial(a) // (math.factorial(rest) * math.factorial(r1) * math.factorial(r2))) % 2
                milnor2.append([a, r1, r2, coef])

    out = {
        "r_dims": [r_dim(d) for d in range(0, 13)],
        "r_points": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "box2_degrees": [list(g) for g in R2],
        "ek4_tform_box2": [tform_dim(g) for g in R2],
        "ek4_euler_box2": [euler_dim(g) for g in R2],
        "efk_comh1_box2": [comh1_dim(g) for g in R2],
        "sq_on_power_binomial": sq_on_power,
        "milnor2_on_power": milnor2,
        "phi_hp_inf": hp_inf,
        "phi_hp_trunc": hp_trunc,
        "phi_cp_inf": cp_inf,
        "k4_trivial_hn": [n + 1 for n in range(0, 8)],
    }
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "oracles.json")
    with open(path, "w") as f:
        json.dump(out, f, separators=(",", ":"))
        f.write("\n")


if __name__ == "__main__":
    main()
