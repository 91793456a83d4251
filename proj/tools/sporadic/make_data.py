#!/usr/bin/env python3
"""Writes data/sporadic/stNN.json from the root data below.

Each group is given by a Cartan-type matrix A over a quadratic ring
(r_i(e_j) = e_j - A[i][j] e_i, A[i][i] = 1 - eigenvalue) and the lattice
multipliers tau_i. Complex coordinates in the files are coordinates with
respect to e_1..e_n. Run with --check to verify group orders by closure.
"""
import argparse
import json
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from qring import RINGS, mul, realify, reflections, root_reflection  # noqa: E402

CONDUCTOR = {r: v[3] for r, v in RINGS.items()}

# theta of each ring in the power basis of Q(zeta_k), constant term first.
THETA = {
    "eisenstein": [0, 1],
    "gauss": [0, 1],
    "sqrt-2": [0, 1, 0, 1],
    "klein": [1, 1, 1, 0, 1, 0],
}
DEGREE = {"eisenstein": 2, "gauss": 2, "sqrt-2": 4, "klein": 6}


def encode(ring, a):
    x, y = a
    c = [Fraction(0)] * DEGREE[ring]
    c[0] += x
    for i, t in enumerate(THETA[ring]):
        c[i] += y * t
    return [str(v) for v in c]


def fnv1a(text):
    h = 14695981039346656037
    for b in text.encode():
        h ^= b
        h = (h * 1099511628211) % (1 << 64)
    return "%016x" % h


def frac_list(v):
    return [str(Fraction(x)) for x in v]


def build(entry):
    ring = entry["ring"]
    n = len(entry["cartan"])
    mats = reflections(ring, entry["cartan"]) + entry.get("extra_generators", [])
    generators = [[[encode(ring, m[i][j]) for j in range(n)] for i in range(n)] for m in mats]
    lattice = [[encode(ring, x) for x in v] for v in lattice_vectors(entry)]
    body = {
        "st_number": entry["st"],
        "n": n,
        "conductor": CONDUCTOR[ring],
        "order": entry["order"],
        "generators": generators,
        "lattice": lattice,
        "complex_unit": encode(ring, entry["unit"]),
        "extra_vectors": {k: frac_list(v) for k, v in entry.get("extra", {}).items()},
        "designated_reflections": entry.get("designated", list(range(n))),
        "source": entry["source"],
    }
    body["checksum"] = fnv1a(json.dumps(body, sort_keys=True, separators=(",", ":")))
    return body, mats


def lattice_vectors(entry):
    """2n complex vectors (ring pairs): explicit "lattice", else the given
    "basis" (default e_1..e_n) followed by tau_i times it."""
    if "lattice" in entry:
        return entry["lattice"]
    ring = entry["ring"]
    n = len(entry["cartan"])
    basis = entry.get("basis") or [[(1, 0) if r == i else (0, 0) for r in range(n)] for i in range(n)]
    return list(basis) + [[mul(ring, entry["tau"][i], x) for x in basis[i]] for i in range(n)]


def lattice_matrices(ring, mats, vectors):
    """Generator matrices on the lattice basis."""
    import numpy as np
    import sympy

    n = len(vectors) // 2
    p = sympy.zeros(2 * n, 2 * n)
    for j, v in enumerate(vectors):
        for i, (x, y) in enumerate(v):
            p[i, j] = x
            p[n + i, j] = y
    if p.det() == 0:
        raise ValueError("lattice vectors are dependent")
    pinv = p.inv()
    out = []
    for m in mats:
        g = pinv * sympy.Matrix(realify(ring, m).tolist()) * p
        if any(not v.is_integer for v in g):
            raise ValueError("lattice not stable")
        out.append(np.array(g.tolist(), dtype=np.int64))
    return out


def half(*idx, den=2, n):
    v = [Fraction(0)] * (2 * n)
    for i in idx:
        sign = -1 if i < 0 else 1
        v[abs(i) - 1] += Fraction(sign, den)
    return v


E = "eisenstein"
G = "gauss"
R2 = "sqrt-2"
K = "klein"
W = (0, 1)            # omega
O = (1, -1)           # 1 - omega
SQRT_M3 = (1, 2)      # 1 + 2 omega
I_UNIT = (0, 1)
Z0 = (0, 0)


def real(rows):
    return [[(x, 0) for x in row] for row in rows]


GROUPS = {}

GROUPS["st04"] = {
    "st": 4, "ring": E, "order": 24, "unit": SQRT_M3,
    "cartan": [[O, W], [(-1, 0), O]],
    "tau": [W, W],
    "extra": {"d1": half(1, 2, 3, n=2), "d2": half(1, 4, n=2)},
    "source": "3[3]3 root basis over Z[omega]; tau_i = omega",
}

GROUPS["st05"] = {
    "st": 5, "ring": E, "order": 72, "unit": SQRT_M3,
    "cartan": [[O, (0, -1)], [(2, 0), O]],
    "tau": [W, W],
    "source": "3[4]3 root basis over Z[omega]; tau_i = omega",
}

GROUPS["st08"] = {
    "st": 8, "ring": G, "order": 96, "unit": I_UNIT,
    "cartan": [[(1, -1), (0, -1)], [(1, 0), (1, -1)]],
    "tau": [I_UNIT, I_UNIT],
    "source": "4[3]4 root basis over Z[i]; tau_i = i",
}

GROUPS["st12"] = {
    "st": 12, "ring": R2, "order": 48, "unit": (0, 1),
    "cartan": [[(2, 0), (-1, -1)], [(-1, 1), (2, 0)]],
    "extra_generators": [root_reflection(R2, [(1, 0), (1, 0)], [(1, 1), (1, -1)])],
    "tau": [(0, 1), (0, 1)],
    "source": "three order-2 reflections over Z[sqrt(-2)]; tau_i = sqrt(-2)",
}

GROUPS["st24"] = {
    "st": 24, "ring": K, "order": 336, "unit": (-1, 2),
    "cartan": [[(2, 0), (1, -1), (-1, 0)], [(0, 1), (2, 0), (-1, 0)], [(-1, 0), (-1, 0), (2, 0)]],
    "tau": [(0, 1)] * 3,
    "source": "order-2 reflections over Z[(1+sqrt(-7))/2]; tau_i = (1+sqrt(-7))/2",
}

GROUPS["st25"] = {
    "st": 25, "ring": E, "order": 648, "unit": SQRT_M3,
    "cartan": [[O, (-1, 0), Z0], [W, O, (-1, 0)], [Z0, W, O]],
    "tau": [W] * 3,
    "extra": {"d1": [Fraction(1, 3), 0, Fraction(1, 3), Fraction(2, 3), 0, Fraction(2, 3)]},
    "source": "3[3]3[3]3 root basis over Z[omega]; tau_i = omega",
}

ST26_CARTAN = [[(2, 0), (-2, -1), Z0], [W, O, (-1, 0)], [Z0, W, O]]

GROUPS["st26_1"] = {
    "st": 26, "ring": E, "order": 1296, "unit": SQRT_M3,
    "cartan": ST26_CARTAN,
    "basis": [[(-1, 1), Z0, Z0], [Z0, (1, 0), Z0], [Z0, (1, 0), (1, 0)]],
    "tau": [W] * 3,
    "source": "2[4]3[3]3 over Z[omega]; lattice of index 3 in the root span; tau_i = omega",
}

GROUPS["st26_2"] = {
    "st": 26, "ring": E, "order": 1296, "unit": SQRT_M3,
    "cartan": ST26_CARTAN,
    "basis": [[(-1, 0), Z0, Z0], [Z0, (1, 0), Z0], [(-1, -1), (-1, -1), (-1, -1)]],
    "tau": [W] * 3,
    "source": "2[4]3[3]3 over Z[omega]; lattice spanned by the roots; tau_i = omega",
}

# F4 with the short simple roots first.
F4 = real([[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]])


def f4_lattice(kinds):
    """Per simple root: 'std' (e, tau e), 'long' (e, 2 tau e), 'glue' ((1+tau) e, 2 e)."""
    first, second = [], []
    for i, k in enumerate(kinds):
        a, b = {"std": ((1, 0), (0, 1)), "long": ((1, 0), (0, 2)), "glue": ((1, 1), (2, 0))}[k]
        first.append([a if r == i else Z0 for r in range(4)])
        second.append([b if r == i else Z0 for r in range(4)])
    return first + second


for name, kinds, note in [
    ("alpha", ["std"] * 4, "Q + tau Q"),
    ("beta", ["long", "long", "std", "std"], "Q + tau Q_long"),
    ("gamma", ["glue", "glue", "std", "std"], "Q_long + tau Q_long glued along Q/Q_long"),
]:
    GROUPS["st28_" + name] = {
        "st": 28, "ring": G, "order": 1152, "unit": I_UNIT,
        "cartan": F4,
        "lattice": f4_lattice(kinds),
        "source": "W(F4), simple roots short first; " + note + "; tau = i",
    }


def simply_laced(n, edges):
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in edges:
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1
    return real(c)


def thirds(plus, minus, dim):
    v = [Fraction(0)] * dim
    for i in plus:
        v[i - 1] += Fraction(1, 3)
    for i in minus:
        v[i - 1] -= Fraction(1, 3)
    return v


E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8)]

GROUPS["st35"] = {
    "st": 35, "ring": G, "order": 51840, "unit": I_UNIT,
    "cartan": simply_laced(6, E_EDGES[:5]),
    "tau": [I_UNIT] * 6,
    "extra": {"d1": thirds([1, 5], [3, 6], 12), "d7": thirds([7, 11], [9, 12], 12)},
    "source": "W(E6), Bourbaki simple roots; Q + tau Q; tau = i",
}

GROUPS["st36"] = {
    "st": 36, "ring": G, "order": 2903040, "unit": I_UNIT,
    "cartan": simply_laced(7, E_EDGES[:6]),
    "tau": [I_UNIT] * 7,
    "extra": {"d2": half(2, 5, 7, n=7), "d9": half(9, 12, 14, n=7)},
    "source": "W(E7), Bourbaki simple roots; Q + tau Q; tau = i",
}

GROUPS["st37"] = {
    "st": 37, "ring": G, "order": 696729600, "unit": I_UNIT,
    "cartan": simply_laced(8, E_EDGES),
    "tau": [I_UNIT] * 8,
    "source": "W(E8), Bourbaki simple roots; Q + tau Q; tau = i",
}


def chain(n, diag, up, down):
    c = [[diag if i == j else Z0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = up
        c[i + 1][i] = down
    return c


GROUPS["st32"] = {
    "st": 32, "ring": E, "order": 155520, "unit": SQRT_M3,
    "cartan": chain(4, O, (-1, 0), W),
    "tau": [W] * 4,
    "source": "3[3]3[3]3[3]3 root basis over Z[omega]; tau_i = omega",
}


ST29_CARTAN = [[(2, 0), (-1, 0), (-1, 0), (-1, 0)], [(-1, 0), (2, 0), I_UNIT, Z0],
               [(-1, 0), (0, -1), (2, 0), Z0], [(-1, 0), Z0, Z0, (2, 0)]]

GROUPS["st29"] = {
    "st": 29, "ring": G, "order": 7680, "unit": I_UNIT,
    "cartan": ST29_CARTAN,
    "tau": [I_UNIT] * 4,
    "source": "order-2 reflections over Z[i], triangle (1,2,3) with phase i; tau_i = i",
}

GROUPS["st31"] = {
    "st": 31, "ring": G, "order": 46080, "unit": I_UNIT,
    "cartan": ST29_CARTAN,
    # reflection in the root (1,1,1,1), unitary for the invariant form of the st29 part
    "extra_generators": [[[(2, 0), (-1, 1), (-1, -1), (-1, 0)], [(1, 0), (0, 1), (-1, -1), (-1, 0)],
                          [(1, 0), (-1, 1), (0, -1), (-1, 0)], [(1, 0), (-1, 1), (-1, -1), Z0]]],
    "basis": [[(1, 0), Z0, Z0, Z0], [Z0, I_UNIT, Z0, Z0], [Z0, Z0, (1, 0), Z0], [Z0, Z0, Z0, (1, 0)]],
    "tau": [I_UNIT] * 4,
    "source": "st29 reflections plus one in (1,1,1,1) over Z[i]; basis e1, i e2, e3, e4; tau_i = i",
}

ST33_CARTAN = [[(2, 0), (-1, 0), Z0, (-1, 0), Z0], [(-1, 0), (2, 0), Z0, (0, -1), (-1, 0)],
               [Z0, Z0, (2, 0), (-1, 0), Z0], [(-1, 0), (1, 1), (-1, 0), (2, 0), Z0],
               [Z0, (-1, 0), Z0, Z0, (2, 0)]]

GROUPS["st33"] = {
    "st": 33, "ring": E, "order": 51840, "unit": SQRT_M3,
    "cartan": ST33_CARTAN,
    "tau": [W] * 5,
    "extra": {"d1": half(1, 3, 5, n=5), "d6": half(6, 8, 10, n=5)},
    "source": "order-2 reflections over Z[omega], triangle (1,2,4) with phase omega; tau_i = omega",
}


def st34_cartan():
    c = [row[:] + [Z0] for row in ST33_CARTAN] + [[Z0] * 6]
    c[5][5] = (2, 0)
    c[4][5] = c[5][4] = (-1, 0)
    return c


GROUPS["st34"] = {
    "st": 34, "ring": E, "order": 39191040, "unit": SQRT_M3,
    "cartan": st34_cartan(),
    "tau": [W] * 6,
    "source": "st33 diagram with a sixth node on node 5; tau_i = omega",
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "data", "sporadic"))
    ap.add_argument("--check", action="store_true")
    ap.add_argument("groups", nargs="*")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name in args.groups or sorted(GROUPS):
        entry = GROUPS[name]
        st = entry["st"]
        body, mats = build(entry)
        if args.check and entry["order"] <= 200000:
            from fgroup import closure

            gens = lattice_matrices(entry["ring"], mats, lattice_vectors(entry))
            els = closure(gens, cap=entry["order"] + 1)
            got = None if els is None else len(els)
            if got != entry["order"]:
                raise SystemExit("st%d: closure order %s != %d" % (st, got, entry["order"]))
        path = os.path.join(args.out, name + ".json")
        with open(path, "w") as f:
            json.dump(body, f, indent=1, sort_keys=True)
            f.write("\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
