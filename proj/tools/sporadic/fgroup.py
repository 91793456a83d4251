"""Small finite integer matrix group utilities for data validation."""
from fractions import Fraction
import numpy as np


def closure(gens, cap=2_000_000):
    d = gens[0].shape[0]
    ident = np.eye(d, dtype=np.int64)
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g @ x
                key = y.tobytes()
                if key not in seen:
                    seen[key] = y
                    nxt.append(y)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return list(seen.values())


def rank(m):
    return np.linalg.matrix_rank(m.astype(float))


def is_reflection(g):
    return rank(g - np.eye(g.shape[0], dtype=np.int64)) == 2


def stabilizer(elements, v):
    """v: list of Fractions. Elements g with g v = v mod Z."""
    den = 1
    for x in v:
        den = den * x.denominator // np.gcd(den, x.denominator)
    num = np.array([int(x * den) for x in v], dtype=np.int64)
    out = []
    for g in elements:
        if np.all(((g @ num) - num) % den == 0):
            out.append(g)
    return out


def s0_p0(elements, v):
    s = stabilizer(elements, v)
    refl = [g for g in s if is_reflection(g)]
    p = len(closure(refl)) if refl else 1
    return len(s), p
