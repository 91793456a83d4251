"""Exact arithmetic in Q(zeta_k) (power basis) and integral realification."""
from fractions import Fraction
from functools import lru_cache
import cmath
import numpy as np
import sympy


@lru_cache(None)
def phi_poly(k):
    x = sympy.symbols("x")
    p = sympy.Poly(sympy.cyclotomic_poly(k, x), x)
    return [int(c) for c in reversed(p.all_coeffs())]  # constant first


class Cyc:
    __slots__ = ("k", "c")

    def __init__(self, k, coeffs):
        self.k = k
        d = len(phi_poly(k)) - 1
        c = [Fraction(x) for x in coeffs]
        self.c = tuple(_reduce(c, k) if len(c) > d else c + [Fraction(0)] * (d - len(c)))

    @staticmethod
    def zeta(k, e=1):
        e %= k
        return Cyc(k, [0] * e + [1])

    @staticmethod
    def of(k, r):
        return Cyc(k, [r])

    def __add__(self, o):
        o = _lift(self.k, o)
        return Cyc(self.k, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.k, [-a for a in self.c])

    def __sub__(self, o):
        return self + (-_lift(self.k, o))

    def __rsub__(self, o):
        return _lift(self.k, o) - self

    def __mul__(self, o):
        o = _lift(self.k, o)
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] += a * b
        return Cyc(self.k, out)

    __rmul__ = __mul__

    def __eq__(self, o):
        o = _lift(self.k, o)
        return self.c == o.c

    def __hash__(self):
        return hash((self.k, self.c))

    def conj(self):
        out = Cyc(self.k, [0])
        for i, a in enumerate(self.c):
            if a:
                out = out + Cyc.zeta(self.k, -i) * a
        return out

    def value(self):
        z = cmath.exp(2j * cmath.pi / self.k)
        return sum(complex(a) * z**i for i, a in enumerate(self.c))

    def is_zero(self):
        return not any(self.c)

    def __repr__(self):
        return "Cyc%d%s" % (self.k, [str(a) for a in self.c])

    def encode(self):
        return [str(a) for a in self.c]


def _lift(k, o):
    return o if isinstance(o, Cyc) else Cyc(k, [o])


def _reduce(c, k):
    p = phi_poly(k)
    d = len(p) - 1
    c = list(c)
    for i in range(len(c) - 1, d - 1, -1):
        a = c[i]
        if a:
            for j in range(d + 1):
                c[i - d + j] -= a * p[j]
    return c[:d]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(m)), Cyc.of(a[0][0].k, 0)) for j in range(p)] for i in range(n)]


def mat_vec(a, v):
    return [sum((a[i][t] * v[t] for t in range(len(v))), Cyc.of(v[0].k, 0)) for i in range(len(a))]


def realify(v):
    out = []
    for x in v:
        out.extend(x.c)
    return out


def lattice_coords(basis, vectors):
    """Rational coordinates of `vectors` in the Q-span of `basis` (lists of Cyc vectors)."""
    B = sympy.Matrix([realify(b) for b in basis]).T
    V = sympy.Matrix([realify(v) for v in vectors]).T
    sol = B.gauss_jordan_solve(V)[0]
    if sol.free_symbols:
        raise ValueError("basis not independent")
    return sol


def integral_matrix(basis, g):
    """Matrix of g on the lattice with the given basis; raises if not integral."""
    imgs = [mat_vec(g, b) for b in basis]
    m = lattice_coords(basis, imgs)
    if any(not x.is_integer for x in m):
        raise ValueError("lattice not stable")
    return np.array(m.tolist(), dtype=np.int64)
