"""Integral realification over quadratic rings Z[theta], theta^2 = p*theta + q."""
import numpy as np

RINGS = {
    # name: (p, q, numeric theta, conductor)
    "eisenstein": (-1, -1, complex(-0.5, 3 ** 0.5 / 2), 3),
    "gauss": (0, -1, 1j, 4),
    "sqrt-2": (0, -2, 1j * 2 ** 0.5, 8),
    "klein": (1, -2, complex(0.5, 7 ** 0.5 / 2), 7),
}


def mul(r, a, b):
    p, q = RINGS[r][:2]
    x1, y1 = a
    x2, y2 = b
    # (x1 + y1 t)(x2 + y2 t) = x1x2 + (x1y2 + x2y1) t + y1y2 (p t + q)
    return (x1 * x2 + q * y1 * y2, x1 * y2 + x2 * y1 + p * y1 * y2)


def value(r, a):
    return a[0] + a[1] * RINGS[r][2]


def block(r, a):
    p, q = RINGS[r][:2]
    x, y = a
    return np.array([[x, q * y], [y, x + p * y]], dtype=np.int64)


def realify(r, m):
    """n x n matrix of ring pairs -> 2n x 2n integer matrix on (e_1..e_n, t e_1..t e_n)."""
    n = len(m)
    out = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            b = block(r, m[i][j])
            out[i, j] = b[0, 0]
            out[i, n + j] = b[0, 1]
            out[n + i, j] = b[1, 0]
            out[n + i, n + j] = b[1, 1]
    return out


def reflections(r, cartan):
    """r_i(e_j) = e_j - A[i][j] e_i; returns ring matrices (columns = images)."""
    n = len(cartan)
    mats = []
    for i in range(n):
        m = [[(1 if a == b else 0, 0) for b in range(n)] for a in range(n)]
        for j in range(n):
            x, y = m[i][j]
            cx, cy = cartan[i][j]
            m[i][j] = (x - cx, y - cy)
        mats.append(m)
    return mats


def small_elements(bound):
    return [(x, y) for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)]


def units(r):
    return [a for a in small_elements(2) if abs(abs(value(r, a)) - 1) < 1e-9]


def root_reflection(r, root, coroot):
    """x -> x - <coroot, x> root, as a ring matrix."""
    n = len(root)
    m = [[(1 if i == j else 0, 0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            p = mul(r, root[i], coroot[j])
            m[i][j] = (m[i][j][0] - p[0], m[i][j][1] - p[1])
    return m
