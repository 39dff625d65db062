"""Convexity grid scan, radial-stretch monotonicity sampling, quaternion products."""
import math
import itertools

import numpy as np


def phi(t, q):
    return 0.0 if t == 0 else t / math.log(math.e + 1 / t) ** q


grid = np.logspace(-9, 3, 2001)
for q in (0, 0.25, 0.5, 1, 1.5, 2, 2.5, 3, 3.5, 4, 5):
    worst = 0.0
    for a, b in zip(grid[:-1], grid[1:]):
        m = 0.5 * (a + b)
        lhs = phi(m, q)
        rhs = 0.5 * (phi(a, q) + phi(b, q))
        worst = max(worst, (lhs - rhs) / rhs)
    # also the coarse triple test t, 2t
    worst2 = 0.0
    for a in grid:
        b = 3 * a
        m = 2 * a
        worst2 = max(worst2, (phi(m, q) - 0.5 * (phi(a, q) + phi(b, q))) / phi(m, q))
    print("q", q, "worst relative convexity excess", worst, worst2)


def radial(alpha, x):
    r = np.linalg.norm(x)
    return x if r == 0 else r ** (alpha - 1) * x


def delta_hat(alpha, n):
    xs = np.linspace(-1, 1, n)
    pts = [np.array([a, b]) for a in xs for b in xs]
    fs = [radial(alpha, p) for p in pts]
    best = 1.0
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            v = pts[i] - pts[j]
            w = fs[i] - fs[j]
            nw = np.linalg.norm(w)
            if nw == 0:
                continue
            best = min(best, np.dot(w, v) / np.linalg.norm(v) / nw)
    return best


for n in (9, 17, 33):
    print("radial alpha=3 grid", n, delta_hat(3.0, n))


def embed(a, b, c, d):
    return np.array([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]], float)


print("Mi Mj == Mk:", np.array_equal(embed(0, 1, 0, 0) @ embed(0, 0, 1, 0), embed(0, 0, 0, 1)))
E = np.zeros((4, 4)); E[0, 1] = 1
print("<E12, Mi>/4 etc:", [np.sum(E * embed(*u)) / 4 for u in ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))])
