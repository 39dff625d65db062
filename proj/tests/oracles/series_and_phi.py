"""Direct-summation and high-precision oracles for gauge functions."""
import mpmath as mp

mp.mp.dps = 40


def log_damped(t, q):
    t = mp.mpf(t)
    if t == 0:
        return mp.mpf(0)
    return t / mp.log(mp.e + 1 / t) ** q


print("LogDamped(1) at 1:", mp.nstr(log_damped(1, 1), 20))


def extremal(C, q, N):
    s = mp.mpf(0)
    for j in range(1, N + 1):
        d = C * mp.log1p(mp.mpf(1) / j)
        s += log_damped(d, q)
    return s


import math


def extremal_f(C, q, N):
    s = 0.0
    for j in range(1, N + 1):
        d = C * math.log1p(1.0 / j)
        s += d / math.log(math.e + 1.0 / d) ** q
    return s


a = extremal(1, 2, 1000)
print("extremal C=1 q=2 N=1e3:", mp.nstr(a, 17))
b = extremal_f(1, 2, 10**6)
print("extremal C=1 q=2 N=1e6 (float):", repr(b))
print("relative difference:", float((b - a) / b))
print("q=0 N=1e3:", float(extremal(1, 0, 1000)), math.log(1001))
print("q=2 N=1:", float(extremal(1, 2, 1)), float(log_damped(mp.log(2), 2)))
