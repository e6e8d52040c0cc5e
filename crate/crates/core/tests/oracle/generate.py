"""High-precision reference values frozen into the Rust test suites.

Run with `python3 generate.py`; requires mpmath. Every value printed here is
computed at 30 significant digits independently of the Rust implementation.
"""
from mpmath import mp, mpf, mpc, gamma, zeta, pi, exp, quad, inf, zetazero, sin, cosh, sqrt

mp.dps = 30


def xi(s):
    s = mpc(s)
    if s == 0 or s == 1:
        return mpf(1) / 2
    return s * (s - 1) / 2 * pi ** (-s / 2) * gamma(s / 2) * zeta(s)


def hbar(t):
    t = mpf(t)
    nmax = int(12 / t) + 12
    return 2 * t ** 2 * sum((2 * pi ** 2 * n ** 4 * t ** 2 - 3 * pi * n ** 2) * exp(-pi * n ** 2 * t ** 2)
                            for n in range(1, nmax + 1))


def show(name, v):
    v = mpc(v)
    print(f"{name}: re={mp.nstr(v.real, 20)} im={mp.nstr(v.imag, 20)}")


show("gamma(1/2+3i)", gamma(mpc(0.5, 3)))
show("gamma(-2.5+1i)", gamma(mpc(-2.5, 1)))
show("gamma(10.3-7.2i)", gamma(mpc(10.3, -7.2)))
show("zeta(1/2+14.134725i)", zeta(mpc(0.5, 14.134725)))
show("zeta(3+40i)", zeta(mpc(3, 40)))
show("zeta(-0.5+25i)", zeta(mpc(-0.5, 25)))
show("zeta(0.2+55i)", zeta(mpc(0.2, 55)))
show("xi(1/2)", xi(0.5))
show("xi(2)", xi(2))
show("xi(-1)", xi(-1))
show("xi(1/2+3i)", xi(mpc(0.5, 3)))
show("xi(1/2+15i)", xi(mpc(0.5, 15)))
show("xi(1/2+14.134725i)", xi(mpc(0.5, 14.134725)))
show("xi(0.3+40i)", xi(mpc(0.3, 40)))
show("xi(1e-4)", xi(mpf("1e-4")))
show("xi(1+2e-4i)", xi(mpc(1, 2e-4)))
show("hbar(1)", hbar(1))
show("hbar(0.5)", hbar(0.5))
show("hbar(2)", hbar(2))
show("hbar(3)", hbar(3))
show("hbar(0.6)", hbar(0.6))
show("hbar(0.45)", hbar(0.45))
for k in range(1, 11):
    show(f"zero{k}", zetazero(k).imag)
show("pi/cosh(pi)", pi / cosh(pi))
h0 = lambda t: t ** mpf(-0.5) * exp(-(t + 1 / t))
show("g0(2)", quad(lambda t: t * h0(t), [0, 1, inf]))
show("g0(1/2+3i)", quad(lambda t: t ** mpc(-0.5, 3) * h0(t), [0, 1, inf]))
