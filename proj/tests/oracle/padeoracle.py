"""High-precision reference values for the C++ test suite.

Solves the Pade conditions directly as a linear system (mpmath, 50 digits;
sympy for rational exponents) and evaluates log-gamma with mpmath. The
printed C++ initializers are pasted into tests/oracle_values.hpp.
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 50


def binom_series(omega, n):
    c = [mp.mpc(1)]
    for i in range(1, n + 1):
        c.append(c[-1] * (i - 1 - omega) / i)
    return c


def pade_solve(omega, rho):
    sigma = sum(r + 1 for r in rho)
    cols = []
    for w, r in zip(omega, rho):
        b = binom_series(w, sigma)
        for j in range(r + 1):
            cols.append([b[n - j] if n >= j else mp.mpc(0) for n in range(sigma)])
    a = mp.matrix(sigma, sigma)
    for j, col in enumerate(cols):
        for n in range(sigma):
            a[n, j] = col[n]
    rhs = mp.matrix(sigma, 1)
    rhs[sigma - 1] = 1 / mp.factorial(sigma - 1)
    x = mp.lu_solve(a, rhs)
    out, at = [], 0
    for r in rho:
        out.append([x[at + j] for j in range(r + 1)])
        at += r + 1
    return out


def remainder(omega, rho, h, order):
    g = [mp.mpc(0)] * (order + 1)
    for w, coeffs in zip(omega, h):
        b = binom_series(w, order)
        for j, c in enumerate(coeffs):
            for n in range(j, order + 1):
                g[n] += c * b[n - j]
    return g


def cpx(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 17, min_fixed=-1, max_fixed=1),
                         mp.nstr(v.imag, 17, min_fixed=-1, max_fixed=1))


def exact_pade(omega, rho):
    sigma = sum(r + 1 for r in rho)
    def bs(w, n):
        c = [sp.Integer(1)]
        for i in range(1, n + 1):
            c.append(c[-1] * (i - 1 - w) / i)
        return c
    cols = []
    for w, r in zip(omega, rho):
        b = bs(w, sigma)
        for j in range(r + 1):
            cols.append([b[n - j] if n >= j else 0 for n in range(sigma)])
    a = sp.Matrix(sigma, sigma, lambda n, j: cols[j][n])
    rhs = sp.zeros(sigma, 1)
    rhs[sigma - 1] = sp.Rational(1, sp.factorial(sigma - 1))
    x = a.LUsolve(rhs)
    out, at = [], 0
    for r in rho:
        out.append([x[at + j] for j in range(r + 1)])
        at += r + 1
    return out


if __name__ == "__main__":
    print("// log_gamma")
    for z in [mp.mpc(0.5, 0), mp.mpc(3.7, 2.1), mp.mpc(-2.5, 0.3), mp.mpc(-4.3, 0),
              mp.mpc(0.1, -7.0), mp.mpc(25, 1), mp.mpc(-0.75, -1.25)]:
        print("{%s, %s}," % (cpx(z), cpx(mp.loggamma(z))))

    omega = [mp.mpc(0.2, 0.1), mp.mpc(1.7, -0.4), mp.mpc(0, 3.5)]
    rho = [2, 1, 1]
    h = pade_solve(omega, rho)
    print("// approximants, omega = <0.2+0.1i, 1.7-0.4i, 3.5i>, rho = <2,1,1>")
    for coeffs in h:
        print("{" + ", ".join(cpx(c) for c in coeffs) + "},")
    g = remainder(omega, rho, h, 10)
    print("// remainder coefficients 0..10")
    print("{" + ", ".join(cpx(c) for c in g) + "}")
    print("// G(0.3) and G(0.4+0.2i) from 400 terms")
    g = remainder(omega, rho, h, 400)
    for z in [mp.mpf(0.3), mp.mpc(0.4, 0.2)]:
        print(cpx(sum(c * z ** n for n, c in enumerate(g))))

    print("// exact, omega = <0, 1/3>, rho = <1,1>")
    print(exact_pade([sp.Integer(0), sp.Rational(1, 3)], [1, 1]))
    print("// exact, omega = <1/2, -2/7, 5/3>, rho = <2,0,1>")
    print(exact_pade([sp.Rational(1, 2), sp.Rational(-2, 7), sp.Rational(5, 3)], [2, 0, 1]))
