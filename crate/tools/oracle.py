"""Independent reference values for tests/fixtures/oracle.json.

Every value here comes from a route the Rust code does not use:
lattice-path dynamic programming for the integer sequences, Legendre
polynomials and symbolic integration for the polynomial families, and
plain `fractions.Fraction` sums for the normalized quantities.

    python3 tools/oracle.py > crates/core/tests/fixtures/oracle.json
"""

import json
from fractions import Fraction

import sympy as sp

N_INT = 60
N_POLY = 12
x, t = sp.symbols("x t")


def delannoy_paths(n_max):
    """Lattice paths (0,0)->(n,n) with steps E, N, NE."""
    size = n_max + 1
    grid = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == 0 or j == 0:
                grid[i][j] = 1
            else:
                grid[i][j] = grid[i - 1][j] + grid[i][j - 1] + grid[i - 1][j - 1]
    return [grid[n][n] for n in range(size)]


def schroder_paths(n_max):
    """Paths (0,0)->(n,n) with steps E, N, NE never rising above y = x."""
    out = []
    for n in range(n_max + 1):
        grid = [[0] * (n + 1) for _ in range(n + 1)]
        grid[0][0] = 1
        for i in range(n + 1):
            for j in range(i + 1):
                if i == j == 0:
                    continue
                v = 0
                if i > 0 and j <= i - 1:
                    v += grid[i - 1][j]
                if j > 0:
                    v += grid[i][j - 1]
                if i > 0 and j > 0:
                    v += grid[i - 1][j - 1]
                grid[i][j] = v
        out.append(grid[n][n])
    return out


def coeffs(poly):
    p = sp.Poly(sp.expand(poly), x)
    c = [int(v) for v in reversed(p.all_coeffs())]
    while c and c[-1] == 0:
        c.pop()
    return ",".join(map(str, c)) if c else "0"


def main():
    d = delannoy_paths(N_INT + 1)
    big_s = schroder_paths(N_INT + 1)
    small_s = [1] + [v // 2 for v in big_s[1:]]
    assert all(v % 2 == 0 for v in big_s[1:])

    def a_n(n):
        tot = sum((-1) ** (n - k) * k * k * d[k] * d[k - 1] for k in range(1, n + 1))
        v = Fraction(2 * tot, 3 * n * (n + 1))
        assert v.denominator == 1
        return int(v)

    def b_n(n):
        tot = sum((-1) ** (n - k) * (4 * k * k + 2 * k - 1) * d[k - 1] * small_s[k] for k in range(1, n + 1))
        v = Fraction(tot, n)
        assert v.denominator == 1
        return int(v)

    def thm12(p):
        first = sum((-1) ** k * k * k * d[k] * d[k - 1] for k in range(1, p))
        second = sum((-1) ** k * (4 * k * k + 2 * k - 1) * d[k - 1] * small_s[k] for k in range(1, p + 1))
        return [str(first), str(second)]

    d_poly = {n: sp.expand(sp.legendre(n, 2 * x + 1)) for n in range(N_POLY + 2)}
    big_s_poly = {
        n: sp.expand(sp.cancel(sp.integrate(sp.legendre(n, 2 * t + 1), (t, 0, x)) / x))
        for n in range(1, N_POLY + 3)
    }
    small_s_poly = {n: sp.expand(sp.cancel(big_s_poly[n] / (x + 1))) for n in big_s_poly}

    def thm13(n):
        total = sum(k * (k + 1) * (k + 2) * small_s_poly[k] * small_s_poly[k + 1] for k in range(1, n + 1))
        q = sp.cancel(4 * total / (n * (n + 1) * (n + 2) * (1 + 2 * x) ** 3))
        return coeffs(q)

    def lem42(n):
        num = (1 + 2 * x) * (2 + n) * small_s_poly[n + 1] ** 2 + small_s_poly[n] * small_s_poly[n + 1]
        return coeffs(sp.cancel(num / (1 + 2 * x) ** 3))

    def trinomial(n, b, c):
        return int(sp.Poly(sp.expand((x * x + b * x + c) ** n), x).coeff_monomial(x**n))

    out = {
        "delannoy": [str(v) for v in d[: N_INT + 1]],
        "large_schroder": [str(v) for v in big_s[: N_INT + 1]],
        "little_schroder": [str(v) for v in small_s[: N_INT + 1]],
        "a": [str(a_n(n)) for n in range(1, 31)],
        "b": [str(b_n(n)) for n in range(1, 31)],
        "theorem_1_2_sums": {str(p): thm12(p) for p in [5, 7, 11, 13, 17, 19, 23]},
        "theorem_1_3_quotients": {str(n): thm13(n) for n in [2, 4, 6, 8]},
        "lemma_4_2_quotients": {str(n): lem42(n) for n in [2, 4, 6]},
        "delannoy_poly": [coeffs(d_poly[n]) for n in range(N_POLY + 1)],
        "large_schroder_poly": [coeffs(big_s_poly[n]) for n in range(1, N_POLY + 1)],
        "little_schroder_poly": [coeffs(small_s_poly[n]) for n in range(1, N_POLY + 1)],
        "trinomial": [[n, b, c, str(trinomial(n, b, c))] for n in range(0, 8) for (b, c) in [(3, 2), (3, 1), (4, 1), (5, -3)]],
    }
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
