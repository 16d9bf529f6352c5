"""Independent sympy oracles. Writes tests/unit/oracle_data.hpp.

Run: python3 tests/oracles/oracles.py
"""
import itertools
import json
import math
import pathlib
from fractions import Fraction

import sympy as sp
from sympy.combinatorics import Permutation

OUT = pathlib.Path(__file__).resolve().parents[1] / "unit" / "oracle_data.hpp"


# --- Grassmann algebra on named generators with a fixed global index -------------

class Grassmann:
    def __init__(self, index):
        self.index = index  # name -> global position

    def mono(self, names):
        """Sort names by global index; return (sign, tuple) or (0, None) on repeats."""
        idx = [self.index[n] for n in names]
        if len(set(idx)) != len(idx):
            return 0, None
        sign = 1
        idx = list(idx)
        for i in range(len(idx)):
            for j in range(len(idx) - 1 - i):
                if idx[j] > idx[j + 1]:
                    idx[j], idx[j + 1] = idx[j + 1], idx[j]
                    sign = -sign
        inv = {v: k for k, v in self.index.items()}
        return sign, tuple(inv[i] for i in idx)

    def wedge(self, a, b):
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                s, m = self.mono(ma + mb)
                if s:
                    out[m] = out.get(m, 0) + s * ca * cb
        return {m: c for m, c in out.items() if c != 0}


def add(a, b, scale=1):
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + scale * c
    return {m: c for m, c in out.items() if c != 0}


def serialize(form, index, tau):
    terms = sorted(form.items(), key=lambda t: (len(t[0]), [index[n] for n in t[0]]))
    return json.dumps([[list(m), tau, str(Fraction(c))] for m, c in terms], separators=(",", ":"))


def projective_chern(n):
    """c_k of P^n from a^i_j = delta^i_j sum_k wb_k ^ w^k + wb_j ^ w^i, via det(I + tau a)."""
    w = [f"w{i+1}" for i in range(n)]
    wb = [f"wb{i+1}" for i in range(n)]
    index = {name: i for i, name in enumerate(w)}
    index.update({name: n + n * n + i for i, name in enumerate(wb)})
    G = Grassmann(index)
    two = lambda x, y: {G.mono([x, y])[1]: G.mono([x, y])[0]}
    trace_part = {}
    for k in range(n):
        trace_part = add(trace_part, two(wb[k], w[k]))
    a = [[add(trace_part if i == j else {}, two(wb[j], w[i])) for j in range(n)] for i in range(n)]
    # det(I + t a) = sum over k of t^k * (sum of principal k-minors), entries are even so commute
    out = {}
    for k in range(1, n + 1):
        total = {}
        for rows in itertools.combinations(range(n), k):
            for perm in itertools.permutations(rows):
                sign = Permutation([rows.index(p) for p in perm]).signature()
                term = {(): 1}
                for r, c in zip(rows, perm):
                    term = G.wedge(term, a[r][c])
                total = add(total, term, sign)
        out[k] = serialize(total, index, k)
    return out


def cs_coefficients(k):
    """k * C(k-1, j) * int_0^1 t^(k-1-j) (t^2 - t)^j dt: weight of f(M, (M^M)^j, A^(k-1-j)) in CS_f."""
    t = sp.symbols("t")
    return [k * sp.binomial(k - 1, j) * sp.integrate(t ** (k - 1 - j) * (t ** 2 - t) ** j, (t, 0, 1)) for j in range(k)]


def conformal(n):
    h = sp.symbols("h")
    p = sp.expand(sum((1 + h) ** (n - 2 * q) * h ** (2 * q) for q in range(n // 2 + 1)))
    return [p.coeff(h, i) for i in range(1, n + 1)]


def todd_in_chern(kmax):
    """Todd polynomials in c_1..c_4 from prod x_i/(1-exp(-x_i)) with 4 Chern roots."""
    xs = sp.symbols("x1:5")
    s = sp.symbols("s")
    gen = 1
    for x in xs:
        gen *= sp.series(s * x / (1 - sp.exp(-s * x)), s, 0, kmax + 1).removeO()
    gen = sp.expand(gen)
    cs = sp.symbols("c1:5")
    out = []
    for k in range(1, kmax + 1):
        part = gen.coeff(s, k)
        # express the symmetric part in elementary symmetric polynomials
        sym, rem, defs = sp.polys.polyfuncs.symmetrize(part, *xs, formal=True)
        assert rem == 0
        sym = sym.subs({d[0]: cs[i] for i, d in enumerate(defs)})
        out.append(sp.Poly(sp.expand(sym), *cs))
    return out


def word_str(poly):
    terms = []
    for monom, coeff in sorted(poly.terms()):
        terms.append("{%s, {%s}}" % (f'"{sp.Rational(coeff)}"', ",".join(map(str, monom))))
    return "{" + ", ".join(terms) + "}"


def main():
    lines = ["// Generated by tests/oracles/oracles.py. Do not edit.", "#pragma once", "", "#include <map>",
             "#include <string>", "#include <utility>", "#include <vector>", "", "namespace oracle {", ""]
    lines.append("// Chern forms of the projective tangent rep, serialized; key (n, k).")
    lines.append("inline const std::map<std::pair<int, int>, std::string> projective_chern = {")
    for n in (1, 2, 3):
        for k, text in projective_chern(n).items():
            lines.append(f"    {{{{{n}, {k}}}, R\"({text})\"}},")
    lines.append("};")
    lines.append("")
    lines.append("// Weight of f(M, (M^M)^j, A^(k-1-j)) in the transgression, from the homotopy integral.")
    lines.append("inline const std::map<int, std::vector<std::string>> cs_weights = {")
    for k in range(1, 7):
        vals = ", ".join(f'"{v}"' for v in cs_coefficients(k))
        lines.append(f"    {{{k}, {{{vals}}}}},")
    lines.append("};")
    lines.append("")
    lines.append("inline const std::map<int, std::vector<std::string>> conformal = {")
    for n in range(1, 9):
        vals = ", ".join(f'"{v}"' for v in conformal(n))
        lines.append(f"    {{{n}, {{{vals}}}}},")
    lines.append("};")
    lines.append("")
    lines.append("// Todd polynomials: (coefficient, exponents of c1..c4).")
    lines.append("inline const std::vector<std::vector<std::pair<std::string, std::vector<int>>>> todd = {")
    for poly in todd_in_chern(4):
        lines.append(f"    {word_str(poly)},")
    lines.append("};")
    lines.append("")
    lines.append("}  // namespace oracle")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
