"""Recompute the frozen reference values with sympy and write tests/data/frozen.json.

Run from the repository root:  python tests/oracles/build_frozen.py
The library is only used to load the fixture tables; every quantity is
solved here symbolically from its definition.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import sympy

from mocklie.fixtures import documents

OUT = Path(__file__).resolve().parents[1] / "data" / "frozen.json"


def tensor(doc):
    A = doc.algebra
    n = A.dims.total
    c = [[[sympy.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in A.products.items():
        for k, v in terms:
            c[i][j][k] += sympy.Rational(v.numerator, v.denominator)
    par = [0 if i < A.dims.even else 1 for i in range(n)]
    return n, par, c


def mul(c, n, x, y):
    return [sum(x[i] * y[j] * c[i][j][k] for i in range(n) for j in range(n)) for k in range(n)]


def unknown_map(n, par, degree, tag):
    syms, M = [], [[0] * n for _ in range(n)]
    for r in range(n):
        for col in range(n):
            if par[r] == (par[col] + degree) % 2:
                s = sympy.Symbol(f"{tag}{r}_{col}")
                syms.append(s)
                M[r][col] = s
    return syms, M


def apply(M, v):
    return [sum(M[r][k] * v[k] for k in range(len(v))) for r in range(len(M))]


def solution_dim(eqs, syms):
    if not syms:
        return 0
    eqs = [sympy.expand(e) for e in eqs if sympy.expand(e) != 0]
    if not eqs:
        return len(syms)
    J = sympy.Matrix([[sympy.diff(e, s) for s in syms] for e in eqs])
    return len(syms) - J.rank()


def derivation_dim(doc, degree, anti, gram=None):
    n, par, c = tensor(doc)
    syms, D = unknown_map(n, par, degree, "d")
    e = lambda i: [sympy.Integer(int(t == i)) for t in range(n)]  # noqa: E731
    eps = -1 if anti else 1
    eqs = []
    for i, j in itertools.product(range(n), repeat=2):
        lhs = apply(D, mul(c, n, e(i), e(j)))
        t1 = mul(c, n, apply(D, e(i)), e(j))
        t2 = mul(c, n, e(i), apply(D, e(j)))
        s = (-1) ** (degree * par[i])
        eqs += [lhs[k] - eps * (t1[k] + s * t2[k]) for k in range(n)]
    if gram is not None:
        for i, j in itertools.product(range(n), repeat=2):
            Bdx = sum(apply(D, e(i))[a] * gram[a][j] for a in range(n))
            BxDy = sum(gram[i][b] * apply(D, e(j))[b] for b in range(n))
            eqs.append(Bdx - (-1) ** (degree * par[i]) * BxDy)
    return solution_dim(eqs, syms)


def annihilator_dim(doc):
    n, par, c = tensor(doc)
    rows = []
    for x in range(n):
        row = []
        for j in range(n):
            row += c[x][j] + c[j][x]
        rows.append(row)
    return n - sympy.Matrix(rows).rank() if n else 0


def square_dim(doc):
    n, par, c = tensor(doc)
    vecs = [c[i][j] for i in range(n) for j in range(n)]
    return sympy.Matrix(vecs).rank() if n else 0


def intertwiner_dim(doc):
    """Even Φ with Φ L_x = L*_x Φ, where (L*_x f) = (-1)^{|x||f|} f∘L_x."""
    n, par, c = tensor(doc)
    syms, P = unknown_map(n, par, 0, "p")
    eqs = []
    for x in range(n):
        L = [[c[x][col][r] for col in range(n)] for r in range(n)]
        # column g of L*_x holds the coordinates of (-1)^{|x||g|} f_g∘L_x
        Ls = [[((-1) ** (par[x] * par[col])) * L[col][f] for col in range(n)] for f in range(n)]
        PL = sympy.Matrix(P) * sympy.Matrix(L)
        LP = sympy.Matrix(Ls) * sympy.Matrix(P)
        eqs += list(PL - LP)
    return solution_dim(eqs, syms)


def main():
    docs = documents()
    out = {}
    for key, doc in docs.items():
        gram = None
        if doc.form is not None:
            g = doc.form.gram
            gram = [[sympy.Rational(g[i, j].numerator, g[i, j].denominator)
                     for j in range(g.cols)] for i in range(g.rows)]
        rec = {
            "annihilator_dim": annihilator_dim(doc),
            "square_dim": square_dim(doc),
        }
        for kind, anti in (("derivation", False), ("anti_derivation", True)):
            for deg in (0, 1):
                rec[f"{kind}_{deg}"] = derivation_dim(doc, deg, anti)
        if gram is not None:
            rec["ander_s_0"] = derivation_dim(doc, 0, True, gram)
            rec["ander_s_1"] = derivation_dim(doc, 1, True, gram)
            rec["ad_coad_intertwiner_dim"] = intertwiner_dim(doc)
        out[key] = rec
    OUT.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
