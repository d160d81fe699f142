"""Superalgebras given by structure constants, and their axiom checkers.

Basis convention: indices ``0..m-1`` are even, ``m..m+n-1`` are odd.  A
:class:`SuperAlgebra` stores an arbitrary bilinear product; being mock-Lie
is something :func:`check_axioms` decides, not something the constructor
enforces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .kernel import (
    LCG,
    ZERO,
    GradedDimension,
    GradedLinearMap,
    Matrix,
    Vector,
    allowed_positions,
    block_layout,
    in_span,
    independent_subset,
    is_zero,
    map_from_unknowns,
    nullspace,
    sign,
    unit_vector,
    vadd,
    vscale,
    vsub,
    zero_vector,
)
from .report import CheckReport

MOCK_LIE = ("evenness", "supercommutativity", "super_jacobi")
ALL_AXIOMS = ("evenness", "supercommutativity", "super_jacobi", "jordan_super", "associativity")


class PreconditionError(ValueError):
    """An operation was handed inputs outside its stated domain."""


@dataclass(frozen=True)
class SuperAlgebra:
    name: str
    dims: GradedDimension
    products: Mapping  # (i, j) -> tuple of (k, Fraction), nonzero, sorted by k

    def __post_init__(self):
        n = self.dims.total
        clean = {}
        for (i, j), terms in self.products.items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"product index ({i}, {j}) out of range for {self.dims}")
            if isinstance(terms, Mapping):
                terms = terms.items()
            acc: dict = {}
            for k, c in terms:
                if not 0 <= k < n:
                    raise IndexError(f"product target {k} out of range for {self.dims}")
                acc[k] = acc.get(k, ZERO) + Fraction(c)
            row = tuple(sorted((k, c) for k, c in acc.items() if c))
            if row:
                clean[(i, j)] = row
        object.__setattr__(self, "products", dict(sorted(clean.items())))

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_function(cls, name: str, dims: GradedDimension,
                      f: Callable[[int, int], Vector]) -> "SuperAlgebra":
        n = dims.total
        prods = {}
        for i in range(n):
            for j in range(n):
                v = f(i, j)
                terms = [(k, c) for k, c in enumerate(v) if c]
                if terms:
                    prods[(i, j)] = terms
        return cls(name, dims, prods)

    @classmethod
    def abelian(cls, dims: GradedDimension, name: str = "abelian") -> "SuperAlgebra":
        return cls(name, dims, {})

    def renamed(self, name: str) -> "SuperAlgebra":
        return SuperAlgebra(name, self.dims, self.products)

    # -- evaluation ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.dims.total

    def parity(self, i: int) -> int:
        return self.dims.parity(i)

    @cached_property
    def table(self) -> tuple:
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                v = [ZERO] * n
                for k, c in self.products.get((i, j), ()):
                    v[k] = c
                row.append(tuple(v))
            rows.append(tuple(row))
        return tuple(rows)

    def product(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def mul(self, x: Vector, y: Vector) -> Vector:
        n = self.n
        if len(x) != n or len(y) != n:
            raise ValueError(f"vectors of length {len(x)}, {len(y)} for algebra of dimension {n}")
        acc = [ZERO] * n
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                for k, c in self.products.get((i, j), ()):
                    acc[k] += a * b * c
        return tuple(acc)

    def left(self, i: int, v: Vector) -> Vector:
        return self.mul(unit_vector(self.n, i), v)

    def right(self, v: Vector, j: int) -> Vector:
        return self.mul(v, unit_vector(self.n, j))

    def left_matrix(self, x) -> Matrix:
        """Matrix of ``L_x``; ``x`` is a basis index or a coordinate vector."""
        n = self.n
        xv = unit_vector(n, x) if isinstance(x, int) else x
        cols = [self.mul(xv, unit_vector(n, j)) for j in range(n)]
        return Matrix.from_columns(cols, n)

    def basis(self, i: int) -> Vector:
        return unit_vector(self.n, i)

    def zero(self) -> Vector:
        return zero_vector(self.n)


def multiply(A: SuperAlgebra, x: Vector, y: Vector) -> Vector:
    return A.mul(tuple(Fraction(a) for a in x), tuple(Fraction(b) for b in y))


# -- subspaces ------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    dims: GradedDimension
    basis: tuple

    @classmethod
    def span(cls, dims: GradedDimension, vectors: Iterable[Vector]) -> "Subspace":
        """Graded span: vectors are split into parity components first."""
        evens, odds = [], []
        for v in vectors:
            e, o = dims.split(tuple(Fraction(a) for a in v))
            evens.append(e)
            odds.append(o)
        return cls(dims, tuple(independent_subset(evens) + independent_subset(odds)))

    @classmethod
    def whole(cls, dims: GradedDimension) -> "Subspace":
        return cls(dims, tuple(unit_vector(dims.total, i) for i in range(dims.total)))

    @classmethod
    def zero(cls, dims: GradedDimension) -> "Subspace":
        return cls(dims, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def graded_dims(self) -> GradedDimension:
        par = [self.dims.vector_parity(v) for v in self.basis]
        return GradedDimension(par.count(0), par.count(1))

    def is_graded(self) -> bool:
        return all(self.dims.vector_parity(v) is not None for v in self.basis)

    def contains(self, v: Vector) -> bool:
        return in_span(self.basis, v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def same_as(self, other: "Subspace") -> bool:
        return self.dim == other.dim and self.contains_subspace(other)

    def intersect_parity(self, parity: int) -> "Subspace":
        """``S ∩ V_parity`` for a graded subspace S."""
        return Subspace(self.dims, tuple(v for v in self.basis
                                         if self.dims.vector_parity(v) == parity and not is_zero(v)))


def _graded_solution(dims: GradedDimension, constraints: Callable[[Vector], list]) -> Subspace:
    """Graded solution space of a linear condition, solved per parity."""
    basis = []
    n = dims.total
    for parity in (0, 1):
        idx = list(dims.indices(parity))
        if not idx:
            continue
        columns = [constraints(unit_vector(n, i)) for i in idx]
        nrows = len(columns[0])
        rows = [[col[r] for col in columns] for r in range(nrows)]
        rows = [r for r in rows if any(r)]
        if not rows:
            sol = [unit_vector(len(idx), t) for t in range(len(idx))]
        else:
            sol = nullspace(rows)
        for s in sol:
            v = [ZERO] * n
            for t, i in enumerate(idx):
                v[i] = s[t]
            basis.append(tuple(v))
    return Subspace(dims, tuple(basis))


def annihilator(A: SuperAlgebra) -> Subspace:
    n = A.n

    def cons(x):
        out = []
        for j in range(n):
            out.extend(A.right(x, j))
            out.extend(A.left(j, x))
        return out

    return _graded_solution(A.dims, cons)


def square_ideal(A: SuperAlgebra) -> Subspace:
    n = A.n
    return Subspace.span(A.dims, (A.product(i, j) for i in range(n) for j in range(n)))


def compute_F(A: SuperAlgebra) -> Subspace:
    """Odd elements killing the odd part: ``{x ∈ J_1 : x • J_1 = 0}``."""
    odd = list(A.dims.indices(1))
    basis = []
    if odd:
        n = A.n
        columns = [[c for j in odd for c in A.product(i, j)] for i in odd]
        rows = [[col[r] for col in columns] for r in range(len(columns[0]))]
        rows = [r for r in rows if any(r)]
        sol = nullspace(rows) if rows else [unit_vector(len(odd), t) for t in range(len(odd))]
        for s in sol:
            v = [ZERO] * n
            for t, i in enumerate(odd):
                v[i] = s[t]
            basis.append(tuple(v))
    return Subspace(A.dims, tuple(basis))


def is_ideal(A: SuperAlgebra, S: Subspace) -> bool:
    for s in S.basis:
        for j in range(A.n):
            if not S.contains(A.left(j, s)) or not S.contains(A.right(s, j)):
                return False
    return True


# -- axiom checks -------------------------------------------------------------------

def _check_evenness(A: SuperAlgebra, report: CheckReport):
    n = A.n
    for i in range(n):
        for j in range(n):
            want = (A.parity(i) + A.parity(j)) % 2
            v = A.table[i][j]
            bad = tuple(c if A.parity(k) != want else ZERO for k, c in enumerate(v))
            if any(bad):
                report.add("evenness", False, (i, j), bad)
                return
    report.add("evenness", True)


def supercommutativity_defect(A: SuperAlgebra, i: int, j: int) -> Vector:
    s = sign(A.parity(i) * A.parity(j))
    return vsub(A.table[i][j], vscale(s, A.table[j][i]))


def super_jacobi_defect(A: SuperAlgebra, i: int, j: int, k: int) -> Vector:
    p = A.parity
    x, y, z = (A.basis(t) for t in (i, j, k))
    t1 = vscale(sign(p(i) * p(k)), A.mul(x, A.table[j][k]))
    t2 = vscale(sign(p(i) * p(j)), A.mul(y, A.table[k][i]))
    t3 = vscale(sign(p(j) * p(k)), A.mul(z, A.table[i][j]))
    return vadd(vadd(t1, t2), t3)


def _check_supercommutativity(A, report):
    n = A.n
    for i in range(n):
        for j in range(n):
            d = supercommutativity_defect(A, i, j)
            if any(d):
                report.add("supercommutativity", False, (i, j), d)
                return
    report.add("supercommutativity", True)


def _check_super_jacobi(A, report):
    n = A.n
    for i, j, k in itertools.product(range(n), repeat=3):
        d = super_jacobi_defect(A, i, j, k)
        if any(d):
            report.add("super_jacobi", False, (i, j, k), d)
            return
    report.add("super_jacobi", True)


def _check_associativity(A, report):
    n = A.n
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = A.mul(A.table[i][j], A.basis(k))
        rhs = A.mul(A.basis(i), A.table[j][k])
        d = vsub(lhs, rhs)
        if any(d):
            report.add("associativity", False, (i, j, k), d)
            return
    report.add("associativity", True)


def jordan_super_defect(A: SuperAlgebra, a: int, b: int, c: int, d: int, triple=None,
                        mul=None) -> Vector:
    """LHS - RHS of the four-variable Jordan super-identity on basis elements."""
    p = A.parity
    P = A.table
    m = mul or A.mul
    T = triple if triple is not None else (lambda i, j, k: m(P[i][j], A.basis(k)))
    s_ac, s_ab, s_cb = sign(p(a) * p(c)), sign(p(a) * p(b)), sign(p(c) * p(b))
    lhs = vadd(vadd(vscale(s_ac, m(P[a][b], P[c][d])),
                    vscale(s_ab, m(P[b][c], P[a][d]))),
               vscale(s_cb, m(P[c][a], P[b][d])))
    rhs = vadd(vadd(vscale(s_ac, m(A.basis(a), T(b, c, d))),
                    vscale(s_ab, m(A.basis(b), T(c, a, d)))),
               vscale(s_cb, m(A.basis(c), T(a, b, d))))
    return vsub(lhs, rhs)


def _check_jordan_super(A, report):
    n = A.n
    P = A.table
    p = A.parity
    zero = zero_vector(n)
    products: dict = {}
    # table vectors repeat a lot (mostly zero), so products are memoized by value
    # and every zero result is the shared ``zero`` object

    def mul(x, y):
        if x is zero or y is zero or x == zero or y == zero:
            return zero
        key = (x, y)
        if key not in products:
            v = A.mul(x, y)
            products[key] = v if any(v) else zero
        return products[key]

    basis = [A.basis(k) for k in range(n)]
    T = [[[mul(P[i][j], basis[k]) for k in range(n)] for j in range(n)] for i in range(n)]
    for a, b, c, d in itertools.product(range(n), repeat=4):
        s_ac, s_ab, s_cb = sign(p(a) * p(c)), sign(p(a) * p(b)), sign(p(c) * p(b))
        terms = ((s_ac, mul(P[a][b], P[c][d])), (s_ab, mul(P[b][c], P[a][d])),
                 (s_cb, mul(P[c][a], P[b][d])), (-s_ac, mul(basis[a], T[b][c][d])),
                 (-s_ab, mul(basis[b], T[c][a][d])), (-s_cb, mul(basis[c], T[a][b][d])))
        dv = zero
        for coef, v in terms:
            if v is not zero:
                dv = vadd(dv, vscale(coef, v))
        if any(dv):
            report.add("jordan_super", False, (a, b, c, d), dv)
            return
    report.add("jordan_super", True)


_CHECKERS = {
    "evenness": _check_evenness,
    "supercommutativity": _check_supercommutativity,
    "super_jacobi": _check_super_jacobi,
    "jordan_super": _check_jordan_super,
    "associativity": _check_associativity,
}


def check_axioms(A: SuperAlgebra, axioms: Sequence[str] = MOCK_LIE) -> CheckReport:
    report = CheckReport()
    for ax in axioms:
        if ax not in _CHECKERS:
            raise ValueError(f"unknown axiom {ax!r}; choose from {', '.join(ALL_AXIOMS)}")
        _CHECKERS[ax](A, report)
    return report


def is_mock_lie(A: SuperAlgebra) -> bool:
    return check_axioms(A, MOCK_LIE).passed


def _samples(A: SuperAlgebra, count: int, seed: int, parity: int = 0) -> list:
    rng = LCG(seed)
    idx = list(A.dims.indices(parity))
    out = []
    for _ in range(count):
        v = [ZERO] * A.n
        for i in idx:
            v[i] = Fraction(rng.next_int())
        out.append(tuple(v))
    return out


def check_cube_zero(A: SuperAlgebra, sample_count: int = 8, seed: int = 0) -> CheckReport:
    """``(x•x)•x = 0`` on every basis element and on sampled even vectors."""
    report = CheckReport()
    for i in range(A.n):
        x = A.basis(i)
        cube = A.mul(A.table[i][i], x)
        if any(cube):
            report.add("cube_zero", False, (i,), cube)
            return report
    if A.dims.even:
        for s, x in enumerate(_samples(A, sample_count, seed)):
            cube = A.mul(A.mul(x, x), x)
            if any(cube):
                report.add("cube_zero", False, ("sample", s, x), cube)
                return report
    report.add("cube_zero", True)
    return report


def check_squared_identity(A: SuperAlgebra, sample_count: int = 8, seed: int = 0) -> CheckReport:
    """``x²•(y•x) = (x²•y)•x = 0`` on basis pairs and sampled pairs."""
    report = CheckReport()
    pairs = [((i, j), A.basis(i), A.basis(j)) for i in range(A.n) for j in range(A.n)]
    if A.dims.even:
        xs = _samples(A, sample_count, seed, 0)
        ys = _samples(A, sample_count, seed + 1, 0)
        if A.dims.odd:
            ys_odd = _samples(A, sample_count, seed + 2, 1)
            ys = [ys[k] if k % 2 == 0 else ys_odd[k] for k in range(sample_count)]
        pairs += [(("sample", s, x, y), x, y) for s, (x, y) in enumerate(zip(xs, ys))]
    first_fail = {"x2_yx": None, "x2y_x": None}
    for w, x, y in pairs:
        x2 = A.mul(x, x)
        left = A.mul(x2, A.mul(y, x))
        right = A.mul(A.mul(x2, y), x)
        if first_fail["x2_yx"] is None and any(left):
            first_fail["x2_yx"] = (w, left)
        if first_fail["x2y_x"] is None and any(right):
            first_fail["x2y_x"] = (w, right)
    for label in ("x2_yx", "x2y_x"):
        f = first_fail[label]
        if f is None:
            report.add(label, True)
        else:
            report.add(label, False, f[0], f[1])
    return report


# -- constructors -----------------------------------------------------------------------

def direct_sum(A1: SuperAlgebra, A2: SuperAlgebra, name: str | None = None) -> SuperAlgebra:
    """Layout: A1 even, A2 even, A1 odd, A2 odd."""
    dims, (m1, m2) = block_layout([A1.dims, A2.dims])
    prods = {}
    for A, m in ((A1, m1), (A2, m2)):
        for (i, j), terms in A.products.items():
            prods[(m[i], m[j])] = [(m[k], c) for k, c in terms]
    return SuperAlgebra(name or f"{A1.name}+{A2.name}", dims, prods)


def tensor_layout(J: GradedDimension, A: GradedDimension) -> tuple:
    """Index map (x, a) -> position for J ⊗ A.

    Even block: J0⊗A0 then J1⊗A1; odd block: J0⊗A1 then J1⊗A0.  Pairs are
    lexicographic within each piece.
    """
    J0, J1 = list(J.indices(0)), list(J.indices(1))
    A0, A1 = list(A.indices(0)), list(A.indices(1))
    order_even = [(x, a) for x in J0 for a in A0] + [(x, a) for x in J1 for a in A1]
    order_odd = [(x, a) for x in J0 for a in A1] + [(x, a) for x in J1 for a in A0]
    pos = {pair: t for t, pair in enumerate(order_even + order_odd)}
    return GradedDimension(len(order_even), len(order_odd)), pos


def tensor_assoc(J: SuperAlgebra, A: SuperAlgebra, koszul: bool = True,
                 check: bool = True, name: str | None = None) -> SuperAlgebra:
    """Product ``(x⊗a)•(y⊗b) = ε (x•y)⊗(a·b)`` with ``ε = (-1)^{|a||y|}`` if koszul."""
    if check:
        rep = check_axioms(A, ("associativity", "supercommutativity", "evenness"))
        if not rep.passed:
            raise PreconditionError(f"second factor is not associative supercommutative:\n{rep.render()}")
        rep = check_axioms(J, MOCK_LIE)
        if not rep.passed:
            raise PreconditionError(f"first factor is not mock-Lie:\n{rep.render()}")
    dims, pos = tensor_layout(J.dims, A.dims)
    prods: dict = {}
    for (x, a), p in pos.items():
        for (y, b), q in pos.items():
            eps = sign(A.parity(a) * J.parity(y)) if koszul else 1
            acc: dict = {}
            for k, c in J.products.get((x, y), ()):
                for l, d in A.products.get((a, b), ()):
                    t = pos[(k, l)]
                    acc[t] = acc.get(t, ZERO) + eps * c * d
            if acc:
                prods[(p, q)] = acc
    return SuperAlgebra(name or f"{J.name}(x){A.name}", dims, prods)


# -- derivations and homomorphisms ------------------------------------------------------

def _solve_maps(source: GradedDimension, target: GradedDimension, degree: int,
                equations: Callable[[GradedLinearMap], list]) -> list:
    """Basis of the maps of a given degree annihilated by linear ``equations``.

    ``equations(D)`` returns a flat list of scalars that must vanish; it is
    evaluated on each elementary map to assemble the coefficient matrix.
    """
    positions = allowed_positions(source, target, degree)
    if not positions:
        return []
    columns = []
    for t in range(len(positions)):
        e = [ZERO] * len(positions)
        e[t] = Fraction(1)
        columns.append(equations(map_from_unknowns(e, positions, source, target, degree)))
    nrows = len(columns[0]) if columns else 0
    rows = [[col[r] for col in columns] for r in range(nrows)]
    rows = [r for r in rows if any(r)]
    if rows:
        sols = nullspace(rows)
    else:
        sols = [tuple(Fraction(int(s == t)) for s in range(len(positions)))
                for t in range(len(positions))]
    return [map_from_unknowns(s, positions, source, target, degree) for s in sols]


def derivation_defects(A: SuperAlgebra, D: GradedLinearMap, anti: bool) -> list:
    """Flat defect list of ``D(x•y) ∓ (D(x)•y + (-1)^{α|x|} x•D(y))``."""
    s = -1 if anti else 1
    n = A.n
    out = []
    images = [D.image(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = D(A.table[i][j])
            rhs = vadd(A.mul(images[i], A.basis(j)),
                       vscale(sign(D.degree * A.parity(i)), A.mul(A.basis(i), images[j])))
            out.extend(vsub(lhs, vscale(s, rhs)))
    return out


def derivation_space(A: SuperAlgebra, kind: str = "derivation", degree: int = 0) -> list:
    if kind not in ("derivation", "anti_derivation"):
        raise ValueError("kind must be 'derivation' or 'anti_derivation'")
    anti = kind == "anti_derivation"
    return _solve_maps(A.dims, A.dims, degree, lambda D: derivation_defects(A, D, anti))


def check_derivation(A: SuperAlgebra, D: GradedLinearMap, anti: bool = True) -> CheckReport:
    label = "anti_derivation" if anti else "derivation"
    report = CheckReport()
    if not D.respects_grading():
        report.add(label, False, note=f"map does not have degree {D.degree}")
        return report
    n = A.n
    s = -1 if anti else 1
    for i in range(n):
        for j in range(n):
            lhs = D(A.table[i][j])
            rhs = vadd(A.mul(D.image(i), A.basis(j)),
                       vscale(sign(D.degree * A.parity(i)), A.mul(A.basis(i), D.image(j))))
            d = vsub(lhs, vscale(s, rhs))
            if any(d):
                report.add(label, False, (i, j), d)
                return report
    report.add(label, True)
    return report


def check_homomorphism(A1: SuperAlgebra, A2: SuperAlgebra, Phi: GradedLinearMap) -> CheckReport:
    if Phi.degree != 0:
        raise ValueError("a homomorphism must have degree 0")
    if Phi.source != A1.dims or Phi.target != A2.dims:
        raise ValueError("map dimensions do not match the algebras")
    report = CheckReport()
    report.add("even", Phi.respects_grading())
    for i in range(A1.n):
        for j in range(A1.n):
            d = vsub(Phi(A1.table[i][j]), A2.mul(Phi.image(i), Phi.image(j)))
            if any(d):
                report.add("homomorphism", False, (i, j), d)
                return report
    report.add("homomorphism", True)
    return report


def subspace_from_maps(maps: Sequence[GradedLinearMap]) -> list:
    """Flattened matrices, handy for rank containment tests between map spaces."""
    return [m.matrix.entries for m in maps]


def map_span_contains(big: Sequence[GradedLinearMap], small: Sequence[GradedLinearMap]) -> bool:
    B = subspace_from_maps(big)
    return all(in_span(B, m.matrix.entries) for m in small)


__all__ = [
    "ALL_AXIOMS", "MOCK_LIE", "PreconditionError", "SuperAlgebra", "Subspace",
    "annihilator", "check_axioms", "check_cube_zero", "check_derivation",
    "check_homomorphism", "check_squared_identity", "compute_F", "derivation_space",
    "direct_sum", "is_ideal", "is_mock_lie", "map_span_contains", "multiply",
    "square_ideal", "tensor_assoc",
]
