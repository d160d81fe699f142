"""Bilinear forms on superalgebras and pseudo-euclidean structure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from .kernel import (
    ZERO,
    GradedDimension,
    GradedLinearMap,
    Matrix,
    Vector,
    block_layout,
    is_invertible,
    nullspace,
    rank,
    sign,
    unit_vector,
)
from .report import CheckReport
from .representation import (
    Cocycle,
    _twisted_product,
    adjoint,
    check_cocycle,
    coadjoint,
    is_intertwiner,
)
from .superalgebra import (
    MOCK_LIE,
    PreconditionError,
    Subspace,
    SuperAlgebra,
    _graded_solution,
    annihilator,
    check_axioms,
    is_ideal,
    square_ideal,
)

FORM_PROPS = ("even", "supersymmetric", "invariant", "nondegenerate")


@dataclass(frozen=True)
class BilinearForm:
    dims: GradedDimension
    gram: Matrix

    def __post_init__(self):
        n = self.dims.total
        if (self.gram.rows, self.gram.cols) != (n, n):
            raise ValueError(f"gram matrix must be {n}x{n}")

    @classmethod
    def zero(cls, dims: GradedDimension) -> "BilinearForm":
        return cls(dims, Matrix.zeros(dims.total, dims.total))

    @cached_property
    def _nonzero(self) -> tuple:
        g = self.gram
        return tuple((i, j, g[i, j]) for i in range(g.rows) for j in range(g.cols) if g[i, j])

    def __call__(self, x: Vector, y: Vector) -> Fraction:
        return sum((x[i] * c * y[j] for i, j, c in self._nonzero if x[i] and y[j]), ZERO)

    def b(self, i: int, j: int) -> Fraction:
        return self.gram[i, j]

    def restricted(self, basis: Sequence[Vector]) -> Matrix:
        return Matrix.from_rows([[self(u, v) for v in basis] for u in basis], cols=len(basis))


@dataclass(frozen=True)
class PseudoEuclidean:
    algebra: SuperAlgebra
    form: BilinearForm

    @property
    def dims(self) -> GradedDimension:
        return self.algebra.dims

    def check(self) -> CheckReport:
        """Mock-Lie axioms plus the four form properties."""
        rep = check_axioms(self.algebra, MOCK_LIE)
        rep.extend(check_form(self.algebra, self.form, FORM_PROPS))
        return rep


def check_form(A: SuperAlgebra, B: BilinearForm, props: Sequence[str] = FORM_PROPS) -> CheckReport:
    if A.dims != B.dims:
        raise ValueError("form and algebra dimensions differ")
    report = CheckReport()
    n = A.n
    p = A.parity
    for prop in props:
        if prop == "even":
            bad = next(((i, j) for i in range(n) for j in range(n)
                        if p(i) != p(j) and B.b(i, j)), None)
            report.add("even", bad is None, bad, None if bad is None else (B.b(*bad),))
        elif prop in ("supersymmetric", "skew_supersymmetric"):
            eps = 1 if prop == "supersymmetric" else -1
            bad = None
            for i in range(n):
                for j in range(n):
                    d = B.b(i, j) - eps * sign(p(i) * p(j)) * B.b(j, i)
                    if d:
                        bad = ((i, j), (d,))
                        break
                if bad:
                    break
            report.add(prop, bad is None, *(bad or ()))
        elif prop == "invariant":
            bad = None
            for i, j, k in itertools.product(range(n), repeat=3):
                d = invariance_defect(A, B, i, j, k)
                if d:
                    bad = ((i, j, k), (d,))
                    break
            report.add("invariant", bad is None, *(bad or ()))
        elif prop == "nondegenerate":
            r = rank(B.gram)
            report.add("nondegenerate", r == n, note=f"rank {r} of {n}")
        else:
            raise ValueError(f"unknown form property {prop!r}")
    return report


def invariance_defect(A: SuperAlgebra, B: BilinearForm, i: int, j: int, k: int) -> Fraction:
    """``B(x•y, z) - B(x, y•z)`` on basis elements."""
    return B(A.table[i][j], A.basis(k)) - B(A.basis(i), A.table[j][k])


def orthogonal_complement(P: PseudoEuclidean, S: Subspace) -> Subspace:
    B = P.form
    dims = P.dims

    def cons(x):
        return [B(x, s) for s in S.basis]

    if not S.basis:
        return Subspace.whole(dims)
    basis = []
    n = dims.total
    for parity in (0, 1):
        idx = list(dims.indices(parity))
        if not idx:
            continue
        cols = [cons(unit_vector(n, i)) for i in idx]
        rows = [[c[r] for c in cols] for r in range(len(cols[0]))]
        rows = [r for r in rows if any(r)]
        sols = nullspace(rows) if rows else [unit_vector(len(idx), t) for t in range(len(idx))]
        for s in sols:
            v = [ZERO] * n
            for t, i in enumerate(idx):
                v[i] = s[t]
            basis.append(tuple(v))
    perp = Subspace(dims, tuple(basis))
    if is_ideal(P.algebra, S):
        A = P.algebra
        if not is_ideal(A, perp):
            raise AssertionError("orthogonal of an ideal is not an ideal")
        for a in S.basis:
            for b in perp.basis:
                if any(A.mul(a, b)) or any(A.mul(b, a)):
                    raise AssertionError("I • I^perp != 0")
    return perp


def ideal_predicates(P: PseudoEuclidean, S: Subspace) -> dict:
    g = P.form.restricted(S.basis)
    return {
        "is_ideal": is_ideal(P.algebra, S),
        "is_isotropic": g.is_zero(),
        "is_nondegenerate": rank(g) == S.dim,
    }


def annihilator_of(A: SuperAlgebra, S: Subspace) -> Subspace:
    """``Ann_J(I) = {x : x • I = 0}``."""

    def cons(x):
        out = []
        for s in S.basis:
            out.extend(A.mul(x, s))
        return out

    if not S.basis:
        return Subspace.whole(A.dims)
    return _graded_solution(A.dims, cons)


def check_ann_equals_square_perp(P: PseudoEuclidean) -> CheckReport:
    report = CheckReport()
    ann = annihilator(P.algebra)
    perp = orthogonal_complement(P, square_ideal(P.algebra))
    missing = next((v for v in perp.basis if not ann.contains(v)), None)
    report.add("square_perp_in_ann", missing is None, missing)
    missing = next((v for v in ann.basis if not perp.contains(v)), None)
    report.add("ann_in_square_perp", missing is None, missing)
    return report


def check_odd_annihilator(P: PseudoEuclidean) -> CheckReport:
    """Odd part has even dimension and, when nonzero, meets the annihilator."""
    report = CheckReport()
    odd = P.dims.odd
    report.add("odd_dimension_even", odd % 2 == 0, note=f"dim J_1 = {odd}")
    if odd == 0:
        report.add("odd_annihilator", True, note="no odd part")
        return report
    odd_ann = annihilator(P.algebra).intersect_parity(1)
    if odd_ann.dim:
        report.add("odd_annihilator", True, odd_ann.basis[0],
                   note=f"dim Ann ∩ J_1 = {odd_ann.dim}")
    else:
        report.add("odd_annihilator", False, note="Ann ∩ J_1 = 0")
    return report


def odd_annihilator_witness(P: PseudoEuclidean):
    ann = annihilator(P.algebra).intersect_parity(1)
    return ann.basis[0] if ann.dim else None


# -- T*-extension ------------------------------------------------------------------

def tstar_layout(dims: GradedDimension):
    """J ⊕ J*: J even, J* even, J odd, J* odd."""
    return block_layout([dims, dims])


def hyperbolic_form(dims: GradedDimension) -> BilinearForm:
    """``B(x+f, y+g) = f(y) + (-1)^{|x||y|} g(x)`` on J ⊕ J*."""
    total, (mj, md) = tstar_layout(dims)
    N = total.total
    entries = [ZERO] * (N * N)
    for i in range(dims.total):
        # B(f_i, e_i) = f_i(e_i) = 1 ; B(e_i, f_i) = (-1)^{|i|}
        entries[md[i] * N + mj[i]] = Fraction(1)
        entries[mj[i] * N + md[i]] = Fraction(sign(dims.parity(i)))
    return BilinearForm(total, Matrix(N, N, tuple(entries)))


def supercyclic_defect(A: SuperAlgebra, W: Cocycle, i: int, j: int, k: int) -> Fraction:
    """``Ω(x,y)(z) - (-1)^{|x|(|y|+|z|)} Ω(y,z)(x)`` on basis elements."""
    p = A.parity
    return W(i, j)[k] - sign(p(i) * (p(j) + p(k))) * W(j, k)[i]


def check_supercyclic(A: SuperAlgebra, W: Cocycle) -> CheckReport:
    report = CheckReport()
    n = A.n
    for i, j, k in itertools.product(range(n), repeat=3):
        d = supercyclic_defect(A, W, i, j, k)
        if d:
            report.add("supercyclic", False, (i, j, k), (d,))
            return report
    report.add("supercyclic", True)
    return report


def tstar_extension(A: SuperAlgebra, W: Cocycle | None = None, name: str | None = None):
    """Algebra on J ⊕ J* with the coadjoint action, the cocycle, and the hyperbolic form.

    Returns ``(algebra, form, report)``; the report records the cocycle check
    (a failing Ω is still used, so its effect on invariance stays visible),
    the four form properties, the supercyclic condition on Ω, and whether
    invariance and the supercyclic condition agree.
    """
    co = coadjoint(A)
    if W is None:
        W = Cocycle(A.dims, {})
    cyc = check_cocycle(A, co, W)
    T = _twisted_product(A, co, W, name or f"T*({A.name})")
    B = hyperbolic_form(A.dims)
    report = CheckReport()
    report.extend(cyc)
    report.extend(check_form(T, B, FORM_PROPS))
    sc = check_supercyclic(A, W)
    report.extend(sc)
    report.add("invariant_iff_supercyclic", report["invariant"].passed == sc.passed)
    return T, B, report


# -- adjoint / coadjoint ----------------------------------------------------------------

def flat_map(P: PseudoEuclidean) -> GradedLinearMap:
    """``x ↦ B(x, ·)`` in dual-basis coordinates: column j is ``B(e_j, ·)``."""
    return GradedLinearMap(P.form.gram.T, 0, P.dims, P.dims)


def flat_intertwiner(P: PseudoEuclidean) -> GradedLinearMap:
    """The flat map of B, asserted to intertwine adjoint and coadjoint and to be invertible."""
    rep = check_form(P.algebra, P.form, FORM_PROPS)
    if not rep.passed:
        raise PreconditionError(f"form is not an invariant scalar product:\n{rep.render()}")
    Phi = flat_map(P)
    ad, co = adjoint(P.algebra), coadjoint(P.algebra)
    if not is_intertwiner(ad, co, Phi):
        raise AssertionError("flat map of B does not intertwine adjoint and coadjoint")
    if not is_invertible(Phi.matrix):
        raise AssertionError("flat map of B is singular")
    return Phi
