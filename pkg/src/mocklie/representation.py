"""Representations, dual modules, semidirect products and 2-cocycles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .kernel import (
    LCG,
    ZERO,
    GradedDimension,
    GradedLinearMap,
    Matrix,
    Vector,
    block_layout,
    is_invertible,
    nullspace,
    sign,
    vadd,
    vscale,
    vsub,
    zero_vector,
)
from .report import CheckReport
from .superalgebra import (
    MOCK_LIE,
    PreconditionError,
    SuperAlgebra,
    _solve_maps,
    check_axioms,
)


@dataclass(frozen=True)
class Representation:
    """An action of ``algebra`` on a graded space: one operator per basis element."""

    algebra: SuperAlgebra
    module_dims: GradedDimension
    action: tuple  # GradedLinearMap per basis index, degree = parity of that index

    def __post_init__(self):
        if len(self.action) != self.algebra.n:
            raise ValueError(f"need {self.algebra.n} operators, got {len(self.action)}")
        for i, op in enumerate(self.action):
            if op.source != self.module_dims or op.target != self.module_dims:
                raise ValueError(f"operator {i} does not act on {self.module_dims}")
            if op.degree != self.algebra.parity(i):
                raise ValueError(f"operator {i} has degree {op.degree}, "
                                 f"expected {self.algebra.parity(i)}")

    @classmethod
    def from_matrices(cls, algebra: SuperAlgebra, module_dims: GradedDimension,
                      matrices: Sequence[Matrix]) -> "Representation":
        ops = tuple(GradedLinearMap(M, algebra.parity(i), module_dims, module_dims)
                    for i, M in enumerate(matrices))
        return cls(algebra, module_dims, ops)

    @classmethod
    def zero(cls, algebra: SuperAlgebra, module_dims: GradedDimension) -> "Representation":
        return cls(algebra, module_dims,
                   tuple(GradedLinearMap.zero(module_dims, degree=algebra.parity(i))
                         for i in range(algebra.n)))

    def matrix(self, i: int) -> Matrix:
        return self.action[i].matrix

    def of(self, x: Vector) -> Matrix:
        """Operator of an arbitrary element, by linearity."""
        m = self.module_dims.total
        M = Matrix.zeros(m, m)
        for i, c in enumerate(x):
            if c:
                M = M + self.action[i].matrix.scale(c)
        return M

    def act(self, i: int, v: Vector) -> Vector:
        return self.action[i](v)

    def respects_grading(self) -> bool:
        return all(op.respects_grading() for op in self.action)


@dataclass(frozen=True)
class Cocycle:
    """Bilinear map ``J × J -> V`` stored on basis pairs; absent pairs are zero."""

    module_dims: GradedDimension
    values: Mapping = field(default_factory=dict)  # (i, j) -> module vector

    def __post_init__(self):
        m = self.module_dims.total
        clean = {}
        for key, v in self.values.items():
            v = tuple(Fraction(a) for a in v)
            if len(v) != m:
                raise ValueError(f"cocycle value at {key} has length {len(v)}, expected {m}")
            if any(v):
                clean[tuple(key)] = v
        object.__setattr__(self, "values", dict(sorted(clean.items())))

    def __call__(self, i: int, j: int) -> Vector:
        return self.values.get((i, j), zero_vector(self.module_dims.total))

    def evaluate(self, x: Vector, y: Vector) -> Vector:
        acc = zero_vector(self.module_dims.total)
        for (i, j), v in self.values.items():
            c = x[i] * y[j]
            if c:
                acc = vadd(acc, vscale(c, v))
        return acc


def representation_defect(R: Representation, i: int, j: int) -> Matrix:
    """``π(x•y) + π(x)π(y) + (-1)^{|x||y|} π(y)π(x)`` on basis elements."""
    A = R.algebra
    lhs = R.of(A.table[i][j])
    Pi, Pj = R.matrix(i), R.matrix(j)
    s = sign(A.parity(i) * A.parity(j))
    return lhs + Pi @ Pj + (Pj @ Pi).scale(s)


def check_representation(R: Representation) -> CheckReport:
    report = CheckReport()
    report.add("even_action", R.respects_grading())
    n = R.algebra.n
    for i in range(n):
        for j in range(n):
            d = representation_defect(R, i, j)
            if not d.is_zero():
                report.add("representation", False, (i, j), d)
                return report
    report.add("representation", True)
    return report


def _require_mock_lie(A: SuperAlgebra):
    rep = check_axioms(A, MOCK_LIE)
    if not rep.passed:
        raise PreconditionError(f"{A.name} is not mock-Lie:\n{rep.render()}")


def adjoint(A: SuperAlgebra, check: bool = True) -> Representation:
    if check:
        _require_mock_lie(A)
    return Representation.from_matrices(A, A.dims, [A.left_matrix(i) for i in range(A.n)])


def dual_action_matrix(M: Matrix, x_parity: int, dims: GradedDimension) -> Matrix:
    """Matrix of ``π*(x)`` on the dual basis, read off the evaluation identity.

    ``(π*(x) f_k)(v_l) = (-1)^{|f_k||x|} f_k(π(x) v_l)``; column ``k`` of the
    result lists the coefficients of ``π*(x) f_k`` on the dual basis.
    """
    m = dims.total
    entries = [ZERO] * (m * m)
    for k in range(m):
        s = sign(dims.parity(k) * x_parity)
        for l in range(m):
            # f_k(π(x) v_l) is the k-th coordinate of column l
            val = M[k, l]
            if val:
                entries[l * m + k] = s * val
    return Matrix(m, m, tuple(entries))


def dual(R: Representation, check: bool = True) -> Representation:
    if check:
        rep = check_representation(R)
        if not rep.passed:
            raise PreconditionError(f"not a representation:\n{rep.render()}")
    A = R.algebra
    mats = [dual_action_matrix(R.matrix(i), A.parity(i), R.module_dims) for i in range(A.n)]
    D = Representation.from_matrices(A, R.module_dims, mats)
    _check_evaluation_identity(R, D)
    return D


def _check_evaluation_identity(R: Representation, D: Representation):
    m = R.module_dims.total
    for i in range(R.algebra.n):
        xp = R.algebra.parity(i)
        for k in range(m):
            fk_img = D.matrix(i).col(k)  # π*(x) f_k in dual coordinates
            for l in range(m):
                want = sign(R.module_dims.parity(k) * xp) * R.matrix(i)[k, l]
                if fk_img[l] != want:
                    raise AssertionError(f"dual action violates evaluation identity at x={i}, f={k}, v={l}")


def coadjoint(A: SuperAlgebra, check: bool = True) -> Representation:
    return dual(adjoint(A, check=check), check=check)


def parity_sign_map(dims: GradedDimension) -> GradedLinearMap:
    """The canonical even identification ``V -> V**``: ``e_k ↦ (-1)^{|k|} e_k**``."""
    m = dims.total
    entries = tuple(Fraction(sign(dims.parity(i))) if i == j else ZERO
                    for i in range(m) for j in range(m))
    return GradedLinearMap(Matrix(m, m, entries), 0, dims, dims)


def semidirect_layout(A: SuperAlgebra, module_dims: GradedDimension):
    """Layout of J ⊕ V: J even, V even, J odd, V odd."""
    return block_layout([A.dims, module_dims])


def _twisted_product(A: SuperAlgebra, R: Representation, W: Cocycle | None,
                     name: str) -> SuperAlgebra:
    dims, (mj, mv) = semidirect_layout(A, R.module_dims)
    n, m = A.n, R.module_dims.total
    prods: dict = {}

    def put(p, q, k, c):
        if c:
            row = prods.setdefault((p, q), {})
            row[k] = row.get(k, ZERO) + c

    for i in range(n):
        for j in range(n):
            for k, c in A.products.get((i, j), ()):
                put(mj[i], mj[j], mj[k], c)
            if W is not None:
                for k, c in enumerate(W(i, j)):
                    put(mj[i], mj[j], mv[k], c)
    for i in range(n):
        M = R.matrix(i)
        for v in range(m):
            col = M.col(v)
            for k, c in enumerate(col):
                if c:
                    # x ⋆ v = π(x)v ; v ⋆ x = (-1)^{|x||v|} π(x)v
                    put(mj[i], mv[v], mv[k], c)
                    put(mv[v], mj[i], mv[k],
                        sign(A.parity(i) * R.module_dims.parity(v)) * c)
    return SuperAlgebra(name, dims, prods)


def semidirect_product(A: SuperAlgebra, R: Representation, name: str | None = None) -> SuperAlgebra:
    if R.algebra.dims != A.dims:
        raise ValueError("representation belongs to an algebra of different dimension")
    return _twisted_product(A, R, None, name or f"{A.name}|x|V")


def central_extension(A: SuperAlgebra, R: Representation, W: Cocycle,
                      name: str | None = None) -> SuperAlgebra:
    if R.algebra.dims != A.dims:
        raise ValueError("representation belongs to an algebra of different dimension")
    if W.module_dims != R.module_dims:
        raise ValueError("cocycle values live in a different module")
    return _twisted_product(A, R, W, name or f"{A.name}+_W V")


def check_cocycle(A: SuperAlgebra, R: Representation, W: Cocycle) -> CheckReport:
    report = CheckReport()
    n = A.n
    mdims = W.module_dims
    # evenness of Ω
    bad = None
    for (i, j), v in W.values.items():
        want = (A.parity(i) + A.parity(j)) % 2
        off = tuple(c if mdims.parity(k) != want else ZERO for k, c in enumerate(v))
        if any(off):
            bad = ((i, j), off)
            break
    report.add("cocycle_even", bad is None, *(bad or ()))
    bad = None
    for i in range(n):
        for j in range(n):
            d = vsub(W(i, j), vscale(sign(A.parity(i) * A.parity(j)), W(j, i)))
            if any(d):
                bad = ((i, j), d)
                break
        if bad:
            break
    report.add("cocycle_supersymmetric", bad is None, *(bad or ()))
    bad = None
    for i, j, k in itertools.product(range(n), repeat=3):
        d = cocycle_cyclic_defect(A, R, W, i, j, k)
        if any(d):
            bad = ((i, j, k), d)
            break
    report.add("cocycle_cyclic", bad is None, *(bad or ()))
    return report


def cocycle_cyclic_defect(A: SuperAlgebra, R: Representation, W: Cocycle,
                          i: int, j: int, k: int) -> Vector:
    """Cyclic sum of ``(-1)^{|x||z|} (Ω(x, y•z) + π(x)Ω(y, z))``."""
    p = A.parity
    m = W.module_dims.total
    acc = zero_vector(m)
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        s = sign(p(x) * p(z))
        term = vadd(W.evaluate(A.basis(x), A.table[y][z]), R.act(x, W(y, z)))
        acc = vadd(acc, vscale(s, term))
    return acc


def cocycle_space(A: SuperAlgebra, R: Representation) -> list:
    """Basis of even 2-cocycles with values in R (as :class:`Cocycle` objects)."""
    n, mdims = A.n, R.module_dims
    m = mdims.total
    positions = [(i, j, k) for i in range(n) for j in range(n) for k in range(m)
                 if mdims.parity(k) == (A.parity(i) + A.parity(j)) % 2]
    if not positions:
        return []

    def build(values):
        vals: dict = {}
        for c, (i, j, k) in zip(values, positions):
            if c:
                v = list(vals.get((i, j), zero_vector(m)))
                v[k] = Fraction(c)
                vals[(i, j)] = tuple(v)
        return Cocycle(mdims, vals)

    columns = []
    for t in range(len(positions)):
        e = [0] * len(positions)
        e[t] = 1
        W = build(e)
        eqs = []
        for i in range(n):
            for j in range(n):
                eqs.extend(vsub(W(i, j), vscale(sign(A.parity(i) * A.parity(j)), W(j, i))))
        for i, j, k in itertools.product(range(n), repeat=3):
            eqs.extend(cocycle_cyclic_defect(A, R, W, i, j, k))
        columns.append(eqs)
    rows = [[col[r] for col in columns] for r in range(len(columns[0]))]
    rows = [r for r in rows if any(r)]
    sols = nullspace(rows) if rows else [
        tuple(Fraction(int(s == t)) for s in range(len(positions))) for t in range(len(positions))]
    return [build(s) for s in sols]


def intertwiner_space(R1: Representation, R2: Representation, search: int = 32):
    """Even maps Φ with ``π2(x)Φ = Φπ1(x)``, plus an invertible witness if one is found.

    The witness search tries each basis map, then ``search`` deterministic
    rational combinations; ``None`` means no witness was found, which does
    not prove the representations inequivalent.
    """
    if R1.algebra.dims != R2.algebra.dims:
        raise ValueError("representations of different algebras")
    V1, V2 = R1.module_dims, R2.module_dims

    def eqs(Phi: GradedLinearMap):
        out = []
        for i in range(R1.algebra.n):
            out.extend((R2.matrix(i) @ Phi.matrix - Phi.matrix @ R1.matrix(i)).entries)
        return out

    basis = _solve_maps(V1, V2, 0, eqs)
    witness = None
    if V1.total == V2.total:
        for Phi in basis:
            if is_invertible(Phi.matrix):
                witness = Phi
                break
        if witness is None and basis:
            rng = LCG(len(basis) * 7919 + V1.total)
            for _ in range(search):
                coeffs = [rng.next_int() for _ in basis]
                Phi = basis[0].scale(coeffs[0])
                for c, B in zip(coeffs[1:], basis[1:]):
                    Phi = Phi + B.scale(c)
                if is_invertible(Phi.matrix):
                    witness = Phi
                    break
    return basis, witness


def is_intertwiner(R1: Representation, R2: Representation, Phi: GradedLinearMap) -> bool:
    if not Phi.respects_grading() or Phi.degree != 0:
        return False
    return all((R2.matrix(i) @ Phi.matrix - Phi.matrix @ R1.matrix(i)).is_zero()
               for i in range(R1.algebra.n))
