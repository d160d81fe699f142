"""Double extensions, generalized double extensions, decomposition and isometries.

Basis layouts keep even vectors first.  Inside each parity block the summands
appear in construction order, so a double extension ``J2 ⊕ J1 ⊕ J2*`` stores
``J2_0, J1_0, J2*_0, J2_1, J1_1, J2*_1`` and a generalized double extension
``Ku ⊕ J ⊕ Ku*`` stores ``J_0, u, J_1, u*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .forms import FORM_PROPS, BilinearForm, PseudoEuclidean, check_form, orthogonal_complement
from .kernel import (
    ZERO,
    GradedDimension,
    GradedLinearMap,
    Matrix,
    Vector,
    block_layout,
    inverse,
    is_invertible,
    solve,
    sign,
    unit_vector,
    vscale,
    vsub,
    zero_vector,
)
from .report import CheckReport
from .representation import Representation, check_representation, coadjoint
from .superalgebra import (
    MOCK_LIE,
    PreconditionError,
    Subspace,
    SuperAlgebra,
    _solve_maps,
    annihilator,
    check_axioms,
    check_derivation,
    check_homomorphism,
    derivation_defects,
)

CONVENTIONS = ("consistent", "literal")


class _Builder:
    """Accumulates structure constants keyed by basis index pairs."""

    def __init__(self):
        self.prods: dict = {}

    def put(self, p: int, q: int, k: int, c):
        if c:
            row = self.prods.setdefault((p, q), {})
            row[k] = row.get(k, ZERO) + Fraction(c)

    def put_vector(self, p: int, q: int, index: Sequence[int], v: Vector, scale=1):
        for k, c in enumerate(v):
            if c:
                self.put(p, q, index[k], scale * c)

    def build(self, name: str, dims: GradedDimension) -> SuperAlgebra:
        return SuperAlgebra(name, dims, self.prods)


# -- supersymmetric anti-derivations ------------------------------------------------

def symmetry_defects(P: PseudoEuclidean, D: GradedLinearMap) -> list:
    """``B(D x, y) - (-1)^{α|x|} B(x, D y)`` on all basis pairs."""
    A, B = P.algebra, P.form
    n = A.n
    out = []
    for i in range(n):
        Di = D.image(i)
        for j in range(n):
            out.append(B(Di, A.basis(j)) - sign(D.degree * A.parity(i)) * B(A.basis(i), D.image(j)))
    return out


def ander_s(P: PseudoEuclidean, degree: int) -> list:
    """Basis of anti-superderivations of a given degree that are supersymmetric for B."""
    A = P.algebra
    return _solve_maps(A.dims, A.dims, degree,
                       lambda D: derivation_defects(A, D, True) + symmetry_defects(P, D))


def check_ander_s(P: PseudoEuclidean, D: GradedLinearMap) -> CheckReport:
    report = check_derivation(P.algebra, D, anti=True)
    bad = next(((k, d) for k, d in enumerate(symmetry_defects(P, D)) if d), None)
    if bad is None:
        report.add("B_supersymmetric", True)
    else:
        n = P.algebra.n
        report.add("B_supersymmetric", False, divmod(bad[0], n), (bad[1],))
    return report


# -- central extension by a dual and double extension --------------------------------

@dataclass(frozen=True)
class DoubleExtensionInput:
    J1: PseudoEuclidean
    J2: SuperAlgebra
    phi: Representation  # of J2 on the underlying space of J1
    sigma: BilinearForm  # on J2

    def validate(self) -> CheckReport:
        if self.phi.algebra.dims != self.J2.dims or self.phi.module_dims != self.J1.dims:
            raise ValueError("action does not match J1 and J2")
        report = CheckReport()
        report.extend(check_axioms(self.J2, MOCK_LIE), "J2.")
        report.extend(check_representation(self.phi), "phi.")
        for a in range(self.J2.n):
            report.extend(check_ander_s(self.J1, self.phi.action[a]), f"phi[{a}].")
        report.extend(check_form(self.J2, self.sigma, ("even", "supersymmetric", "invariant")),
                      "sigma.")
        return report

    def require_valid(self):
        rep = self.validate()
        if not rep.passed:
            raise PreconditionError("invalid double extension input:\n"
                                    + "\n".join(v.render() for v in rep.failures()))


def central_term(X: DoubleExtensionInput, i: int, j: int) -> Vector:
    """``φ̌(x_i, x_j)`` in dual coordinates: ``(-1)^{|x|(|y|+|a|)} B(y, φ(a) x)``."""
    P, J2 = X.J1, X.J2
    pi, pj = P.algebra.parity(i), P.algebra.parity(j)
    y = P.algebra.basis(j)
    return tuple(sign(pi * (pj + J2.parity(a))) * P.form(y, X.phi.act(a, P.algebra.basis(i)))
                 for a in range(J2.n))


def central_ext_dual(X: DoubleExtensionInput, check: bool = True):
    """The algebra on ``J1 ⊕ J2*`` and the extended action of J2 on it."""
    if check:
        X.require_valid()
    J1, J2 = X.J1.algebra, X.J2
    dims, (mx, mf) = block_layout([J1.dims, J2.dims])
    b = _Builder()
    for i in range(J1.n):
        for j in range(J1.n):
            b.put_vector(mx[i], mx[j], mx, J1.table[i][j])
            b.put_vector(mx[i], mx[j], mf, central_term(X, i, j))
    C = b.build(f"{J1.name}+{J2.name}*", dims)
    co = coadjoint(J2)
    N = dims.total
    mats = []
    for a in range(J2.n):
        entries = [ZERO] * (N * N)
        for src, tgt, M in ((mx, mx, X.phi.matrix(a)), (mf, mf, co.matrix(a))):
            for r in range(M.rows):
                for c in range(M.cols):
                    if M[r, c]:
                        entries[tgt[r] * N + src[c]] = M[r, c]
        mats.append(Matrix(N, N, tuple(entries)))
    ext = Representation.from_matrices(J2, dims, mats)
    if check:
        rep = check_axioms(C, MOCK_LIE)
        rep.extend(check_representation(ext), "extended.")
        for a in range(J2.n):
            rep.extend(check_derivation(C, ext.action[a], anti=True), f"extended[{a}].")
        if not rep.passed:
            raise AssertionError(f"central extension by the dual failed:\n{rep.render()}")
    return C, ext


def action_semidirect(J1: SuperAlgebra, J2: SuperAlgebra, phi: Representation,
                      check: bool = True, name: str | None = None) -> SuperAlgebra:
    """``J1 ⊕ J2`` with ``x•y + φ(a)y + (-1)^{|x||y|} φ(b)x + a•b``."""
    if phi.algebra.dims != J2.dims or phi.module_dims != J1.dims:
        raise ValueError("action does not match J1 and J2")
    if check:
        rep = check_representation(phi)
        for a in range(J2.n):
            rep.extend(check_derivation(J1, phi.action[a], anti=True), f"phi[{a}].")
        if not rep.passed:
            raise PreconditionError("not an action by anti-superderivations:\n"
                                    + "\n".join(v.render() for v in rep.failures()))
    dims, (mx, ma) = block_layout([J1.dims, J2.dims])
    b = _Builder()
    for i in range(J1.n):
        for j in range(J1.n):
            b.put_vector(mx[i], mx[j], mx, J1.table[i][j])
    for a in range(J2.n):
        for c in range(J2.n):
            b.put_vector(ma[a], ma[c], ma, J2.table[a][c])
        M = phi.matrix(a)
        for y in range(J1.n):
            s = sign(J1.parity(y) * J2.parity(a))
            b.put_vector(ma[a], mx[y], mx, M.col(y))
            b.put_vector(mx[y], ma[a], mx, M.col(y), s)
    return b.build(name or f"{J1.name}x|{J2.name}", dims)


def double_extension_layout(X: DoubleExtensionInput):
    return block_layout([X.J2.dims, X.J1.dims, X.J2.dims])


def double_extension(X: DoubleExtensionInput, check: bool = True,
                     name: str | None = None) -> PseudoEuclidean:
    """Pseudo-euclidean algebra on ``J2 ⊕ J1 ⊕ J2*``.

    The form is ``B(x,y) + σ(a,b) + f(b) + (-1)^{|x||y|} g(a)``.
    """
    if check:
        X.require_valid()
    J1, J2 = X.J1.algebra, X.J2
    dims, (ma, mx, mf) = double_extension_layout(X)
    co = coadjoint(J2, check=check)
    b = _Builder()
    for a in range(J2.n):
        for c in range(J2.n):
            b.put_vector(ma[a], ma[c], ma, J2.table[a][c])
    for i in range(J1.n):
        for j in range(J1.n):
            b.put_vector(mx[i], mx[j], mx, J1.table[i][j])
            b.put_vector(mx[i], mx[j], mf, central_term(X, i, j))
    for a in range(J2.n):
        pa = J2.parity(a)
        M = X.phi.matrix(a)
        for y in range(J1.n):
            b.put_vector(ma[a], mx[y], mx, M.col(y))
            b.put_vector(mx[y], ma[a], mx, M.col(y), sign(J1.parity(y) * pa))
        L = co.matrix(a)
        for g in range(J2.n):
            b.put_vector(ma[a], mf[g], mf, L.col(g))
            b.put_vector(mf[g], ma[a], mf, L.col(g), sign(J2.parity(g) * pa))
    alg = b.build(name or f"dext({J1.name},{J2.name})", dims)

    N = dims.total
    g = [[ZERO] * N for _ in range(N)]
    for i in range(J1.n):
        for j in range(J1.n):
            g[mx[i]][mx[j]] = X.J1.form.b(i, j)
    for a in range(J2.n):
        for c in range(J2.n):
            g[ma[a]][ma[c]] = X.sigma.b(a, c)
        g[mf[a]][ma[a]] = Fraction(1)
        g[ma[a]][mf[a]] = Fraction(sign(J2.parity(a)))
    P = PseudoEuclidean(alg, BilinearForm(dims, Matrix.from_rows(g, cols=N)))
    if check:
        rep = P.check()
        if not rep.passed:
            raise AssertionError(f"double extension failed its checks:\n{rep.render()}")
    return P


# -- admissible pairs and the generalized semidirect product ----------------------------

@dataclass(frozen=True)
class AdmissiblePair:
    D: GradedLinearMap
    x0: Vector

    @classmethod
    def trivial(cls, dims: GradedDimension) -> "AdmissiblePair":
        return cls(GradedLinearMap.zero(dims, degree=1), zero_vector(dims.total))


def check_admissible_pair(A: SuperAlgebra, D: GradedLinearMap, x0: Vector) -> CheckReport:
    report = CheckReport()
    if D.degree != 1:
        report.add("anti_derivation", False, note="D must be odd")
    else:
        report.extend(check_derivation(A, D, anti=True))
    sq = D.compose(D).matrix
    report.add("square_zero", sq.is_zero(), None, None if sq.is_zero() else sq)
    ann = annihilator(A)
    ok = A.dims.vector_parity(x0) in (0, None) and not any(x0[i] for i in A.dims.indices(1))
    report.add("x0_in_even_annihilator", ok and ann.contains(x0), x0)
    Dx0 = D(x0)
    report.add("D_x0_zero", not any(Dx0), None, Dx0 if any(Dx0) else None)
    return report


def gsemi_layout(dims: GradedDimension) -> tuple:
    """Index of u and the positions of the base basis inside ``Ku ⊕ J``."""
    e = dims.even
    idx = [i if i < e else i + 1 for i in range(dims.total)]
    return GradedDimension(e, dims.odd + 1), e, idx


def generalized_semidirect(A: SuperAlgebra, pair: AdmissiblePair, check: bool = True,
                           name: str | None = None) -> SuperAlgebra:
    """``u•u = x0``, ``u•x = D(x)``, ``x•u = (-1)^{|x|} u•x``, ``x•y`` unchanged."""
    if check:
        rep = check_admissible_pair(A, pair.D, pair.x0)
        if not rep.passed:
            raise PreconditionError("not an admissible pair:\n"
                                    + "\n".join(v.render() for v in rep.failures()))
    dims, u, idx = gsemi_layout(A.dims)
    b = _Builder()
    b.put_vector(u, u, idx, pair.x0)
    for i in range(A.n):
        img = pair.D.image(i)
        b.put_vector(u, idx[i], idx, img)
        b.put_vector(idx[i], u, idx, img, sign(A.parity(i)))
        for j in range(A.n):
            b.put_vector(idx[i], idx[j], idx, A.table[i][j])
    return b.build(name or f"{A.name}+u", dims)


# -- generalized double extension ------------------------------------------------------

@dataclass(frozen=True)
class GdextData:
    base: PseudoEuclidean
    pair: AdmissiblePair
    lam: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))

    @property
    def D(self) -> GradedLinearMap:
        return self.pair.D

    @property
    def x0(self) -> Vector:
        return self.pair.x0

    def validate(self) -> CheckReport:
        P = self.base
        report = check_admissible_pair(P.algebra, self.D, self.x0)
        bad = next((d for d in symmetry_defects(P, self.D) if d), None)
        report.add("D_B_supersymmetric", bad is None, None, None if bad is None else (bad,))
        q = P.form(self.x0, self.x0)
        report.add("x0_isotropic", q == 0, None, None if q == 0 else (q,))
        return report

    def require_valid(self):
        rep = self.validate()
        if not rep.passed:
            raise PreconditionError("invalid generalized double extension data:\n"
                                    + "\n".join(v.render() for v in rep.failures()))


def gdext_layout(dims: GradedDimension) -> tuple:
    """``(dims, u, u*, base positions)`` for ``Ku ⊕ J ⊕ Ku*``."""
    e = dims.even
    idx = [i if i < e else i + 1 for i in range(dims.total)]
    total = GradedDimension(e, dims.odd + 2)
    return total, e, total.total - 1, idx


def gdext_central(P: PseudoEuclidean, D: GradedLinearMap, i: int, j: int,
                  convention: str = "consistent") -> Fraction:
    """u*-coefficient of ``x_i • x_j``.

    ``literal`` evaluates ``B(y, D(x))`` as displayed; ``consistent`` uses
    ``B(D(x), y)``.  They differ by ``(-1)^{|y|}`` for homogeneous input, and
    only the latter keeps the product supercommutative and B̃ invariant when
    D is nonzero.
    """
    A = P.algebra
    x, y = A.basis(i), A.basis(j)
    if convention == "literal":
        return P.form(y, D(x))
    if convention == "consistent":
        return P.form(D(x), y)
    raise ValueError(f"unknown convention {convention!r}")


def gdext(G: GdextData, check: bool = True, convention: str = "consistent",
          name: str | None = None):
    """Generalized double extension ``Ku ⊕ J ⊕ Ku*`` and its clause-by-clause report.

    Products: ``u•u = x0 + λu*``, ``u•x = D(x) - B(x0, x)u*``,
    ``x•u = (-1)^{|x|} u•x``, ``x•y = x•y + c(x, y)u*`` (see
    :func:`gdext_central`), and u* annihilates everything.  The form extends B
    with ``B̃(u, u*) = 1``; supersymmetry forces ``B̃(u*, u) = -1``.
    """
    if check:
        G.require_valid()
    P = G.base
    A, B = P.algebra, P.form
    dims, u, us, idx = gdext_layout(A.dims)
    b = _Builder()
    b.put_vector(u, u, idx, G.x0)
    b.put(u, u, us, G.lam)
    for i in range(A.n):
        s = sign(A.parity(i))
        img = G.D.image(i)
        eta = -B(G.x0, A.basis(i))
        b.put_vector(u, idx[i], idx, img)
        b.put(u, idx[i], us, eta)
        b.put_vector(idx[i], u, idx, img, s)
        b.put(idx[i], u, us, s * eta)
        for j in range(A.n):
            b.put_vector(idx[i], idx[j], idx, A.table[i][j])
            b.put(idx[i], idx[j], us, gdext_central(P, G.D, i, j, convention))
    alg = b.build(name or f"gdext({A.name})", dims)

    N = dims.total
    g = [[ZERO] * N for _ in range(N)]
    for i in range(A.n):
        for j in range(A.n):
            g[idx[i]][idx[j]] = B.b(i, j)
    g[u][us] = Fraction(1)
    g[us][u] = Fraction(-1)
    out = PseudoEuclidean(alg, BilinearForm(dims, Matrix.from_rows(g, cols=N)))
    return out, gdext_report(G, out, u, us, idx)


def gdext_report(G: GdextData, P: PseudoEuclidean, u: int, us: int, idx) -> CheckReport:
    report = check_axioms(P.algebra, MOCK_LIE)
    report.extend(check_form(P.algebra, P.form, FORM_PROPS), "form.")
    trivial = not any(G.x0) and G.lam == 0
    report.add("supercommutativity_iff_trivial",
               report["supercommutativity"].passed == trivial,
               note="(x0, lambda) = (0, 0)" if trivial else "(x0, lambda) != (0, 0)")
    if not trivial:
        N = P.dims.total
        expected = [ZERO] * N
        for k, c in enumerate(G.x0):
            expected[idx[k]] = 2 * c
        expected[us] = 2 * G.lam
        got = vscale(2, P.algebra.table[u][u])
        report.add("odd_square_defect", tuple(expected) == got, (u, u), got,
                   note="u•u - (-1)^{|u||u|} u•u = 2(x0 + lambda u*)")
    return report


# -- decomposition ----------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    data: GdextData
    to_original: GradedLinearMap    # constructed basis -> original coordinates
    from_original: GradedLinearMap  # inverse
    u: Vector
    u_star: Vector
    alpha: Fraction


def _change_basis(A: SuperAlgebra, C: Matrix, Cinv: Matrix, dims: GradedDimension,
                  name: str) -> SuperAlgebra:
    N = dims.total
    cols = [C.col(j) for j in range(N)]
    return SuperAlgebra.from_function(name, dims,
                                      lambda i, j: Cinv.apply(A.mul(cols[i], cols[j])))


def decompose(P: PseudoEuclidean) -> Decomposition:
    """Write P as a generalized double extension of a smaller pseudo-euclidean algebra."""
    A, B = P.algebra, P.form
    dims = A.dims
    if dims.odd <= 1:
        raise PreconditionError("odd dimension <= 1")
    odd_ann = annihilator(A).intersect_parity(1)
    if not odd_ann.dim:
        raise PreconditionError("no odd annihilator element")
    ustar = odd_ann.basis[0]
    odd = list(dims.indices(1))
    row = [B(unit_vector(A.n, k), ustar) for k in odd]
    sol = solve([row], [Fraction(1)])  # B(u, u*) = 1
    u = [ZERO] * A.n
    for t, k in enumerate(odd):
        u[k] = sol[t]
    u = tuple(u)
    comp = orthogonal_complement(P, Subspace(dims, (u, ustar)))
    ev = [v for v in comp.basis if dims.vector_parity(v) == 0]
    od = [v for v in comp.basis if dims.vector_parity(v) == 1]
    base_dims = GradedDimension(len(ev), len(od))
    new_dims, ui, usi, idx = gdext_layout(base_dims)
    if new_dims != dims:
        raise AssertionError("complement has the wrong dimension")
    cols = [None] * dims.total
    base_vecs = ev + od
    for t, v in enumerate(base_vecs):
        cols[idx[t]] = v
    cols[ui] = u
    cols[usi] = ustar
    C = Matrix.from_columns(cols, dims.total)
    Cinv = inverse(C)
    Q = _change_basis(A, C, Cinv, dims, f"{A.name}'")
    gram = Matrix.from_rows([[B(a, b) for b in cols] for a in cols], cols=dims.total)

    n = base_dims.total
    base_alg = SuperAlgebra.from_function(
        f"{A.name}/u", base_dims, lambda i, j: tuple(Q.table[idx[i]][idx[j]][idx[k]]
                                                     for k in range(n)))
    base_form = BilinearForm(base_dims, Matrix.from_rows(
        [[gram[idx[i], idx[j]] for j in range(n)] for i in range(n)], cols=n))
    base = PseudoEuclidean(base_alg, base_form)
    uu = Q.table[ui][ui]
    alpha = uu[ui]
    if alpha:
        raise AssertionError(f"u•u has a nonzero u-component {alpha}")
    x0 = tuple(uu[idx[k]] for k in range(n))
    lam = uu[usi]
    Dcols = [tuple(Q.table[ui][idx[i]][idx[k]] for k in range(n)) for i in range(n)]
    D = GradedLinearMap(Matrix.from_columns(Dcols, n), 1, base_dims, base_dims)
    for i in range(n):
        eta = Q.table[ui][idx[i]][usi]
        if eta != -base_form(x0, base_alg.basis(i)):
            raise AssertionError(f"u*-component of u•x_{i} is not -B(x0, x_{i})")
        for j in range(n):
            if Q.table[idx[i]][idx[j]][usi] != gdext_central(base, D, i, j):
                raise AssertionError(f"u*-component of x_{i}•x_{j} is not B(D x_{i}, x_{j})")
    data = GdextData(base, AdmissiblePair(D, x0), lam)
    rebuilt, _ = gdext(data, check=False)
    if rebuilt.algebra.products != Q.products or rebuilt.form.gram != gram:
        raise AssertionError("rebuilding from the decomposition does not reproduce the input")
    to_orig = GradedLinearMap(C, 0, dims, dims)
    from_orig = GradedLinearMap(Cinv, 0, dims, dims)
    return Decomposition(data, to_orig, from_orig, u, ustar, alpha)


@dataclass
class Tower:
    steps: list = field(default_factory=list)
    residual: PseudoEuclidean | None = None


def iterate_decompose(P: PseudoEuclidean) -> Tower:
    tower = Tower()
    current = P
    while current.dims.odd > 1:
        step = decompose(current)
        if step.data.base.dims.odd != current.dims.odd - 2:
            raise AssertionError("odd dimension did not drop by two")
        tower.steps.append(step)
        current = step.data.base
    tower.residual = current
    return tower


# -- isometries between generalized double extensions ------------------------------------

@dataclass(frozen=True)
class IsometryWitness:
    s: GradedLinearMap
    z0: Vector
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")


def build_isometry(W: IsometryWitness, G1: GdextData, G2: GdextData) -> GradedLinearMap:
    if G1.base.dims != G2.base.dims:
        raise ValueError("the two extensions are over different bases")
    if not is_invertible(W.s.matrix):
        raise ValueError("s is singular")
    B = G2.base.form
    a = W.alpha
    gamma = 1 / a
    mu = B(vscale(-a / 2, W.z0), W.z0)
    dims, u, us, idx = gdext_layout(G1.base.dims)
    N = dims.total
    cols: list = [None] * N
    img = [ZERO] * N
    img[u] = gamma
    for k, c in enumerate(W.z0):
        img[idx[k]] = c
    img[us] = mu
    cols[u] = tuple(img)
    img = [ZERO] * N
    img[us] = a
    cols[us] = tuple(img)
    for i in range(G1.base.dims.total):
        sx = W.s.image(i)
        img = [ZERO] * N
        for k, c in enumerate(sx):
            img[idx[k]] = c
        img[us] = -a * B(W.z0, sx)
        cols[idx[i]] = tuple(img)
    return GradedLinearMap(Matrix.from_columns(cols, N), 0, dims, dims)


def verify_isometry(Psi: GradedLinearMap, P1: PseudoEuclidean, P2: PseudoEuclidean) -> CheckReport:
    if Psi.source != P1.dims or Psi.target != P2.dims:
        raise ValueError("map dimensions do not match")
    report = CheckReport()
    ok = Psi.respects_grading() and is_invertible(Psi.matrix)
    report.add("even_invertible", ok)
    hom = check_homomorphism(P1.algebra, P2.algebra, Psi)
    report.extend(CheckReport([hom["homomorphism"]]))
    n = P1.dims.total
    bad = None
    for i in range(n):
        for j in range(n):
            d = P2.form(Psi.image(i), Psi.image(j)) - P1.form.b(i, j)
            if d:
                bad = ((i, j), (d,))
                break
        if bad:
            break
    report.add("isometry", bad is None, *(bad or ()))
    return report


def check_isometry_conditions(W: IsometryWitness, G1: GdextData, G2: GdextData) -> CheckReport:
    """The witness conditions for the two extensions to be isometric.

    ``z0`` is required to be odd: ``Ψ(u1)`` contains it next to the odd
    ``u2``, so an even ``z0`` would make Ψ inhomogeneous.
    """
    if G1.base.dims != G2.base.dims:
        raise ValueError("the two extensions are over different bases")
    if not is_invertible(W.s.matrix):
        raise ValueError("s is singular")
    P = G1.base
    B = P.form
    a = W.alpha
    report = CheckReport()
    base_iso = verify_isometry(W.s, P, G2.base)
    bad = base_iso.failures()
    report.add("s_isometry", base_iso.passed, bad[0].witness if bad else None,
               bad[0].defect if bad else None)
    z_odd = not any(W.z0[i] for i in P.dims.indices(0))
    z_ok = z_odd and annihilator(P.algebra).contains(W.z0)
    report.add("z0_in_odd_annihilator", z_ok, None if z_ok else W.z0)
    sx1 = W.s(G1.x0)
    d = a ** 3 * G1.lam - G2.lam - B(W.z0, vscale(a ** 3, sx1))
    report.add("lambda_condition", d == 0, None, None if d == 0 else (d,))
    d = vsub(sx1, vscale(1 / a ** 2, G2.x0))
    report.add("x0_condition", not any(d), None, d if any(d) else None)
    sinv = GradedLinearMap(inverse(W.s.matrix), 0, P.dims, P.dims)
    M = W.s.compose(G1.D).compose(sinv) - G2.D.scale(1 / a)
    report.add("D_condition", M.matrix.is_zero(), None, None if M.matrix.is_zero() else M.matrix)
    return report
