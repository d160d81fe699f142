"""Small named algebras used throughout the test-suite and the CLI docs."""

from __future__ import annotations

from fractions import Fraction

from .kernel import GradedDimension, Matrix
from .superalgebra import SuperAlgebra


def E2() -> SuperAlgebra:
    """(2|0) with e0•e0 = e1."""
    return SuperAlgebra("E2", GradedDimension(2, 0), {(0, 0): [(1, 1)]})


def H3() -> SuperAlgebra:
    """(1|2): z even (0); a, b odd (1, 2); a•b = z, b•a = -z."""
    return SuperAlgebra("H3", GradedDimension(1, 2), {(1, 2): [(0, 1)], (2, 1): [(0, -1)]})


def G2(lam=1) -> SuperAlgebra:
    """(0|2): u, u* odd; u•u = λu*.  Fails supercommutativity for λ ≠ 0."""
    lam = Fraction(lam)
    prods = {(0, 0): [(1, lam)]} if lam else {}
    return SuperAlgebra(f"G2({lam})", GradedDimension(0, 2), prods)


def S2() -> SuperAlgebra:
    """Abelian (0|2)."""
    return SuperAlgebra.abelian(GradedDimension(0, 2), "S2")


def scalar_field() -> SuperAlgebra:
    """K as a (1|0) algebra with 1·1 = 1 (associative, supercommutative)."""
    return SuperAlgebra("K", GradedDimension(1, 0), {(0, 0): [(0, 1)]})


def dual_numbers_odd() -> SuperAlgebra:
    """K[ε] with ε odd, ε² = 0: associative supercommutative, dims (1|1)."""
    return SuperAlgebra("K[eps]", GradedDimension(1, 1),
                        {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)]})


def idempotent() -> SuperAlgebra:
    """(1|0) with e•e = e; not mock-Lie."""
    return SuperAlgebra("idem", GradedDimension(1, 0), {(0, 0): [(0, 1)]})


def hyperbolic_gram(n: int) -> Matrix:
    """[[0, 1], [1, 0]] on an even pair."""
    assert n == 2
    return Matrix.from_rows([[0, 1], [1, 0]])


def symplectic_gram() -> Matrix:
    """[[0, 1], [-1, 0]] on an odd pair."""
    return Matrix.from_rows([[0, 1], [-1, 0]])


# -- pseudo-euclidean fixtures (imported lazily to keep this module light) ----------

def e2_hyperbolic():
    from .forms import BilinearForm, PseudoEuclidean
    A = E2()
    return PseudoEuclidean(A, BilinearForm(A.dims, hyperbolic_gram(2)))


def s2_symplectic():
    from .forms import BilinearForm, PseudoEuclidean
    A = S2()
    return PseudoEuclidean(A, BilinearForm(A.dims, symplectic_gram()))


def d4():
    """Double extension of the hyperbolic E2 by a one-dimensional even algebra."""
    from .extensions import DoubleExtensionInput, double_extension
    from .forms import BilinearForm
    from .representation import Representation
    base = e2_hyperbolic()
    line = SuperAlgebra.abelian(GradedDimension(1, 0), "K1")
    phi = Representation.from_matrices(line, base.dims, [Matrix.from_rows([[0, 0], [1, 0]])])
    P = double_extension(DoubleExtensionInput(base, line, phi, BilinearForm.zero(line.dims)))
    return type(P)(P.algebra.renamed("D4"), P.form)


def odd_plane(lam=0):
    """gdext of the zero algebra: (0|2) with u•u = λu*."""
    from .extensions import AdmissiblePair, GdextData, gdext
    from .forms import BilinearForm, PseudoEuclidean
    zero = GradedDimension(0, 0)
    base = PseudoEuclidean(SuperAlgebra.abelian(zero, "0"), BilinearForm.zero(zero))
    P, _ = gdext(GdextData(base, AdmissiblePair.trivial(zero), Fraction(lam)), check=False)
    return P


def s4_symplectic():
    """gdext of the symplectic (0|2) with trivial data: abelian (0|4)."""
    from .extensions import AdmissiblePair, GdextData, gdext
    base = s2_symplectic()
    P, _ = gdext(GdextData(base, AdmissiblePair.trivial(base.dims)))
    return type(P)(P.algebra.renamed("S4"), P.form)


def abelian_22():
    """Abelian (2|2) with a hyperbolic even pair and a symplectic odd pair."""
    from .forms import BilinearForm, PseudoEuclidean
    dims = GradedDimension(2, 2)
    gram = Matrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    return PseudoEuclidean(SuperAlgebra.abelian(dims, "A22"), BilinearForm(dims, gram))


def abelian_22_maps() -> dict:
    """Maps on :func:`abelian_22` for the isometry examples.

    ``D1`` is an odd B-supersymmetric map with square zero, ``D2 = 2 D1``,
    ``s_bad`` scales one even vector and so is not an isometry.
    """
    from .kernel import GradedLinearMap
    dims = GradedDimension(2, 2)
    D1 = Matrix.from_rows([[0, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 0, 0]])
    bad = Matrix.from_rows([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    return {
        "D1": GradedLinearMap(D1, 1, dims, dims),
        "D2": GradedLinearMap(D1.scale(2), 1, dims, dims),
        "id": GradedLinearMap.identity(dims),
        "s_bad": GradedLinearMap(bad, 0, dims, dims),
    }


def documents() -> dict:
    """Named documents for the CLI and the golden files."""
    from .document import AlgebraDocument
    out = {}
    for key, A in (("e2", E2()), ("h3", H3()), ("g2lambda1", G2(1)), ("k", scalar_field()),
                   ("keps", dual_numbers_odd()), ("idem", idempotent())):
        out[key] = AlgebraDocument(A)
    for key, P in (("e2h", e2_hyperbolic()), ("s2", s2_symplectic()), ("d4", d4()),
                   ("s4", s4_symplectic())):
        out[key] = AlgebraDocument(P.algebra, P.form)
    from .representation import Representation
    line = SuperAlgebra.abelian(GradedDimension(1, 0), "K1")
    nil = Representation.from_matrices(line, GradedDimension(2, 0),
                                       [Matrix.from_rows([[0, 0], [1, 0]])])
    from .forms import tstar_extension
    T, B, _ = tstar_extension(H3())
    out["th3"] = AlgebraDocument(T, B)
    P = abelian_22()
    out["a22"] = AlgebraDocument(P.algebra, P.form, maps=abelian_22_maps())
    out["k1"] = AlgebraDocument(line, representations={"nil": nil})
    from .representation import Cocycle
    triv = GradedDimension(1, 0)
    out["e2c"] = AlgebraDocument(E2(), representations={"triv": Representation.zero(E2(), triv)},
                                 cocycles={"omega": Cocycle(triv, {(0, 0): (1,)}),
                                           "broken": Cocycle(triv, {(0, 1): (1,), (1, 0): (1,)})})
    return out
