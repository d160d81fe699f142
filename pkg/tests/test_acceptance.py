"""Acceptance suite: one test per criterion, named ``test_criterion_NN_*``.

The terminal summary (see conftest) prints one PASS/FAIL line per criterion.
Sampling is seeded, so every run checks the same cases.
"""

import random
from fractions import Fraction

import pytest

from gen import (
    action_pool,
    perturb,
    random_cocycle_like,
    random_dims,
    random_double_ext_input,
    random_mock_lie,
    random_nilpotent,
    random_odd_D,
    random_pseudo,
    random_table,
)
from mocklie.document import parse, render
from mocklie.extensions import (
    AdmissiblePair,
    GdextData,
    IsometryWitness,
    build_isometry,
    check_isometry_conditions,
    decompose,
    double_extension,
    gdext,
    gdext_layout,
    iterate_decompose,
    verify_isometry,
)
from mocklie.fixtures import (
    abelian_22,
    abelian_22_maps,
    d4,
    documents,
    e2_hyperbolic,
    odd_plane,
    s2_symplectic,
    s4_symplectic,
)
from mocklie.forms import (
    FORM_PROPS,
    BilinearForm,
    PseudoEuclidean,
    check_ann_equals_square_perp,
    check_form,
    check_supercyclic,
    flat_intertwiner,
    orthogonal_complement,
    tstar_extension,
)
from mocklie.kernel import GradedDimension, GradedLinearMap, is_invertible, zero_vector
from mocklie.representation import (
    Representation,
    adjoint,
    central_extension,
    check_cocycle,
    check_representation,
    coadjoint,
    intertwiner_space,
    is_intertwiner,
    semidirect_product,
)
from mocklie.superalgebra import (
    ALL_AXIOMS,
    MOCK_LIE,
    Subspace,
    annihilator,
    check_axioms,
    check_cube_zero,
    check_squared_identity,
    is_ideal,
    map_span_contains,
    square_ideal,
)
from oracle import axiom_verdicts
from test_cli import CASES, GOLDEN, invoke, transcript

FULL_SUITE = ALL_AXIOMS[:4]  # mock-Lie axioms plus the super-Jordan identity


def pseudo_fixtures() -> list:
    out = [e2_hyperbolic(), d4(), s2_symplectic(), s4_symplectic(), abelian_22(), odd_plane(0)]
    out.append(documents()["th3"])
    out = [P if isinstance(P, PseudoEuclidean) else PseudoEuclidean(P.algebra, P.form) for P in out]
    assert all(P.check().passed for P in out)
    G = GdextData(abelian_22(), AdmissiblePair(abelian_22_maps()["D1"], zero_vector(4)))
    out.append(gdext(G)[0])
    return out


# -- 1 ---------------------------------------------------------------------------------------

def test_criterion_01_axiom_oracle_equivalence():
    rng = random.Random(101)
    disagreements, tables, failing = [], 0, 0
    while tables < 60:
        dims = random_dims(rng, 3, 3)
        kind = tables % 3
        if kind == 0:
            A = random_table(rng, dims, 0.3, rng.random() < 0.7, rng.random() < 0.5)
        elif kind == 1:
            A = random_nilpotent(rng, dims)
        else:
            A = perturb(rng, random_nilpotent(rng, dims))
        got = {v.label: v.passed for v in check_axioms(A, ALL_AXIOMS).entries}
        ref = axiom_verdicts(A)
        if got != ref:
            disagreements.append((A, got, ref))
        failing += not all(got.values())
        tables += 1
    assert not disagreements
    assert 0 < failing < tables  # both verdicts are exercised


# -- 2 ---------------------------------------------------------------------------------------

def test_criterion_02_jordan_and_cube_identities():
    algebras = [d.algebra for d in documents().values()]
    rng = random.Random(202)
    for t in range(40):
        dims = random_dims(rng, 3, 3)
        algebras.append(random_table(rng, dims, 0.2, True, True) if t % 2 else random_nilpotent(rng, dims))
    qualifying = 0
    for A in algebras:
        if not check_axioms(A, ("supercommutativity", "super_jacobi")).passed:
            continue
        qualifying += 1
        assert check_axioms(A, ("jordan_super",)).passed, A.name
        assert check_cube_zero(A, 6, qualifying).passed, A.name
        assert check_squared_identity(A, 6, qualifying).passed, A.name
    assert qualifying >= 30


# -- 3 ---------------------------------------------------------------------------------------

def test_criterion_03_semidirect_iff_representation():
    rng = random.Random(303)
    seen = {True: 0, False: 0}
    pairs = 0
    while pairs < 40:
        A = random_mock_lie(rng, 2)
        for R in action_pool(rng, A):
            rep_ok = check_representation(R).passed
            alg_ok = check_axioms(semidirect_product(A, R), MOCK_LIE).passed
            assert rep_ok == alg_ok
            seen[rep_ok] += 1
            pairs += 1
    assert seen[True] >= 10 and seen[False] >= 5


# -- 4 ---------------------------------------------------------------------------------------

def test_criterion_04_central_extension_iff_cocycle():
    rng = random.Random(404)
    seen = {True: 0, False: 0}
    for t in range(30):
        A = random_mock_lie(rng, 2)
        R = Representation.zero(A, random_dims(rng, 1, 1)) if t % 2 else adjoint(A)
        W = random_cocycle_like(rng, A, R.module_dims, 0.5)
        co_ok = check_cocycle(A, R, W).passed
        assert co_ok == check_axioms(central_extension(A, R, W), MOCK_LIE).passed
        seen[co_ok] += 1
    assert seen[True] and seen[False]


def test_criterion_04_tstar_invariance_iff_supercyclic():
    rng = random.Random(405)
    seen = {True: 0, False: 0}
    for _ in range(30):
        A = random_nilpotent(rng, random_dims(rng, 2, 2))
        W = random_cocycle_like(rng, A, A.dims, 0.3)
        _, _, rep = tstar_extension(A, W)
        cyc = check_supercyclic(A, W).passed
        assert rep["invariant"].passed == cyc
        seen[cyc] += 1
    assert seen[True] and seen[False]


# -- 5 ---------------------------------------------------------------------------------------

def _products_vanish(A, S: Subspace, T: Subspace) -> bool:
    return all(not any(A.mul(a, b)) for a in S.basis for b in T.basis)


def _test_ideals(P: PseudoEuclidean) -> list:
    A = P.algebra
    n = A.n
    whole = Subspace.span(A.dims, [A.basis(i) for i in range(n)])
    zero = Subspace.span(A.dims, [])
    ann = annihilator(A)
    # any subspace of Ann is an ideal
    return [square_ideal(A), ann, ann.intersect_parity(0), ann.intersect_parity(1), whole, zero]


@pytest.mark.parametrize("P", pseudo_fixtures(), ids=lambda P: P.algebra.name)
def test_criterion_05_structure_theorems(P):
    A = P.algebra
    assert P.check().passed
    assert check_ann_equals_square_perp(P).passed
    assert annihilator(A).same_as(orthogonal_complement(P, square_ideal(A)))
    for ideal in _test_ideals(P):
        assert is_ideal(A, ideal)
        perp = orthogonal_complement(P, ideal)
        assert is_ideal(A, perp)
        assert _products_vanish(A, ideal, perp)
    assert A.dims.odd % 2 == 0
    if A.dims.odd:
        assert annihilator(A).intersect_parity(1).dim > 0
    Phi = flat_intertwiner(P)
    assert is_invertible(Phi.matrix)
    assert is_intertwiner(adjoint(A), coadjoint(A), Phi)
    basis, _ = intertwiner_space(adjoint(A), coadjoint(A))
    assert map_span_contains(basis, [Phi])


# -- 6 ---------------------------------------------------------------------------------------

def test_criterion_06_double_extension():
    built = [d4()]
    rng = random.Random(606)
    while len(built) < 13:
        X = random_double_ext_input(rng)
        assert X.validate().passed
        built.append(double_extension(X))
    for P in built:
        assert check_axioms(P.algebra, FULL_SUITE).passed, P.algebra.name
        assert check_form(P.algebra, P.form, FORM_PROPS).passed, P.algebra.name


# -- 7 ---------------------------------------------------------------------------------------

def _gdext_samples() -> list:
    """Valid GdextData: half with (x0, λ) = (0, 0), half without."""
    rng = random.Random(707)
    trivial, odd_square = [], []
    m = abelian_22_maps()
    trivial.append(GdextData(abelian_22(), AdmissiblePair(m["D1"], zero_vector(4))))
    odd_square.append(GdextData(abelian_22(), AdmissiblePair(m["D1"], (0, 1, 0, 0))))
    z = GradedDimension(0, 0)
    odd_square.append(GdextData(_zero_base(), AdmissiblePair.trivial(z), 1))
    while len(trivial) < 10 or len(odd_square) < 10:
        P = random_pseudo(rng)
        D = random_odd_D(rng, P)
        if len(trivial) < 10:
            trivial.append(GdextData(P, AdmissiblePair(D, zero_vector(P.dims.total))))
        ann = [v for v in annihilator(P.algebra).intersect_parity(0).basis if P.form(v, v) == 0]
        x0 = ann[rng.randrange(len(ann))] if ann and rng.random() < 0.7 else zero_vector(P.dims.total)
        lam = rng.choice([0, 1, -2]) if any(x0) else rng.choice([1, -1, 3])
        G = GdextData(P, AdmissiblePair(GradedLinearMap.zero(P.dims, None, 1), x0), lam)
        if len(odd_square) < 10 and G.validate().passed:
            odd_square.append(G)
    for G in trivial + odd_square:
        assert G.validate().passed
    return trivial, odd_square


def _zero_base() -> PseudoEuclidean:
    from mocklie.superalgebra import SuperAlgebra
    z = GradedDimension(0, 0)
    return PseudoEuclidean(SuperAlgebra.abelian(z), BilinearForm.zero(z))


def test_criterion_07_gdext_clauses():
    trivial, odd_square = _gdext_samples()
    for G in trivial:
        _, rep = gdext(G)
        assert rep["super_jacobi"].passed
        for prop in FORM_PROPS:
            assert rep[f"form.{prop}"].passed
        assert rep["supercommutativity"].passed
    for G in odd_square:
        P, rep = gdext(G)
        assert rep["super_jacobi"].passed
        for prop in ("even", "supersymmetric", "nondegenerate"):
            assert rep[f"form.{prop}"].passed
        dims, u, us, idx = gdext_layout(G.base.dims)
        expected = [Fraction(0)] * dims.total
        for i, c in enumerate(G.x0):
            expected[idx[i]] = 2 * c
        expected[us] = 2 * G.lam
        sc = rep["supercommutativity"]
        assert not sc.passed and sc.witness == (u, u) and list(sc.defect) == expected
        assert rep["odd_square_defect"].passed
        assert rep["supercommutativity_iff_trivial"].passed


@pytest.mark.xfail(strict=True, reason="B̃(u*, u) = -1 is forced by supersymmetry, so "
                   "u•u = x0 + λu* cannot be invariant unless (x0, λ) = (0, 0)")
def test_criterion_07_form_invariance_with_odd_square():
    _, odd_square = _gdext_samples()
    failures = [G for G in odd_square if not gdext(G)[1]["form.invariant"].passed]
    assert not failures, f"{len(failures)} of {len(odd_square)} not invariant"


# -- 8 ---------------------------------------------------------------------------------------

def _roundtrip(P: PseudoEuclidean):
    dec = decompose(P)
    Q, _ = gdext(dec.data, check=False)
    C, Cinv = dec.to_original.matrix, dec.from_original.matrix
    n = P.dims.total
    cols = [C.col(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            assert Q.algebra.product(i, j) == Cinv.apply(P.algebra.mul(cols[i], cols[j]))
            assert Q.form.gram[i, j] == P.form(cols[i], cols[j])
    tower = iterate_decompose(P)
    assert tower.residual.dims.odd == 0
    return dec


def _gdext_built() -> list:
    out = []
    m = abelian_22_maps()
    out.append(gdext(GdextData(abelian_22(), AdmissiblePair(m["D1"], zero_vector(4))))[0])
    out.append(gdext(GdextData(s2_symplectic(), AdmissiblePair.trivial(GradedDimension(0, 2))))[0])
    rng = random.Random(808)
    while len(out) < 8:
        P = random_pseudo(rng)
        out.append(gdext(GdextData(P, AdmissiblePair(random_odd_D(rng, P), zero_vector(P.dims.total))))[0])
    return out


def test_criterion_08_decomposition_round_trip():
    for P in [s2_symplectic(), s4_symplectic()] + _gdext_built():
        _roundtrip(P)


# -- 9 ---------------------------------------------------------------------------------------

def _isometry_triples() -> list:
    rng = random.Random(909)
    out = []
    while len(out) < 12:
        P = random_pseudo(rng)
        D1 = random_odd_D(rng, P)
        if D1.matrix.is_zero():
            continue
        alpha = rng.choice([1, 2, -1, Fraction(1, 3), Fraction(-3, 2)])
        z = zero_vector(P.dims.total)
        odd_ann = annihilator(P.algebra).intersect_parity(1).basis
        z0 = odd_ann[rng.randrange(len(odd_ann))] if odd_ann and rng.random() < 0.7 else z
        G1 = GdextData(P, AdmissiblePair(D1, z))
        G2 = GdextData(P, AdmissiblePair(D1.scale(alpha), z))
        out.append((IsometryWitness(GradedLinearMap.identity(P.dims), z0, alpha), G1, G2))
    return out


def test_criterion_09_isometry_theorem():
    for W, G1, G2 in _isometry_triples():
        assert check_isometry_conditions(W, G1, G2).passed
        T1, r1 = gdext(G1)
        T2, r2 = gdext(G2)
        assert r1.passed and r2.passed
        assert verify_isometry(build_isometry(W, G1, G2), T1, T2).passed


def test_criterion_09_perturbations_fail():
    for W, G1, G2 in _isometry_triples():
        T1, _ = gdext(G1)
        P = G1.base
        # λ shift
        G2l = GdextData(P, G2.pair, G2.lam + 1)
        assert not check_isometry_conditions(W, G1, G2l)["lambda_condition"].passed
        assert not verify_isometry(build_isometry(W, G1, G2l), T1, gdext(G2l)[0]).passed
        # scaled D2
        G2d = GdextData(P, AdmissiblePair(G2.D.scale(2), G2.x0), G2.lam)
        assert not check_isometry_conditions(W, G1, G2d)["D_condition"].passed
        assert not verify_isometry(build_isometry(W, G1, G2d), T1, gdext(G2d)[0]).passed
        # non-isometric s
        Ws = IsometryWitness(W.s.scale(2), W.z0, W.alpha)
        assert not check_isometry_conditions(Ws, G1, G2)["s_isometry"].passed
        assert not verify_isometry(build_isometry(Ws, G1, G2), T1, gdext(G2)[0]).passed


# -- 10 --------------------------------------------------------------------------------------

def test_criterion_10_cli_determinism(monkeypatch):
    monkeypatch.chdir(GOLDEN.parent / "data")
    for var in ("FORMAT", "SEED", "SAMPLES", "KOSZUL", "AXIOMS"):
        monkeypatch.delenv("MOCKLIE_" + var, raising=False)
    for name, cmd in sorted(CASES.items()):
        first = transcript(*invoke(cmd.split()))
        assert transcript(*invoke(cmd.split())) == first, name
        assert (GOLDEN / f"{name}.txt").read_text(encoding="utf-8") == first, name
    for key, doc in documents().items():
        text = render(doc)
        assert render(parse(text)) == text, key
