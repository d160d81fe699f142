"""Check, build and decompose mock-Lie superalgebra documents.

The common flags can also be set through environment variables with the
``MOCKLIE_`` prefix (``MOCKLIE_FORMAT``, ``MOCKLIE_SEED``, ``MOCKLIE_SAMPLES``,
``MOCKLIE_KOSZUL``, ``MOCKLIE_AXIOMS``); explicit flags win.

Exit status: 0 when every requested check passes, 1 when one fails, 2 on
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import document as docio
from .document import AlgebraDocument, DocumentError
from .extensions import (
    CONVENTIONS,
    AdmissiblePair,
    DoubleExtensionInput,
    GdextData,
    IsometryWitness,
    build_isometry,
    check_isometry_conditions,
    double_extension,
    gdext,
    iterate_decompose,
    verify_isometry,
)
from .forms import (
    FORM_PROPS,
    BilinearForm,
    PseudoEuclidean,
    check_ann_equals_square_perp,
    check_form,
    check_odd_annihilator,
    flat_map,
    tstar_extension,
)
from .kernel import GradedLinearMap, parse_rational, render_rational, zero_vector
from .report import CheckReport, _jsonable as _leaf
from .representation import (
    adjoint,
    central_extension,
    check_cocycle,
    check_representation,
    coadjoint,
    intertwiner_space,
    is_intertwiner,
    semidirect_product,
)
from .superalgebra import (
    ALL_AXIOMS,
    MOCK_LIE,
    PreconditionError,
    annihilator,
    check_axioms,
    check_cube_zero,
    check_squared_identity,
    compute_F,
    derivation_space,
    direct_sum,
    square_ideal,
    tensor_assoc,
)

ENV_PREFIX = "MOCKLIE_"


class InputError(Exception):
    pass


def _env(name: str, default):
    return os.environ.get(ENV_PREFIX + name, default)


def _vector(text: str | None, n: int, what: str):
    if text is None:
        return zero_vector(n)
    parts = [p for p in text.split(",") if p.strip()]
    try:
        v = tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"{what}: {exc}") from None
    if len(v) != n:
        raise InputError(f"{what}: expected {n} coordinates, got {len(v)}")
    return v


def _rational(text: str | None, what: str, default=0) -> Fraction:
    if text is None:
        return Fraction(default)
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise InputError(f"{what}: {exc}") from None


def _lookup(table: dict, key: str | None, what: str, path: str):
    if key is None:
        if len(table) == 1:
            return next(iter(table.values()))
        raise InputError(f"{path}: name the {what} to use ({', '.join(table) or 'none defined'})")
    if key not in table:
        raise InputError(f"{path}: no {what} named {key!r}")
    return table[key]


def _pseudo(doc: AlgebraDocument, path: str) -> PseudoEuclidean:
    if doc.form is None:
        raise InputError(f"{path}: document has no form")
    return PseudoEuclidean(doc.algebra, doc.form)


# -- output ----------------------------------------------------------------------------

class Output:
    def __init__(self, fmt: str, out: TextIO, err: TextIO):
        self.fmt = fmt
        self.out = out
        self.err = err
        self.sections: list = []

    def report(self, title: str, report: CheckReport):
        self.sections.append((title, report))

    def info(self, title: str, data: dict):
        self.sections.append((title, data))

    def flush(self, extra: dict | None = None):
        if self.fmt == "structured":
            payload: dict = {"sections": []}
            for title, item in self.sections:
                body = item.to_dict() if isinstance(item, CheckReport) else _jsonable(item)
                payload["sections"].append({"title": title, "body": body})
            if extra:
                payload.update(extra)
            self.out.write(json.dumps(payload, indent=2) + "\n")
            return
        # a human-mode document owns stdout, so the report moves to stderr
        text = self.err if extra and "document" in extra else self.out
        for title, item in self.sections:
            text.write(f"== {title}\n")
            if isinstance(item, CheckReport):
                if item.entries:
                    text.write(item.render() + "\n")
            else:
                for k, v in item.items():
                    text.write(f"{k}: {_human(v)}\n")
        if extra and "document" in extra:
            self.out.write(json.dumps(extra["document"], indent=2) + "\n")

    @property
    def passed(self) -> bool:
        return all(item.passed for _, item in self.sections if isinstance(item, CheckReport))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return _leaf(obj)


def _human(v) -> str:
    if isinstance(v, Fraction):
        return render_rational(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_human(x) for x in v) + "]"
    return str(v)


# -- subcommands ------------------------------------------------------------------------

def _axioms(args) -> tuple:
    if args.axioms:
        names = tuple(a.strip() for a in args.axioms.split(",") if a.strip())
        if names == ("all",):
            return ALL_AXIOMS
        bad = [a for a in names if a not in ALL_AXIOMS]
        if bad:
            raise InputError(f"unknown axiom(s): {', '.join(bad)}")
        return names
    return MOCK_LIE


def cmd_check(args, out: Output):
    doc = docio.read(args.file)
    A = doc.algebra
    explicit = args.form or args.identities or args.structure
    if args.mock_lie or args.axioms or not explicit:
        out.report("axioms", check_axioms(A, _axioms(args)))
    if args.form:
        if doc.form is None:
            raise InputError(f"{args.file}: document has no form")
        out.report("form", check_form(A, doc.form, FORM_PROPS))
    if args.identities:
        rep = check_cube_zero(A, args.samples, args.seed)
        rep.extend(check_squared_identity(A, args.samples, args.seed))
        out.report("identities", rep)
    if args.structure:
        P = _pseudo(doc, args.file)
        rep = check_ann_equals_square_perp(P)
        rep.extend(check_odd_annihilator(P))
        out.report("structure", rep)


def _basis(S) -> list:
    return [list(v) for v in S.basis]


def cmd_props(args, out: Output):
    doc = docio.read(args.file)
    A = doc.algebra
    data = {
        "dims": str(A.dims),
        "annihilator": _basis(annihilator(A)),
        "square": _basis(square_ideal(A)),
        "F": _basis(compute_F(A)),
    }
    for kind in ("derivation", "anti_derivation"):
        for deg in (0, 1):
            data[f"{kind}_dim_degree_{deg}"] = len(derivation_space(A, kind, deg))
    out.info("properties", data)


def _emit(args, out: Output, doc: AlgebraDocument, report: CheckReport):
    out.report("construction", report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(docio.render(doc))
        out.flush()
    else:
        out.flush({"document": docio.to_json(doc)})


def cmd_construct(args, out: Output):
    kind = args.kind
    files = args.files
    need = {"direct-sum": 2, "tensor": 2, "double-ext": 2}.get(kind, 1)
    if len(files) != need:
        raise InputError(f"construct {kind} takes {need} document(s), got {len(files)}")
    docs = [docio.read(f) for f in files]
    A = docs[0].algebra
    form = None
    report = CheckReport()
    if kind == "direct-sum":
        C = direct_sum(A, docs[1].algebra)
    elif kind == "tensor":
        mode = args.koszul
        C = tensor_assoc(A, docs[1].algebra, koszul=(mode == "on"))
    elif kind == "semidirect":
        R = _lookup(docs[0].representations, args.rep, "representation", files[0])
        report.extend(check_representation(R), "rep.")
        C = semidirect_product(A, R)
    elif kind == "central-ext":
        R = _lookup(docs[0].representations, args.rep, "representation", files[0])
        W = _lookup(docs[0].cocycles, args.cocycle, "cocycle", files[0])
        report.extend(check_cocycle(A, R, W), "cocycle.")
        C = central_extension(A, R, W)
    elif kind == "tstar":
        W = None
        if args.cocycle or docs[0].cocycles:
            W = _lookup(docs[0].cocycles, args.cocycle, "cocycle", files[0])
        C, form, rep = tstar_extension(A, W)
        report.extend(rep, "tstar.")
    elif kind == "double-ext":
        J1 = _pseudo(docs[0], files[0])
        J2 = docs[1].algebra
        phi = _lookup(docs[1].representations, args.rep, "representation", files[1])
        sigma = docs[1].form or BilinearForm.zero(J2.dims)
        P = double_extension(DoubleExtensionInput(J1, J2, phi, sigma), check=True)
        C, form = P.algebra, P.form
    elif kind == "gdext":
        base = _pseudo(docs[0], files[0])
        n = base.dims.total
        D = (_lookup(docs[0].maps, args.map, "map", files[0]) if (args.map or docs[0].maps)
             else GradedLinearMap.zero(base.dims, None, 1))
        G = GdextData(base, AdmissiblePair(D, _vector(args.x0, n, "--x0")),
                      _rational(args.lam, "--lambda"))
        P, rep = gdext(G, convention=args.convention)
        C, form = P.algebra, P.form
        report.extend(rep, "gdext.")
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown construction {kind}")
    if args.name:
        C = C.renamed(args.name)
    if kind != "gdext":
        report.extend(check_axioms(C, _axioms(args)))
        if form is not None and kind != "tstar":
            report.extend(check_form(C, form, FORM_PROPS), "form.")
    _emit(args, out, AlgebraDocument(C, form), report)


def cmd_decompose(args, out: Output):
    doc = docio.read(args.file)
    P = _pseudo(doc, args.file)
    tower = iterate_decompose(P)
    steps = []
    for t, step in enumerate(tower.steps):
        G = step.data
        steps.append({
            "step": t,
            "base_dims": str(G.base.dims),
            "u": list(step.u),
            "u_star": list(step.u_star),
            "x0": list(G.x0),
            "lambda": G.lam,
            "D": [list(G.D.matrix.row(i)) for i in range(G.D.matrix.rows)],
            "trivial": not any(G.x0) and G.lam == 0,
        })
    residual = tower.residual
    out.info("tower", {"length": len(steps), "residual_dims": str(residual.dims)})
    for s in steps:
        out.info(f"step {s['step']}", s)
    rep = CheckReport()
    rep.add("residual_odd_dimension_zero", residual.dims.odd == 0,
            note=f"residual {residual.dims}")
    out.report("decomposition", rep)
    out.flush({"residual": docio.to_json(AlgebraDocument(residual.algebra, residual.form))}
              if args.format == "structured" else None)


def cmd_isometry(args, out: Output):
    if args.s is None:
        if len(args.files) != 2:
            raise InputError("isometry with --map takes two documents")
        d1, d2 = (docio.read(f) for f in args.files)
        P1, P2 = _pseudo(d1, args.files[0]), _pseudo(d2, args.files[1])
        if P1.dims != P2.dims:
            raise InputError("documents have different dimensions")
        M = _lookup(d1.maps, args.map, "map", args.files[0])
        if M.degree != 0:
            raise InputError("an isometry must be an even map")
        out.report("isometry", verify_isometry(M, P1, P2))
        return
    if len(args.files) != 1:
        raise InputError("isometry with --s takes one base document")
    doc = docio.read(args.files[0])
    P = _pseudo(doc, args.files[0])
    n = P.dims.total
    get = lambda key, what: _lookup(doc.maps, key, what, args.files[0])  # noqa: E731
    zero_d = GradedLinearMap.zero(P.dims, None, 1)
    D1 = get(args.d1, "map") if args.d1 else zero_d
    D2 = get(args.d2, "map") if args.d2 else zero_d
    G1 = GdextData(P, AdmissiblePair(D1, _vector(args.x1, n, "--x1")),
                   _rational(args.lambda1, "--lambda1"))
    G2 = GdextData(P, AdmissiblePair(D2, _vector(args.x2, n, "--x2")),
                   _rational(args.lambda2, "--lambda2"))
    alpha = _rational(args.alpha, "--alpha", 1)
    if alpha == 0:
        raise InputError("--alpha must be nonzero")
    W = IsometryWitness(get(args.s, "map"), _vector(args.z0, n, "--z0"), alpha)
    out.report("conditions", check_isometry_conditions(W, G1, G2))
    T1, _ = gdext(G1)
    T2, _ = gdext(G2)
    out.report("verification", verify_isometry(build_isometry(W, G1, G2), T1, T2))


def cmd_intertwiner(args, out: Output):
    doc = docio.read(args.file)
    A = doc.algebra
    basis, witness = intertwiner_space(adjoint(A), coadjoint(A), search=args.samples_search)
    rep = CheckReport()
    rep.add("witness_found", witness is not None,
            note=f"space dimension {len(basis)}"
                 + ("" if witness is not None else "; no witness is not a proof of inequivalence"))
    if doc.form is not None:
        P = PseudoEuclidean(A, doc.form)
        rep.add("flat_map_intertwines", is_intertwiner(adjoint(A), coadjoint(A), flat_map(P)))
    out.report("intertwiner", rep)
    if witness is not None:
        out.info("witness", {"matrix": [list(witness.matrix.row(i))
                                        for i in range(witness.matrix.rows)]})


# -- argument parsing ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "structured"),
                        default=_env("FORMAT", "human"))
    common.add_argument("--seed", type=int, default=int(_env("SEED", "0")))
    common.add_argument("--samples", type=int, default=int(_env("SAMPLES", "8")))
    common.add_argument("--koszul", choices=("on", "off", "paper-literal"),
                        default=_env("KOSZUL", "on"))
    common.add_argument("--axioms", default=_env("AXIOMS", None),
                        help="comma-separated subset of " + ",".join(ALL_AXIOMS) + ", or all")

    p = argparse.ArgumentParser(prog="mocklie", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run axiom and form suites")
    c.add_argument("file")
    c.add_argument("--mock-lie", action="store_true", help="evenness, supercommutativity, super-Jacobi")
    c.add_argument("--form", action="store_true", help="even, supersymmetric, invariant, nondegenerate")
    c.add_argument("--identities", action="store_true", help="cube-zero and squared identities")
    c.add_argument("--structure", action="store_true",
                   help="Ann = square-perp and the odd annihilator")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("props", parents=[common], help="annihilator, square, F, derivation spaces")
    c.add_argument("file")
    c.set_defaults(func=cmd_props)

    c = sub.add_parser("construct", parents=[common], help="build an algebra document")
    c.add_argument("kind", choices=("direct-sum", "tensor", "semidirect", "central-ext",
                                    "tstar", "double-ext", "gdext"))
    c.add_argument("files", nargs="+")
    c.add_argument("--rep")
    c.add_argument("--cocycle")
    c.add_argument("--map", help="odd map D for gdext")
    c.add_argument("--x0")
    c.add_argument("--lambda", dest="lam")
    c.add_argument("--convention", choices=CONVENTIONS, default="consistent")
    c.add_argument("--name")
    c.add_argument("--output", "-o")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("decompose", parents=[common], help="split off generalized double extensions")
    c.add_argument("file")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("isometry", parents=[common], help="verify an isometry map or witness")
    c.add_argument("files", nargs="+")
    c.add_argument("--map")
    c.add_argument("--s")
    c.add_argument("--d1")
    c.add_argument("--d2")
    c.add_argument("--x1")
    c.add_argument("--x2")
    c.add_argument("--lambda1")
    c.add_argument("--lambda2")
    c.add_argument("--z0")
    c.add_argument("--alpha")
    c.set_defaults(func=cmd_isometry)

    c = sub.add_parser("intertwiner", parents=[common], help="adjoint versus coadjoint")
    c.add_argument("file")
    c.add_argument("--search", dest="samples_search", type=int, default=32)
    c.set_defaults(func=cmd_intertwiner)
    return p


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    out = Output(args.format, stdout, stderr)
    try:
        args.func(args, out)
    except (DocumentError, InputError, PreconditionError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    if args.func not in (cmd_construct, cmd_decompose):
        out.flush()
    return 0 if out.passed else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
