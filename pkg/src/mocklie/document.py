"""JSON algebra documents: parsing with located errors, and canonical rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .forms import BilinearForm
from .kernel import GradedDimension, GradedLinearMap, Matrix, parse_rational, render_rational
from .representation import Cocycle, Representation
from .superalgebra import SuperAlgebra


class DocumentError(ValueError):
    """One or more problems in a document, each tagged with where it occurred."""

    def __init__(self, errors: list):
        self.errors = list(errors)
        super().__init__("\n".join(self.errors))


@dataclass
class AlgebraDocument:
    algebra: SuperAlgebra
    form: BilinearForm | None = None
    maps: dict = field(default_factory=dict)
    representations: dict = field(default_factory=dict)
    cocycles: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def dims(self) -> GradedDimension:
        return self.algebra.dims


class _Reader:
    def __init__(self):
        self.errors: list = []

    def fail(self, where: str, msg: str):
        self.errors.append(f"{where}: {msg}")

    def obj(self, value, where: str) -> dict:
        if not isinstance(value, dict):
            self.fail(where, "expected an object")
            return {}
        return value

    def arr(self, value, where: str) -> list:
        if value is None:
            return []
        if not isinstance(value, list):
            self.fail(where, "expected a list")
            return []
        return value

    def count(self, value, where: str, bound: int | None = None):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            self.fail(where, f"expected a non-negative integer, got {value!r}")
            return None
        if bound is not None and value >= bound:
            self.fail(where, f"index out of range: {value} (size {bound})")
            return None
        return value

    def rational(self, value, where: str):
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        try:
            return parse_rational(value)
        except (ValueError, TypeError):
            self.fail(where, f"malformed rational {value!r}")
            return None

    def dims(self, value, where: str):
        d = self.obj(value, where)
        e = self.count(d.get("even"), f"{where}.even")
        o = self.count(d.get("odd"), f"{where}.odd")
        if e is None or o is None:
            return None
        return GradedDimension(e, o)

    def matrix_entries(self, entries, where: str, rows: int, cols: int):
        out = [Fraction(0)] * (rows * cols)
        for t, ent in enumerate(self.arr(entries, where)):
            w = f"{where}[{t}]"
            ent = self.obj(ent, w)
            i = self.count(ent.get("i"), f"{w}.i", rows)
            j = self.count(ent.get("j"), f"{w}.j", cols)
            c = self.rational(ent.get("c"), f"{w}.c")
            if None not in (i, j, c):
                out[i * cols + j] += c
        return Matrix(rows, cols, tuple(out))


def _graded_map(r: _Reader, M: Matrix, degree, dims: GradedDimension, where: str):
    if degree not in (0, 1):
        r.fail(f"{where}.degree", f"degree must be 0 or 1, got {degree!r}")
        return None
    m = GradedLinearMap(M, degree, dims, dims)
    if not m.respects_grading():
        r.fail(where, f"parity inconsistency: entries violate degree {degree}")
        return None
    return m


def parse(text: str) -> AlgebraDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError([f"line {exc.lineno}, column {exc.colno}: {exc.msg}"]) from None
    r = _Reader()
    top = r.obj(raw, "document")
    name = top.get("name", "")
    if not isinstance(name, str):
        r.fail("name", "expected a string")
        name = ""
    dims = r.dims(top.get("dims"), "dims")
    if dims is None:
        raise DocumentError(r.errors)
    n = dims.total

    prods: dict = {}
    for t, entry in enumerate(r.arr(top.get("products"), "products")):
        w = f"products[{t}]"
        entry = r.obj(entry, w)
        i = r.count(entry.get("i"), f"{w}.i", n)
        j = r.count(entry.get("j"), f"{w}.j", n)
        for s, term in enumerate(r.arr(entry.get("terms"), f"{w}.terms")):
            tw = f"{w}.terms[{s}]"
            term = r.obj(term, tw)
            k = r.count(term.get("k"), f"{tw}.k", n)
            c = r.rational(term.get("c"), f"{tw}.c")
            if None not in (i, j, k, c):
                row = prods.setdefault((i, j), {})
                row[k] = row.get(k, Fraction(0)) + c

    form = None
    if "form" in top:
        fobj = r.obj(top["form"], "form")
        form = BilinearForm(dims, r.matrix_entries(fobj.get("entries"), "form.entries", n, n))

    maps: dict = {}
    for t, mobj in enumerate(r.arr(top.get("maps"), "maps")):
        w = f"maps[{t}]"
        mobj = r.obj(mobj, w)
        mname = mobj.get("name")
        if not isinstance(mname, str) or mname in maps:
            r.fail(f"{w}.name", "expected a unique string")
            continue
        M = r.matrix_entries(mobj.get("entries"), f"{w}.entries", n, n)
        m = _graded_map(r, M, mobj.get("degree"), dims, w)
        if m is not None:
            maps[mname] = m

    algebra = SuperAlgebra(name, dims, prods) if not r.errors else None

    reps: dict = {}
    for t, robj in enumerate(r.arr(top.get("representations"), "representations")):
        w = f"representations[{t}]"
        robj = r.obj(robj, w)
        rname = robj.get("name")
        mdims = r.dims(robj.get("module"), f"{w}.module")
        if not isinstance(rname, str) or rname in reps:
            r.fail(f"{w}.name", "expected a unique string")
            continue
        if mdims is None:
            continue
        m = mdims.total
        ops = [GradedLinearMap.zero(mdims, degree=dims.parity(a)) for a in range(n)]
        for s, op in enumerate(r.arr(robj.get("operators"), f"{w}.operators")):
            ow = f"{w}.operators[{s}]"
            op = r.obj(op, ow)
            a = r.count(op.get("index"), f"{ow}.index", n)
            M = r.matrix_entries(op.get("entries"), f"{ow}.entries", m, m)
            if a is None:
                continue
            gm = _graded_map(r, M, dims.parity(a), mdims, ow)
            if gm is not None:
                ops[a] = gm
        if algebra is not None and not r.errors:
            reps[rname] = Representation(algebra, mdims, tuple(ops))

    cocycles: dict = {}
    for t, cobj in enumerate(r.arr(top.get("cocycles"), "cocycles")):
        w = f"cocycles[{t}]"
        cobj = r.obj(cobj, w)
        cname = cobj.get("name")
        mdims = r.dims(cobj.get("module"), f"{w}.module")
        if not isinstance(cname, str) or cname in cocycles:
            r.fail(f"{w}.name", "expected a unique string")
            continue
        if mdims is None:
            continue
        vals: dict = {}
        for s, ent in enumerate(r.arr(cobj.get("values"), f"{w}.values")):
            ew = f"{w}.values[{s}]"
            ent = r.obj(ent, ew)
            i = r.count(ent.get("i"), f"{ew}.i", n)
            j = r.count(ent.get("j"), f"{ew}.j", n)
            k = r.count(ent.get("k"), f"{ew}.k", mdims.total)
            c = r.rational(ent.get("c"), f"{ew}.c")
            if None not in (i, j, k, c):
                v = vals.setdefault((i, j), [Fraction(0)] * mdims.total)
                v[k] += c
        cocycles[cname] = Cocycle(mdims, vals)

    known = {"name", "dims", "products", "form", "maps", "representations", "cocycles"}
    for key in sorted(set(top) - known):
        r.fail(key, "unknown field")
    if r.errors:
        raise DocumentError(r.errors)
    return AlgebraDocument(algebra, form, maps, reps, cocycles)


def _entries(M: Matrix) -> list:
    return [{"i": i, "j": j, "c": render_rational(M[i, j])}
            for i in range(M.rows) for j in range(M.cols) if M[i, j]]


def _dims(d: GradedDimension) -> dict:
    return {"even": d.even, "odd": d.odd}


def to_json(doc: AlgebraDocument) -> dict:
    A = doc.algebra
    out: dict = {
        "name": A.name,
        "dims": _dims(A.dims),
        "products": [{"i": i, "j": j,
                      "terms": [{"k": k, "c": render_rational(c)} for k, c in terms]}
                     for (i, j), terms in A.products.items()],
    }
    if doc.form is not None:
        out["form"] = {"entries": _entries(doc.form.gram)}
    if doc.maps:
        out["maps"] = [{"name": k, "degree": m.degree, "entries": _entries(m.matrix)}
                       for k, m in doc.maps.items()]
    if doc.representations:
        out["representations"] = [
            {"name": k, "module": _dims(R.module_dims),
             "operators": [{"index": a, "entries": _entries(op.matrix)}
                           for a, op in enumerate(R.action) if not op.matrix.is_zero()]}
            for k, R in doc.representations.items()]
    if doc.cocycles:
        out["cocycles"] = [
            {"name": k, "module": _dims(W.module_dims),
             "values": [{"i": i, "j": j, "k": t, "c": render_rational(c)}
                        for (i, j), v in W.values.items() for t, c in enumerate(v) if c]}
            for k, W in doc.cocycles.items()]
    return out


def render(doc: AlgebraDocument) -> str:
    return json.dumps(to_json(doc), indent=2) + "\n"


def read(path: str) -> AlgebraDocument:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse(text)
    except DocumentError as exc:
        raise DocumentError([f"{path}: {e}" for e in exc.errors]) from None
