"""Reading algebra/extension files and rendering results as text or JSON.

Algebra files (``.alg``) are YAML::

    name: heisenberg
    dim: 3
    basis: [e1, e2, e3]
    brackets:
      - {i: e1, j: e2, terms: [{k: e3, coeff: "1"}]}

Omitted pairs bracket to zero; only pairs with ``i`` before ``j`` in the basis
may be listed.  Extension files (``.ext``) use the same fields plus ``ideal``
(list of vectors) and an optional ``section`` (the images ``s(b_1), s(b_2), ...``
as vectors of C).  Rationals are strings ``"p/q"`` or integers.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import yaml

from .algebra import LieAlgebra, fmt_rational, to_fraction, vector
from .formal import FormalSeries, HomogeneousMap

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


class _Located(str):
    line: int | None = None


class _LineLoader(yaml.SafeLoader):
    pass


def _construct_str(loader, node):
    s = _Located(loader.construct_scalar(node))
    s.line = node.start_mark.line + 1
    return s


_LineLoader.add_constructor("tag:yaml.org,2002:str", _construct_str)


def _where(value) -> str:
    line = getattr(value, "line", None)
    return f" at line {line}" if line else ""


def _rational(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(f"expected a rational \"p/q\", got {value!r}{_where(value)}")
    try:
        return to_fraction(value)
    except ZeroDivisionError:
        raise InputError(f"zero denominator{_where(value)}: {str(value)!r}") from None
    except ValueError:
        raise InputError(f"malformed rational {str(value)!r}{_where(value)}") from None


def _rational_vector(values, dim: int, what: str) -> tuple:
    if not isinstance(values, list):
        raise InputError(f"{what} must be a list of rationals")
    if len(values) != dim:
        raise InputError(f"{what} has {len(values)} entries, expected {dim}{_where(values[0] if values else None)}")
    return tuple(_rational(v) for v in values)


def _parse_yaml(text: str, source: str) -> dict:
    try:
        doc = yaml.load(text, Loader=_LineLoader)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        pos = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise InputError(f"{source}: parse error{pos}: {getattr(exc, 'problem', exc)}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{source}: expected a mapping at top level")
    return doc


def _field(doc: dict, key: str, source: str):
    if key not in doc:
        raise InputError(f"{source}: missing field {key!r}")
    return doc[key]


def algebra_from_doc(doc: dict, source: str = "<input>", validate: bool = True) -> LieAlgebra:
    name = str(_field(doc, "name", source))
    dim = _field(doc, "dim", source)
    labels = _field(doc, "basis", source)
    if not isinstance(dim, int) or dim < 0:
        raise InputError(f"{source}: dim must be a natural number")
    if not isinstance(labels, list) or len(labels) != dim:
        raise InputError(f"{source}: basis must list {dim} labels")
    labels = [str(x) for x in labels]
    if len(set(labels)) != dim:
        raise InputError(f"{source}: basis labels must be distinct")
    index = {lab: k for k, lab in enumerate(labels)}

    def lookup(lab):
        if str(lab) not in index:
            raise InputError(f"{source}: unknown basis label {str(lab)!r}{_where(lab)}")
        return index[str(lab)]

    brackets: dict = {}
    for entry in doc.get("brackets") or []:
        if not isinstance(entry, dict):
            raise InputError(f"{source}: bracket entries must be mappings")
        i, j = lookup(_field(entry, "i", source)), lookup(_field(entry, "j", source))
        if i >= j:
            raise InputError(f"{source}: bracket [{labels[i]},{labels[j]}]{_where(entry['i'])} must list i before j")
        if (i, j) in brackets:
            raise InputError(f"{source}: bracket [{labels[i]},{labels[j]}] listed twice{_where(entry['i'])}")
        v = [Fraction(0)] * dim
        for term in entry.get("terms") or []:
            v[lookup(_field(term, "k", source))] += _rational(_field(term, "coeff", source))
        brackets[(i, j)] = v
    return LieAlgebra.from_brackets(name, labels, brackets, validate=validate)


def parse_algebra(text: str, source: str = "<input>", validate: bool = True) -> LieAlgebra:
    return algebra_from_doc(_parse_yaml(text, source), source, validate)


def load_algebra(path, validate: bool = True) -> LieAlgebra:
    path = Path(path)
    return parse_algebra(path.read_text(), str(path), validate)


def load_extension(path):
    """Returns ``(Extension, Section)``; the section is the file's or the default one."""
    from .extensions import default_section, make_extension, make_section

    path = Path(path)
    source = str(path)
    doc = _parse_yaml(path.read_text(), source)
    C = algebra_from_doc(doc, source)
    ideal = [_rational_vector(v, C.dim, "ideal vector") for v in _field(doc, "ideal", source)]
    ext = make_extension(C, ideal)
    if doc.get("section") is not None:
        images = [_rational_vector(v, C.dim, "section vector") for v in doc["section"]]
        return ext, make_section(ext, images)
    return ext, default_section(ext)


def parse_element(text: str, dim: int) -> tuple:
    """``"c1,c2,..."`` with rationals ``p/q``."""
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    if len(parts) != dim:
        raise InputError(f"element {text!r} has {len(parts)} coordinates, expected {dim}")
    return tuple(_rational(p) for p in parts)


# --------------------------------------------------------------------------
# series literals


def series_to_literal(f: FormalSeries) -> dict:
    return {
        "src_dim": f.src_dim,
        "tgt_dim": f.tgt_dim,
        "valid_through": f.valid_through,
        "components": [
            [m, [[list(alpha), [fmt_rational(x) for x in v]] for alpha, v in comp.coeffs.items()]]
            for m, comp in enumerate(f.components)
        ],
    }


def series_from_literal(lit: dict) -> FormalSeries:
    src, tgt, n = lit["src_dim"], lit["tgt_dim"], lit["valid_through"]
    comps = [HomogeneousMap.zero(src, tgt, m) for m in range(n + 1)]
    for m, terms in lit["components"]:
        if m > n:
            raise InputError(f"component {m} above valid_through {n}")
        comps[m] = HomogeneousMap(src, tgt, m, {tuple(a): [_rational(x) for x in v] for a, v in terms})
    return FormalSeries(src, tgt, comps)


def load_wreath_element(path, A: LieAlgebra, B: LieAlgebra):
    """Element file: ``series`` (a series literal in the B variables) and ``point`` (vector in B)."""
    from .wreath import WreathElement

    path = Path(path)
    doc = _parse_yaml(path.read_text(), str(path))
    series = series_from_literal(_field(doc, "series", str(path)))
    if series.src_dim != B.dim or series.tgt_dim != A.dim:
        raise InputError(f"{path}: series must map Q^{B.dim} to {A.name}")
    point = _rational_vector(_field(doc, "point", str(path)), B.dim, "point")
    return WreathElement(series, point)


# --------------------------------------------------------------------------
# text rendering


def format_monomial(alpha: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, alpha):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_polynomial(h: HomogeneousMap, var_names: Sequence[str], labels: Sequence[str]) -> str:
    """Canonical text: graded-lex monomials, reduced fractions, explicit signs."""
    terms = []
    for alpha, v in h.coeffs.items():
        mono = format_monomial(alpha, var_names)
        for k, c in enumerate(v):
            if not c:
                continue
            mag = abs(c)
            factors = [] if mag == 1 else [fmt_rational(mag)]
            if mono:
                factors.append(mono)
            factors.append(labels[k])
            terms.append(("-" if c < 0 else "+", "*".join(factors)))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_series(f: FormalSeries, symbol: str, var_names, labels) -> list[str]:
    return [f"{symbol}_{m} = {format_polynomial(c, var_names, labels)}" for m, c in enumerate(f.components)]


def format_vector(v) -> str:
    return "(" + ", ".join(fmt_rational(x) for x in v) + ")"


def variables(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


# --------------------------------------------------------------------------
# structured documents


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def document(kind: str, **fields) -> dict:
    return {"schema": f"wreathlie.{kind}", "schema_version": SCHEMA_VERSION, **fields}


def kk_embed_document(extension: str, A_labels, B_labels, c, N: int, element) -> dict:
    return document(
        "kk-embed",
        extension=extension,
        A_labels=list(A_labels),
        B_labels=list(B_labels),
        c=[fmt_rational(x) for x in c],
        N=N,
        series=series_to_literal(element.series),
        point=[fmt_rational(x) for x in element.point],
    )


def parse_kk_embed_document(text: str):
    """Inverse of :func:`kk_embed_document`; returns ``(fields, WreathElement)``."""
    from .wreath import WreathElement

    doc = json.loads(text)
    if doc.get("schema") != "wreathlie.kk-embed" or doc.get("schema_version") != SCHEMA_VERSION:
        raise InputError("not a kk-embed document of a supported schema version")
    element = WreathElement(series_from_literal(doc["series"]), vector(doc["point"]))
    fields = {
        "extension": doc["extension"],
        "A_labels": doc["A_labels"],
        "B_labels": doc["B_labels"],
        "c": vector(doc["c"]),
        "N": doc["N"],
    }
    return fields, element
