"""Instance bundles: a JSON file describing the field, ambient Hopf algebra, an
internal Hopf algebra, H-modules, named elements and R-matrices, and optionally a
classical Hopf algebra over k.

Scalars are strings in the field's grammar ("3", "-1/2", "a^2+1"); matrices are
row-major nested arrays. Lines starting with ``//`` before or inside the JSON
are comments and are ignored by the parser (line numbers stay intact for errors).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property

from .ambient import AmbientHopf, VObject
from .classical import ClassicalHopf
from .coend import CoendData, build_coend
from .errors import CoendError, ParseError
from .internal_hopf import HModule, InternalHopf
from .linalg import Field, Matrix, field_from_spec, field_to_spec

HEADER = """\
// coendkit instance bundle
// Scalars are strings in the exact field grammar; matrices are row-major nested arrays.
// A morphism X -> Y is a (dim Y) x (dim X) matrix acting on column vectors.
// Tensor index convention: e_i (x) f_j has flat index i * dim(Y) + j.
// Ambient: right A-modules; "action" is r: X (x) A -> X; R = R_i (x) R^i with
//   sigma_{X,Y}(x (x) y) = y R_i (x) x R^i.
// Internal Hopf algebra: matrices relative to the carrier object; H-module actions are M (x) H -> M.
// Coend elements are C -> H; coend R-matrices are C (x) C -> H (x) H, C the coend of the ambient.
// Classical block: a Hopf algebra over k with elements and R-matrices as column vectors.
"""

_HOPF_KEYS = ("m", "u", "delta", "eps", "S")


@dataclass
class Bundle:
    name: str
    field: Field
    ambient: AmbientHopf
    hopf_spec: dict | None = None          # carrier action and structure matrices
    module_specs: dict = field(default_factory=dict)
    elements: dict = field(default_factory=dict)
    r_matrices: dict = field(default_factory=dict)
    classical: ClassicalHopf | None = None
    classical_elements: dict = field(default_factory=dict)
    classical_r_matrices: dict = field(default_factory=dict)
    description: str = ""

    @cached_property
    def coend(self) -> CoendData:
        cd = build_coend(self.ambient)
        cd.derive_structure()
        return cd

    @cached_property
    def hopf(self) -> InternalHopf | None:
        if self.hopf_spec is None:
            return None
        s = self.hopf_spec
        carrier = VObject(self.ambient, s["action"], name=s.get("name", "H"))
        return InternalHopf(self.coend, carrier, s["m"], s["u"], s["delta"], s["eps"], s["S"], s.get("S_inv"),
                            name=s.get("name", "H"))

    @cached_property
    def modules(self) -> dict:
        H = self.hopf
        out = {}
        if H is None:
            return out
        for name, spec in self.module_specs.items():
            carrier = VObject(self.ambient, spec["action"], name=name)
            out[name] = HModule(H, carrier, spec["r"], name=name)
        return out

    def all_modules(self) -> list:
        """Bundle modules plus the trivial, regular and free modules."""
        H = self.hopf
        base = [H.trivial, H.regular, H.F]
        return base + [M for M in self.modules.values()]


# -- serialization

def _mat_to_json(M: Matrix):
    return M.to_strings()


def _mat_from_json(F: Field, rows, where: str) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{where}: expected a non-empty nested array")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise ParseError(f"{where}: ragged or empty rows")
    try:
        vals = [[F.parse(str(x)) if isinstance(x, (str, int)) else _bad(x) for x in r] for r in rows]
    except ParseError as e:
        raise ParseError(f"{where}: {e}") from e
    except (ValueError, ZeroDivisionError, CoendError) as e:
        raise ParseError(f"{where}: {e}") from e
    return Matrix.from_rows(F, vals)


def _bad(x):
    raise ParseError(f"scalar {x!r} must be a string")


def to_dict(b: Bundle) -> dict:
    A = b.ambient
    out = {
        "name": b.name,
        "description": b.description,
        "field": field_to_spec(b.field),
        "ambient": {"name": A.name, **{k: _mat_to_json(getattr(A, k)) for k in _HOPF_KEYS},
                    "S_inv": _mat_to_json(A.S_inv), "R": _mat_to_json(A.R)},
    }
    if b.hopf_spec is not None:
        out["hopf"] = {k: (_mat_to_json(v) if isinstance(v, Matrix) else v) for k, v in b.hopf_spec.items()}
    out["modules"] = {n: {k: _mat_to_json(v) for k, v in s.items()} for n, s in b.module_specs.items()}
    out["elements"] = {n: _mat_to_json(v) for n, v in b.elements.items()}
    out["r_matrices"] = {n: _mat_to_json(v) for n, v in b.r_matrices.items()}
    if b.classical is not None:
        C = b.classical
        out["classical"] = {
            "names": C.names, **{k: _mat_to_json(getattr(C, k)) for k in _HOPF_KEYS}, "S_inv": _mat_to_json(C.S_inv),
            "elements": {n: _mat_to_json(v) for n, v in b.classical_elements.items()},
            "r_matrices": {n: _mat_to_json(v) for n, v in b.classical_r_matrices.items()},
        }
    return out


_ROW = re.compile(r'\[\s+("[^"\n]*"(?:,\s+"[^"\n]*")*)\s+\]')


def dumps(b: Bundle) -> str:
    text = json.dumps(to_dict(b), indent=1, ensure_ascii=False)
    text = _ROW.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",\n")) + "]", text)
    return HEADER + text + "\n"


def save(b: Bundle, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(b))


def _strip_comments(text: str) -> str:
    return "\n".join("" if line.lstrip().startswith("//") else line for line in text.split("\n"))


def loads(text: str, validate=True) -> Bundle:
    try:
        data = json.loads(_strip_comments(text))
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from e
    if not isinstance(data, dict):
        raise ParseError("bundle must be a JSON object", 1, 1)
    return from_dict(data, validate)


def load(path, validate=True) -> Bundle:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), validate)


def _need(d: dict, key: str, where: str):
    if key not in d:
        raise ParseError(f"{where}: missing key {key!r}")
    return d[key]


def from_dict(d: dict, validate=True) -> Bundle:
    try:
        F = field_from_spec(_need(d, "field", "bundle"))
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"field: {e}") from e
    M = lambda rows, where: _mat_from_json(F, rows, where)
    a = _need(d, "ambient", "bundle")
    mats = {k: M(_need(a, k, "ambient"), f"ambient.{k}") for k in _HOPF_KEYS}
    S_inv = M(a["S_inv"], "ambient.S_inv") if "S_inv" in a else None
    R = M(a["R"], "ambient.R") if "R" in a else None
    A = AmbientHopf(F, mats["m"], mats["u"], mats["delta"], mats["eps"], mats["S"], S_inv, R,
                    name=a.get("name", "A"), validate=validate)
    hopf_spec = None
    if d.get("hopf") is not None:
        h = d["hopf"]
        hopf_spec = {"name": h.get("name", "H"), "action": M(_need(h, "action", "hopf"), "hopf.action")}
        for k in _HOPF_KEYS:
            hopf_spec[k] = M(_need(h, k, "hopf"), f"hopf.{k}")
        if "S_inv" in h:
            hopf_spec["S_inv"] = M(h["S_inv"], "hopf.S_inv")
    modules = {}
    for name, s in (d.get("modules") or {}).items():
        modules[name] = {"action": M(_need(s, "action", f"modules.{name}"), f"modules.{name}.action"),
                         "r": M(_need(s, "r", f"modules.{name}"), f"modules.{name}.r")}
    elements = {n: M(v, f"elements.{n}") for n, v in (d.get("elements") or {}).items()}
    r_mats = {n: M(v, f"r_matrices.{n}") for n, v in (d.get("r_matrices") or {}).items()}
    classical, c_el, c_r = None, {}, {}
    if d.get("classical") is not None:
        c = d["classical"]
        cm = {k: M(_need(c, k, "classical"), f"classical.{k}") for k in _HOPF_KEYS}
        cS_inv = M(c["S_inv"], "classical.S_inv") if "S_inv" in c else None
        classical = ClassicalHopf(F, cm["m"], cm["u"], cm["delta"], cm["eps"], cm["S"], cS_inv,
                                  names=c.get("names"), validate=validate)
        c_el = {n: M(v, f"classical.elements.{n}") for n, v in (c.get("elements") or {}).items()}
        c_r = {n: M(v, f"classical.r_matrices.{n}") for n, v in (c.get("r_matrices") or {}).items()}
    return Bundle(d.get("name", "bundle"), F, A, hopf_spec, modules, elements, r_mats, classical, c_el, c_r,
                  d.get("description", ""))


# -- construction from in-memory objects

def from_objects(name, ambient: AmbientHopf, hopf: InternalHopf | None = None, modules=(), elements=None,
                 r_matrices=None, classical: ClassicalHopf | None = None, classical_elements=None,
                 classical_r_matrices=None, description="") -> Bundle:
    hopf_spec = None
    if hopf is not None:
        hopf_spec = {"name": hopf.name, "action": hopf.carrier.action, "m": hopf.m, "u": hopf.u,
                     "delta": hopf.Delta, "eps": hopf.eps, "S": hopf.S}
        if hopf.S_inv is not None:
            hopf_spec["S_inv"] = hopf.S_inv
    mods = {M.name: {"action": M.carrier.action, "r": M.r} for M in modules}
    unwrap = lambda d: {k: getattr(v, "mat", v) for k, v in (d or {}).items()}
    return Bundle(name, ambient.field, ambient, hopf_spec, mods, unwrap(elements), unwrap(r_matrices), classical,
                  unwrap(classical_elements), unwrap(classical_r_matrices), description)


__all__ = ["Bundle", "HEADER", "dumps", "loads", "load", "save", "to_dict", "from_dict", "from_objects"]
