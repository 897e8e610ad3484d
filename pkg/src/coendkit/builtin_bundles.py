"""Generators for the bundles shipped in ``coendkit/bundles``.

Run ``python3 -m coendkit.builtin_bundles [outdir]`` to regenerate them. The
searched R-matrices and special elements are frozen into the files at
generation time.
"""
from __future__ import annotations

import sys
from pathlib import Path

from . import bundle as bd
from . import fixtures as fx
from .classical import ClassicalHopf, drinfeld_double
from .coend import build_coend
from .internal_hopf import HModule, classical_hopf, coend_hopf, exterior_line, unit_hopf
from .linalg import PrimeField, Rationals, kron
from .search import SearchSpec, enumerate_elements

BUNDLE_DIR = Path(__file__).with_name("bundles")


def _trivial_module(H, X, name):
    return HModule(H, X, kron(X.I, H.eps), name=name)


def vec_trivial():
    F = Rationals()
    A = fx.vec_ambient(F)
    cd = build_coend(A)
    H = unit_hopf(cd)
    R = kron(H.u, H.u) @ kron(cd.eps, cd.eps)
    return bd.from_objects("vec_trivial", A, H, elements={"unit": H.u @ cd.eps}, r_matrices={"trivial": R},
                           description="A = k over Q, H = 1")


def svec_exterior():
    F = PrimeField(3)
    A = fx.svec_ambient(F)
    cd = build_coend(A)
    cd.derive_structure()
    H = exterior_line(cd)
    rs = enumerate_elements(SearchSpec("r_matrix", H))
    r_mats = {f"R{i}": h.mat for i, h in enumerate(rs)}
    R = rs[-1].mat
    ribbon = enumerate_elements(SearchSpec("ribbon", H, R))
    pivotal = enumerate_elements(SearchSpec("pivotal", H, R))
    els = {"unit": H.u @ cd.eps}
    els.update({f"ribbon{i}": h.mat for i, h in enumerate(ribbon)})
    els.update({f"pivotal{i}": h.mat for i, h in enumerate(pivotal)})
    odd = _trivial_module(H, fx.super_line(A, odd=True, name="k_odd"), "k_odd")
    return bd.from_objects("svec_exterior", A, H, modules=[odd], elements=els, r_matrices=r_mats,
                           description="sVec over F_3, H = exterior algebra on one odd generator, searched R-matrices")


def svec_coend():
    F = PrimeField(3)
    A = fx.svec_ambient(F)
    cd = build_coend(A)
    cd.derive_structure()
    H = coend_hopf(cd)
    R = kron(cd.u, kron(cd.eps, cd.I))
    odd = _trivial_module(H, fx.super_line(A, odd=True, name="k_odd"), "k_odd")
    return bd.from_objects("svec_coend", A, H, modules=[odd], elements={"unit": H.u @ cd.eps},
                           r_matrices={"canonical": R}, description="sVec over F_3, H = C with R = u (x) eps (x) id")


def _vec_classical(name, data, r_mats, elements=None, description=""):
    F = data.field
    A = fx.vec_ambient(F)
    cd = build_coend(A)
    H = classical_hopf(cd, data, name=name)
    CH = ClassicalHopf.from_data(data)
    els = dict(elements or {})
    return bd.from_objects(name, A, H, elements=els, r_matrices=r_mats, classical=CH, classical_elements=els,
                           classical_r_matrices=r_mats, description=description)


def vec_z2():
    d = fx.cyclic(2, Rationals())
    return _vec_classical("vec_z2", d, {"trivial": kron(d.u, d.u), "minus": fx.R_minus(d)},
                          {"1": d.element({"1": 1}), "g": d.element({"g": 1})},
                          "A = k over Q, H = kZ/2 with R = 1 (x) 1 and R_-")


def vec_z3():
    d = fx.cyclic(3, PrimeField(7))
    return _vec_classical("vec_z3", d, {"trivial": kron(d.u, d.u)}, {"1": d.element({"1": 1})},
                          "A = k over F_7, H = kZ/3 with R = 1 (x) 1 (balanced elements that are not ribbon)")


def vec_sweedler():
    d = fx.sweedler(Rationals())
    return _vec_classical("vec_sweedler", d, {"R0": fx.sweedler_R(d, 0), "R1": fx.sweedler_R(d, 1)},
                          {"1": d.element({"1": 1}), "g": d.element({"g": 1})},
                          "A = k over Q, H = Sweedler's four dimensional Hopf algebra")


def vec_double_z2():
    F = Rationals()
    base = ClassicalHopf.from_data(fx.cyclic(2, F))
    dd = drinfeld_double(base)
    D = dd["D"]
    return _vec_classical("vec_double_z2", D.to_data(), {"canonical": dd["R"]}, {"1": D.u},
                          "A = k over Q, H = D(kZ/2) with its canonical R")


BUILDERS = {
    "vec_trivial": vec_trivial,
    "svec_exterior": svec_exterior,
    "svec_coend": svec_coend,
    "vec_z2": vec_z2,
    "vec_z3": vec_z3,
    "vec_sweedler": vec_sweedler,
    "vec_double_z2": vec_double_z2,
}


def path(name: str) -> Path:
    return BUNDLE_DIR / f"{name}.json"


def write_all(outdir=BUNDLE_DIR):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, build in BUILDERS.items():
        bd.save(build(), outdir / f"{name}.json")
        print(f"wrote {outdir / name}.json")


if __name__ == "__main__":
    write_all(sys.argv[1] if len(sys.argv) > 1 else BUNDLE_DIR)
