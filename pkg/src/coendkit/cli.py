"""Command line driver: ``coendkit <command> --bundle FILE [options]``.

Commands: validate, coend, check, search, theorems, factorizable.
Exit codes: 0 all requested checks pass, 1 some check failed, 2 input error.
``--bundle`` accepts a path or the name of a shipped bundle (see ``list``).
"""
from __future__ import annotations

import argparse
import json
import sys
import traceback
from pathlib import Path

from . import bundle as bd
from . import config
from . import elements as el
from .classical import check_R, drinfeld_map_rank
from .errors import CoendError, FieldMismatch, ParseError, SearchSpaceTooLarge
from .internal_hopf import factorizability_pairing
from .linalg import PrimeField
from .report import ValidationReport
from .search import KINDS, STRATEGIES, SearchSpec, classical_report, run as run_search
from .theorems import theorem_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _resolve_bundle(ref: str) -> Path:
    p = Path(ref)
    if p.exists():
        return p
    shipped = Path(__file__).with_name("bundles") / f"{ref}.json"
    if shipped.exists():
        return shipped
    raise InputError(f"no bundle at {ref!r} and no shipped bundle of that name")


def _load(args) -> bd.Bundle:
    try:
        return bd.load(_resolve_bundle(args.bundle))
    except ParseError:
        raise
    except CoendError as e:
        raise InputError(f"{type(e).__name__}: {e}") from e


def _mat_out(M):
    return M.to_strings()


# -- commands; each returns (ok, payload dict, text)

def cmd_validate(b: bd.Bundle):
    from .ambient import validate_ambient

    rep = ValidationReport(f"bundle {b.name}")
    rep.extend(validate_ambient(b.ambient), prefix="ambient.")
    cd = b.coend
    rep.extend(cd.validate_structure(), prefix="coend.")
    H = b.hopf
    if H is not None:
        rep.extend(H.validate(), prefix="hopf.")
        for name, M in b.modules.items():
            rep.extend(M.validate(), prefix=f"module[{name}].")
        for name, a in b.elements.items():
            rep.flag(f"element[{name}].linear", el.CoendElement(H, a).linearity_witness() is None)
        for name, R in b.r_matrices.items():
            rep.extend(el.validate_R(el.CoendRMatrix(H, R)), prefix=f"r_matrix[{name}].")
    if b.classical is not None:
        rep.extend(b.classical.validate(), prefix="classical.")
        for name, R in b.classical_r_matrices.items():
            rep.extend(check_R(b.classical, R), prefix=f"classical.r_matrix[{name}].")
    return rep.ok, rep.to_dict(), str(rep)


def cmd_coend(b: bd.Bundle):
    cd = b.coend
    rep = cd.validate_structure()
    rep.extend(cd.pairing_report())
    payload = {
        "dim": cd.dim,
        "structure": {k: _mat_out(getattr(cd, k)) for k in
                      ("m", "u", "Delta", "eps", "S", "S_inv", "omega", "omega_bar", "omega_under")},
        "nondegenerate": cd.nondegenerate(),
        "report": rep.to_dict(),
    }
    lines = [f"coend of {b.ambient.name}: dim {cd.dim}, pairing nondegenerate: {str(cd.nondegenerate()).lower()}"]
    for k, v in payload["structure"].items():
        lines.append(f"{k} = {v}")
    lines.append(str(rep))
    return rep.ok, payload, "\n".join(lines)


def _lookup(table: dict, name: str, what: str):
    if name not in table:
        raise InputError(f"unknown {what} {name!r}; available: {sorted(table)}")
    return table[name]


def cmd_check(b: bd.Bundle, name: str, kind: str | None, r_name: str | None):
    classical = kind is not None and kind.startswith("classical_")
    if not classical and b.hopf is not None and name in b.r_matrices:
        rep = el.validate_R(el.CoendRMatrix(b.hopf, b.r_matrices[name]))
        return rep.ok, rep.to_dict(), str(rep)
    if classical or b.hopf is None or (name not in b.elements and name in b.classical_elements):
        if b.classical is None:
            raise InputError("bundle has no classical block")
        if name in b.classical_r_matrices:
            rep = check_R(b.classical, b.classical_r_matrices[name])
            return rep.ok, rep.to_dict(), str(rep)
        x = _lookup(b.classical_elements, name, "classical element")
        R = _lookup(b.classical_r_matrices, r_name, "classical R-matrix") if r_name else None
        report = classical_report(b.classical, x, R)
        flag = kind.removeprefix("classical_") if kind else None
    else:
        a = el.CoendElement(b.hopf, _lookup(b.elements, name, "element"))
        R = el.CoendRMatrix(b.hopf, _lookup(b.r_matrices, r_name, "R-matrix")) if r_name else None
        report = el.element_report(a, R)
        flag = kind
    if flag is not None and flag not in report.flags:
        raise InputError(f"kind {kind!r} not available for this element (needs --r for balanced/ribbon?)")
    ok = report.flags[flag] if flag else report.consistent()
    text = "\n".join([f"element {name}:"] + [f"  {k}: {'yes' if v else 'no'}"
                                              + (f"  witness {report.witnesses[k]}" if k in report.witnesses else "")
                                              for k, v in report.flags.items()])
    return ok, {"element": name, **report.to_dict()}, text


def cmd_search(b: bd.Bundle, kind: str, r_name: str | None, strategy: str):
    classical = kind.startswith("classical_")
    if classical:
        if b.classical is None:
            raise InputError("bundle has no classical block")
        H = b.classical
        R = _lookup(b.classical_r_matrices, r_name, "classical R-matrix") if r_name else None
        cands = list(b.classical_elements.values())
        if kind == "classical_r_matrix":
            cands = list(b.classical_r_matrices.values())
    else:
        if b.hopf is None:
            raise InputError("bundle has no internal Hopf algebra")
        H = b.hopf
        R = _lookup(b.r_matrices, r_name, "R-matrix") if r_name else None
        cands = list(b.r_matrices.values()) if kind == "r_matrix" else list(b.elements.values())
    if strategy == "affine_then_enumerate" and not isinstance(H.field, PrimeField):
        strategy = "verify_candidates"      # enumeration needs a finite field
    try:
        spec = SearchSpec(kind, H, R, strategy, cands)
    except ValueError as e:
        raise InputError(str(e)) from e
    hits = run_search(spec)
    payload = {"kind": kind, "strategy": strategy, "count": len(hits), "hits": [h.to_dict() for h in hits]}
    text = "\n".join([f"{kind}: {len(hits)} found ({strategy})"] + [f"  {h.mat.to_strings()}" for h in hits])
    return True, payload, text


def cmd_theorems(b: bd.Bundle, r_name: str | None):
    H = b.hopf
    if H is None:
        raise InputError("bundle has no internal Hopf algebra")
    if r_name is None:
        if len(b.r_matrices) != 1:
            raise InputError(f"choose an R-matrix with --r from {sorted(b.r_matrices)}")
        r_name = next(iter(b.r_matrices))
    R = _lookup(b.r_matrices, r_name, "R-matrix")
    cands = None if isinstance(b.field, PrimeField) else list(b.elements.values())
    rep, sets = theorem_suite(H, R, b.all_modules(), cands)
    payload = {"r_matrix": r_name, "sets": {k: [a.mat.to_strings() for a in v] for k, v in sets.items()},
               "report": rep.to_dict()}
    head = f"R = {r_name}: " + ", ".join(f"{len(v)} {k}" for k, v in sets.items())
    return rep.ok, payload, head + "\n" + str(rep)


def cmd_factorizable(b: bd.Bundle, r_name: str | None):
    payload, lines, verdicts = {}, [], []
    if b.hopf is not None:
        names = [r_name] if r_name else list(b.r_matrices)
        for n in names:
            res = factorizability_pairing(b.hopf, _lookup(b.r_matrices, n, "R-matrix"))
            payload[n] = {"pairing_nondegenerate": res["nondegenerate"]}
            verdicts.append(res["nondegenerate"])
            lines.append(f"{n}: factorizable: {str(res['nondegenerate']).lower()} (pairing on the coend of V_H)")
    if b.classical is not None:
        names = [r_name] if r_name else list(b.classical_r_matrices)
        for n in names:
            if n not in b.classical_r_matrices:
                continue
            rk = drinfeld_map_rank(b.classical, b.classical_r_matrices[n])
            fac = rk == b.classical.dim
            payload.setdefault(n, {}).update({"drinfeld_map_rank": rk, "classical_factorizable": fac})
            verdicts.append(fac)
            lines.append(f"{n}: classical Drinfeld map rank {rk} of {b.classical.dim}: factorizable: {str(fac).lower()}")
    if not verdicts:
        raise InputError("no R-matrix to test")
    agree = len(set(verdicts)) == 1
    if not agree:
        lines.append("general and classical verdicts disagree")
    ok = agree and all(verdicts)
    return ok, {"r_matrices": payload, "factorizable": ok}, "\n".join(lines)


def _describe(e: BaseException) -> str:
    """Error name plus the coendkit module that raised it."""
    origin = None
    for frame, _ in traceback.walk_tb(e.__traceback__):
        mod = frame.f_globals.get("__name__", "")
        if mod.startswith("coendkit.") and mod != __name__:
            origin = mod
    return f"{type(e).__name__} (raised in {origin or __name__}): {e}"


def _build_parser():
    p = argparse.ArgumentParser(prog="coendkit", description=__doc__.split("\n")[0])
    p.add_argument("command", choices=["validate", "coend", "check", "search", "theorems", "factorizable", "list"])
    p.add_argument("--bundle", help="bundle path or shipped bundle name")
    p.add_argument("--element", help="element or R-matrix name (check)")
    p.add_argument("--kind", choices=KINDS, help="element kind (check, search)")
    p.add_argument("--r", dest="r_name", help="R-matrix name for balanced/ribbon kinds, theorems, factorizable")
    p.add_argument("--strategy", default="affine_then_enumerate", choices=STRATEGIES)
    p.add_argument("--json", dest="json_out", help="write the machine-readable report here")
    p.add_argument("--debug-revalidate", action="store_true", help="re-check constructions as they are built")
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.debug_revalidate:
        config.set_debug(True)
    if args.command == "list":
        for f in sorted(Path(__file__).with_name("bundles").glob("*.json")):
            print(f.stem)
        return EXIT_OK
    if not args.bundle:
        print("error: --bundle is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        b = _load(args)
        if args.command == "validate":
            ok, payload, text = cmd_validate(b)
        elif args.command == "coend":
            ok, payload, text = cmd_coend(b)
        elif args.command == "check":
            if not args.element:
                raise InputError("check needs --element")
            ok, payload, text = cmd_check(b, args.element, args.kind, args.r_name)
        elif args.command == "search":
            if not args.kind:
                raise InputError("search needs --kind")
            ok, payload, text = cmd_search(b, args.kind, args.r_name, args.strategy)
        elif args.command == "theorems":
            ok, payload, text = cmd_theorems(b, args.r_name or args.element)
        else:
            ok, payload, text = cmd_factorizable(b, args.r_name or args.element)
    except ParseError as e:
        print(f"ParseError: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (FieldMismatch, SearchSpaceTooLarge) as e:
        print(_describe(e), file=sys.stderr)
        return EXIT_INPUT
    except CoendError as e:
        print(_describe(e), file=sys.stderr)
        return EXIT_FAIL
    print(text)
    print("PASS" if ok else "FAIL")
    if args.json_out:
        out = {"command": args.command, "bundle": b.name, "pass": bool(ok), **payload}
        Path(args.json_out).write_text(json.dumps(out, indent=1, default=str) + "\n", encoding="utf-8")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
