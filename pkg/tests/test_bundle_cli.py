import json
import random

import pytest

from coendkit import builtin_bundles as bb
from coendkit import bundle as bd
from coendkit.cli import main
from coendkit.errors import ParseError
from coendkit.linalg import Matrix, field_to_spec

SHIPPED = sorted(bb.BUILDERS)


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_bundle_text_is_canonical(name):
    text = bb.path(name).read_text(encoding="utf-8")
    assert bd.dumps(bd.loads(text)) == text


def _random_like(M: Matrix, rng):
    F = M.field
    return Matrix.from_rows(F, [[F.coerce(rng.randint(-5, 5)) for _ in range(M.cols)] for _ in range(M.rows)])


@pytest.mark.parametrize("name", ["vec_z2", "svec_exterior", "vec_sweedler"])
def test_randomized_round_trip(name):
    """Random element and R-matrix tables survive serialize/parse bit for bit."""
    base = bd.load(bb.path(name))
    rng = random.Random(name)
    for trial in range(10):
        b = bd.load(bb.path(name))
        b.elements = {f"r{trial}_{k}": _random_like(v, rng) for k, v in base.elements.items()}
        b.r_matrices = {f"r{trial}_{k}": _random_like(v, rng) for k, v in base.r_matrices.items()}
        back = bd.loads(bd.dumps(b), validate=False)
        assert back.elements.keys() == b.elements.keys()
        for k in b.elements:
            assert back.elements[k] == b.elements[k]
        for k in b.r_matrices:
            assert back.r_matrices[k] == b.r_matrices[k]
        assert back.ambient.R == b.ambient.R
        assert field_to_spec(back.field) == field_to_spec(b.field)


def test_parse_error_position():
    text = bb.path("vec_trivial").read_text(encoding="utf-8")
    lines = text.split("\n")
    i = next(k for k, l in enumerate(lines) if '"name"' in l)
    lines[i] = lines[i].replace(",", "")               # drop a comma
    with pytest.raises(ParseError) as ei:
        bd.loads("\n".join(lines))
    assert ei.value.line == i + 2                      # error reported on the next line


def test_bad_scalar_and_missing_key():
    d = json.loads(bd._strip_comments(bb.path("vec_z2").read_text(encoding="utf-8")))
    d["elements"]["g"] = [["zz"], ["1"]]
    with pytest.raises(ParseError, match="elements.g"):
        bd.from_dict(d)
    d = json.loads(bd._strip_comments(bb.path("vec_z2").read_text(encoding="utf-8")))
    del d["ambient"]["m"]
    with pytest.raises(ParseError, match="missing key 'm'"):
        bd.from_dict(d)
    d = json.loads(bd._strip_comments(bb.path("vec_z2").read_text(encoding="utf-8")))
    d["elements"]["g"] = [[0.5], ["1"]]                # floats are inexact
    with pytest.raises(ParseError, match="must be a string"):
        bd.from_dict(d)


# -- CLI

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_validate_trivial(capsys):
    code, out, _ = run(capsys, "validate", "--bundle", "vec_trivial")
    assert code == 0 and out.strip().endswith("PASS")


def test_cli_factorizable(capsys):
    code, out, _ = run(capsys, "factorizable", "--bundle", "vec_double_z2")
    assert code == 0 and "factorizable: true" in out and "rank 4 of 4" in out
    code, out, _ = run(capsys, "factorizable", "--bundle", "vec_z2", "--r", "trivial")
    assert code == 1 and "factorizable: false" in out


def test_cli_theorems_exterior(capsys, tmp_path):
    out_json = tmp_path / "t.json"
    code, out, _ = run(capsys, "theorems", "--bundle", "svec_exterior", "--r", "R2", "--json", str(out_json))
    assert code == 0
    rep = json.loads(out_json.read_text())
    assert rep["pass"] and {len(v) for v in rep["sets"].values()} == {1}
    names = {c["axiom"] for c in rep["report"]["checks"]}
    for prefix in ("piv.", "bal.", "drinfeld.image_in_pivotal", "drinfeld.criteria"):
        assert any(n.startswith(prefix) for n in names)


def test_cli_check_and_search(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "--bundle", "vec_z2", "--element", "g", "--kind", "classical_ribbon",
                       "--r", "minus")
    assert code == 0
    code, out, _ = run(capsys, "check", "--bundle", "vec_sweedler", "--element", "1", "--kind", "pivotal")
    assert code == 1                                   # 1 is not pivotal in Sweedler's algebra
    j = tmp_path / "s.json"
    code, out, _ = run(capsys, "search", "--bundle", "svec_exterior", "--kind", "r_matrix", "--json", str(j))
    assert code == 0 and json.loads(j.read_text())["count"] == 3


def test_cli_coend_dump(capsys, tmp_path):
    j = tmp_path / "c.json"
    code, out, _ = run(capsys, "coend", "--bundle", "svec_exterior", "--json", str(j))
    d = json.loads(j.read_text())
    assert code == 0 and d["dim"] == 2 and d["nondegenerate"] is False


def test_cli_input_errors(capsys, tmp_path):
    assert run(capsys, "validate", "--bundle", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": \n')
    code, _, err = run(capsys, "validate", "--bundle", str(bad))
    assert code == 2 and "ParseError" in err and "line" in err
    assert run(capsys, "check", "--bundle", "vec_z2", "--element", "nope")[0] == 2
    assert run(capsys, "validate")[0] == 2
    code, _, err = run(capsys, "search", "--bundle", "vec_z2", "--kind", "grouplike", "--strategy", "enumerate_all")
    assert code == 2 and "FieldMismatch" in err and "coendkit.search" in err


def test_cli_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and set(out.split()) == set(SHIPPED)


def test_cli_debug_revalidate(capsys):
    from coendkit import config

    try:
        code, _, _ = run(capsys, "validate", "--bundle", "svec_coend", "--debug-revalidate")
        assert code == 0 and config.DEBUG_REVALIDATE
    finally:
        config.set_debug(False)
