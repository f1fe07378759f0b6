import io
import json

from f4grad.cli import parse_torus_point, run


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_weyl_classes_table():
    code, text = _run("weyl", "classes")
    assert code == 0
    assert len(text.strip().splitlines()) == 26


def test_weyl_fixed_json():
    code, text = _run("weyl", "fixed", "--j", "15", "--json")
    data = json.loads(text)
    assert code == 0 and data["invariant_factors"] == [3, 3] and data["torus_rank"] == 0


def test_stabilizer_with_generic_entry():
    code, text = _run("weyl", "stabilizer", "--t=-1,1,-1,1", "--t=1,-1,-1,1", "--t=1,1,1,u")
    assert code == 0 and text.split() == ["105", "748"]


def test_parse_torus_point():
    assert parse_torus_point("w,1,w^2,-i") == ((8, 0, 16, 18), (0, 0, 0, 0))
    assert parse_torus_point("zeta8^3,1,1,u") == ((9, 0, 0, 0), (0, 0, 0, 1))


def test_usage_errors():
    assert _run("bogus")[0] == 2
    assert _run("weyl", "stabilizer", "--t", "1,2")[0] == 2
    assert _run("weyl", "fixed", "--j", "0")[0] == 2
    assert _run("grade", "--preset", "nope")[0] == 2
    assert _run("verify", "--table", "nope")[0] == 2


def test_grade_a15_json():
    code, text = _run("grade", "--preset", "A15", "--json")
    data = json.loads(text)
    assert code == 0
    assert data["type"] == [0, 26] and data["toral"] is False
    assert len(data["components"]) == 26 and {c["dim"] for c in data["components"]} == {2}


def test_grade_cartan():
    code, text = _run("grade", "--preset", "cartan")
    assert code == 0 and "type (48, 0, 0, 1)" in text


def test_verify_single_table():
    code, text = _run("verify", "--table", "weyl-classes")
    assert code == 0 and text.startswith("[PASS]")


def test_algebra_dump():
    code, text = _run("algebra", "dump", "--name", "C", "--json")
    data = json.loads(text)
    assert code == 0 and len(data["basis"]) == 8


def test_output_is_deterministic():
    assert _run("weyl", "fixed", "--j", "3") == _run("weyl", "fixed", "--j", "3")
