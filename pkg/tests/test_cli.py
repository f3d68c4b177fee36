import pytest

from shiftbox.cli import main, run


@pytest.fixture(autouse=True)
def in_fixtures(monkeypatch):
    from corpus import FIXTURES
    monkeypatch.chdir(FIXTURES)


def test_enumerate():
    code, out, err = run(["enumerate", "-p", "s3.grp"])
    assert code == 0 and out.endswith("index: 3\n")


def test_lr_transversal():
    code, out, _ = run(["lr-transversal", "-p", "s3.grp", "--tuple", "a,b"])
    lines = out.splitlines()
    assert code == 0
    assert lines[:3] == ["a", "b", "aba"]
    assert lines[-1] == "contains-tuple: yes"


def test_primitive_scan_exceptional():
    assert run(["primitive-scan", "-p", "k4_trivial.grp"]) == (0, "subgroup: no (exceptional, m=2)\n", "")


def test_default_tuple_is_generators():
    assert run(["transversal", "-p", "s3.grp"]) == run(["transversal", "-p", "s3.grp", "--tuple", "a,b"])


def test_oracle_commands(tmp_path):
    assert run(["oracle", "order", "-p", "s4.grp"])[1] == "order: 24\n"
    out = run(["oracle", "primitives", "-p", "c6.grp", "-n", "1"])[1]
    assert out == "a\nA\ncount: 2\n"
    f = tmp_path / "t.txt"
    f.write_text("# left transversal of <a>\ne\nb\nab\n")
    assert run(["oracle", "verify-transversal", "-p", "s3.grp", str(f)])[1] == (
        "left: yes\nright: no\ngenerates: yes\n"
    )


@pytest.mark.parametrize("argv,code", [
    (["enumerate", "-p", "k4_trivial.grp", "--max-cosets", "2"], 2),
    (["transversal", "-p", "k4_x.grp", "--tuple", "x,y,xy"], 3),
    (["lr-transversal", "-p", "c2cubed.grp", "--tuple", "x,y,z,x"], 3),
    (["primitive-scan", "-p", "s3_trivial.grp", "--each-coset"], 3),
    (["enumerate", "-p", "missing.grp"], 4),
    (["transversal", "-p", "s3.grp", "--tuple", "a,q"], 4),
    (["enumerate"], 4),
    (["frobnicate", "-p", "s3.grp"], 4),
])
def test_exit_codes(argv, code):
    c, out, err = run(argv)
    assert c == code
    assert out == "" and err.startswith("error: ") and err.count("\n") == 1


def test_main_writes_streams(capsys):
    assert main(["enumerate", "-p", "k4_x.grp"]) == 0
    assert capsys.readouterr().out.endswith("index: 2\n")
    assert main(["enumerate", "-p", "nope.grp"]) == 4
    assert "error" in capsys.readouterr().err
