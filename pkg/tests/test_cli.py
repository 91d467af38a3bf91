"""Command line interface: output formats and exit codes."""

import json

import pytest

from raca import catalog
from raca.cli import main, parse_angle
from raca.errors import DomainError

TRI463 = {"size": 3, "m": [[1, 4, 3], [4, 1, 6], [3, 6, 1]]}
D444 = {"size": 4, "m": [[1, 4, 2, 2], [4, 1, 4, 2], [2, 4, 1, 4], [2, 2, 4, 1]]}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, payload in [
        ("p32", catalog.p32().to_dict()),
        ("cube", catalog.cube().to_dict()),
        ("tri463", TRI463),
        ("d444", D444),
        ("badpoly", {"vertex_count": 5, "faces": [[0, 1, 2], [0, 1, 3], [0, 1, 4]]}),
    ]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(payload))
        paths[name] = str(p)
    return paths


def run(capsys, *args):
    rc = main(list(args))
    return rc, capsys.readouterr().out


def test_parse_angle():
    import math
    assert parse_angle("pi/4") == pytest.approx(math.pi / 4)
    assert parse_angle("-pi/6") == pytest.approx(-math.pi / 6)
    assert parse_angle("pi") == pytest.approx(math.pi)
    assert parse_angle("0.25") == 0.25
    with pytest.raises(DomainError):
        parse_angle("pi/0")
    with pytest.raises(DomainError):
        parse_angle("two")


def test_lob_defaults_to_twelve_places(capsys):
    rc, out = run(capsys, "lob", "pi/4")
    assert rc == 0 and out == "0.457982797089\n"


def test_lob_json(capsys):
    rc, out = run(capsys, "lob", "pi/4", "--json")
    assert rc == 0
    data = json.loads(out)
    assert data["value"] == pytest.approx(0.45798279708860950753, abs=1e-13)
    assert 0 < data["error_bound"] < 1e-12
    # canonical serialization: load/dump round-trip is the identity
    assert json.dumps(data, sort_keys=True) == out.strip()


def test_lob_precision_flag(capsys):
    rc, out = run(capsys, "lob", "pi/6", "--precision", "6")
    assert rc == 0 and out == "0.507471\n"
    assert main(["lob", "pi/4", "--precision", "13"]) == 3
    capsys.readouterr()
    assert main(["lob", "pi/4", "--precision", "-1"]) == 3
    capsys.readouterr()


def test_lob_bad_angle(capsys):
    assert main(["lob", "pi/0"]) == 3
    assert main(["lob", "about-tau"]) == 3
    capsys.readouterr()


def test_volume_named(capsys):
    rc, out = run(capsys, "volume", "named", "P32")
    assert rc == 0 and out == "0.915966  (2*L(pi/4))\n"
    rc, out = run(capsys, "volume", "named", "P32", "--json")
    data = json.loads(out)
    assert data["formula"] == "2*L(pi/4)"
    assert data["value"] == pytest.approx(0.91596559417721901505, abs=1e-12)
    assert main(["volume", "named", "P33"]) == 3
    capsys.readouterr()


def test_volume_families_and_orthoscheme(capsys):
    rc, out = run(capsys, "volume", "lobell", "6", "--precision", "12")
    assert rc == 0 and out.startswith("6.023046020047")
    rc, out2 = run(capsys, "volume", "antiprism", "4", "--precision", "12")
    assert out2.split()[0] == out.split()[0]
    rc, out = run(capsys, "volume", "orthoscheme", "pi/4", "pi/3", "pi/4",
                  "--precision", "9")
    assert rc == 0 and out.startswith("0.000000000")
    assert main(["volume", "lobell", "4"]) == 3
    assert main(["volume", "orthoscheme", "pi/2", "pi/3", "pi/2"]) == 3
    capsys.readouterr()


def test_plain_and_json_agree(capsys):
    rc, plain = run(capsys, "volume", "named", "P28", "--precision", "9")
    rc, blob = run(capsys, "volume", "named", "P28", "--json")
    assert f"{json.loads(blob)['value']:.9f}" == plain.split()[0]


def test_bounds(capsys):
    rc, out = run(capsys, "bounds", "compact", "20")
    assert rc == 0 and out == "lower=1.373948 upper=6.343385\n"
    rc, out = run(capsys, "bounds", "ideal", "6")
    assert rc == 0 and "(lower bound attained)" in out
    rc, out = run(capsys, "bounds", "mixed", "1", "18", "--json")
    data = json.loads(out)
    assert data["lower"] == pytest.approx(1.6029397898101332763, abs=1e-12)
    assert data["lower_attained"] is False
    assert main(["bounds", "compact", "7"]) == 3
    assert main(["bounds", "ideal", "5"]) == 3
    assert main(["bounds", "mixed", "0", "8"]) == 3
    capsys.readouterr()


def test_check_stats(capsys, files):
    rc, out = run(capsys, "check", "stats", files["p32"])
    assert rc == 0
    assert out == "V=5 E=9 F=6 ideal=3 finite=2 p3=6 W=18 WI=12\n"
    rc, out = run(capsys, "check", "stats", files["p32"], "--json")
    data = json.loads(out)
    assert data["face_vector"] == {"3": 6}
    assert data["w"] == 18 and data["wi"] == 12


def test_check_andreev(capsys, files):
    rc, out = run(capsys, "check", "andreev", files["p32"])
    assert rc == 0 and out == "pass\n"

    rc, out = run(capsys, "check", "andreev", files["cube"])
    assert rc == 2 and out.startswith("fail: condition 4 witness")

    rc, out = run(capsys, "check", "andreev", files["p32"],
                  "--condition3-reading", "distinct_edges")
    assert rc == 2 and "condition 3" in out


def test_check_error_paths(capsys, files, tmp_path):
    assert main(["check", "stats", files["badpoly"]]) == 3
    assert main(["check", "andreev", files["badpoly"]]) == 3
    assert main(["check", "stats", str(tmp_path / "absent.json")]) == 3
    bad = tmp_path / "notjson.json"
    bad.write_text("{")
    assert main(["check", "stats", str(bad)]) == 3
    capsys.readouterr()


def test_census_enumerate(capsys):
    rc, out = run(capsys, "census", "enumerate", "--videal", "3", "--vfinite", "2")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "pair (3,2): 1 realizable type(s)"
    assert lines[1].strip().startswith("c5|")
    assert "volume = 0.915966" in lines[2]

    rc, out = run(capsys, "census", "enumerate", "--videal", "2", "--vfinite", "4",
                  "--json")
    data = json.loads(out)
    assert data["count"] == 0 and data["volume"] is None

    assert main(["census", "enumerate", "--videal", "2", "--vfinite", "2"]) == 3
    capsys.readouterr()


def test_verify_theorem(capsys):
    rc, out = run(capsys, "census", "verify-theorem")
    assert rc == 0
    assert "verified" in out
    assert "0.915966" in out

    rc, blob = run(capsys, "verify-theorem", "--json")
    assert rc == 0
    data = json.loads(blob)
    assert data["verified"] is True
    assert data["minimal_volume"] == pytest.approx(0.91596559417721901505, abs=1e-9)
    assert data["uniqueness"] is True

    rc, out = run(capsys, "verify-theorem",
                  "--condition3-reading", "distinct_edges")
    assert rc == 2


def test_arith(capsys, files):
    rc, out = run(capsys, "arith", "check", files["tri463"])
    assert rc == 2
    lines = out.splitlines()
    assert lines[0] == "not arithmetic: cycle [0, 1, 2] has product -sqrt(6)"
    assert lines[1].startswith("note: the criterion assumes a non-cocompact")

    rc, out = run(capsys, "arith", "check", files["tri463"], "--max-len", "2")
    assert rc == 0 and out.startswith("arithmetic (3 cyclic products checked)")

    rc, out = run(capsys, "arith", "check", files["d444"], "--json")
    data = json.loads(out)
    assert data["arithmetic"] is True and data["witness_cycle"] is None

    assert main(["arith", "check", files["cube"]]) == 3
    capsys.readouterr()


def test_usage_errors_map_to_input_code(capsys):
    assert main([]) == 3
    assert main(["frobnicate"]) == 3
    assert main(["volume"]) == 3
    assert main(["lob"]) == 3
    capsys.readouterr()
