import io
import json
import os
import subprocess
import sys

import pytest

from hlyforge import QQ
from hlyforge.cli import (
    InputError, parse, parse_text, presentation, run, serialize, shipped_paths, write_shipped,
)
from hlyforge.fixtures import h3

DATA = {os.path.basename(p)[:-5]: p for p in shipped_paths()}


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_all_fixtures_shipped():
    assert set(DATA) == {
        "aff2_gf2_cocycle", "aff2_gf2_deformation", "aff2_gf2_twisted", "aff2_gf2_zero_rep",
        "h3", "h3_adjoint", "h3_induced", "h3_p1", "h3_p1_weights", "h3_perturbed", "h3q",
        "h3q_induced", "pre_lie", "sl2"}


@pytest.mark.parametrize("name", sorted(DATA))
def test_round_trip(name):
    with open(DATA[name]) as fh:
        text = fh.read()
    p = parse_text(text)
    assert serialize(p) == text
    assert serialize(parse_text(serialize(p))) == text


def test_shipped_files_are_current(tmp_path):
    for path in write_shipped(str(tmp_path)):
        with open(path) as fh, open(DATA[os.path.basename(path)[:-5]]) as shipped:
            assert fh.read() == shipped.read()


@pytest.mark.parametrize("argv,code", [
    (("verify", "hom-lie", "h3"), 0),
    (("verify", "hly", "h3_induced"), 0),
    (("verify", "hly", "h3q_induced"), 0),
    (("verify", "hly", "h3_perturbed"), 1),
    (("verify", "rep", "h3_adjoint"), 0),
    (("verify", "rota-baxter", "h3_p1"), 0),
    (("verify", "reynolds", "h3_p1_weights"), 0),
    (("verify", "cocycle2", "aff2_gf2_cocycle"), 0),
    (("verify", "twisted-op", "aff2_gf2_twisted"), 0),
    (("verify", "ns-lie", "pre_lie"), 0),
])
def test_verify_exit_codes(argv, code):
    got, out = cli(*argv[:-1], DATA[argv[-1]])
    assert got == code
    doc = json.loads(out)
    assert doc["ok"] == (code == 0)


def test_failure_report_has_witness():
    code, out = cli("verify", "hly", DATA["h3_perturbed"], "--max-failures", "2")
    doc = json.loads(out)
    assert code == 1 and len(doc["failures"]) == 2
    assert doc["counts"]["cyclic_mixed"] == 6


CONSTRUCTS = [
    ("induced-hly", "h3", "hly"),
    ("semidirect", "h3_adjoint", "hly"),
    ("descendent", "h3_p1_weights", "hly"),
    ("v-structure", "aff2_gf2_twisted", "hly"),
    ("induced-rep", "aff2_gf2_twisted", "rep"),
    ("twisted-semidirect", "aff2_gf2_twisted", "hly"),
    ("ns-from-top", "aff2_gf2_twisted", "ns-hly"),
    ("ns-from-reynolds", "h3_p1_weights", "ns-hly"),
    ("ns-from-ns-lie", "pre_lie", "ns-hly"),
    ("adjacent", "pre_lie", "hom-lie"),
    ("g-from-f", "aff2_gf2_cocycle", "cocycle23"),
]


@pytest.mark.parametrize("target,source,check", CONSTRUCTS)
def test_construct_reverifies(target, source, check, tmp_path):
    code, out = cli("construct", target, DATA[source])
    assert code == 0
    path = tmp_path / "out.json"
    path.write_text(out)
    assert serialize(parse(str(path))) == out
    code, rep = cli("verify", check, str(path))
    assert code == 0, rep
    again = cli("construct", target, DATA[source])[1]
    assert again == out


def test_subadjacent_chain(tmp_path):
    code, out = cli("construct", "ns-from-top", DATA["aff2_gf2_twisted"])
    ns = tmp_path / "ns.json"
    ns.write_text(out)
    code, out = cli("construct", "subadjacent", str(ns))
    assert code == 0
    sub = tmp_path / "sub.json"
    sub.write_text(out)
    assert cli("verify", "rep", str(sub))[0] == 0


def test_yau_twist(tmp_path):
    phi = QQ.array([[1, 0, 0], [0, 2, 0], [0, 0, 2]])
    path = tmp_path / "in.json"
    path.write_text(serialize(presentation(QQ, algebra=h3(), morphism=phi)))
    code, out = cli("construct", "yau-twist", str(path))
    assert code == 0
    path2 = tmp_path / "twisted.json"
    path2.write_text(out)
    assert cli("verify", "hly", str(path2))[0] == 0


def test_cohomology_search_deform():
    code, out = cli("cohomology", DATA["h3_adjoint"], "--level", "1")
    doc = json.loads(out)
    assert code == 0
    assert (doc["dimC"], doc["dimZ"], doc["dimB"], doc["dimH"]) == (36, 27, 3, 24)
    code, out = cli("search", DATA["aff2_gf2_twisted"])
    assert code == 0 and len(out.strip().splitlines()) == 8
    code, out = cli("search", DATA["aff2_gf2_twisted"], "--budget", "4")
    assert code == 2
    code, out = cli("deform", DATA["aff2_gf2_deformation"])
    doc = json.loads(out)
    assert code == 0 and doc["infinitesimal_is_cocycle"] is True
    assert set(doc["orders"]) == {"0", "1", "2"}


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli("verify", "hly", str(bad))[0] == 2
    assert cli("verify", "hly", DATA["h3"], "--field", "gf:5")[0] == 2
    assert cli("verify", "hom-lie", DATA["h3_induced"])[0] == 2
    assert cli("verify", "nonsense", DATA["h3"])[0] == 2
    with pytest.raises(InputError):
        parse_text('{"format_version": "1", "field": {"gf": 4}, "blocks": {}}')
    with pytest.raises(InputError):
        parse_text('{"format_version": "1", "field": "rational", "blocks": {}, "extra": 1}')
    text = ('{"format_version": "1", "field": {"gf": 3}, "blocks": {"m": {"kind": "matrix",'
            ' "rows": 1, "cols": 1, "matrix": [[0, 0, 1, 2]]}}}')
    with pytest.raises(InputError):
        parse_text(text)


def test_flags_after_subcommand():
    a = cli("--max-failures", "1", "verify", "hly", DATA["h3_perturbed"])
    b = cli("verify", "hly", DATA["h3_perturbed"], "--max-failures", "1")
    assert a == b and len(json.loads(a[1])["failures"]) == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hlyforge", "verify", "hly", DATA["h3q_induced"]],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["ok"]
