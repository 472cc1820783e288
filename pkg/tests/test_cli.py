import json

import pytest
from hypothesis import given

from majtourn import formats
from majtourn.cli import main
from majtourn.core import MajorityDigraph, Profile, build_majority_digraph
from majtourn.generate import random_profile, search_min_acyclic
from majtourn.errors import InputError
from majtourn.triangle import TriangleConstruction

from conftest import profiles

GOLDEN_5_3_42 = '{"n": 5, "k": 3, "orders": [[3, 1, 2, 4, 0], [3, 2, 0, 4, 1], [3, 1, 2, 0, 4]]}\n'


@given(profiles())
def test_profile_round_trip(profile):
    assert formats.loads_profile(formats.dumps_profile(profile)) == profile


def test_profile_labels_round_trip():
    p = Profile([(1, 0, 2)], labels=["a", "b", "c"])
    assert formats.loads_profile(formats.dumps_profile(p)).labels == ("a", "b", "c")


@pytest.mark.parametrize(
    "text",
    [
        '{"n": 3, "k": 1, "orders": [[0, 1, 2]',
        '{"n": 3, "k": 2, "orders": [[0, 1, 2]]}',
        '{"n": 3, "k": 1, "orders": [[0, 1, 1]]}',
        '{"n": "3", "k": 1, "orders": [[0, 1, 2]]}',
        "[1, 2]",
    ],
)
def test_bad_profile_json(text):
    with pytest.raises(InputError):
        formats.loads_profile(text)


def test_digraph_round_trip():
    d = TriangleConstruction(4).digraph
    assert formats.loads_digraph(formats.dumps_digraph(d)) == d


def test_golden_random_profile():
    assert formats.dumps_profile(random_profile(5, 3, 42)) == GOLDEN_5_3_42
    assert random_profile(5, 3, 1) != random_profile(5, 3, 2)


def test_export_dot():
    cyc = MajorityDigraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert sum("->" in line for line in formats.export_dot(cyc).splitlines()) == 3
    dot = formats.export_dot(build_majority_digraph(Profile([range(3)])))
    assert [l.strip() for l in dot.splitlines() if "->" in l] == ["0 -> 1;", "0 -> 2;", "1 -> 2;"]
    tc = TriangleConstruction(3)
    dot = formats.export_dot(tc.digraph, tc.points)
    assert sum("->" in line for line in dot.splitlines()) == 15
    assert "// 0: (0,0,2)" in dot


def test_gen_triangle(tmp_path):
    assert main(["gen-triangle", "--r", "2", "--out", str(tmp_path)]) == 0
    prof = json.loads((tmp_path / "triangle_r2.profile.json").read_text())
    assert prof["k"] == 3 and prof["n"] == 3
    dg = json.loads((tmp_path / "triangle_r2.digraph.json").read_text())
    assert dg == {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]}
    assert (tmp_path / "triangle_r2.dot").exists()
    assert main(["gen-triangle", "--r", "1", "--out", str(tmp_path)]) == 0
    assert json.loads((tmp_path / "triangle_r1.profile.json").read_text())["n"] == 1
    assert main(["gen-triangle", "--r", "16", "--out", str(tmp_path)]) == 3


def test_gen_random(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen-random", "--n", "5", "--k", "3", "--seed", "42", "--out", str(a)]) == 0
    assert main(["gen-random", "--n", "5", "--k", "3", "--seed", "42", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes() == GOLDEN_5_3_42.encode()
    assert main(["gen-random", "--n", "5", "--k", "0"]) == 2
    assert main(["gen-random", "--n", "200", "--k", "3"]) == 3


def test_solve(tmp_path, capsys):
    main(["gen-triangle", "--r", "3", "--out", str(tmp_path)])
    out = tmp_path / "res.json"
    assert main(["solve", str(tmp_path / "triangle_r3.profile.json"), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["size"] == 3
    assert main(["solve", str(tmp_path / "triangle_r3.digraph.json"), "--oracle"]) == 0
    assert "size: 3" in capsys.readouterr().out

    ident = tmp_path / "ident.json"
    ident.write_text(formats.dumps_profile(Profile([range(7)])))
    assert main(["solve", str(ident), "--stats"]) == 0
    text = capsys.readouterr().out
    assert "size: 7" in text and "nodes_explored" in text and "wall_time_ms" in text

    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "k": 1, "orders": [[0, 1')
    assert main(["solve", str(bad)]) == 2
    assert main(["solve", str(tmp_path / "missing.json")]) == 2


def test_solve_even_k_routes_to_oracle(tmp_path, capsys):
    p = tmp_path / "even.json"
    p.write_text(formats.dumps_profile(Profile([(0, 1, 2), (2, 1, 0)], labels=["a", "b", "c"])))
    assert main(["solve", str(p)]) == 0
    out = capsys.readouterr().out
    assert "size: 3" in out and "brute-force" in out and "witness: a" in out
    big = tmp_path / "big.json"
    big.write_text(formats.dumps_profile(random_profile(21, 2, 0)))
    assert main(["solve", str(big)]) == 3


def test_verify(tmp_path, capsys):
    csv = tmp_path / "v.csv"
    assert main(["verify", "--r", "4", "--out", str(csv)]) == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "n,r,achieved,upper_bound,lower_bound,time_ms"
    assert [l.split(",")[2] for l in lines[1:]] == ["1", "2", "3", "4"]
    assert lines[3].startswith("6,3,3,3.9641,3,")
    assert main(["verify", "--r", "1"]) == 0
    assert main(["verify", "--r", "9"]) == 3


def test_sweep(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--r", "8", "--out", str(out), "--no-timing"]) == 0
    rows = out.read_text().splitlines()[1:]
    assert len(rows) == 8
    assert all(row.split(",")[1] == row.split(",")[2] for row in rows)
    assert rows[-1] == "36,8,8,8.9853,6,0"


def test_es(tmp_path, capsys):
    p = tmp_path / "pair.json"
    p.write_text(formats.dumps_profile(Profile([range(5), (2, 0, 1, 4, 3)])))
    assert main(["es", str(p), "--r", "3", "--s", "3"]) == 0
    assert "consistent set of size 3: 0 1 4" in capsys.readouterr().out
    assert main(["es", str(p), "--r", "3", "--s", "4"]) == 2
    assert main(["es", "--n", "10", "--r", "4", "--s", "4", "--seed", "3"]) == 0


def test_search(tmp_path, capsys):
    assert main(["search", "--n", "6", "--k", "3", "--seed", "7", "--iters", "200"]) == 0
    res = search_min_acyclic(6, 3, 7, 200)
    assert res.best.size >= 3 and not res.anomaly
    assert search_min_acyclic(1, 3, 0, 50).best.size == 1
    assert search_min_acyclic(1, 3, 0, 50).iterations == 1
    assert main(["search", "--n", "6", "--k", "2"]) == 2


def test_export(tmp_path, capsys):
    assert main(["export", "--r", "3"]) == 0
    assert capsys.readouterr().out.count("->") == 15
    p = tmp_path / "p.json"
    p.write_text(formats.dumps_profile(Profile([range(3)])))
    assert main(["export", str(p), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
