import json
import os
import subprocess

import pytest

import twistbar as tb


def test_ordinal_maps():
    assert tb.compose(tb.OrdinalMap(2, [0, 2, 2]), tb.OrdinalMap(2, [1, 2])) == tb.OrdinalMap(2, [2, 2])
    assert tb.double_map(tb.OrdinalMap(1, [1])).values == [1, 2]
    assert tb.zero_elimination(2, 1).values == [0, 2, 3, 5]
    assert tb.is_symmetric(tb.OrdinalMap.identity(3))
    assert not tb.is_symmetric(tb.OrdinalMap(3, [0, 1, 2, 2]))
    with pytest.raises(ValueError):
        tb.OrdinalMap(2, [1, 0])


def test_operad():
    p = tb.Permutation
    assert tb.gamma(p([2, 1]), [p.identity(1), p.identity(2)]).image == [3, 1, 2]
    assert tb.involute(p([2, 1, 3])).image == [2, 3, 1]
    cert = tb.check_equivariance(2, 2)
    assert cert["passed"] and cert["counterexample"] is None


def test_monoids():
    s3 = tb.TwistedMonoid.builtin("s3")
    assert [s3.names[a] for a in tb.fixed_points(s3)] == ["e", "(12)", "(13)", "(23)"]
    assert tb.twisted_action(s3, s3.id_of("(12)"), s3.id_of("(13)")) == s3.id_of("(23)")
    assert tb.grothendieck_group(tb.TwistedMonoid.builtin("c3")) == (0, [3])
    with pytest.raises(ValueError):
        tb.grothendieck_group(s3)
    c2 = tb.TwistedMonoid.builtin("c2")
    assert tb.TwistedMonoid.from_json(c2.to_json()).names == c2.names
    with pytest.raises(ValueError):
        tb.TwistedMonoid.from_json('{"elements": [')


def test_homology_and_eta():
    c2 = tb.TwistedMonoid.builtin("c2")
    assert tb.homology(c2, "bar", 3) == [(1, []), (0, [2]), (0, []), (0, [2])]
    s3 = tb.TwistedMonoid.builtin("s3")
    assert tb.homology(s3, "fixed", 1) == [(2, []), (0, [2, 2])]
    assert tb.pi0(s3, "two-sided") == 2
    cert = tb.eta_check(c2, 4)
    assert cert["passed"] and cert["level_sizes"] == [2, 4, 8, 16, 32]
    assert not tb.eta_check(c2, 2, corrupt=True)["passed"]
    assert tb.twisted_axioms(s3, 3)["passed"]
    assert tb.diagonal_compare(tb.TwistedMonoid.builtin("c3"), 3)["passed"]


def test_smith_is_exact():
    assert tb.smith_invariants([[2, 4], [6, 8]]) == [2, 4]
    big = 2**40
    assert tb.smith_invariants([[big, 0], [0, big]]) == [big, big]


def test_run_cli_in_process():
    code, out, _ = tb.run_cli(["homology", "--builtin", "c4", "--construction", "two-sided",
                               "--max-degree", "1", "--json"])
    assert code == 0
    groups = [h["group"] for h in json.loads(out)["results"]["homology"]]
    assert groups == ["Z^2", "Z/4 + Z/4"]
    assert tb.run_cli(["group-completion", "--builtin", "s3"])[0] == 4


@pytest.mark.skipif("TWISTBAR_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary():
    proc = subprocess.run([os.environ["TWISTBAR_CLI"], "eta-check", "--builtin", "c2", "--max-level", "3",
                           "--json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
