"""Smoke tests for the hassett extension module."""

import json
import os
import subprocess

import pytest

import hassett


def test_conditions_on_the_headline_discriminants():
    for d, witness in [(14, (1, 2)), (26, (1, 3)), (38, (7, 30))]:
        report = hassett.check(d)
        assert report["star"] and report["double_star"] and report["triple_star"]
        assert report["witness"] == witness
        a, n = witness
        assert a * a * d == 2 * n * n + 2 * n + 2


def test_74_meets_double_star_but_not_triple_star():
    report = hassett.check(74)
    assert report["star"] is True
    assert report["double_star"] is True
    assert report["triple_star"] is False
    assert report["witness"] is None
    assert report["pell"] is None
    assert report["period_length"] == 2
    solvable, witness = hassett.condition_triple_star(74)
    assert not solvable and witness is None


def test_pell_solver():
    assert hassett.pell_solve(28, -3) == (5, 1)
    assert hassett.pell_solve(148, -3) is None
    assert hassett.pell_solve(4, -3) == (1, 1)
    assert hassett.cf_sqrt(2) == (1, [2])
    assert hassett.cf_sqrt(28) == (5, [3, 2, 3, 10])
    with pytest.raises(ValueError):
        hassett.pell_solve(28, -6)


def test_exact_helpers():
    assert hassett.factorize(74) == [(2, 1), (37, 1)]
    assert hassett.integer_sqrt_exact(25) == 5
    assert hassett.integer_sqrt_exact(148) is None
    assert hassett.triple_star_bruteforce(26, 10, 100) == (1, 3)


def test_lattice_operations():
    assert hassett.k8() == [[3, 2], [2, 4]]
    assert hassett.discriminant(hassett.k8()) == 8
    assert hassett.discriminant(hassett.k18()) == 18
    gram = hassett.canonical_gram("plane", "I", 1, 1)
    assert gram == [[3, 2, 0], [2, 4, 1], [0, 1, 2]]
    assert hassett.restrict_form(gram) == (8, 6, 6)
    assert hassett.case_discriminant("plane", "I", 1) == [-3, 16]


def test_normalization():
    form = hassett.normalize("dp6", 6, 1, 4)
    assert form["case"] == "B0"
    assert form["k"] == -14
    assert form["disc"] == -507
    assert form["gram"] == [[3, 6, 0], [6, 18, 1], [0, 1, -28]]
    with pytest.raises(hassett.AdmissibilityViolation):
        hassett.normalize("dp6", 3, 1, 2)
    with pytest.raises(hassett.InvalidPairing):
        hassett.normalize("dp6", 0, 5, 0)


def test_families():
    assert hassett.family_ids() == ["PlaneI", "PlaneII", "A", "B", "C", "D", "E", "F"]
    for fid in hassett.family_ids():
        assert hassett.verify_family_symbolic(fid)["ok"]
    printed_c = hassett.verify_family_symbolic("C", use_printed_form=True)
    assert not printed_c["ok"]
    assert printed_c["form"]["c"] == [-4, 5]
    assert hassett.derive_form("C")["c"] == [-4, 6]
    rows = hassett.verify_family_numeric("PlaneI", 1, 1)
    assert rows[0]["d"] == 26 and rows[0]["ok"]
    assert hassett.dp6_residue_equivalence_check()


def test_arbitrary_precision_round_trip():
    # d = 1766 has a fundamental (***) witness far beyond 64 bits.
    report = hassett.check(1766)
    assert report["triple_star"]
    a, n = report["witness"]
    assert n > 2**64
    assert a * a * 1766 == 2 * n * n + 2 * n + 2
    x, y = report["pell"]
    assert x * x - 2 * 1766 * y * y == -3
    assert hassett.witness_to_pell(a, n, 1766) == (x, y)
    assert hassett.pell_to_witness(x, y, 2 * 1766) == (a, n)
    # synthetic witness far larger still
    n_big = 10**30
    d_big = 2 * n_big * n_big + 2 * n_big + 2
    assert hassett.witness_to_pell(1, n_big, d_big) == (2 * n_big + 1, 1)


def test_cli_json_round_trips_with_big_integers():
    cli = os.environ.get("HASSETT_CLI")
    if not cli:
        pytest.skip("HASSETT_CLI not set")
    for args in (["check", "1766"], ["check", "14"], ["pell", "--d", "28"],
                 ["normalize", "--geometry", "dp6", "--m", "6", "--c", "1", "--s", "4"]):
        out = subprocess.run([cli, *args, "--json"], capture_output=True, text=True, check=True)
        doc = out.stdout.strip()
        # Python ints are exact at any size, so this is a full byte round trip.
        assert json.dumps(json.loads(doc), separators=(",", ":")) == doc
