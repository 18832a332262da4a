import json
import os
from fractions import Fraction

import gsp4toolkit as g

DATA = os.environ.get("GSP4_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_constants():
    assert g.cprime(0, 0) == Fraction(64, 3)
    assert all(g.cprime(k, kp) == g.c_closed(k, kp) for k in range(5) for kp in range(k + 1))
    assert g.c_level(2) == Fraction(2, 25)
    assert g.siegel_volume() == (Fraction(1, 270), 3)
    coeff, pi_exp = g.main1_constant(0, 0, 1)
    assert coeff == Fraction(524288, 15) and pi_exp == 12


def test_ktypes_and_weyl():
    p = g.projection_onto_31()
    assert len(p) == 9 and all(len(row) == 9 for row in p)
    assert sum(p[i][i] for i in range(9)) == 5
    assert g.pairing_coefficient(0, 0) != 0
    assert [g.weyl_dimension(*w) for w in [(1, 0, 1), (1, 1, 0), (2, 0, 2)]] == [4, 5, 10]


def test_lattice():
    assert g.dual_index(5, [[1, 0], [0, 5]], [[1, 0], [0, 1]]) == 25
    assert g.gram_discriminant(5, [[1, 0], [0, 5]], [[1, 0], [0, 1]]) == 25
    assert g.dual_index(7, [["1/2", 0], [0, 1]], [[1, 0], [0, 7]]) == 7


def test_modforms():
    assert g.delta_coefficients(5)[:6] == [0, 1, -24, 252, -1472, 4830]


def test_suites():
    assert "lattice" in g.suite_names()
    assert all(c["ok"] for c in g.run_suite("lattice"))


def test_cli():
    status, out, _ = g.run_cli(
        ["congruence", os.path.join(DATA, "delta.json"), os.path.join(DATA, "e12.json"), "--bound", "100", "--format", "json"]
    )
    assert status == 0
    primes = [e["value"] for e in json.loads(out)["results"] if e["name"] == "congruence primes"]
    assert primes == [[691]]
    assert g.run_cli(["constants"])[0] == 2
