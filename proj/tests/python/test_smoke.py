import json
import os
import pathlib
import subprocess

import pytest

import rankforge

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def family6():
    return json.loads((DATA / "family6_spec.json").read_text())


def test_character_and_sums():
    assert rankforge.quadratic_character(7, [0, 1], 2) == 1
    assert rankforge.quadratic_character(3, [1, 0, 1], 4) == -1  # 1 + theta in F_9
    assert rankforge.quad_sum(5, [0, 1], 1, 0, 4, "closed") == -1
    assert rankforge.quad_sum(5, [0, 1], 1, 0, 4, "brute") == -1
    assert rankforge.quad_sum(7, [0, 1], 1, 0, 0, "conic") == 13


def test_errors_are_translated():
    with pytest.raises(rankforge.RankforgeError, match="ZeroLeadingCoefficient"):
        rankforge.quad_sum(7, [0, 1], 0, 1, 0, "closed")
    with pytest.raises(rankforge.RankforgeError, match="ReducibleModulus"):
        rankforge.quadratic_character(5, [4, 0, 1], 1)


def test_ideals_and_landau():
    norms = [P["norm"] for P in rankforge.prime_ideals("1,0,1", 10)]
    assert norms == [5, 5, 9]
    r = rankforge.landau_sum("1,0,1", 25)
    assert r["count"] == 7
    assert r["sum"] == pytest.approx(16.2124258052, rel=1e-10)


def test_family_and_traces():
    fam = rankforge.construct_family(family6())
    assert fam["coefficients"]["c"] == "720"
    assert fam["D_T"][0] == "518400"
    for method in ("direct", "analytic"):
        (row,) = rankforge.average_A_p(json.dumps(fam), 37, method)
        assert row["sum_a_t"] == -222
        assert row["A_p"] == "-6"
    with pytest.raises(rankforge.RankforgeError, match="repeated roots mod 3"):
        rankforge.average_A_p(json.dumps(fam), 3, "analytic")


def test_rank_estimate():
    r = rankforge.rank_estimate(family6(), 3000)
    assert r["nearest_integer"] == 6
    assert not r["low_confidence"]


def test_cli_in_process():
    code, out, err = rankforge.run_cli(["landau", "--field", str(DATA / "gaussian.json"), "--max-norm", "25"])
    assert code == 0
    assert out == "sum,ratio,count\n16.2124258052,0.64849703221,7\n"
    code, out, err = rankforge.run_cli(["landau"])
    assert code == 2 and "--field" in err


@pytest.mark.skipif("RANKFORGE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary_bad_prime():
    proc = subprocess.run(
        [os.environ["RANKFORGE_CLI"], "nagao", "ap", "--family", str(DATA / "family6.json"), "--p", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert proc.stderr.strip() == "bad prime: repeated roots mod 3"
