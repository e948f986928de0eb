"""Acceptance criteria, one test per criterion.

Each test is named ``test_criterion_<NN>_<name>``; conftest prints a
PASS/FAIL line per criterion at the end of the run. Criteria that compare
against OEIS data read the pinned fixtures only, never the network.
"""

import json
import time

from tetraspeed.arith import decimal_length, digit_sum, last_nonzero_digit
from tetraspeed.cli import run
from tetraspeed.decadic import alpha25_prefix, alpha76_prefix, idempotents_mod, is_automorphic
from tetraspeed.families import cor25_base, exact_degree_certificate, lemma20_base, thm23_root
from tetraspeed.oeis import check_sequence, load_fixture
from tetraspeed.speed import GUARANTEED, WINDOWED, constant_speed, power_speed_shortcut
from tetraspeed.verify import verify_family

RESIDUES_807 = {
    2: "549620396283318273888501737943",
    3: "601692651466822940525632857943",
    4: "146336906474874632626032857943",
    5: "355034907448973150626032857943",
    6: "478635689812283150626032857943",
    7: "027048888762283150626032857943",
}


def _no_failures(report):
    assert report.ok, report.to_text()
    return report


def test_criterion_01_worked_example_807(capsys):
    start = time.perf_counter()
    assert run(["profile", "807", "--height", "8", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["speeds"] == [0, 4, 4, 4, 4, 3, 3, 3]
    assert run(["speed", "807"]) == 0
    assert capsys.readouterr().out == "V(807) = 3\n"
    for b, expected in RESIDUES_807.items():
        assert run(["tower", "807", str(b), "--digits", "30"]) == 0
        assert capsys.readouterr().out == expected + "\n"
    assert time.perf_counter() - start < 1.0


def test_criterion_02_lemma20_nines():
    start = time.perf_counter()
    for t in (1, 2, 3, 4):
        assert constant_speed(lemma20_base(t).base, WINDOWED) == t
    for t in (1, 2):
        assert constant_speed(10**t - 1, GUARANTEED) == t
    assert time.perf_counter() - start < 60


def test_criterion_03_thm22_campaign():
    start = time.perf_counter()
    report = _no_failures(verify_family("thm22", {"t": [2, 3, 4], "k": [1, 2, 3], "c": range(1, 41)}))
    assert report.counts["total"] == 360
    assert all(r.method == "oracle" for r in report.instances)
    assert time.perf_counter() - start < 300


def test_criterion_04_lemma25_bruteforce():
    start = time.perf_counter()
    report = _no_failures(verify_family("lemma25", {"t": [2, 3, 4], "k": [1, 2, 3], "c": range(1, 41)}))
    assert report.counts["total"] == 360
    assert time.perf_counter() - start < 60


def test_criterion_05_thm23_five_mod_twenty():
    for t in range(2, 7):
        root = thm23_root(t)
        assert root % 20 == 5
        assert constant_speed(root) == t
    report = _no_failures(verify_family("thm23", {"t": range(2, 7), "c": range(1, 11)}))
    assert report.counts["total"] == 50
    for r in report.instances:
        if r.params["c"] % 2:
            assert r.observed == r.params["t"]
        else:
            assert r.observed >= r.params["t"]


def test_criterion_06_cor21():
    _no_failures(verify_family("cor21", {"t": [2], "k": [1], "h": [0, 1, 2]}))
    _no_failures(verify_family("cor21", {"t": [1], "k": [1, 2], "h": [0, 1, 2]}))
    # the first family written out directly
    for h in range(3):
        assert constant_speed(1101 ** (2 ** (1 + h) * 5**h)) == 2 + h


def test_criterion_07_cor25_flagship():
    start = time.perf_counter()
    for c in range(3, 8):
        cb = cor25_base(c, 1)
        assert constant_speed(cb.base) == c
        assert digit_sum(cb.root) == 3 and cb.root % 9 != 0
        assert exact_degree_certificate(cb.root)
    flagship = cor25_base(1000, 314)
    assert flagship.predicted_speed == 1000 and flagship.is_huge
    v, v5, v2 = power_speed_shortcut(flagship.root, flagship.degree, 1005)
    assert (v, v5, v2) == (1000, 1000, 1000)
    assert time.perf_counter() - start < 30


def test_criterion_08_remark2_congruence():
    assert last_nonzero_digit(940030) == 3
    failures = []
    for c in range(1, 100):
        d = decimal_length(c)
        report = verify_family("remark2", {"c": [c], "t": range(d + 1, d + 4), "k": [1, 2]})
        failures += report.failures()
    assert not failures, f"{len(failures)} instances fail, first: {failures[0]}"


def test_criterion_09_decadic_idempotents():
    a25, a76 = alpha25_prefix(100), alpha76_prefix(100)
    m = 10**100
    assert is_automorphic(a25.value, 100) and is_automorphic(a76.value, 100)
    assert (a25.value + a76.value) % m == 1
    for n in range(1, 7):
        assert len(idempotents_mod(n)) == 4
    for seq, prefix in (("A018247", a25), ("A018248", a76)):
        fixture = load_fixture(seq)
        report = _no_failures(check_sequence(fixture, limit=min(len(fixture), 100)))
        assert report.counts["passed"] == min(len(fixture), 100)


def test_criterion_10_oeis_regression():
    start = time.perf_counter()
    for seq in ("A317905", "A372490"):
        fixture = load_fixture(seq)
        report = _no_failures(check_sequence(fixture))
        assert report.counts["passed"] >= 200
    fixture = load_fixture("A379243")
    report = _no_failures(check_sequence(fixture, limit=5))
    assert report.counts["passed"] == 5
    assert time.perf_counter() - start < 600
