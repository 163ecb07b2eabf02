import json

import pytest

from klbounds import get_system, run_suite
from klbounds.bounds import main_bound, monotonicity_bound
from klbounds.errors import EnumerationCapError, ParseError
from klbounds.parabolic import all_parabolic_subgroups, parse_subgroup_spec
from klbounds.verify import SUITE_NAMES, canonical_json


def _lines(result):
    return [r.text_line() for r in result.records]


def test_suite_names_frozen():
    assert SUITE_NAMES == (
        "main-theorem", "coefficientwise", "parabolic-equality",
        "brenti-simion", "monotonicity", "coset-theorem", "smoothness",
        "inversion-identity", "conjecture-p2")


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_every_suite_green_on_small_group(suite):
    # S3 is too small to exhibit any P(1) = 2 element, so that suite
    # gets the next rank up
    type_text = "A3" if suite == "conjecture-p2" else "A2"
    result = run_suite(suite, type_text)
    assert result.failed == 0
    assert result.checked == len(result.records) > 0
    assert result.summary_line().startswith(
        f"checked={result.checked} failed=0 elapsed=")


def test_records_have_nine_clean_tokens():
    result = run_suite("main-theorem", "A2")
    for line in _lines(result):
        parts = line.split(" ")
        assert len(parts) == 9
        assert parts[0] == "MAIN"
        assert parts[8] in ("HOLDS", "FAILS")
        assert all(p for p in parts)


def test_determinism_across_runs():
    a = _lines(run_suite("coset-theorem", "B2"))
    b = _lines(run_suite("coset-theorem", "B2"))
    assert a == b


def test_parallel_merge_matches_serial():
    serial = run_suite("main-theorem", "B2", jobs=1)
    parallel = run_suite("main-theorem", "B2", jobs=2)
    assert _lines(serial) == _lines(parallel)
    assert serial.checked == parallel.checked > 0


def test_main_records_match_direct_evaluation(a3):
    result = run_suite("main-theorem", "A3",
                       parabolic="refl:1-3,2-4")
    sub = parse_subgroup_spec(a3, "refl:1-3,2-4")
    by_pair = {}
    for rec in result.records:
        by_pair[(rec.x, rec.w)] = rec
    assert len(by_pair) == 24 * 24
    probes = [("2143", "4231"), ("1234", "4321"), ("3124", "2143")]
    for xs, ws in probes:
        rec = by_pair[(xs, ws)]
        rep = main_bound(sub, a3.parse_element(xs), a3.parse_element(ws))
        assert int(rec.lhs) == rep.lhs
        assert int(rec.rhs) == rep.rhs
        assert rec.holds == rep.holds


def test_monotonicity_records_match_direct(a3):
    result = run_suite("monotonicity", "A3", parabolic="standard:s1,s2")
    sub = parse_subgroup_spec(a3, "standard:s1,s2")
    assert len(result.records) == 24
    for rec in result.records:
        rep = monotonicity_bound(sub, a3.parse_element(rec.w))
        assert int(rec.lhs) == rep.lhs and int(rec.rhs) == rep.rhs


def test_subgroup_sweep_covers_all_parabolics(a3):
    result = run_suite("main-theorem", "A3")
    subs = {rec.subgroup for rec in result.records}
    assert len(subs) == len(all_parabolic_subgroups(a3))


def test_coset_suite_has_aggregate_records():
    result = run_suite("coset-theorem", "B2")
    kinds = {rec.theorem for rec in result.records}
    assert {"COSET-EQUIV", "COSET-ORDER", "COSET-AGREE",
            "COSET-RESTRICT", "COSET-SURJ"} <= kinds
    for rec in result.records:
        if rec.theorem in ("COSET-RESTRICT", "COSET-SURJ"):
            assert rec.x == "-" and rec.w == "-"


def test_smoothness_records_shape():
    result = run_suite("smoothness", "A3")
    assert len(result.records) == 24
    assert result.failed == 0
    nontrivial = [r for r in result.records if r.lhs != "1"]
    # exactly the two singular permutations of S4
    assert sorted(r.w for r in nontrivial) == ["3412", "4231"]
    for rec in nontrivial:
        assert rec.rhs == "0" and rec.holds


def test_conjecture_p2_on_s4():
    result = run_suite("conjecture-p2", "A3")
    p2 = [r for r in result.records if r.theorem == "P2"]
    assert sorted(r.w for r in p2) == ["3412", "4231"]
    assert all(r.holds for r in result.records)


def test_inversion_identity_suite_counts():
    result = run_suite("inversion-identity", "A2")
    kinds = {rec.theorem for rec in result.records}
    assert kinds == {"KL-INV", "KL-SYM", "KL-DESCENT"}
    inv = [r for r in result.records if r.theorem == "KL-INV"]
    assert len(inv) == 36  # all ordered pairs of S3
    assert result.failed == 0


def test_descent_samples_are_reproducible():
    a = [r.text_line() for r in run_suite("inversion-identity", "A2").records
         if r.theorem == "KL-DESCENT"]
    b = [r.text_line() for r in run_suite("inversion-identity", "A2").records
         if r.theorem == "KL-DESCENT"]
    assert a == b and len(a) > 0


def test_family_guards():
    with pytest.raises(ParseError):
        run_suite("smoothness", "B3")
    with pytest.raises(ParseError):
        run_suite("brenti-simion", "D4")
    with pytest.raises(ParseError):
        run_suite("no-such-suite", "A3")


def test_slow_gate():
    with pytest.raises(EnumerationCapError):
        run_suite("main-theorem", "A6")
    # explicitly opting in clears the gate (rank small enough to finish)
    assert run_suite("main-theorem", "A2", slow=True).failed == 0


def test_parabolic_and_suite_mismatch():
    with pytest.raises(ParseError):
        run_suite("smoothness", "A3", parabolic="standard:s1")


def test_json_records_round_trip():
    result = run_suite("coset-theorem", "A2", parabolic="standard:s1")
    for rec in result.records:
        blob = canonical_json(rec.json_dict())
        again = canonical_json(json.loads(blob))
        assert again == blob
        parsed = json.loads(blob)
        assert parsed["schema"] == "klbounds.verdict/1"
        assert parsed["holds"] == rec.holds


def test_cache_accelerates_second_run(tmp_path):
    path = tmp_path / "suite.cache"
    first = run_suite("parabolic-equality", "A3", cache_path=str(path))
    assert path.exists() and path.stat().st_size > 0
    second = run_suite("parabolic-equality", "A3", cache_path=str(path))
    assert _lines(first) == _lines(second)
