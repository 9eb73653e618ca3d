from __future__ import annotations

import json

from parikhrs.presets import prs_preset, thue_preset
from parikhrs.prs import ParikhRewritingSystem
from parikhrs.suite import ENTRIES, verify_paper_suite


def test_zero_budget_skips_everything():
    report = verify_paper_suite("zero")
    assert {e.status for e in report.entries} == {"skipped"}
    assert report.exit_code == 2
    assert len(report.entries) == len(ENTRIES)


def test_entries_are_numbered_and_gated():
    ids = [e.id for e in ENTRIES]
    assert ids == sorted(ids) == list(range(1, len(ids) + 1))
    assert [e.id for e in ENTRIES if e.budget == "full"] == [18]


def test_cheap_subset_passes():
    report = verify_paper_suite("default", only=[1, 2, 4, 5, 10, 17])
    assert [e.status for e in report.entries] == ["pass"] * 6
    assert report.exit_code == 0
    data = json.loads(report.to_json())
    assert [e["id"] for e in data["entries"]] == [1, 2, 4, 5, 10, 17]
    assert report.to_table().splitlines()[0].split()[:2] == ["id", "status"]


def test_default_budget_omits_full_entries():
    report = verify_paper_suite("default", only=[17, 18])
    assert [e.id for e in report.entries] == [17]
    full = verify_paper_suite("full", only=[18])
    assert full.entries[0].status == "pass"


def test_removing_a_salomaa_rule_breaks_completeness():
    p = prs_preset("salomaa-abc")
    mutated = ParikhRewritingSystem(p.system.without("bcxcb"), p.counters)
    report = verify_paper_suite("default", overrides={"salomaa-abc": mutated}, only=[7])
    entry = report.entries[0]
    assert entry.status == "fail" and "prs-complete" in entry.detail
    assert entry.witness is not None and report.exit_code == 1


def test_corrupted_thue_preset_fails_its_entry():
    t = thue_preset("ternary-ex0701c")
    report = verify_paper_suite("default", overrides={"ternary-ex0701c": t.without("swap-ac")}, only=[6])
    assert report.entries[0].status == "fail"


def test_worker_pool_keeps_order():
    serial = verify_paper_suite("default", only=[4, 5, 8, 16])
    pooled = verify_paper_suite("default", only=[4, 5, 8, 16], workers=2)
    assert [(e.id, e.status) for e in serial.entries] == [(e.id, e.status) for e in pooled.entries]


def test_suite_passes_on_pure_python_kernels(pure_python):
    report = verify_paper_suite("default", only=list(range(3, 17)))
    assert {e.status for e in report.entries} == {"pass"}, report.to_table()
