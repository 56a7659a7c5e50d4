from __future__ import annotations

import csv
import io
import math
from pathlib import Path

import pytest

from zetalab import primes, tables
from zetalab.errors import DomainError
from zetalab.tables import TABLE_IDS, emit_figure1, emit_table, fmt

GOLDEN = Path(__file__).parent / "golden"


def read_rows(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize("table_id", TABLE_IDS)
def test_table_matches_golden(table_id):
    assert emit_table(table_id) == (GOLDEN / f"{table_id}.csv").read_text(encoding="utf-8")


def test_emit_table_case_insensitive_and_unknown():
    assert emit_table("t1") == emit_table("T1")
    with pytest.raises(DomainError):
        emit_table("T8")


def test_csv_uses_bare_newlines():
    text = emit_table("T3")
    assert "\r" not in text and text.endswith("\n")


@pytest.mark.parametrize(
    "value, expected",
    [(True, "true"), (False, "false"), (7, "7"), (0.1, "0.1"), (math.pi, "3.14159265359"),
     (math.inf, "inf"), (-math.inf, "-inf"), (math.nan, "nan"), ("2pi/ln2", "2pi/ln2")],
)
def test_fmt(value, expected):
    assert fmt(value) == expected


def test_table1_rows_are_the_primes_below_100():
    rows = read_rows(emit_table("T1"))
    assert [int(r["q"]) for r in rows] == primes.sieve_primes(100)
    assert len(rows) == 25
    assert all(r["consistent"] == "true" for r in rows)


def test_table2_relation_holds_on_every_row():
    rows = read_rows(emit_table("T2"))
    assert len(rows) == 25
    assert all(float(r["residual"]) <= 1e-12 for r in rows)


@pytest.mark.parametrize("table_id, column, members", [("T3", "q1", 0), ("T4", "q2", 1)])
def test_twin_tables_follow_twin_pairs(table_id, column, members):
    rows = read_rows(emit_table(table_id))
    assert [int(r[column]) for r in rows] == [pair[members] for pair in primes.twin_pairs(100)]


def test_table5_lists_only_sieve_twins():
    rows = read_rows(emit_table("T5"))
    assert [int(r["chi"]) for r in rows] == [1, 2, 3, 5, 7, 10, 12]
    assert all(r["is_twin"] == "true" for r in rows)
    for r in rows:
        assert primes.is_prime(int(r["six_chi_minus_1"])) and primes.is_prime(int(r["six_chi_plus_1"]))


def test_chi_candidates_include_non_twins():
    rejected = [r for r in tables.chi_candidates() if not r.is_twin]
    assert rejected and all(r.lower < 100 for r in rejected)
    assert (35, 37) in [(r.lower, r.upper) for r in rejected]


def test_table6_forms_agree():
    rows = read_rows(emit_table("T6"))
    assert rows[0]["b_symbolic"] == "4pi/ln2"
    assert all(float(r["residual"]) <= 1e-12 for r in rows)


def test_table7_reports_measured_values():
    rows = read_rows(emit_table("T7"))
    assert len(rows) == 25
    assert all(r["verdict"] == "refuted" for r in rows)
    assert all(abs(float(r["abs_zeta_plus"]) - float(r["abs_zeta_minus"])) < 1e-10 for r in rows)


def test_tables_are_computed_not_stored(monkeypatch):
    # Perturbing a formula must change the output.
    before = emit_table("T6")
    monkeypatch.setattr(primes, "b_of", lambda n, g: 0.0)
    assert emit_table("T6") != before


def test_tables_depend_on_sieve(monkeypatch):
    monkeypatch.setattr(primes, "sieve_primes", lambda limit: [2, 3, 5])
    assert len(read_rows(emit_table("T1"))) == 3


def test_figure1_cells():
    rows = read_rows(emit_figure1(10.0, 100.0, 10, gamma_max=3, gamma_min=0))
    assert len(rows) == 40
    first = rows[0]
    assert float(first["b"]) == 10.0 and int(first["gamma"]) == 0
    assert float(first["q"]) == pytest.approx(math.exp(2 * math.pi / 10), rel=1e-11)
    for r in rows:
        b, g = float(r["b"]), int(r["gamma"])
        expected = (2 * math.pi / b) * math.exp(2 * math.pi * g / b)
        assert float(r["ln_q"]) == pytest.approx(expected, rel=1e-11)


def test_figure1_large_b_tends_to_one():
    rows = read_rows(emit_figure1(1e9, 1e9, 1, gamma_max=1))
    assert float(rows[0]["q"]) == pytest.approx(1.0, abs=1e-8)


def test_figure1_overflow_is_inf():
    rows = read_rows(emit_figure1(1.0, 1.0, 1, gamma_max=200))
    assert rows[-1]["q"] == "inf"


@pytest.mark.parametrize(
    "args",
    [(0.0, 10.0, 5), (10.0, 5.0, 5), (1.0, 2.0, 0)],
)
def test_figure1_rejects_bad_grids(args):
    with pytest.raises(DomainError):
        emit_figure1(*args)


def test_figure1_rejects_inverted_gamma_range():
    with pytest.raises(DomainError):
        emit_figure1(1.0, 2.0, 2, gamma_max=1, gamma_min=3)
