import csv
import io
import json
from fractions import Fraction

import pytest

from hwz.algebra import Poly, RatFunc
from hwz.cli import (
    EXIT_GUARD,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY_FAIL,
    main,
    parse_fraction,
    parse_partition,
    parse_ratfunc,
    serialize_fraction,
    serialize_partition,
    serialize_ratfunc,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hurwitz_json(capsys):
    code, out, _ = run_cli(
        capsys, "hurwitz", "--mu", "1,1,1", "--genus", "0", "--kind", "monotone"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == "hwz/1"
    table = {tuple(row["nu"]): row["count"] for row in payload["result"]}
    assert table == {(3,): "4", (2, 1): "12", (1, 1, 1): "8"}


def test_hurwitz_csv_and_strict_zero(capsys):
    code, out, _ = run_cli(
        capsys, "hurwitz", "--mu", "1", "--nu", "1", "--genus", "2",
        "--kind", "strict", "--format", "csv",
    )
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["nu", "count"], ["1", "0"]]


def test_hurwitz_usage_errors(capsys):
    code, _, err = run_cli(capsys, "hurwitz", "--mu", "2", "--nu", "1,1,1")
    assert code == EXIT_USAGE and "mu" in err
    code, _, err = run_cli(capsys, "hurwitz", "--mu", "2", "--n", "3")
    assert code == EXIT_USAGE


def test_hurwitz_guard_refusal(capsys, monkeypatch):
    from hwz import hurwitz as mod

    mod._class_table.cache_clear()
    monkeypatch.setenv("HWZ_MAX_N", "3")
    code, _, err = run_cli(capsys, "hurwitz", "--mu", "2,2", "--genus", "0")
    assert code == EXIT_GUARD and "guard" in err


def test_cumulant_at_c(capsys):
    code, out, _ = run_cli(
        capsys, "cumulant", "--matrix", "inverse", "--mu", "2",
        "--c", "2", "--gmax", "4",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["result"]["at_c"]["coefficients"] == ["2"] * 5
    assert payload["result"]["validity"].startswith("convergent")


def test_cumulant_symbolic_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "cumulant", "--matrix", "wishart", "--mu", "1",
        "--c", "symbolic", "--route", "both",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    lead = parse_ratfunc(payload["result"]["coefficients"][0])
    assert lead == RatFunc.variable("c")
    assert payload["result"]["exact"] is True


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "recursion", "--nmax", "4")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["result"]["passed"] is True


def test_mc_subcommand(capsys):
    code, out, _ = run_cli(
        capsys, "mc", "--N", "2", "--c", "2", "--samples", "500",
        "--seed", "1", "--targets", "trW",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    est = payload["result"]["estimates"][0]
    assert est["exact"] == "2/1" and est["sigmas"] < 4


def test_mc_non_integer_M_refused(capsys):
    code, _, err = run_cli(
        capsys, "mc", "--N", "2", "--c", "5/4", "--samples", "10"
    )
    assert code == EXIT_USAGE and "integer M" in err


def test_wg_subcommand(capsys):
    code, out, _ = run_cli(capsys, "wg", "--n", "2")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert parse_ratfunc(payload["result"]["1,1"]) == RatFunc(
        Poly([1]), Poly([-1, 0, 1]), var="z"
    )


def test_serialization_roundtrips():
    mu = (3, 2, 2, 1)
    assert parse_partition(",".join(map(str, serialize_partition(mu)))) == mu
    for x in (Fraction(7), Fraction(-3, 4)):
        assert parse_fraction(serialize_fraction(x)) == x
    f = RatFunc(Poly([1, Fraction(2, 3)]), Poly([-1, 0, 1]), var="N")
    assert parse_ratfunc(serialize_ratfunc(f)) == f


def test_partition_parse_errors():
    with pytest.raises(Exception):
        parse_partition("2,0")
    with pytest.raises(Exception):
        parse_partition("a,b")
