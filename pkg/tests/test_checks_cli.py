"""Check registry, report emission, sweep configs, and the CLI driver."""

import io
import json

import pytest

from braidkit.checks import (
    CheckParamError,
    STATUS_EXIT,
    check_names,
    exit_code_for,
    run_check,
)
from braidkit.cli import main
from braidkit.laurent import LaurentPoly
from braidkit.report import (
    CONVENTION_FINGERPRINT,
    ReportFormatError,
    SCHEMA_VERSION,
    build_report,
    canonical_json,
    emit_csv,
    emit_json,
    emit_table,
    validate_report,
)
from braidkit.sweep import ConfigError, SweepConfig, parse_config, run_sweep

ALL_CHECKS = (
    "alexander-module",
    "alexander-trivial",
    "band-witness",
    "fibre-genus",
    "filling",
    "growth-proxy",
    "homology-invariance",
    "pa",
    "periodic-identity",
    "twobridge-crosscheck",
    "unknot",
)


# -- registry ------------------------------------------------------------


def test_registry_names():
    assert check_names() == ALL_CHECKS


def test_every_check_verifies_at_genus_two():
    for name in check_names():
        record = run_check(name, {"genus": 2})
        assert record["status"] == "verified", (name, record)
        assert record["check"] == name


def test_unknown_check_raises():
    with pytest.raises(CheckParamError):
        run_check("nope", {})


def test_unknot_check_on_words():
    good = run_check("unknot", {"word": "4 1 2 3"})
    assert good["status"] == "verified"
    stuck = run_check("unknot", {"word": "2 1 1 1"})
    assert stuck["status"] == "inconclusive"
    broken = run_check("unknot", {"word": "not a braid"})
    assert broken["status"] == "error"
    link = run_check("unknot", {"word": "3 1"})
    assert link["status"] == "error"


def test_enhanced_needs_fixture_away_from_two():
    rec = run_check("unknot", {"genus": 3, "variant": "enhanced"})
    assert rec["status"] == "error"
    rec = run_check(
        "unknot", {"genus": 3, "variant": "enhanced", "phi_fixture": True}
    )
    assert rec["status"] == "verified"
    assert rec.get("phi_fixture") is True


def test_genus_two_only_checks():
    for name in ("homology-invariance", "alexander-module"):
        assert run_check(name, {"genus": 3})["status"] == "error"
        assert run_check(name, {"genus": 2})["status"] == "verified"


def test_growth_check_rejects_genus_one():
    # empty stirring word at genus 1, so every power gives the same braid
    rec = run_check("growth-proxy", {"genus": 1})
    assert rec["status"] == "error"
    assert "constant" in rec["message"]
    assert run_check("growth-proxy", {"genus": 2})["status"] == "verified"


def test_pa_check_fields():
    rec = run_check("pa", {"genus": 2})
    assert rec["verdict"] == "pseudo-anosov"
    assert abs(rec["dilatation"] - 4.390256884515715) < 1e-9
    rec = run_check("pa", {"genus": 2, "twist_word": "A B"})
    assert rec["verdict"] == "elliptic"
    assert rec["status"] == "refuted"


def test_exit_codes():
    assert STATUS_EXIT == {
        "verified": 0,
        "refuted": 1,
        "error": 1,
        "inconclusive": 2,
    }
    assert exit_code_for([{"status": "verified"}]) == 0
    assert exit_code_for([{"status": "verified"}, {"status": "inconclusive"}]) == 2
    assert exit_code_for([{"status": "inconclusive"}, {"status": "error"}]) == 1
    assert exit_code_for([]) == 0


# -- reports -------------------------------------------------------------


def sample_records():
    return [
        run_check("unknot", {"genus": 2, "power": 1}),
        run_check("alexander-trivial", {"genus": 2, "power": 1}),
        run_check("pa", {"genus": 2}),
    ]


def test_build_report_shape():
    doc = build_report(sample_records())
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["fingerprint"] == CONVENTION_FINGERPRINT
    validate_report(doc)


def test_report_sorting_and_timing_strip():
    records = [
        {"genus": 3, "power": 0, "variant": "original", "status": "verified", "seconds": 1.0},
        {"genus": 2, "power": 5, "variant": "original", "status": "verified", "seconds": 2.0},
        {"genus": 2, "power": 0, "variant": "enhanced", "status": "verified"},
    ]
    doc = build_report(records)
    got = [(r["genus"], r["power"]) for r in doc["records"]]
    assert got == [(2, 0), (2, 5), (3, 0)]
    assert all("seconds" not in r for r in doc["records"])
    kept = build_report(records, timing=True)
    assert any("seconds" in r for r in kept["records"])


def test_canonical_json_is_stable():
    doc = build_report(sample_records())
    a = canonical_json(doc)
    b = canonical_json(json.loads(a))
    assert a == b
    assert a.endswith("\n")
    assert ": " not in a  # minimal separators


def test_validate_report_rejects_malformed():
    with pytest.raises(ReportFormatError):
        validate_report([])
    with pytest.raises(ReportFormatError):
        validate_report({"schema_version": SCHEMA_VERSION})
    doc = build_report([{"status": "verified"}])
    doc["records"][0]["status"] = "maybe"
    with pytest.raises(ReportFormatError):
        validate_report(doc)
    doc = build_report([{"status": "verified"}])
    doc["schema_version"] = 99
    with pytest.raises(ReportFormatError):
        validate_report(doc)


def test_emit_json_round_trip():
    doc = build_report(sample_records())
    buf = io.StringIO()
    emit_json(doc, buf)
    assert json.loads(buf.getvalue()) == doc


def test_emit_csv_polynomials_round_trip():
    doc = build_report(
        [
            {
                "genus": 2,
                "power": 0,
                "variant": "original",
                "alexander_fibred": "0|1 -7 13 -7 1",
                "status": "verified",
            }
        ]
    )
    buf = io.StringIO()
    emit_csv(doc, buf)
    lines = buf.getvalue().strip().split("\n")
    header = lines[0].split(",")
    row = next(csv_row for csv_row in _csv_rows(buf.getvalue()))
    cell = row[header.index("alexander_fibred")]
    assert LaurentPoly.from_text(cell) == LaurentPoly.from_text("0|1 -7 13 -7 1")


def _csv_rows(text):
    import csv as _csv

    reader = _csv.reader(io.StringIO(text))
    next(reader)  # header
    yield from reader


def test_emit_table_alignment():
    doc = build_report(sample_records())
    buf = io.StringIO()
    emit_table(doc, buf)
    out = buf.getvalue()
    assert "status" in out.splitlines()[0]
    assert "verified" in out


# -- sweep configs -------------------------------------------------------


GOOD_CONFIG = """
# comment lines and blanks are ignored

genus = 2..3
power = 0..1
variant = original, enhanced
checks = unknot, alexander
parallelism = 2
"""


def test_parse_config():
    cfg = parse_config(GOOD_CONFIG)
    assert cfg.genus == (2, 3)
    assert cfg.power == (0, 1)
    assert cfg.variants == ("original", "enhanced")
    assert cfg.parallelism == 2


def test_parse_config_single_values_and_aliases():
    cfg = parse_config("genus = 2\npower = 0\nchecks = pa, fibre-genus\n")
    assert cfg.genus == (2,)
    assert cfg.power == (0,)
    assert "pa" in cfg.checks


def test_parse_config_errors():
    with pytest.raises(ConfigError):
        parse_config("power = 0..3\n")  # genus missing
    with pytest.raises(ConfigError):
        parse_config("genus = 2..1\npower = 0\n")  # empty range
    with pytest.raises(ConfigError):
        parse_config("genus = 2\npower = 0\nparallelism = 0\n")
    with pytest.raises(ConfigError):
        parse_config("genus = 2\npower = 0\nmystery = 1\n")
    with pytest.raises(ConfigError):
        parse_config("genus = 2\ngenus = 3\npower = 0\n")
    with pytest.raises(ConfigError):
        parse_config("genus two\npower = 0\n")
    with pytest.raises(ConfigError):
        parse_config("genus = 2\npower = 0\ntiming = sometimes\n")


def test_sweep_cardinality():
    cfg = SweepConfig(
        genus=(2, 3, 4),
        power=tuple(range(6)),
        variants=("original", "enhanced"),
        checks=("unknot",),
        parallelism=1,
    )
    records = run_sweep(cfg)
    per_variant = [r for r in records if r["variant"] == "original"]
    assert len(per_variant) == 18
    assert len(records) == 36
    assert all(r["status"] == "verified" for r in records)


def test_sweep_determinism_across_parallelism():
    base = dict(
        genus=(2,),
        power=(0, 1),
        variants=("original", "enhanced"),
        checks=("unknot", "alexander"),
    )
    seq = run_sweep(SweepConfig(parallelism=1, **base))
    par = run_sweep(SweepConfig(parallelism=2, **base))
    assert canonical_json(build_report(seq)) == canonical_json(
        build_report(par)
    )


def test_sweep_embeds_failures_instead_of_dropping():
    # enhanced at genus 3 without a fixture cannot be built; the sweep
    # fixture fills it in, so flag presence is the observable
    cfg = SweepConfig(
        genus=(3,),
        power=(0,),
        variants=("enhanced",),
        checks=("unknot",),
        parallelism=1,
    )
    records = run_sweep(cfg)
    assert len(records) == 1
    assert records[0]["phi_fixture"] is True


# -- CLI -----------------------------------------------------------------


def test_cli_family(capsys):
    assert main(["family", "--genus", "2", "--power", "1"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "5 4 -3 2 2 -3 -1 3 -2"


def test_cli_family_json(capsys):
    assert main(["family", "--genus", "1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["word"] == "3 2 -1"
    assert payload["strands"] == 3


def test_cli_family_error(capsys):
    assert main(["family", "--genus", "3", "--variant", "enhanced"]) == 1
    assert "error" in capsys.readouterr().err


def test_cli_check_exit_codes(capsys):
    assert main(["check", "unknot", "--genus", "2", "--power", "3"]) == 0
    assert main(["check", "unknot", "--word", "2 1 1 1"]) == 2
    assert main(["check", "homology-invariance", "--genus", "3"]) == 1
    capsys.readouterr()


def test_cli_check_json(capsys):
    assert main(["check", "pa", "--genus", "2", "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["verdict"] == "pseudo-anosov"


def test_cli_check_rejects_unknown_name():
    with pytest.raises(SystemExit):
        main(["check", "mystery-check"])


def test_cli_sweep_and_emit(tmp_path, capsys):
    config = tmp_path / "sweep.cfg"
    report = tmp_path / "report.json"
    config.write_text(
        "genus = 2..2\npower = 0..1\nvariant = original\n"
        f"checks = unknot, alexander\noutput = {report}\n"
    )
    assert main(["sweep", "--config", str(config)]) == 0
    err = capsys.readouterr().err
    assert "records=2" in err
    document = json.loads(report.read_text())
    validate_report(document)

    assert main(["emit", "--input", str(report), "--format", "table"]) == 0
    table = capsys.readouterr().out
    assert "status" in table

    assert main(["emit", "--input", str(report), "--format", "csv"]) == 0
    csv_text = capsys.readouterr().out
    assert "alexander_burau" in csv_text.splitlines()[0]

    out_json = tmp_path / "copy.json"
    assert (
        main(
            [
                "emit",
                "--input",
                str(report),
                "--format",
                "json",
                "--output",
                str(out_json),
            ]
        )
        == 0
    )
    assert out_json.read_text() == report.read_text()


def test_cli_sweep_bad_config(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("power = 1\n")
    assert main(["sweep", "--config", str(config)]) == 1
    assert "config error" in capsys.readouterr().err
    assert main(["sweep", "--config", str(tmp_path / "missing.cfg")]) == 1
    capsys.readouterr()


def test_cli_emit_rejects_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert main(["emit", "--input", str(bad)]) == 1
    assert "report error" in capsys.readouterr().err
