"""The command-line driver: configs, reports, determinism, exit codes."""

import json

from hopfgalois.cli import main


def write_config(tmp_path, doc, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_catalog_lists_recipes(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    assert "quantum-borel" in out
    assert "cherednik" in out
    assert len([l for l in out.splitlines() if l.startswith("  ")]) == 7


def test_verify_quantum_borel(tmp_path):
    cfg = write_config(tmp_path, {"recipe": {"kind": "quantum-borel"}})
    out = tmp_path / "report.json"
    code = main(["verify", cfg, "--degree", "5", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["counterexamples"] == 0
    names = [c["check"] for c in doc["checks"]]
    assert "preserves-lattice" in names and "quantum-weyl-relation" in names
    for c in doc["checks"]:
        assert c["provenance"]


def test_verify_injected_counterexample(tmp_path):
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "ore", "p": [1]},
        "extra_generators": [
            {"name": "Y", "terms": [{"den_exps": [1], "inf": [1]}]}],
    })
    out = tmp_path / "report.json"
    code = main(["verify", cfg, "--out", str(out)])
    assert code == 1
    doc = json.loads(out.read_text())
    bad = [c for c in doc["checks"] if c["status"] == "counterexample"]
    assert bad and bad[0]["witness"]["operator"] == "Y"


def test_verify_malformed_config(tmp_path, capsys):
    cfg = write_config(tmp_path, {"recipe": {"n": 2}})
    assert main(["verify", cfg]) == 2
    assert "recipe.kind" in capsys.readouterr().err


def test_missing_config_file(capsys):
    assert main(["verify", "/nonexistent/config.json"]) == 2


def test_module_dump_weyl(tmp_path):
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "ore", "p": [1]},
        "point": ["0"],
        "bounds": {"jet_order": 3, "word_length": 3},
    })
    out = tmp_path / "report.json"
    code = main(["module", cfg, "--allow-truncation", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["module"]["dimension"] == 4
    assert doc["module"]["ordinary-weight-dim"] == 1
    assert doc["simple-quotient-dimension"] == 4
    assert doc["module"]["truncation-leaks"]["X"] is True
    # without the flag the leak is a failure
    assert main(["module", cfg, "--out", str(tmp_path / "r2.json")]) == 1


def test_module_jet_order_zero_is_character_line(tmp_path):
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "ore", "p": [0, 0, 1]},
        "point": ["0"],
    })
    out = tmp_path / "report.json"
    code = main(["module", cfg, "--jet-order", "1", "--word-length", "1",
                 "--allow-truncation", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["module"]["dimension"] == 1
    assert doc["scalar-family"]["status"] == "verified"


def test_module_reports_are_byte_identical(tmp_path):
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "ore", "p": [1]},
        "point": ["0"],
        "bounds": {"jet_order": 2, "word_length": 2},
    })
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    main(["module", cfg, "--allow-truncation", "--out", str(a)])
    main(["module", cfg, "--allow-truncation", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_stabilizer_report(tmp_path):
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "shift-flag", "n": 2, "group": "S2"},
        "point": ["1", "2"],
    })
    out = tmp_path / "report.json"
    assert main(["stabilizer", cfg, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert "e" in doc["stabilizer"]
    assert doc["finiteness"]["finite"] is True
    assert all(r["status"] == "verified" for r in doc["reductors"])


def test_spherical_report(tmp_path):
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "rational-differential", "n": 1, "group": "Z2"},
        "bounds": {"degree": 4, "word_length": 2},
    })
    out = tmp_path / "report.json"
    assert main(["spherical", cfg, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    checks = {c["check"]: c["status"] for c in doc["checks"]}
    assert checks["idempotent"] == "verified"
    assert checks["morita-witness"] == "verified"


def test_strict_inconclusive_exit(tmp_path):
    # the group ring alone is not Morita for the reflection group, so the
    # witness search is inconclusive at any bound; --strict surfaces it
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "rational-differential", "n": 1, "group": "Z2"},
        "generators": ["x1", "g"],
        "bounds": {"word_length": 2},
    })
    assert main(["spherical", cfg, "--out", str(tmp_path / "r.json")]) == 0
    assert main(["spherical", cfg, "--strict",
                 "--out", str(tmp_path / "r.json")]) == 3


def test_generators_filter_unknown_name(tmp_path, capsys):
    cfg = write_config(tmp_path, {
        "recipe": {"kind": "ore", "p": [1]},
        "generators": ["nope"],
    })
    assert main(["verify", cfg]) == 2
    assert "nope" in capsys.readouterr().err
