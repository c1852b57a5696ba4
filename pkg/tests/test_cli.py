import json
import subprocess
import sys

import pytest

from bracekit.braces import trivial_brace
from bracekit.cli import main
from bracekit.formats import save_brace, save_solution
from bracekit.grouptables import cyclic, dihedral, direct_product_group
from bracekit.ybe import make_solution, solution_from_brace

from conftest import klein_group, radical_ring_brace


@pytest.fixture
def ring_path(tmp_path):
    path = tmp_path / "ring.json"
    save_brace(radical_ring_brace(), path)
    return str(path)


@pytest.fixture
def swaps_path(tmp_path):
    sigma = [(1, 0, 2, 3)] * 4
    tau = [(0, 1, 3, 2)] * 4
    path = tmp_path / "swaps.json"
    save_solution(make_solution(sigma, tau), path)
    return str(path)


def test_verify_ok(ring_path, capsys):
    assert main(["verify", ring_path]) == 0
    out = capsys.readouterr().out
    assert "valid skew brace" in out
    assert "additive group: C4" in out
    assert "circle group: C2 x C2" in out


def test_verify_broken_table_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "order": 3,
        "add": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
        "circle": [[0, 1, 2], [1, 0, 2], [2, 2, 0]],
    }))
    assert main(["verify", str(bad)]) == 2


def test_verify_malformed_json_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", str(bad)]) == 2


def test_report_json_roundtrip(ring_path, capsys):
    assert main(["report", ring_path, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 4
    assert payload["radical"] == [0, 2]
    assert payload["weight"] == 1
    assert payload["wedderburn_factor_orders"] == [2]


def test_report_over_ideal_bound_exits_3(tmp_path, capsys):
    path = tmp_path / "c17.json"
    save_brace(trivial_brace(cyclic(17)), path)
    assert main(["report", str(path)]) == 3
    assert "bound exceeded" in capsys.readouterr().err


def test_ideals_with_dot(ring_path, tmp_path, capsys):
    dot = tmp_path / "lattice.dot"
    assert main(["ideals", ring_path, "--dot", str(dot)]) == 0
    out = capsys.readouterr().out
    assert "3 ideals" in out
    assert "[maximal" in out
    text = dot.read_text()
    assert text.startswith("digraph ideals {")
    assert '"{0}" -> "{0,2}"' in text
    assert '"{0,2}" -> "{0,1,2,3}"' in text


def test_radical_command(ring_path, capsys):
    assert main(["radical", ring_path]) == 0
    out = capsys.readouterr().out
    assert "radical: [0, 2]" in out
    assert "non-generators: [0, 2]" in out


def test_weight_command(tmp_path, capsys):
    c2 = cyclic(2)
    G = direct_product_group(direct_product_group(c2, c2), c2)
    path = tmp_path / "c2cubed.json"
    save_brace(trivial_brace(G), path)
    assert main(["weight", str(path)]) == 0
    assert "weight = 3" in capsys.readouterr().out
    assert main(["weight", str(path), "--no-opt"]) == 0
    assert "weight = 3" in capsys.readouterr().out


def test_decompose_command(tmp_path, capsys):
    path = tmp_path / "klein.json"
    save_brace(trivial_brace(klein_group()), path)
    assert main(["decompose", str(path)]) == 0
    out = capsys.readouterr().out
    assert "A/Rad(A) has order 4" in out
    assert "simple factors: [2, 2]" in out


def test_theoremcheck_corpus(capsys):
    assert main(["theoremcheck", "corpus:4", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 4
    for row in rows:
        assert all(status in ("pass", "na") for status in row["checks"].values())


def test_theoremcheck_single_file(ring_path, capsys):
    assert main(["theoremcheck", ring_path]) == 0
    out = capsys.readouterr().out
    assert "gaschutz" in out and "schur-embedding" in out


def test_enumerate_with_manifest(tmp_path, capsys):
    out_dir = tmp_path / "braces4"
    assert main(["enumerate", "4", "--out", str(out_dir)]) == 0
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert manifest["order"] == 4 and manifest["count"] == 4
    assert len(manifest["files"]) == 4
    for fname in manifest["files"]:
        payload = json.loads((out_dir / fname).read_text())
        assert payload["order"] == 4
        # every emitted file loads back as a valid brace via the CLI
        assert main(["verify", str(out_dir / fname)]) == 0


def test_sweep_to_file(tmp_path, capsys):
    out = tmp_path / "sweep6.json"
    assert main(["sweep", "6", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["count"] == 6
    assert all(bucket["fail"] == 0 for bucket in payload["aggregate"].values())


def test_ybe_check(swaps_path, capsys):
    assert main(["ybe", "check", swaps_path]) == 0
    out = capsys.readouterr().out
    assert "is_ybe: True" in out
    assert "is_involutive: False" in out
    assert "injectivity: unknown" in out


def test_ybe_check_witness_flag(swaps_path, capsys):
    assert main(["ybe", "check", swaps_path, "--witness"]) == 0
    assert "involutive_witness:" in capsys.readouterr().out


def test_ybe_check_failure_exit_code(tmp_path):
    sigma = [(1, 0, 2), (0, 2, 1), (2, 1, 0)]
    tau = [(0, 1, 2)] * 3
    path = tmp_path / "broken.json"
    save_solution(make_solution(sigma, tau), path)
    assert main(["ybe", "check", str(path)]) == 1


def test_ybe_from_brace_and_derived(ring_path, tmp_path, capsys):
    sol = tmp_path / "sol.json"
    assert main(["ybe", "from-brace", ring_path, "--out", str(sol)]) == 0
    capsys.readouterr()
    payload = json.loads(sol.read_text())
    expected = solution_from_brace(radical_ring_brace())
    assert payload["sigma"] == [list(r) for r in expected.sigma]
    assert main(["ybe", "derived", str(sol)]) == 0
    captured = capsys.readouterr()
    derived = json.loads(captured.out)
    assert derived["size"] == 4
    assert "quandle:" in captured.err


def test_ybe_group(swaps_path, capsys):
    assert main(["ybe", "group", swaps_path]) == 0
    out = capsys.readouterr().out
    assert "permutation group order: 2" in out
    assert "solution orbits (sigma and tau): [[0, 1], [2, 3]]" in out


def test_console_entry_point(ring_path):
    proc = subprocess.run([sys.executable, "-m", "bracekit.cli", "verify", ring_path],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "valid skew brace" in proc.stdout
