"""End-to-end CLI runs against temporary output files."""

from __future__ import annotations

import csv
import json

import pytest

from brillouin.cli import ZONES_COLUMNS, main
from brillouin.lattice import reliable_k


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_build_stats_json(tmp_path, capsys):
    out = tmp_path / "arrangement.json"
    assert main(["build", "--m", "1", "--out", str(out), "--stats"]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["n_lines"] == 8
    doc = json.loads(out.read_text())
    assert doc["stats"]["n_lines"] == 8
    assert len(doc["faces"]) == doc["stats"]["n_faces"]


def test_metrics_schema_and_first_row(tmp_path):
    out = tmp_path / "zones.csv"
    assert main(["metrics", "--m", "3", "--kmax", "5", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ZONES_COLUMNS
    assert len(rows) == 6
    k1 = dict(zip(ZONES_COLUMNS, rows[1]))
    assert k1["k"] == "1"
    assert k1["r"] == "0.5"
    assert k1["R"] == "0.70710678118654757"
    assert (k1["area_num"], k1["area_den"]) == ("1", "1")
    assert k1["distortion"] == "1.1283791670955126"
    assert k1["reliable"] == "1"
    # Every exported zone of the unperturbed lattice has area exactly 1.
    assert all(r[4] == "1" and r[5] == "1" for r in rows[1:])


def test_metrics_deterministic_bytes(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        main(["metrics", "--m", "3", "--q", "200", "--seed", "7", "--kmax", "3",
              "--out", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_metrics_kmax_zero_writes_header_only(tmp_path):
    out = tmp_path / "zones.csv"
    assert main(["metrics", "--m", "2", "--kmax", "0", "--out", str(out)]) == 0
    assert _read_csv(out) == [ZONES_COLUMNS]


def test_metrics_refuses_unreliable_without_flag(tmp_path):
    rel = reliable_k(2).kmax
    out = tmp_path / "zones.csv"
    with pytest.raises(SystemExit, match="--unsafe"):
        main(["metrics", "--m", "2", "--kmax", str(rel + 1), "--out", str(out)])
    assert main(["metrics", "--m", "2", "--kmax", str(rel + 1), "--unsafe",
                 "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[-1][0] == str(rel + 1)
    assert rows[-1][-1] == "0"
    assert all(r[-1] == "1" for r in rows[1:-1])


def test_rays_unperturbed_has_zero_gaps(tmp_path):
    out = tmp_path / "rays.csv"
    assert main(["rays", "--m", "2", "--k", "1", "--directions", "8",
                 "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert len(rows) == 9
    by_u = {(r[0], r[1]): r for r in rows[1:]}
    r10 = by_u[("1", "0")]
    assert r10[2] == "1/4" and r10[4] == "0.5"
    assert all(r[2] == r[3] and r[6] == "0" for r in rows[1:])


def test_rays_rejects_bad_direction_count(tmp_path):
    with pytest.raises(SystemExit, match="multiple of 8"):
        main(["rays", "--m", "2", "--k", "1", "--directions", "12",
              "--out", str(tmp_path / "rays.csv")])


def test_verify_exit_code_and_json(tmp_path, capsys):
    out = tmp_path / "verify.json"
    assert main(["verify", "--m", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["passed"] is True
    assert doc["config"]["m"] == 2
    assert all(c["passed"] for c in doc["checks"])
    stdout = capsys.readouterr().out
    assert "all checks passed" in stdout
