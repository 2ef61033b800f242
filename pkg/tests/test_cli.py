"""Command-line driver: exit codes, certificate output, JSON dumps, diagram
rendering, and orbit traces.
"""

import io
import json

from qtelescope import cli
from qtelescope.andrews12 import Triple
from qtelescope.macmahon import MacPair
from qtelescope.partitions import Partition
from qtelescope.telescope import Certificate, MarkedObject


def T(tau, lam=(), mu=()):
    return Triple(Partition(tuple(tau)), Partition(tuple(lam)),
                  Partition(tuple(mu)))


def run(argv):
    out = io.StringIO()
    code = cli.run(argv, out=out)
    return code, out.getvalue()


# verify ----------------------------------------------------------------------

def test_verify_macmahon_grid_emits_one_cert_per_cell():
    code, output = run(["verify", "macmahon", "--n-max", "4", "--m-max", "4"])
    assert code == 0
    lines = [ln for ln in output.splitlines() if ln]
    assert len(lines) == 25
    assert all(ln.startswith("[ok ]") for ln in lines)


def test_verify_andrews_single_n():
    code, output = run(["verify", "andrews", "--n", "2", "--cap", "20"])
    assert code == 0
    lines = output.splitlines()
    assert len(lines) == 3
    assert "andrews-identity" in lines[0]
    assert "andrews-rec-fn" in lines[1]
    assert "andrews-gn" in lines[2]


def test_verify_andrews_cap_below_square_is_usage_error():
    code, _ = run(["verify", "andrews", "--n", "2", "--cap", "1"])
    assert code == 2


def test_unknown_arguments_are_usage_errors():
    assert run(["verify", "nonsense"])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run([])[0] == 2


def test_json_format_lines_parse():
    code, output = run(["verify", "andrews", "--n", "1", "--format", "json"])
    assert code == 0
    for line in output.splitlines():
        obj = json.loads(line)
        assert obj["status"] == "verified"


def test_json_file_dump(tmp_path):
    path = tmp_path / "certs.json"
    code, _ = run(["verify", "macmahon", "--n", "1", "--m", "1",
                   "--json", str(path)])
    assert code == 0
    data = json.loads(path.read_text())
    assert isinstance(data, list) and len(data) == 1
    assert data[0]["check"] == "macmahon"
    assert data[0]["status"] == "verified"


def test_certificate_output_is_deterministic():
    _, first = run(["verify", "andrews", "--n", "2", "--format", "json"])
    _, second = run(["verify", "andrews", "--n", "2", "--format", "json"])

    def normalize(payload):
        rows = [json.loads(ln) for ln in payload.splitlines()]
        for row in rows:
            row["elapsed_ms"] = 0
        return rows

    assert normalize(first) == normalize(second)


def test_failed_certificate_yields_exit_one(monkeypatch):
    failed = Certificate(check="macmahon", params={"n": 0, "m": 0},
                         status="failed",
                         counterexample={"element": None, "image": None,
                                         "reason": "sub-identity-violated"})
    monkeypatch.setattr(cli.macmahon, "verify_macmahon", lambda n, m: failed)
    code, output = run(["verify", "macmahon", "--n", "0", "--m", "0"])
    assert code == 1
    assert "[FAIL]" in output


# check-bijection -----------------------------------------------------------------

def test_check_bijection_subcommands():
    assert run(["check-bijection", "macmahon-phi", "--n", "2", "--m", "1",
                "--k", "0"])[0] == 0
    assert run(["check-bijection", "macmahon-psi", "--n", "2", "--k", "1"])[0] == 0
    assert run(["check-bijection", "andrews-phi", "--n", "3", "--k", "1",
                "--cap", "20"])[0] == 0
    assert run(["check-bijection", "andrews-involution", "--n", "2", "--k", "2",
                "--cap", "20"])[0] == 0


def test_check_bijection_missing_m_is_usage_error():
    assert run(["check-bijection", "macmahon-phi", "--n", "2", "--k", "0"])[0] == 2


def test_check_bijection_bad_range_is_usage_error():
    assert run(["check-bijection", "andrews-phi", "--n", "3", "--k", "2"])[0] == 2
    assert run(["check-bijection", "andrews-involution", "--n", "3",
                "--k", "0"])[0] == 2


# trace ---------------------------------------------------------------------------

def test_trace_prints_the_pinned_staircase_orbit():
    code, output = run(["trace", "andrews", "--n", "2", "--k", "0",
                        "--cap", "10"])
    assert code == 0
    assert "phi(2,0):" in output
    assert "[marker 1] (empty)" in output


def test_trace_orbit_chains_until_unmarked():
    steps = cli.andrews_orbit(3, 0, T((2, 1, 0)))
    labels = [label for label, _ in steps]
    assert labels == ["start", "phi(3,0)", "involution(2,1)"]
    assert not isinstance(steps[-1][1], MarkedObject)


def test_trace_bad_range_is_usage_error():
    assert run(["trace", "andrews", "--n", "2", "--k", "5"])[0] == 2


# rendering -----------------------------------------------------------------------

def test_render_triple_with_zero_row():
    text = cli.render_diagram(T((1, 0)))
    lines = text.splitlines()
    assert lines[0] == "tau: ■"
    assert lines[1] == "     ·"
    assert "lam: (empty)" in lines
    assert "mu:  (empty)" in lines


def test_render_lambda_rows():
    text = cli.render_diagram(T((), (2, 1)))
    assert "lam: ■■" in text
    assert "     ■" in text


def test_render_marked_empty_triple():
    assert cli.render_diagram(MarkedObject(3, T(()))) == "[marker 3] (empty)"


def test_render_marked_with_z_shift():
    pair = MacPair(1, Partition(()))
    text = cli.render_diagram(MarkedObject(3, pair, marker_z=-1))
    assert text.splitlines()[0] == "[marker 3, z-1]"
    assert "side 1: ■" in text


def test_render_negative_square_pair():
    text = cli.render_diagram(MacPair(-2, Partition((4, 2))))
    lines = text.splitlines()
    assert lines[0] == "side -2: ■■"
    assert lines[1] == "         ■■"
    assert "mu:   ■■■■" in text
    assert "      ■■" in text
