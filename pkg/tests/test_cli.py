import json
import os

import pytest

import grothlab.cli as cli
from grothlab.algebra import ExactDivisionError
from grothlab.fixtures import out_chain_shifted, out_chain_straight
from grothlab.verify import CaseResult

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_paper_example(capsys):
    code, out, _ = run(capsys, "compute", "P", "2,1", "--n", "2", "--tcap", "1")
    assert code == 0
    assert "verdict: AGREE" in out
    assert "1  3 1 | 1 0" in out
    assert "2  2 2 | 0 1" in out


def test_compute_is_byte_deterministic(capsys):
    args = ("compute", "J", "2,1", "--n", "3", "--tcap", "1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_compute_single_route(capsys):
    code, out, _ = run(
        capsys, "compute", "J", "1", "--n", "2", "--tcap", "0", "--route", "combinatorial"
    )
    assert code == 0
    assert "verdict" not in out
    assert "1  1 0 |" in out and "1  0 1 |" in out


def test_compute_rejects_nonstrict_mu(capsys):
    code, _, err = run(capsys, "compute", "P", "2,2", "--n", "2")
    assert code == 1
    assert "strict" in err


def test_compute_schur_and_pschur_routes(capsys):
    code, out, _ = run(capsys, "compute", "schur", "2,1", "--n", "3", "--tcap", "0")
    assert code == 0 and "verdict: AGREE" in out
    code, out, _ = run(capsys, "compute", "pschur", "2,1", "--n", "2", "--tcap", "0")
    assert code == 0 and "verdict: AGREE" in out


def test_compute_json_matches_text(capsys):
    # both formats must carry the same terms, in the same order
    base = ("compute", "P", "2,1", "--n", "2", "--tcap", "1")
    _, text, _ = run(capsys, *base)
    _, raw, _ = run(capsys, *base, "--format", "json")
    payload = json.loads(raw)
    assert payload["verdict"] == "AGREE"
    text_lines = text.splitlines()
    for route in ("algebraic", "combinatorial"):
        wanted = [
            f"{c}  {' '.join(map(str, xe))} | {' '.join(map(str, te))}".rstrip()
            for c, xe, te in payload["routes"][route]
        ]
        start = text_lines.index(f"route {route}: {len(wanted)} terms") + 1
        assert text_lines[start : start + len(wanted)] == wanted


def test_expand_paper_example(capsys):
    code, out, _ = run(capsys, "expand", "P", "2,1", "--n", "2", "--tcap", "1")
    assert code == 0
    assert "3,1 : t1 + t2" in out
    assert "2,1 : 1" in out
    assert "verdict: AGREE" in out


def test_expand_json(capsys):
    code, raw, _ = run(
        capsys, "expand", "P", "2,1", "--n", "2", "--tcap", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(raw)
    assert payload["coefficients"]["3,1"] == [[1, [1, 0]], [1, [0, 1]]]
    assert payload["verdict"] == "AGREE"


def test_enumerate_counts(capsys):
    code, out, _ = run(
        capsys, "enumerate", "MT", "1", "--max-value", "2", "--extra", "1"
    )
    assert code == 0
    assert "count: 5" in out
    code, raw, _ = run(
        capsys, "enumerate", "SMT", "2,1", "--max-value", "2", "--extra", "1",
        "--format", "json",
    )
    payload = json.loads(raw)
    assert payload["count"] == 10
    assert all(t["signed"] is False for t in payload["tableaux"])


def test_enumerate_rt_requires_outer(capsys):
    code, _, err = run(capsys, "enumerate", "RT", "2,1")
    assert code == 1 and "outer" in err
    code, out, _ = run(capsys, "enumerate", "RT", "2,1", "--outer", "3,1")
    assert code == 0 and "count: 2" in out


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "maximal")
    assert code == 0
    assert "suite maximal: 4 cases, 0 failures" in out
    assert all(line.startswith(("PASS", "suite")) for line in out.strip().splitlines())


def test_verify_json(capsys):
    code, raw, _ = run(capsys, "verify", "maximal", "--format", "json")
    assert code == 0
    payload = json.loads(raw)
    assert payload["failures"] == 0
    assert len(payload["cases"]) == 4


def test_verify_reports_failures_with_exit_two(capsys, monkeypatch):
    monkeypatch.setattr(
        cli, "run_suite", lambda name: [CaseResult("stub", False, "boom")]
    )
    code, out, _ = run(capsys, "verify", "routes")
    assert code == 2
    assert "FAIL stub -- boom" in out


def test_internal_invariant_breach_exits_three(capsys, monkeypatch):
    def explode(spec):
        raise ExactDivisionError("no exact quotient exists")

    monkeypatch.setattr(cli, "grothendieck_J_algebraic", explode)
    code, _, err = run(capsys, "compute", "J", "1", "--n", "2")
    assert code == 3
    assert "internal invariant breach" in err


def test_trace_straight_chain(capsys):
    path = os.path.join(DATA, "outchain_straight_start.txt")
    code, out, _ = run(
        capsys, "trace", path, "--k", "2", "--flavor", "multiset", "--ell", "3"
    )
    assert code == 0
    steps = [line for line in out.splitlines() if line.startswith("step ")]
    assert steps == [
        "step 1: removed 3 at (2,2); path: (2,3) 4->3; appended 4 at (2,4)",
        "step 2: removed 3 at (2,2); path: (2,3) 3->3; (2,4) 4->3; appended 4 at (1,5)",
        "step 3: removed 2 at (1,2); path: (1,3) 2->2; (1,4) 2->2; (1,5) 4->2; appended 4 at (1,6)",
    ]
    assert "steps: 3" in out
    # every intermediate tableau of the worked chain is printed
    for state in out_chain_straight()[1:]:
        assert state.to_text() in out


def test_trace_shifted_chain(capsys):
    path = os.path.join(DATA, "outchain_shifted_start.txt")
    code, out, _ = run(
        capsys, "trace", path, "--k", "2", "--flavor", "shifted", "--ell", "3"
    )
    assert code == 0
    assert "steps: 4" in out
    assert "step 1: removed 5 at (3,4); appended 5 at (3,5)" in out
    for state in out_chain_shifted()[1:]:
        assert state.to_text() in out


def test_trace_in_direction_inverts_shifted_chain(capsys):
    path = os.path.join(DATA, "outchain_shifted_end.txt")
    code, out, _ = run(
        capsys, "trace", path, "--k", "2", "--flavor", "shifted", "--ell", "3",
        "--direction", "in", "--inner", "6,4,2",
    )
    assert code == 0
    assert "steps: 4" in out
    assert "deposited 2 at (1,2)" in out
    for state in reversed(out_chain_shifted()[:-1]):
        assert state.to_text() in out


def test_trace_in_direction_needs_inner(capsys):
    path = os.path.join(DATA, "outchain_shifted_end.txt")
    code, _, err = run(
        capsys, "trace", path, "--k", "2", "--flavor", "shifted", "--direction", "in"
    )
    assert code == 1 and "--inner" in err


def test_trace_singleton_is_empty(tmp_path, capsys):
    f = tmp_path / "t.txt"
    f.write_text("1 | 1\n2\n")
    code, out, _ = run(capsys, "trace", str(f), "--k", "1", "--flavor", "multiset")
    assert code == 0
    assert "steps: 0" in out


def test_trace_json_round_trip(capsys):
    path = os.path.join(DATA, "outchain_shifted_start.txt")
    code, raw, _ = run(
        capsys, "trace", path, "--k", "2", "--flavor", "shifted", "--ell", "3",
        "--format", "json",
    )
    payload = json.loads(raw)
    assert len(payload["steps"]) == 4
    assert payload["final"]["shape"] == [8, 5, 3]


def test_trace_rejects_bad_file(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1 | 1\n2 | 2\n")  # second row lacks its placeholder
    code, _, err = run(capsys, "trace", str(f), "--k", "1", "--flavor", "shifted")
    assert code == 1 and "placeholder" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "Q", "1", "--n", "1"])
    assert exc.value.code == 1
