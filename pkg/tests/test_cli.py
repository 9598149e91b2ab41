import json

import pytest

from jetfibers.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_worked_example(capsys):
    code, out, _ = run(capsys, "expand", "x*y - z^2", "--m", "2")
    assert code == 0
    assert out == (
        "f^(0) = x0*y0 - z0^2\n"
        "f^(1) = x1*y0 + x0*y1 - 2*z0*z1\n"
        "f^(2) = x2*y0 + x1*y1 + x0*y2 - z1^2 - 2*z0*z2\n"
    )


def test_expand_order_zero(capsys):
    code, out, _ = run(capsys, "expand", "x^2 - y^2*z + z^3", "--m", "0")
    assert code == 0
    from jetfibers.poly import parse_polynomial

    line = out.strip().split(" = ", 1)[1]
    assert parse_polynomial(line) == parse_polynomial(
        "x0^2 - y0^2*z0 + z0^3"
    )


def test_expand_rejects_malformed_input(capsys):
    code, _, err = run(capsys, "expand", "x*y - z^", "--m", "1")
    assert code == 1
    assert "parse error" in err


def test_expand_rejects_jet_variables(capsys):
    code, _, err = run(capsys, "expand", "x1*y0", "--m", "1")
    assert code == 1
    assert "jet-indexed" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "an", "table", "--n", "3")  # missing --m
    assert code == 1


def test_unknown_format_is_usage_error(capsys):
    code, _, _ = run(capsys, "expand", "x", "--m", "1", "--format", "yaml")
    assert code == 1


def test_an_table_csv_bytes(capsys):
    code, out, _ = run(capsys, "an", "table", "--n", "3", "--m", "3..7", "--format", "csv")
    assert code == 0
    assert out == (
        "m,dim_Z,dim_Z12,dim_Z13,codim_Z,codim_Z12,codim_Z13,N12,N13\n"
        "3,7,6,5,5,6,7,1,1\n"
        "4,9,8,7,6,7,8,1,1\n"
        "5,11,10,10,7,8,8,2,1\n"
        "6,13,12,12,8,9,9,3,2\n"
        "7,15,14,14,9,10,10,4,3\n"
    )


def test_an_table_rejects_small_m(capsys):
    code, _, err = run(capsys, "an", "table", "--n", "3", "--m", "1..2")
    assert code == 1 and "m >= n" in err


def test_an_decompose_json(capsys):
    code, out, _ = run(
        capsys,
        "an", "decompose", "--n", "3", "--m", "8", "--i", "1", "--j", "2",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    dec = payload["decomposition"]
    assert dec["case"] == "d" and dec["count"] == 4
    assert dec["components"][0] == {
        "p": 2, "q": 6, "r": 2, "f_tail_from": 8, "f_tail_to": 8,
    }


def test_an_decompose_guard(capsys):
    code, _, err = run(capsys, "an", "decompose", "--n", "1", "--m", "1", "--i", "1", "--j", "1")
    assert code == 1


def test_an_graph_dot(capsys):
    code, out, _ = run(capsys, "an", "graph", "--n", "4")
    assert code == 0
    assert out == (
        'graph {\n  "Z1";\n  "Z2";\n  "Z3";\n  "Z4";\n'
        '  "Z1" -- "Z2";\n  "Z2" -- "Z3";\n  "Z3" -- "Z4";\n}\n'
    )


def test_an_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "an", "verify", "--n", "2", "--m", "3")
    assert code == 0
    assert "summary:" in out and "0 refuted" in out


def test_an_verify_single_pair_json(capsys):
    code, out, _ = run(
        capsys, "an", "verify", "--n", "3", "--m", "4", "--i", "1", "--j", "3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert all(r["outcome"] == "verified" for r in payload["reports"])
    assert all(r["seconds"] is None for r in payload["reports"])


def test_d4_ideals_listing(capsys):
    code, out, _ = run(capsys, "d4", "ideals", "--m", "5")
    assert code == 0
    assert "L2:" in out and "y1 - z1" in out


def test_d4_verify_guard(capsys):
    code, _, err = run(capsys, "d4", "verify", "--m", "4")
    assert code == 1
    assert "m >= 5" in err


def test_d4_verify_m5(capsys):
    code, out, _ = run(capsys, "d4", "verify", "--m", "5")
    assert code == 0
    assert "0 refuted" in out and "0 budget-exhausted" in out
    assert "strictness witnesses at m5" in out


def test_d4_verify_json_carries_witness_value(capsys):
    code, out, _ = run(capsys, "d4", "verify", "--m", "5", "--format", "json")
    assert code == 0
    assert '"value": "-32"' in out


def test_d4_graph_dot(capsys):
    code, out, _ = run(capsys, "d4", "graph", "--m", "6")
    assert code == 0
    assert out == (
        'graph {\n  "Z0";\n  "Z1";\n  "Z2";\n  "Z3";\n'
        '  "Z0" -- "Z1";\n  "Z0" -- "Z2";\n  "Z0" -- "Z3";\n}\n'
    )


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, out, _ = run(capsys, "an", "graph", "--n", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8") == (
        'graph {\n  "Z1";\n  "Z2";\n  "Z1" -- "Z2";\n}\n'
    )


def test_timings_flag_fills_seconds(capsys):
    code, out, _ = run(
        capsys, "an", "verify", "--n", "2", "--m", "2", "--format", "json", "--timings"
    )
    assert code == 0
    payload = json.loads(out)
    assert all(isinstance(r["seconds"], float) for r in payload["reports"])


def test_budget_flags_accepted(capsys):
    code, _, _ = run(
        capsys, "an", "verify", "--n", "2", "--m", "2",
        "--budget-spairs", "50000", "--budget-seconds", "60",
    )
    assert code == 0
