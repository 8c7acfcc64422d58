import json

import numpy as np
import pytest

from radialspec.cli import main, read_csv_function


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eigfun_csv_stdout(capsys):
    code, out, _ = run(
        capsys,
        "eigfun", "--l", "1", "--xi", "1", "--kappa", "0.5",
        "--lambda", "1.0", "--n-points", "5",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "r,u"
    assert len(lines) == 6


def test_eigfun_csv_json_equivalent(capsys):
    args = ("eigfun", "--l", "2", "--xi", "2", "--kappa", "-1.0",
            "--lambda", "0.7", "--n-points", "4")
    _, out_csv, _ = run(capsys, *args, "--format", "csv")
    _, out_json, _ = run(capsys, *args, "--format", "json")
    rows = json.loads(out_json)
    csv_rows = [line.split(",") for line in out_csv.strip().split("\n")[1:]]
    for row, crow in zip(rows, csv_rows):
        assert row["r"] == float(crow[0])
        assert row["u"] == float(crow[1])


def test_eigfun_deterministic(capsys):
    args = ("eigfun", "--l", "1", "--xi", "2", "--kappa", "1.5", "--lambda", "2.0")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_invalid_spec_exit_code(capsys):
    code, _, err = run(capsys, "eigfun", "--l", "3", "--xi", "1",
                       "--kappa", "0", "--lambda", "1.0")
    assert code == 2
    assert "error" in err


def test_pole_exit_code(capsys):
    zp = (2.0 / 3.0) * np.exp(1j * np.pi / 6)
    code, _, err = run(
        capsys,
        "resolvent", "--l", "1", "--xi", "1", "--kappa", "-1.0",
        "--z-re", str(zp.real), "--z-im", str(zp.imag), "--n-points", "3",
    )
    assert code == 4
    assert "pole" in err


def test_sector_violation_exit_code(capsys):
    code, _, _ = run(
        capsys,
        "resolvent", "--l", "1", "--xi", "1", "--kappa", "0.0",
        "--z-re", "1.0", "--z-im", "0.0", "--n-points", "3",
    )
    assert code == 2


def test_resolvent_split_columns(capsys):
    code, out, _ = run(
        capsys,
        "resolvent", "--l", "2", "--xi", "1", "--kappa", "0.3",
        "--z-re", "0.9", "--z-im", "0.4", "--n-points", "2", "--split",
    )
    assert code == 0
    header = out.strip().split("\n")[0].split(",")
    assert header[:4] == ["r", "s", "re_R", "im_R"]
    assert "re_Rg" in header and "im_R2" in header


def test_verify_only_wronskian(capsys):
    code, out, _ = run(capsys, "verify", "--only", "wronskian")
    assert code == 0
    lines = [l for l in out.strip().split("\n") if l]
    assert all(l.startswith("PASS [wronskian]") for l in lines)


def test_verify_injected_error_detected(capsys):
    code, out, _ = run(
        capsys, "verify", "--only", "coefficients",
        "--inject-coeff-error", "1,1,2,alpha",
    )
    assert code == 1
    assert "FAIL" in out
    # and the harness restores the table afterwards
    code, _, _ = run(capsys, "verify", "--only", "coefficients")
    assert code == 0


def test_spectrum_with_bound_state(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--l", "1", "--xi", "2", "--kappa", "-1.0",
        "--n-points", "3",
    )
    assert code == 0
    assert "z_p = " in out and "energy = -64" in out
    norm = float(out.split("norm = ")[1].split("\n")[0])
    assert abs(norm - 1.0) < 1e-6


def test_spectrum_without_bound_state(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--l", "1", "--xi", "1", "--kappa", "2.0",
        "--n-points", "3",
    )
    assert code == 0
    assert "no bound state" in out


def test_transform_roundtrip_builtin(capsys):
    code, out, _ = run(
        capsys,
        "transform", "--l", "1", "--xi", "1", "--kappa", "0.7",
        "--mode", "roundtrip", "--output", "/dev/null",
    )
    assert code == 0
    err_line = [l for l in out.split("\n") if "roundtrip" in l][0]
    assert float(err_line.split("=")[1]) < 1e-3
    defect_line = [l for l in out.split("\n") if "parseval" in l][0]
    assert float(defect_line.split("=")[1]) < 1e-3


def test_transform_csv_input_roundtrip(tmp_path, capsys):
    # write an eigfun-like CSV, read it back through the transform front end
    g = np.linspace(0.1, 12.0, 120)
    v = np.exp(-g) * g**2
    path = tmp_path / "f.csv"
    path.write_text("r,f\n" + "\n".join(f"{a},{b}" for a, b in zip(g, v)) + "\n")
    f = read_csv_function(str(path))
    assert np.allclose(f.values, v)
    code, _, _ = run(
        capsys,
        "transform", "--l", "1", "--xi", "1", "--kappa", "0.0",
        "--mode", "forward", "--input", str(path), "--output", "/dev/null",
    )
    assert code == 0


def test_transform_bad_input_file(capsys, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("r,f\n")
    code, _, err = run(
        capsys,
        "transform", "--l", "1", "--xi", "1", "--kappa", "0.0",
        "--input", str(bad),
    )
    assert code == 2
    assert "error" in err


def test_transform_sqrt_negative_spectrum_exit(capsys):
    code, _, err = run(
        capsys,
        "transform", "--l", "1", "--xi", "1", "--kappa", "-1.0",
        "--mode", "phi", "--phi", "sqrt", "--output", "/dev/null",
    )
    assert code == 5


def test_output_file_write(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, _, _ = run(
        capsys,
        "eigfun", "--l", "1", "--xi", "1", "--kappa", "0.5",
        "--lambda", "1.0", "--n-points", "4", "--output", str(path),
    )
    assert code == 0
    text = path.read_text()
    assert text.startswith("r,u\n")
    assert text.endswith("\n") and "\r" not in text
