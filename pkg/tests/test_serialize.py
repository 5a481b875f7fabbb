import numpy as np
import pytest

from qmol.dynamics import trajectory
from qmol.hamiltonian import SystemParams
from qmol.serialize import (
    fmt6,
    metadata_lines,
    parse_metadata,
    pgm_bytes,
    sweep_csv_bytes,
    table_csv_bytes,
    trajectory_csv_bytes,
)
from qmol.states import basis_state
from qmol.sweep import eigen_concurrence_map


def test_fmt6_basic():
    assert fmt6(0.5) == "0.500000"
    assert fmt6(-1.25) == "-1.250000"
    assert fmt6(1.0 / 3.0) == "0.333333"
    assert fmt6(2) == "2.000000"


def test_fmt6_negative_zero_normalized():
    assert fmt6(-0.0) == "0.000000"
    assert fmt6(-1e-9) == "0.000000"


def test_metadata_round_trip_preserves_floats():
    meta = {"j": 25.0, "d1": 10.825317547305483, "steps": 301, "init": "RL"}
    text = "\n".join(metadata_lines(meta)) + "\nbody\n"
    back = parse_metadata(text)
    assert float(back["j"]) == 25.0
    assert float(back["d1"]) == 10.825317547305483  # repr survives exactly
    assert int(back["steps"]) == 301
    assert back["init"] == "RL"


def test_metadata_lines_format():
    assert metadata_lines({"a": 1.5}) == ["# a = 1.5"]


def test_parse_metadata_stops_at_first_data_line():
    text = "# a = 1\n# b = 2\nx,y\n# not metadata\n"
    assert parse_metadata(text) == {"a": "1", "b": "2"}


def test_metadata_rejects_boolean():
    with pytest.raises(TypeError):
        metadata_lines({"flag": True})


def test_table_csv_layout():
    data = table_csv_bytes({"k": "v"}, ("a", "b"), [("1", "2"), ("3", "4")])
    assert data == b"# k = v\na,b\n1,2\n3,4\n"


def test_trajectory_csv_columns_and_values():
    p = SystemParams(delta1=2.0, delta2=2.0, j=25.0)
    traj = trajectory(p, basis_state("RL"), 0.2, 3)
    data = trajectory_csv_bytes(traj, {"command": "dynamics"}).decode("ascii")
    lines = data.splitlines()
    assert lines[0] == "# command = dynamics"
    assert lines[1] == "t_ns,P_LL,P_LR,P_RL,P_RR,concurrence"
    first = lines[2].split(",")
    assert first == ["0.000000", "0.000000", "0.000000", "1.000000", "0.000000", "0.000000"]
    assert len(lines) == 2 + 3


def test_sweep_csv_layout():
    grid = eigen_concurrence_map(
        SystemParams(delta1=25.0 / 16, delta2=25.0 / 16, j=25.0), 1,
        eps_min=-25.0, eps_max=25.0, eps_steps=3,
    )
    data = sweep_csv_bytes(grid, {"kind": "eigen"}).decode("ascii")
    lines = data.splitlines()
    assert lines[0] == "# kind = eigen"
    assert lines[1] == ",-25.000000,0.000000,25.000000"
    assert lines[2].startswith("-25.000000,")
    assert len(lines[2].split(",")) == 4
    assert len(lines) == 1 + 1 + 3
    # the (0, 0) corner sits on the eps2 = eps1 line where C = 1
    assert lines[2].split(",")[1] == "1.000000"


def test_pgm_header_and_pixels():
    values = np.array([[0.0, 0.5], [1.0, 0.25]])
    data = pgm_bytes(values)
    assert data.startswith(b"P5\n2 2\n255\n")
    pixels = data[len(b"P5\n2 2\n255\n"):]
    assert list(pixels) == [0, 128, 255, 64]  # row 0 written first


def test_pgm_clips_out_of_range():
    data = pgm_bytes(np.array([[-0.2, 1.7]]))
    header = b"P5\n2 1\n255\n"
    assert data.startswith(header)
    assert list(data[len(header):]) == [0, 255]


def test_pgm_rejects_non_matrix():
    with pytest.raises(ValueError):
        pgm_bytes(np.zeros(4))


def test_outputs_are_ascii_bytes():
    data = table_csv_bytes({"x": 1.0}, ("c",), [("0.000000",)])
    assert isinstance(data, bytes)
    data.decode("ascii")
