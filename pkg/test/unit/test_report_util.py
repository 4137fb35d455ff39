import json

import numpy as np  # type: ignore
import pytest  # type: ignore

from damspec import DomainError, SpectrumTrace
from damspec.utils import detuning_grid, format_float, sidecar_name, write_csv, write_json, write_trace


def test_format_float_keeps_twelve_digits():
    assert format_float(1 / 3) == "0.333333333333"
    assert format_float(2.0) == "2"


def test_write_csv_cells(tmp_path):
    path: str = write_csv(str(tmp_path), "peaks.csv", ("a", "b", "c", "d"), [[0.5, 3, True, None]])
    with open(path) as f:
        assert f.read() == "a,b,c,d\n0.5,3,true,\n"


def test_write_trace(tmp_path):
    trace = SpectrumTrace(deltas=[-1.0, 0.0], absorption=[0.25, 1.0 / 3])
    with open(write_trace(str(tmp_path), "spectrum.csv", trace)) as f:
        assert f.read().splitlines() == ["delta,absorption", "-1,0.25", "0,0.333333333333"]


def test_write_json_sorts_keys(tmp_path):
    path: str = write_json(str(tmp_path), "report.json", {"b": 1, "a": [1.5]})
    with open(path) as f:
        text: str = f.read()
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1.5], "b": 1}


def test_write_json_rejects_nan(tmp_path):
    with pytest.raises(ValueError):
        write_json(str(tmp_path), "report.json", {"a": float("nan")})


def test_sidecar_name():
    assert sidecar_name("spectrum_003.csv") == "spectrum_003.json"


def test_detuning_grid():
    grid: np.ndarray = detuning_grid(-1.0, 1.0, 5)
    assert list(grid) == [-1.0, -0.5, 0.0, 0.5, 1.0]


@pytest.mark.parametrize("args", [(1.0, -1.0, 5), (-1.0, 1.0, 2)])
def test_detuning_grid_rejects_invalid_arguments(args):
    with pytest.raises(DomainError):
        detuning_grid(*args)
