import configparser
import os
import typing

import pytest  # type: ignore

import damspec

conf = configparser.ConfigParser()
root_path = os.path.dirname(os.path.abspath(__file__))
conf.read(root_path + "/config.ini")


def _get_default_phenomenology_args() -> typing.Dict[str, typing.Union[float, int]]:
    """
    Helper function defining the oracle settings of the slow test tier.
    Returns
    -------

    """
    return {
        "probe_rabi": conf.getfloat("phenomenology", "probe_rabi", fallback=0.05),
        "spot_points": conf.getint("phenomenology", "spot_points", fallback=5),
        "grid_points": conf.getint("phenomenology", "grid_points", fallback=61),
        "harmonics": conf.getint("phenomenology", "harmonics", fallback=4),
    }


@pytest.fixture(scope="class")
def oracle_kwargs() -> typing.Dict[str, typing.Union[float, int]]:
    return _get_default_phenomenology_args()


@pytest.fixture
def minimal_config() -> typing.Dict[str, typing.Any]:
    return {"F_g": 2, "F_e": 1, "omega_c_rabi": 1.0}


@pytest.fixture
def run_property(tmp_path) -> damspec.RunProperty:
    info: damspec.RunProperty = damspec.ConfigHelper.parse_config(
        '{"F_g": 2, "F_e": 1, "omega_c_rabi": 1.0, "grid": {"min": -1.5, "max": 1.5, "points": 31}}'
    )
    info.put("output_dir", str(tmp_path / "out"))
    return info
