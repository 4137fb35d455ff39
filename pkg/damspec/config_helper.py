import json
import logging
import math
import typing

from damspec.angular_momentum import check_transition
from damspec.config import Normalization, RunMode, SolverMethod
from damspec.error import ConfigError, DomainError
from damspec.run_property import RunProperty
from damspec.utils import log_block

_logger: logging.Logger = logging.getLogger(__name__)

_Number = typing.Union[int, float]


class ConfigHelper:
    # keys accepted at the top level of a run configuration
    TOP_LEVEL_KEYS: typing.Tuple[str, ...] = (
        "F_g",
        "F_e",
        "omega_c_rabi",
        "gamma",
        "theta_degrees",
        "coupling_phase",
        "loss_rate",
        "probe_rabi",
        "mode",
        "sweep_values",
        "probe_sweep_values",
        "output_dir",
        "detuning_grid",
    )
    # nested section -> {key in section: RunProperty attribute}
    SECTIONS: typing.Dict[str, typing.Dict[str, str]] = {
        "grid": {"min": "grid_min", "max": "grid_max", "points": "grid_points"},
        "solver": {
            "method": "method",
            "harmonics": "harmonics",
            "max_harmonics": "max_harmonics",
            "convergence_tol": "convergence_tol",
            "normalization": "normalization",
            "max_workers": "max_workers",
        },
        "pathways": {
            "population_threshold": "population_threshold",
            "merge_tolerance": "merge_tolerance",
            "two_photon_half_width": "two_photon_half_width",
            "reference_omega_c": "reference_omega_c",
        },
        "output": {"min_prominence": "min_prominence"},
    }
    # the coupling field is always resonant
    OFF_RESONANT_KEYS: typing.Tuple[str, ...] = ("coupling_detuning", "delta_c")

    @staticmethod
    def read_config(path: str) -> RunProperty:
        try:
            with open(path, "r") as f:
                text: str = f.read()
        except OSError as e:
            raise ConfigError("Unable to read run configuration {}: {}".format(path, e))
        _logger.debug("Read {} characters of run configuration from {}".format(len(text), path))
        return ConfigHelper.parse_config(text)

    @staticmethod
    def parse_config(text: str) -> RunProperty:
        """
        Parses a JSON run configuration, applies defaults and validates it.

        Parameters
        ----------
        text : str
            A JSON object. Settings may be given flat at the top level or
            grouped in the ``grid``, ``solver``, ``pathways`` and ``output``
            sections.

        Returns
        -------
        The validated run settings: :class:`RunProperty`

        Raises
        ------
        :class:`ConfigError` naming the dotted path of the offending key.
        """
        try:
            document: typing.Any = json.loads(text)
        except ValueError as e:
            raise ConfigError("Malformed run configuration: {}".format(e))
        if not isinstance(document, dict):
            raise ConfigError("Run configuration must be a JSON object, got {}".format(type(document).__name__))

        info: RunProperty = RunProperty()
        for key, value in document.items():
            if key in ConfigHelper.OFF_RESONANT_KEYS:
                raise ConfigError("off-resonant coupling is not supported", key_path=key)
            if key in ConfigHelper.SECTIONS:
                ConfigHelper._read_section(info, key, value)
            elif key == "detuning_grid":
                if not isinstance(value, list) or len(value) != 3:
                    raise ConfigError("expected [min, max, points]", key_path=key)
                info.put("grid_min", ConfigHelper._number(value[0], "detuning_grid[0]"))
                info.put("grid_max", ConfigHelper._number(value[1], "detuning_grid[1]"))
                info.put("grid_points", ConfigHelper._integer(value[2], "detuning_grid[2]"))
            elif key in ConfigHelper.TOP_LEVEL_KEYS:
                info.put(key, ConfigHelper._coerce(key, key, value))
            else:
                raise ConfigError("unknown key", key_path=key)

        log_block(_logger, "User provided run settings", [info.__str__()])

        ConfigHelper.validate(info)
        return info

    @staticmethod
    def _read_section(info: RunProperty, section: str, value: typing.Any) -> None:
        if not isinstance(value, dict):
            raise ConfigError("section must be a JSON object", key_path=section)
        keys: typing.Dict[str, str] = ConfigHelper.SECTIONS[section]
        for key, item in value.items():
            path: str = "{}.{}".format(section, key)
            if key in ConfigHelper.OFF_RESONANT_KEYS:
                raise ConfigError("off-resonant coupling is not supported", key_path=path)
            if key not in keys:
                raise ConfigError("unknown key", key_path=path)
            info.put(keys[key], ConfigHelper._coerce(keys[key], path, item))

    @staticmethod
    def _coerce(attribute: str, path: str, value: typing.Any) -> typing.Any:
        if value is None:
            raise ConfigError("null is not a valid value", key_path=path)
        if attribute == "mode":
            return ConfigHelper._enum(RunMode, value, path)
        if attribute == "method":
            return ConfigHelper._enum(SolverMethod, value, path)
        if attribute == "normalization":
            return ConfigHelper._enum(Normalization, value, path)
        if attribute == "output_dir":
            if not isinstance(value, str) or value == "":
                raise ConfigError("expected a non-empty path", key_path=path)
            return value
        if attribute in ("sweep_values", "probe_sweep_values"):
            if not isinstance(value, list):
                raise ConfigError("expected a list of Rabi frequencies", key_path=path)
            return [ConfigHelper._number(v, "{}[{}]".format(path, i)) for i, v in enumerate(value)]
        if attribute in ("grid_points", "harmonics", "max_harmonics", "max_workers"):
            return ConfigHelper._integer(value, path)
        return ConfigHelper._number(value, path)

    @staticmethod
    def _enum(enum_type: typing.Any, value: typing.Any, path: str) -> typing.Any:
        if value not in enum_type.list():
            raise ConfigError("expected one of {}, got {!r}".format(enum_type.list(), value), key_path=path)
        return enum_type(value)

    @staticmethod
    def _number(value: typing.Any, path: str) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError("expected a number, got {!r}".format(value), key_path=path)
        if not math.isfinite(value):
            raise ConfigError("expected a finite number, got {!r}".format(value), key_path=path)
        return float(value)

    @staticmethod
    def _integer(value: typing.Any, path: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError("expected an integer, got {!r}".format(value), key_path=path)
        return value

    @staticmethod
    def _require(condition: bool, message: str, path: str) -> None:
        if not condition:
            raise ConfigError(message, key_path=path)

    @staticmethod
    def validate(info: RunProperty) -> None:
        """
        Checks ranges and cross-field constraints of a populated RunProperty.
        """
        for required in ("F_g", "F_e", "omega_c_rabi"):
            ConfigHelper._require(getattr(info, required) is not None, "required key is missing", required)
        for name in ("F_g", "F_e"):
            value: float = getattr(info, name)
            ConfigHelper._require(
                value >= 0 and abs(2 * value - round(2 * value)) < 1e-12,
                "expected a non-negative integer or half-integer, got {}".format(value),
                name,
            )
        try:
            check_transition(info.F_g, info.F_e)
        except DomainError as e:
            raise ConfigError(str(e), key_path="F_e")

        ConfigHelper._require(info.omega_c_rabi >= 0, "must be non-negative", "omega_c_rabi")
        ConfigHelper._require(info.gamma > 0, "must be positive", "gamma")
        ConfigHelper._require(info.loss_rate >= 0, "must be non-negative", "loss_rate")
        ConfigHelper._require(info.probe_rabi >= 0, "must be non-negative", "probe_rabi")

        ConfigHelper._require(info.grid_min < info.grid_max, "grid min must be below grid max", "grid.min")
        ConfigHelper._require(info.grid_points >= 3, "at least 3 grid points are required", "grid.points")

        ConfigHelper._require(info.harmonics >= 1, "must be at least 1", "solver.harmonics")
        ConfigHelper._require(
            info.max_harmonics >= info.harmonics, "must not be below solver.harmonics", "solver.max_harmonics"
        )
        ConfigHelper._require(info.convergence_tol > 0, "must be positive", "solver.convergence_tol")
        ConfigHelper._require(info.max_workers >= 1, "must be at least 1", "solver.max_workers")

        ConfigHelper._require(
            0 <= info.population_threshold < 1, "must lie in [0, 1)", "pathways.population_threshold"
        )
        ConfigHelper._require(info.merge_tolerance >= 0, "must be non-negative", "pathways.merge_tolerance")
        ConfigHelper._require(info.two_photon_half_width > 0, "must be positive", "pathways.two_photon_half_width")
        ConfigHelper._require(info.reference_omega_c > 0, "must be positive", "pathways.reference_omega_c")
        ConfigHelper._require(info.min_prominence >= 0, "must be non-negative", "output.min_prominence")

        if info.sweep_values is not None:
            ConfigHelper._require(len(info.sweep_values) > 0, "sweep list is empty", "sweep_values")
            for i, value in enumerate(info.sweep_values):
                ConfigHelper._require(value >= 0, "must be non-negative", "sweep_values[{}]".format(i))
        if info.probe_sweep_values is not None:
            ConfigHelper._require(
                len(info.probe_sweep_values) >= 2, "at least 2 probe values are required", "probe_sweep_values"
            )
            for i, value in enumerate(info.probe_sweep_values):
                ConfigHelper._require(value > 0, "must be positive", "probe_sweep_values[{}]".format(i))
        if info.mode is RunMode.Sweep:
            ConfigHelper._require(info.sweep_values is not None, "required in sweep mode", "sweep_values")

    @staticmethod
    def parse_grid(text: str) -> typing.Tuple[float, float, int]:
        """
        Parses a ``min:max:points`` grid given on the command line.
        """
        parts: typing.List[str] = text.split(":")
        if len(parts) != 3:
            raise ConfigError("expected min:max:points, got {!r}".format(text), key_path="grid")
        try:
            return float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigError("expected min:max:points, got {!r}".format(text), key_path="grid")

    @staticmethod
    def apply_overrides(
        info: RunProperty,
        output_dir: typing.Optional[str] = None,
        method: typing.Optional[str] = None,
        grid: typing.Optional[str] = None,
        mode: typing.Optional[RunMode] = None,
    ) -> RunProperty:
        """
        Merges command line flags into ``info`` and validates the result.
        Flags left as None keep the configured value.
        """
        if method is not None:
            info.put("method", ConfigHelper._enum(SolverMethod, method, "solver.method"))
        if grid is not None:
            grid_min, grid_max, grid_points = ConfigHelper.parse_grid(grid)
            info.put("grid_min", grid_min)
            info.put("grid_max", grid_max)
            info.put("grid_points", grid_points)
        info.put("output_dir", output_dir)
        info.put("mode", mode)

        ConfigHelper.validate(info)

        log_block(_logger, "Run settings following validation and command line overrides", [info.__str__()])
        return info
