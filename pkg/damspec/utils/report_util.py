import csv
import json
import logging
import os
import typing

from damspec.config import CSV_SIGNIFICANT_DIGITS
from damspec.objects import SpectrumTrace

_logger: logging.Logger = logging.getLogger(__name__)

_FLOAT_FORMAT: str = "{:." + str(CSV_SIGNIFICANT_DIGITS) + "g}"


def format_float(value: float) -> str:
    return _FLOAT_FORMAT.format(float(value))


def _cell(value: typing.Any) -> str:
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value).lower()
    if isinstance(value, (int, str)):
        return str(value)
    return format_float(value)


def write_csv(
    directory: str, name: str, header: typing.Sequence[str], rows: typing.Iterable[typing.Sequence[typing.Any]]
) -> str:
    """
    Writes ``rows`` below ``header``; floats carry 12 significant digits.
    """
    path: str = os.path.join(directory, name)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        count: int = 0
        for row in rows:
            writer.writerow([_cell(v) for v in row])
            count += 1
    _logger.debug("Wrote {} rows to {}".format(count, path))
    return path


def write_trace(directory: str, name: str, trace: SpectrumTrace) -> str:
    return write_csv(directory, name, ("delta", "absorption"), zip(trace.deltas, trace.absorption))


def write_json(directory: str, name: str, document: typing.Dict[str, typing.Any]) -> str:
    """
    Writes ``document`` with sorted keys so identical runs produce identical
    files.
    """
    path: str = os.path.join(directory, name)
    with open(path, "w") as f:
        json.dump(document, f, indent=2, sort_keys=True, allow_nan=False)
        f.write("\n")
    _logger.debug("Wrote {}".format(path))
    return path


def sidecar_name(name: str) -> str:
    """
    ``spectrum.csv`` -> ``spectrum.json``
    """
    return os.path.splitext(name)[0] + ".json"
