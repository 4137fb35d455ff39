from .grid_util import detuning_grid
from .logging_utils import configure_logging, log_block, make_divider_block
from .package_info import PackageInfo
from .report_util import format_float, sidecar_name, write_csv, write_json, write_trace
