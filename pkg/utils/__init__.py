from .error_handling import TunnelingError, ConfigError, TunnelingGroup
from .responses import csv_response, json_response, write_output
from .extensions import logger, configure_logging, parallel_map

__all__ = [
    "TunnelingError",
    "ConfigError",
    "TunnelingGroup",
    "csv_response",
    "json_response",
    "write_output",
    "logger",
    "configure_logging",
    "parallel_map"
]
