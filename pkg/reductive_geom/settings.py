"""Contains constants settings of the package."""
import os
import pathlib

APP_NAME = "reductive-geom"
APP_VERSION = "0.1.0"
REDUCTIVE_GEOM_DATA = pathlib.Path(
    os.environ.get(
        "REDUCTIVE_GEOM_DATA",
        pathlib.Path(pathlib.Path.home()) / ".local/share/reductive-geom",
    )
)

CONFIG_PATH = pathlib.Path(
    os.environ.get(
        "REDUCTIVE_GEOM_CONFIG",
        pathlib.Path(REDUCTIVE_GEOM_DATA / "config.yaml"),
    )
)
TOLERANCE_ENV = "REDUCTIVE_GEOM_TOL"

DEFAULT_TOLERANCE = 1e-9
DEFAULT_STRING_TOLERANCE = 1e-8
DEFAULT_RANK_THRESHOLD = 1e-8
DEFAULT_JOBS = 1
DEFAULT_OUTPUT_FORMAT = "json"
OUTPUT_FORMATS = ("json", "csv", "text")
SIGNIFICANT_DIGITS = 12

MIN_CLIFFORD_DIM = 1
MAX_CLIFFORD_DIM = 12
MIN_SPHERE_DIM = 2
MAX_SPHERE_DIM = 8
