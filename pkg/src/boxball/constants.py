from pathlib import Path
import re
import os
import logging

# Directory paths
# Allow override via environment variable (needed when installed outside the checkout)
PROJECT_ROOT = Path(os.environ.get('BOXBALL_PROJECT_ROOT', Path(__file__).resolve().parent.parent.parent))

LOG_PATH = PROJECT_ROOT / "logs"
CONFIG_PATH = PROJECT_ROOT / "config"
FILES_PATH = PROJECT_ROOT / "files"

# File Paths
CONFIG_FILE = Path(os.environ.get('BOXBALL_CONFIG', CONFIG_PATH / "config.yaml"))
CONFIG_SCHEMA_FILE = FILES_PATH / "config_schema.yaml"

# Logging
LOG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s] %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_LEVELS = ["INFO", "ERROR", "WARN", "WARNING", "DEBUG"]
LOG_VIEW_LENGTH = 1000

# Exit codes (stable contract for CI)
EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_PRECISION = 4

# Numeric defaults, overridable through config.yaml
DEFAULT_DEPTH = 8
DEFAULT_EPSILON_EXPONENT = 30
DEFAULT_PRECISION = 60
DEFAULT_MAX_GENUS = 20
DEFAULT_STEPS = 30
DEFAULT_STABILITY_WINDOW = 10
DEFAULT_MAX_M = 50

OUTPUT_FORMATS = ["ascii", "json", "csv", "svg"]

# State strings: '.' or '0' for an empty box, '1' for a ball
EMPTY_CHARS = ".0"
BALL_CHAR = "1"

# Precompiled Regex
RE_STATE = re.compile(r"^[.01]*$")
RE_RANGE = re.compile(r"^(-?\d+)(?:(?::|\.\.)(-?\d+))?$")

# Printed tau of the two-soliton limit example, kept for the report only
PRINTED_LIMIT_TAU = "min[0, -n+t-3, -n+2t-1, -2n+3t-8]"


# Version information (loaded once at startup)
def _load_version():
    """Load version from version file"""
    try:
        version_file = PROJECT_ROOT / "VERSION"
        with open(version_file) as f:
            return f.read().strip()
    except Exception as e:
        logging.getLogger(__name__).warning(f"Failed to load version: {e}")
        return "unknown"


VERSION = _load_version()
