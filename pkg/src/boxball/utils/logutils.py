import logging
import sys
from boxball.constants import LOG_PATH, LOG_FORMAT, LOG_DATE_FORMAT, LOG_VIEW_LENGTH
from pathlib import Path
from datetime import datetime
from collections import deque

LOG_BUFFER = deque(maxlen=LOG_VIEW_LENGTH)


def setup_logging(config=None, level=None):
    """
    Setup logging.
    """

    # ---- Determine log level ----
    if level is None:
        level = 'WARNING' if config is None else config.get('logging', 'level', default='WARNING')
    log_level = getattr(logging, str(level).upper(), logging.WARNING)

    # ---- Root logger ----
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # ---- Remove old handlers ----
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    # ---- Create console handler (stdout carries the results) ----
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    root_logger.addHandler(console_handler)

    # ---- Add report buffer handler ----
    buffer_handler = BufferLogHandler()
    buffer_handler.setLevel(log_level)
    buffer_handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    root_logger.addHandler(buffer_handler)

    # ---- Create file handler only when enabled ----
    if config is not None and config.get('logging', 'file', default=False):
        log_path = Path(LOG_PATH)
        log_path.mkdir(parents=True, exist_ok=True)
        log_file = log_path / f"log-{datetime.now().strftime('%Y-%m-%d')}.log"
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(log_level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
        root_logger.addHandler(file_handler)

    # ---- Quiet matplotlib's font manager ----
    logging.getLogger('matplotlib').setLevel(max(log_level, logging.WARNING))


def recent_warnings():
    """Buffered WARNING/ERROR lines, oldest first."""
    return [line for line in LOG_BUFFER if "[WARNING]" in line or "[ERROR]" in line]


class BufferLogHandler(logging.Handler):
    def emit(self, record):
        try:
            msg = self.format(record)
            LOG_BUFFER.append(msg)
        except Exception:
            pass
