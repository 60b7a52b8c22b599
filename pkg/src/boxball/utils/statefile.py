import logging
from pathlib import Path

from boxball.automata import parse_cells
from boxball.constants import RE_RANGE
from boxball.errors import UsageError

logger = logging.getLogger('cli')


def read_states(path):
    """
    State strings from a file: one per line, '#' starts a comment, blank lines are skipped.
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read state file {path}: {e}")
    states = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            parse_cells(line)
        except UsageError as e:
            raise UsageError(f"{path}:{lineno}: {e}")
        states.append(line)
    logger.debug(f"Read {len(states)} state(s) from {path}")
    return states


def parse_range(text, name):
    """'a:b', 'a..b' or 'a' into an inclusive (a, b) pair."""
    match = RE_RANGE.fullmatch(text.strip())
    if not match:
        raise UsageError(f"invalid {name} '{text}': use 'a:b', 'a..b' or a single integer")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise UsageError(f"invalid {name} '{text}': empty range")
    return lo, hi
