import random

import pytest

from boxball.automata import (
    BBSState,
    PBBSState,
    append_vacuum,
    bbs_step,
    bbs_trajectory,
    parse_cells,
    pbbs_step,
    pbbs_trajectory,
    render_cells,
    soliton_content,
)
from boxball.errors import DomainError, UsageError

FIGURE = [
    "..111...11...1",
    ".....111..11..1",
    "........11..11.11",
    "..........11..1..111",
]


def random_state(rng, L):
    balls = rng.randrange(0, (L + 1) // 2)
    cells = [0] * L
    for i in rng.sample(range(L), balls):
        cells[i] = 1
    return PBBSState(tuple(cells))


def test_parse_accepts_dots_and_zeros():
    assert parse_cells(".10") == (0, 1, 0)
    assert render_cells((0, 1, 0)) == ".1."


def test_parse_rejects_other_characters():
    with pytest.raises(UsageError):
        parse_cells("..x1")


def test_bbs_step_figure_rows():
    rows = bbs_trajectory(BBSState.parse(FIGURE[0]), 3)
    for row, expected in zip(rows, FIGURE):
        assert render_cells(row.window(0, len(expected))) == expected
        assert row.ball_positions() == [n for n, ch in enumerate(expected) if ch == "1"]


def test_bbs_step_empty_state():
    assert bbs_step(BBSState.parse("....")).balls == 0


def test_bbs_step_single_ball():
    assert bbs_step(BBSState.parse("1")).ball_positions() == [1]


@pytest.mark.parametrize("before, after", [
    (".11...1...", "...11..1.."),
    ("1.........", ".1........"),
    ("1.1.1.....", ".1.1.1...."),
    ("......11.1", "11......1."),
])
def test_pbbs_step(before, after):
    assert str(pbbs_step(PBBSState.parse(before))) == after


def test_overfull_periodic_state():
    with pytest.raises(DomainError, match="overfull"):
        PBBSState.parse("11.1")


@pytest.mark.parametrize("state, content", [
    (".11...1...", [1, 2]),
    ("..........", []),
    ("1.........", [1]),
    ("111.....11....", [2, 3]),
])
def test_soliton_content(state, content):
    assert soliton_content(PBBSState.parse(state)) == content


def test_soliton_content_wraps_around():
    assert soliton_content(PBBSState.parse("1......1")) == [2]


def test_append_vacuum():
    padded = append_vacuum(PBBSState.parse(".11...1..."), 3)
    assert str(padded) == ".11...1......"
    assert padded.L == 13
    assert soliton_content(padded) == [1, 2]


def test_soliton_content_is_conserved():
    rng = random.Random(20240517)
    for _ in range(50):
        state = random_state(rng, rng.randrange(4, 25))
        content = soliton_content(state)
        for row in pbbs_trajectory(state, 5):
            assert soliton_content(row) == content
            assert row.balls == state.balls


def test_bbs_and_pbbs_agree_away_from_the_boundary():
    rng = random.Random(7)
    for _ in range(20):
        state = random_state(rng, 12)
        padded = append_vacuum(state, 60)
        periodic = pbbs_trajectory(padded, 4)
        open_rows = bbs_trajectory(BBSState(0, state.cells), 4)
        for p, o in zip(periodic, open_rows):
            assert [p.value(n) for n in range(40)] == [o.value(n) for n in range(40)]
