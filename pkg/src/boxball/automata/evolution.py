import logging

from boxball.automata.states import BBSState, PBBSState

logger = logging.getLogger("automata")


def bbs_step(state):
    """
    One time step of the non-periodic box-ball system, computed left to right by

        U_n^{t+1} = min[1 - U_n^t, sum_{k<n} U_k^t - sum_{k<n} U_k^{t+1}].

    The window grows to the right so that no ball is lost.
    """
    cells = list(state.cells) + [0] * state.balls
    before = 0   # sum_{k<n} U_k^t
    after = 0    # sum_{k<n} U_k^{t+1}
    nxt = []
    for u in cells:
        v = min(1 - u, before - after)
        nxt.append(v)
        before += u
        after += v
    last = max((k for k, v in enumerate(nxt) if v), default=-1)
    size = max(len(state.cells), last + 1)
    return BBSState(state.offset, tuple(nxt[:size]))


def _pairing(cells):
    """Match every ball with the nearest cyclically-following free box (iterated 1-0 pairing)."""
    L = len(cells)
    stack = []
    queued = set()
    matched_balls = {}
    taken = set()
    for k in range(2 * L):
        i = k % L
        if cells[i]:
            if i not in matched_balls and i not in queued:
                stack.append(i)
                queued.add(i)
        elif stack and i not in taken:
            ball = stack.pop()
            matched_balls[ball] = i
            taken.add(i)
        if len(matched_balls) == sum(cells):
            break
    return matched_balls


def pbbs_step(state):
    """One time step of the periodic system: every ball hops once to its paired box."""
    pairs = _pairing(state.cells)
    nxt = [0] * state.L
    for target in pairs.values():
        nxt[target] = 1
    return PBBSState(tuple(nxt))


def soliton_content(state):
    """
    Soliton lengths S_1 <= ... <= S_g by 10-elimination.

    Each round deletes every '1' that is cyclically followed by a '0' together
    with that '0'; the number of pairs removed in round k is the number of
    solitons of length >= k.
    """
    word = list(state.cells)
    counts = []
    while any(word):
        n = len(word)
        drop = set()
        for i in range(n):
            j = (i + 1) % n
            if word[i] == 1 and word[j] == 0:
                drop.update((i, j))
        counts.append(len(drop) // 2)
        word = [c for i, c in enumerate(word) if i not in drop]
    lengths = []
    for k, count in enumerate(counts, start=1):
        longer = counts[k] if k < len(counts) else 0
        lengths.extend([k] * (count - longer))
    return sorted(lengths)


def append_vacuum(state, M):
    """State-level counterpart of X[M] = X·H^M: append M empty boxes."""
    return PBBSState(tuple(state.cells) + (0,) * M)


def bbs_trajectory(state, steps):
    rows = [state]
    for _ in range(steps):
        rows.append(bbs_step(rows[-1]))
    return rows


def pbbs_trajectory(state, steps):
    rows = [state]
    for _ in range(steps):
        rows.append(pbbs_step(rows[-1]))
    return rows
