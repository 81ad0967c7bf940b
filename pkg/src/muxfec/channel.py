"""The (W, B, N) sliding-window erasure channel.

Every window of W consecutive slots may lose either one burst of at most
B consecutive packets or at most N packets at arbitrary positions.  Slots
outside the modelled horizon count as unerased: a block codeword is a
finite excerpt of the infinite packet stream, and unconstrained padding
would forbid nothing.
"""

from __future__ import annotations

import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Sequence

ERASURE_MARK = "*"


@dataclass(frozen=True)
class ChannelModel:
    W: int
    B: int
    N: int

    def __post_init__(self):
        if not (self.W > self.B > self.N >= 1):
            raise ValueError(f"need W > B > N >= 1, got W={self.W} B={self.B} N={self.N}")


@dataclass(frozen=True)
class ErasurePattern:
    horizon: int
    erased: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.horizon < 0:
            raise ValueError("horizon must be >= 0")
        ordered = tuple(sorted(set(self.erased)))
        if ordered != self.erased:
            object.__setattr__(self, "erased", ordered)
        if self.erased and not (0 <= self.erased[0] and self.erased[-1] < self.horizon):
            raise ValueError("erased indices out of horizon")

    def __contains__(self, t: int) -> bool:
        i = bisect_left(self.erased, t)
        return i < len(self.erased) and self.erased[i] == t

    def as_bits(self) -> list[int]:
        bits = [0] * self.horizon
        for t in self.erased:
            bits[t] = 1
        return bits

    def restrict(self, start: int, length: int) -> "ErasurePattern":
        """Pattern induced on the window [start, start+length), re-indexed from 0."""
        lo = bisect_left(self.erased, start)
        hi = bisect_right(self.erased, start + length - 1)
        return ErasurePattern(length, tuple(t - start for t in self.erased[lo:hi]))


def is_admissible(p: ErasurePattern, ch: ChannelModel) -> bool:
    """Window rule over every start offset whose window meets the horizon."""
    erased = p.erased
    if not erased:
        return True
    for i in range(p.horizon):
        lo = bisect_left(erased, i)
        hi = bisect_right(erased, i + ch.W - 1)
        cnt = hi - lo
        if cnt <= ch.N:
            continue
        if cnt > ch.B:
            return False
        # burst branch: the erasures inside the window must be consecutive
        if erased[hi - 1] - erased[lo] + 1 != cnt:
            return False
    return True


def enumerate_admissible_patterns(
    horizon: int, ch: ChannelModel, maximal_only: bool = False
) -> list[ErasurePattern]:
    """All admissible patterns on [0, horizon), in lexicographic order.

    Depth-first search adding indices in increasing order is exhaustive
    because dropping the largest erasure of an admissible pattern keeps it
    admissible (window counts only fall, and a burst shortened from the
    right stays consecutive).  With maximal_only, only patterns contained
    in no other admissible pattern are emitted; note that adding a single
    erasure to an admissible pattern may pass through inadmissible sets
    (a burst grows from a pair only via its scattered intermediates), so
    maximality is checked against the whole enumeration, not stepwise.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    out: list[ErasurePattern] = []

    def visit(current: tuple[int, ...], start: int):
        out.append(ErasurePattern(horizon, current))
        for t in range(start, horizon):
            cand = ErasurePattern(horizon, current + (t,))
            if is_admissible(cand, ch):
                visit(cand.erased, t + 1)

    visit((), 0)
    if not maximal_only:
        return out
    by_size: dict[int, list[frozenset[int]]] = {}
    for p in out:
        by_size.setdefault(len(p.erased), []).append(frozenset(p.erased))
    maximal = []
    for p in out:
        s = frozenset(p.erased)
        dominated = any(
            s < t for size, group in by_size.items() if size > len(s) for t in group
        )
        if not dominated:
            maximal.append(p)
    return maximal


def apply_erasure(codeword: Sequence, p: ErasurePattern) -> list:
    """Received sequence: original symbols where unerased, ERASURE_MARK elsewhere."""
    if len(codeword) != p.horizon:
        raise ValueError(f"codeword length {len(codeword)} != pattern horizon {p.horizon}")
    return [ERASURE_MARK if t in p else s for t, s in enumerate(codeword)]


def random_erasure_sequence(
    length: int,
    ch: ChannelModel,
    seed: int,
    erasure_prob: float = 0.05,
    burst_prob: float = 0.01,
) -> ErasurePattern:
    """Sample an admissible pattern of the given length, deterministically per seed.

    Walks the slots proposing per-slot erasures (probability erasure_prob)
    and occasional bursts (probability burst_prob, length uniform in
    [N+1, B]); proposals that would break admissibility are rejected, so
    the result is always admissible.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    rng = random.Random(seed)
    erased: list[int] = []  # grown in increasing order

    def admits(extra: list[int]) -> bool:
        # only windows containing a new erasure can change, so check
        # window starts in [first_new - W + 1, last_new] against the
        # candidate pattern
        cand = erased + extra
        cand_set = sorted(cand)
        lo = max(0, extra[0] - ch.W + 1)
        for i in range(lo, extra[-1] + 1):
            a = bisect_left(cand_set, i)
            b = bisect_right(cand_set, i + ch.W - 1)
            cnt = b - a
            if cnt <= ch.N:
                continue
            if cnt > ch.B:
                return False
            if cand_set[b - 1] - cand_set[a] + 1 != cnt:
                return False
        return True

    t = 0
    while t < length:
        roll = rng.random()
        if roll < burst_prob:
            blen = rng.randint(ch.N + 1, ch.B)
            burst = [s for s in range(t, min(t + blen, length))]
            if burst and admits(burst):
                erased.extend(burst)
                t += len(burst)
                continue
        elif roll < burst_prob + erasure_prob:
            if admits([t]):
                erased.append(t)
        t += 1
    return ErasurePattern(length, tuple(erased))


def write_trace(path, p: ErasurePattern):
    """Channel trace file: one 0/1 line per slot."""
    with open(path, "w", encoding="utf-8") as fh:
        for b in p.as_bits():
            fh.write(f"{b}\n")


def read_trace(path) -> ErasurePattern:
    with open(path, encoding="utf-8") as fh:
        bits = [int(line.strip()) for line in fh if line.strip()]
    return ErasurePattern(len(bits), tuple(t for t, b in enumerate(bits) if b))


def pattern_count_closed_form(horizon: int, ch: ChannelModel) -> int:
    """Admissible-pattern count for W >= horizon: N-subsets plus longer bursts."""
    from math import comb

    total = sum(comb(horizon, j) for j in range(ch.N + 1))
    for blen in range(ch.N + 1, ch.B + 1):
        total += max(0, horizon - blen + 1)
    return total
