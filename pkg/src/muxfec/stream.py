"""Lifting a merged block code to an infinite packet stream.

Diagonal embedding: one block codeword starts per slot, and the codeword
started at slot d places its symbol j into lane j of the packet sent at
slot d+j.  Message symbols feed the diagonals at their first codeword
appearance (v-lane i of the message arriving at slot d+i becomes block
coordinate v[i] of diagonal d; u-lane i arriving at slot d+h+i becomes
u[i]), so encoding stays causal and every block deadline min(g+T, n-1)
lands exactly g+T slots after the symbol arrived.

During warm-up only diagonals starting at slot 0 or later transmit, so
the first n-1 packets are partially filled with zeros and message
coordinates that would belong to earlier diagonals are not carried;
violations are therefore only assessed for diagonals fully inside the
simulated horizon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .channel import ErasurePattern, is_admissible
from .decoder import check_pattern
from .muxcode import MuxCode


@dataclass(frozen=True)
class StreamViolation:
    slot: int  # slot where the deadline expired
    diagonal: int
    kind: str
    index: int
    decode_slot: Optional[int]
    pattern_excerpt: tuple[int, ...]  # induced intra-block pattern of the diagonal

    def to_dict(self) -> dict:
        return {
            "slot": self.slot,
            "diagonal": self.diagonal,
            "kind": self.kind,
            "index": self.index,
            "decode_slot": self.decode_slot,
            "pattern_excerpt": list(self.pattern_excerpt),
        }


@dataclass(frozen=True)
class StreamReport:
    slots: int
    diagonals_checked: int
    erased_slots: int
    violations: tuple[StreamViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "slots": self.slots,
            "diagonals_checked": self.diagonals_checked,
            "erased_slots": self.erased_slots,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass
class StreamState:
    """Encoder state: the last n partially-emitted diagonal codewords."""

    code: MuxCode
    clock: int = 0
    diagonals: dict[int, list[int]] = field(default_factory=dict)  # start slot -> message so far

    def push(self, v_t: Sequence[int], u_t: Sequence[int]) -> list[int]:
        """Consume one slot's message symbols and emit one packet."""
        p = self.code.params
        if len(v_t) != p.k_v or len(u_t) != p.k_u:
            raise ValueError("message lanes must be (k_v, k_u) wide")
        t = self.clock
        self.diagonals[t] = [0] * (p.k_v + p.k_u)
        for i, sym in enumerate(v_t):
            d = t - i
            if d in self.diagonals:
                self.diagonals[d][i] = sym % self.code.field.order
        for i, sym in enumerate(u_t):
            d = t - p.h - i
            if d in self.diagonals:
                self.diagonals[d][p.k_v + i] = sym % self.code.field.order
        g = self.code.G
        packet = []
        for j in range(p.n):
            d = t - j
            if d in self.diagonals:
                msg = self.diagonals[d]
                f = self.code.field
                acc = 0
                for r, m in enumerate(msg):
                    if m:
                        e = g.entry(r, j)
                        if e:
                            acc = f.add(acc, f.mul(m, e))
                packet.append(acc)
            else:
                packet.append(0)
        self.diagonals.pop(t - p.n + 1, None)
        self.clock += 1
        return packet


def stream_encode(
    messages: Sequence[tuple[Sequence[int], Sequence[int]]], code: MuxCode
) -> list[list[int]]:
    """Encode a message sequence; one n-wide packet per slot."""
    state = StreamState(code)
    return [state.push(v_t, u_t) for v_t, u_t in messages]


def simulate_stream(
    code: MuxCode, erasures: ErasurePattern, horizon: Optional[int] = None
) -> StreamReport:
    """Check every due symbol of every complete diagonal against its deadline.

    Decodability is a property of the induced intra-block pattern alone,
    so diagonals are screened by restricting the erasure sequence to
    their n slots; distinct patterns are decoded once and cached.
    """
    p = code.params
    if horizon is None:
        horizon = erasures.horizon
    if horizon > erasures.horizon:
        raise ValueError("horizon exceeds erasure sequence length")
    ch = code.verification_channel()
    if not is_admissible(erasures, ch):
        raise ValueError(f"erasure sequence not admissible for (W={ch.W}, B={ch.B}, N={ch.N})")
    deadlines = code.symbol_deadlines()
    cache: dict[tuple[int, ...], tuple] = {}
    violations: list[StreamViolation] = []
    checked = 0
    for d in range(0, horizon - p.n + 1):
        local = erasures.restrict(d, p.n)
        checked += 1
        key = local.erased
        report = cache.get(key)
        if report is None:
            report = check_pattern(code.G, local, deadlines)
            cache[key] = report
        if report.passed:
            continue
        for miss in report.misses():
            violations.append(
                StreamViolation(
                    slot=d + miss.deadline,
                    diagonal=d,
                    kind=miss.kind,
                    index=miss.index,
                    decode_slot=None if miss.decode_time is None else d + miss.decode_time,
                    pattern_excerpt=key,
                )
            )
    erased_in_horizon = sum(1 for t in erasures.erased if t < horizon)
    return StreamReport(horizon, checked, erased_in_horizon, tuple(violations))
