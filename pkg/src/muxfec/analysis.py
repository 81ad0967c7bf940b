"""Closed-form rate quantities and the gain tables.

Everything is computed in exact rational arithmetic; decimals appear
only at the display layer, rounded half-up to the printed precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .muxcode import select_parameters


def _check_channel(B: int, N: int):
    if not B > N >= 1:
        raise ValueError(f"need B > N >= 1, got B={B} N={N}")


def capacity(T: int, B: int, N: int) -> Fraction:
    """Single-stream sliding-window capacity (T-N+1)/(T-N+1+B)."""
    _check_channel(B, N)
    if not T >= B:
        raise ValueError(f"need T >= B, got T={T} B={B}")
    return Fraction(T - N + 1, T - N + 1 + B)


def mux_sum_rate(T_v: int, B: int, N: int) -> Fraction:
    """Best achievable sum rate of the merging strategy.

    max((T_v-2N+2)/(T_v-2N+2+B), (T_v-B+1)/(T_v+1)); the first branch
    attains the max exactly when B >= 2N-1 (they tie at B = 2N-1).
    """
    _check_channel(B, N)
    if T_v < 2 * B + 2:
        raise ValueError(f"need T_v > T_u + B with T_u > B, got T_v={T_v} B={B}")
    burst = Fraction(T_v - 2 * N + 2, T_v - 2 * N + 2 + B)
    rand = Fraction(T_v - B + 1, T_v + 1)
    return max(burst, rand)


def case_m_small_bound(T_v: int, B: int, N: int) -> Fraction:
    """Intermediate sum-rate bound for merge lengths 1 <= m <= N-1.

    (T_v-2N+3)/(T_v-3N+4+2B); strictly below mux_sum_rate in both
    regimes.
    """
    _check_channel(B, N)
    if T_v < 2 * B + 2:
        raise ValueError(f"need T_v > T_u + B with T_u > B, got T_v={T_v} B={B}")
    return Fraction(T_v - 2 * N + 3, T_v - 3 * N + 4 + 2 * B)


def separate_sum_rate(T_v: int, T_u: int, B: int, N: int) -> Fraction:
    """Time-sharing baseline at the merged code's k_v : k_u proportions.

    (k_v/(k_u+k_v)) C(T_v,B,N) + (k_u/(k_u+k_v)) C(T_u,B,N).
    """
    p = select_parameters(T_v, T_u, B, N)
    total = p.k_v + p.k_u
    return Fraction(p.k_v, total) * capacity(T_v, B, N) + Fraction(p.k_u, total) * capacity(
        T_u, B, N
    )


def gain_fraction(T_v: int, T_u: int, B: int, N: int) -> Fraction:
    """Exact relative sum-rate gain (mux - separate) / separate."""
    mux = mux_sum_rate(T_v, B, N)
    sep = separate_sum_rate(T_v, T_u, B, N)
    return (mux - sep) / sep


def round_half_up(x: Fraction, ndigits: int) -> Fraction:
    """Round to ndigits decimals with ties away from zero (as the tables print)."""
    scale = 10**ndigits
    shifted = x * scale
    if shifted >= 0:
        rounded = (shifted.numerator * 2 + shifted.denominator) // (2 * shifted.denominator)
    else:
        rounded = -((-shifted.numerator * 2 + shifted.denominator) // (2 * shifted.denominator))
    return Fraction(rounded, scale)


def fmt_decimal(x: Fraction, ndigits: int) -> str:
    r = round_half_up(x, ndigits)
    sign = "-" if r < 0 else ""
    r = abs(r)
    scaled = r.numerator * 10**ndigits // r.denominator
    whole, frac = divmod(scaled, 10**ndigits)
    return f"{sign}{whole}.{frac:0{ndigits}d}" if ndigits else f"{sign}{whole}"


@dataclass(frozen=True)
class RateReport:
    T_v: int
    T_u: int
    B: int
    N: int
    capacity_v: Fraction
    capacity_u: Fraction
    mux_sum_rate: Fraction
    separate_sum_rate: Fraction
    gain_percent: Fraction  # exact

    def display(self) -> dict:
        """Printed form: rates at 4 decimals, gain at 1 decimal.

        The displayed gain is recomputed from the two 4-decimal rates so
        the printed numbers stay mutually consistent, then rounded half-up
        through 2 decimals to 1.
        """
        mux4 = round_half_up(self.mux_sum_rate, 4)
        sep4 = round_half_up(self.separate_sum_rate, 4)
        gain = round_half_up(round_half_up((mux4 - sep4) / sep4 * 100, 2), 1)
        return {
            "capacity_v": fmt_decimal(self.capacity_v, 4),
            "capacity_u": fmt_decimal(self.capacity_u, 4),
            "mux_sum_rate": fmt_decimal(self.mux_sum_rate, 4),
            "separate_sum_rate": fmt_decimal(self.separate_sum_rate, 4),
            "gain_percent": fmt_decimal(gain, 1),
        }

    def to_dict(self, exact: bool = False) -> dict:
        if exact:
            return {
                "T_v": self.T_v,
                "T_u": self.T_u,
                "B": self.B,
                "N": self.N,
                "capacity_v": str(self.capacity_v),
                "capacity_u": str(self.capacity_u),
                "mux_sum_rate": str(self.mux_sum_rate),
                "separate_sum_rate": str(self.separate_sum_rate),
                "gain_percent": str(self.gain_percent),
            }
        d = {"T_v": self.T_v, "T_u": self.T_u, "B": self.B, "N": self.N}
        d.update(self.display())
        return d


def rate_report(T_v: int, T_u: int, B: int, N: int) -> RateReport:
    return RateReport(
        T_v,
        T_u,
        B,
        N,
        capacity(T_v, B, N),
        capacity(T_u, B, N),
        mux_sum_rate(T_v, B, N),
        separate_sum_rate(T_v, T_u, B, N),
        gain_fraction(T_v, T_u, B, N) * 100,
    )


@dataclass(frozen=True)
class GainCell:
    T_v: int
    T_u: int
    gain_percent: Optional[Fraction]  # None where T_v <= T_u + B or T_u <= B

    def printed(self) -> str:
        if self.gain_percent is None:
            return ""
        return fmt_decimal(self.gain_percent, 2)


@dataclass(frozen=True)
class GainTable:
    B: int
    N: int
    tv_values: tuple[int, ...]
    tu_values: tuple[int, ...]
    cells: tuple[GainCell, ...]

    def cell(self, T_v: int, T_u: int) -> GainCell:
        for c in self.cells:
            if c.T_v == T_v and c.T_u == T_u:
                return c
        raise KeyError(f"no cell ({T_v}, {T_u})")

    def to_csv(self, exact: bool = False) -> str:
        lines = ["T_v/T_u," + ",".join(str(t) for t in self.tu_values) + ",capacity_v,sum_rate_bound"]
        for tv in self.tv_values:
            row = [str(tv)]
            for tu in self.tu_values:
                c = self.cell(tv, tu)
                if c.gain_percent is None:
                    row.append("")
                elif exact:
                    row.append(str(c.gain_percent))
                else:
                    row.append(c.printed())
            cap = capacity(tv, self.B, self.N)
            bound = mux_sum_rate(tv, self.B, self.N)
            if exact:
                row += [str(cap), str(bound)]
            else:
                row += [fmt_decimal(cap, 4), fmt_decimal(bound, 4)]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def to_dict(self, exact: bool = False) -> dict:
        cells = []
        for c in self.cells:
            if c.gain_percent is None:
                continue
            entry: dict = {"T_v": c.T_v, "T_u": c.T_u}
            if exact:
                entry["gain_percent"] = str(c.gain_percent)
                entry["mux_sum_rate"] = str(mux_sum_rate(c.T_v, self.B, self.N))
                entry["separate_sum_rate"] = str(separate_sum_rate(c.T_v, c.T_u, self.B, self.N))
            else:
                entry["gain_percent"] = float(c.printed())
                entry["mux_sum_rate"] = fmt_decimal(mux_sum_rate(c.T_v, self.B, self.N), 4)
                entry["separate_sum_rate"] = fmt_decimal(
                    separate_sum_rate(c.T_v, c.T_u, self.B, self.N), 4
                )
            cells.append(entry)
        return {
            "B": self.B,
            "N": self.N,
            "tv_values": list(self.tv_values),
            "tu_values": list(self.tu_values),
            "cells": cells,
        }


def gain_table(B: int, N: int, tv_range: range, tu_range: range) -> GainTable:
    """Percent gain of merging over separate encoding per (T_v, T_u) cell.

    Cells outside the regime (T_v <= T_u + B, or T_u <= B) are empty.
    """
    _check_channel(B, N)
    cells = []
    for tv in tv_range:
        for tu in tu_range:
            if tu > B and tv > tu + B:
                cells.append(GainCell(tv, tu, gain_fraction(tv, tu, B, N) * 100))
            else:
                cells.append(GainCell(tv, tu, None))
    return GainTable(B, N, tuple(tv_range), tuple(tu_range), tuple(cells))
