"""Single-stream rate-optimal block codes for the (W, B, N) channel.

A (T, B, N) code has k = T - N + 1 message symbols and n = k + B codeword
symbols, meeting the sliding-window capacity (T-N+1)/(T-N+1+B).  The
generator template:

  * first k columns unit upper triangular, so the erasure-free channel
    decodes sequentially with zero extra delay;
  * top rows j <= B-N carry free entries only up to column B-1, then a
    zero gap, then a single rescue entry at column j+T.  The gap is what
    lets post-burst columns be cleaned down to the tail rows, and the
    rescue column is the one through which s[j] re-enters the codeword
    exactly at its deadline;
  * remaining rows are free across the whole row past the diagonal.

  The upper-left k x (k+N-1) block and the lower-right
  (k-(B-N+1)) x (n-(B-N+1)) block must both be MDS; free entries are
  drawn uniformly from GF(q) minus zero and redrawn until the MDS checks and
  an exhaustive achievability verification (every admissible pattern on
  the n slots, W = T + 1) all pass.  One designated entry, the rescue
  coefficient of row N-1, is the code's "special" element: depending on
  the variant it is drawn from the base field or from GF(q^2) outside GF(q).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .channel import ChannelModel
from .decoder import block_deadlines, verify_matrix
from .galois import FieldSpec, field_spec, next_prime
from .linalg import Matrix, is_mds

BASE_SPECIAL = "base-field-special"
EXTENSION_SPECIAL = "extension-special"

_Q_BUMP_EVERY = 4


@dataclass(frozen=True)
class BlockCode:
    T: int
    B: int
    N: int
    k: int
    n: int
    G: Matrix
    field: FieldSpec
    seed: int
    variant: str
    special_pos: tuple[int, int]

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def g1_sub(self) -> Matrix:
        """Upper-left k x (k+N-1) sub-block; MDS by construction."""
        return self.G.take_cols(range(self.k + self.N - 1))

    def g2_sub(self) -> Matrix:
        """Lower-right (k-(B-N+1)) x (n-(B-N+1)) sub-block; MDS by construction."""
        cut = self.B - self.N + 1
        return self.G.submatrix(range(cut, self.k), range(cut, self.n))

    def symbol_deadlines(self):
        return block_deadlines(self.k, self.n, self.T)

    def verification_channel(self) -> ChannelModel:
        return ChannelModel(self.T + 1, self.B, self.N)

    def encode(self, message: list[int]) -> list[int]:
        return self.G.vec_mul(message)

    def to_spec_dict(self) -> dict:
        return {
            "T": self.T,
            "B": self.B,
            "N": self.N,
            "variant": self.variant,
            "seed": self.seed,
            "q": self.field.q,
            "ext_poly": list(self.field.ext_poly()),
            "matrix": self.G.to_dump(),
        }


@dataclass(frozen=True)
class StructureReport:
    triangular_prefix: bool
    g1_mds: bool
    g2_mds: bool
    special_field_ok: bool
    rate_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.triangular_prefix
            and self.g1_mds
            and self.g2_mds
            and self.special_field_ok
            and self.rate_ok
        )

    def to_dict(self) -> dict:
        return {
            "triangular_prefix": self.triangular_prefix,
            "g1_mds": self.g1_mds,
            "g2_mds": self.g2_mds,
            "special_field_ok": self.special_field_ok,
            "rate_ok": self.rate_ok,
            "passed": self.passed,
        }


def special_position(T: int, B: int, N: int) -> tuple[int, int]:
    """Row and column of the designated special entry.

    Row N-1's rescue column N-1+T when that row has one (B >= 2N-1);
    otherwise the last column of the row, clamped to existing rows.
    """
    k, n = T - N + 1, T - N + 1 + B
    if N - 1 <= B - N:
        return (N - 1, N - 1 + T)
    return (min(N - 1, k - 1), n - 1)


def _draw_matrix(
    field: FieldSpec, T: int, B: int, N: int, variant: str, rng: random.Random
) -> tuple[Matrix, tuple[int, int]]:
    k, n = T - N + 1, T - N + 1 + B
    q = field.q
    special = special_position(T, B, N)

    def base_nonzero() -> int:
        return rng.randrange(1, q)

    rows = []
    for j in range(k):
        row = [0] * n
        row[j] = 1
        if j <= B - N:
            for c in range(j + 1, min(B, n)):
                row[c] = base_nonzero()
            row[j + T] = base_nonzero()
        else:
            for c in range(j + 1, n):
                row[c] = base_nonzero()
        rows.append(row)
    r, c = special
    if variant == EXTENSION_SPECIAL:
        rows[r][c] = field.code(rng.randrange(q), rng.randrange(1, q))
    else:
        rows[r][c] = base_nonzero()
    return Matrix.from_rows(field, rows), special


def verify_single_structure(code: BlockCode) -> StructureReport:
    """One boolean per structural invariant; overall pass = all true."""
    g = code.G
    tri = all(g.entry(i, i) == 1 for i in range(code.k)) and all(
        g.entry(i, j) == 0 for i in range(code.k) for j in range(i)
    )
    g1_ok = is_mds(code.g1_sub())
    g2_ok = is_mds(code.g2_sub())
    sp = g.entry(*code.special_pos)
    if code.variant == EXTENSION_SPECIAL:
        special_ok = not code.field.is_base(sp)
    else:
        special_ok = code.field.is_base(sp) and sp != 0
    rate_ok = code.rate == Fraction(code.T - code.N + 1, code.T - code.N + 1 + code.B)
    return StructureReport(tri, g1_ok, g2_ok, special_ok, rate_ok)


def build_single_code(
    T: int,
    B: int,
    N: int,
    variant: str = EXTENSION_SPECIAL,
    seed: int = 0,
    q: Optional[int] = None,
    max_tries: int = 64,
    verify: bool = True,
) -> BlockCode:
    """Randomized construction over the template, gated by verification.

    Deterministic for a fixed seed.  When q is not given, it starts at the
    smallest prime >= k+N (headroom for the longest MDS sub-block) and
    moves to the next prime every few failed draws; an explicit q is never
    bumped.  Raises RuntimeError naming the failing property if the retry
    budget runs out.
    """
    if not (T >= B > N >= 1):
        raise ValueError(f"need T >= B > N >= 1, got T={T} B={B} N={N}")
    if variant not in (BASE_SPECIAL, EXTENSION_SPECIAL):
        raise ValueError(f"unknown variant {variant!r}")
    k = T - N + 1
    n = k + B
    rng = random.Random(seed)
    cur_q = q if q is not None else next_prime(k + N)
    field = field_spec(cur_q)
    ch = ChannelModel(T + 1, B, N)
    deadlines = block_deadlines(k, n, T)
    last_failure = "no attempts made"
    for attempt in range(max_tries):
        if q is None and attempt > 0 and attempt % _Q_BUMP_EVERY == 0:
            # draw-pass probability behaves like exp(-c/q); grow geometrically
            cur_q = next_prime(max(cur_q + 2, cur_q * 3 // 2))
            field = field_spec(cur_q)
        g, special = _draw_matrix(field, T, B, N, variant, rng)
        code = BlockCode(T, B, N, k, n, g, field, seed, variant, special)
        structure = verify_single_structure(code)
        if not structure.passed:
            bad = [name for name, ok in structure.to_dict().items() if ok is False]
            last_failure = f"structure check failed: {', '.join(bad)}"
            continue
        if verify:
            result = verify_matrix(g, deadlines, ch)
            if not result.passed:
                miss = result.report.misses()[0]
                last_failure = (
                    f"achievability failed under pattern {list(result.counterexample.erased)}:"
                    f" s[{miss.index}] decode_time={miss.decode_time} > deadline={miss.deadline}"
                )
                continue
        return code
    raise RuntimeError(
        f"single-code search exhausted {max_tries} tries for (T={T}, B={B}, N={N}); "
        f"last failure: {last_failure}"
    )
