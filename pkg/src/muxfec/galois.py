"""Arithmetic in GF(q) and its quadratic extension GF(q^2), q prime.

Elements of GF(q^2) are residues lo + hi*x of GF(q)[x] modulo a monic
irreducible quadratic x^2 + c1*x + c0.  The base field embeds as the
elements with hi = 0.  For compact storage (and for the matrix dump
format) every element also has an integer display code hi*q + lo; all
bulk linear algebra in this package works directly on these codes via
the code-level methods of :class:`FieldSpec`.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    p = max(n, 2)
    while not is_prime(p):
        p += 1
    return p


def smallest_nonresidue(q: int) -> int:
    """Smallest quadratic non-residue modulo an odd prime q."""
    for r in range(2, q):
        if pow(r, (q - 1) // 2, q) == q - 1:
            return r
    raise ValueError(f"no quadratic non-residue mod {q}")


@dataclass(frozen=True)
class FieldSpec:
    """A prime q together with the quadratic x^2 + c1*x + c0 defining GF(q^2).

    Provides arithmetic on integer display codes hi*q + lo; codes in
    [0, q) are exactly the base-field elements.
    """

    q: int
    c1: int
    c0: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")
        if not (0 <= self.c1 < self.q and 0 <= self.c0 < self.q):
            raise ValueError("ext_poly coefficients must be reduced mod q")
        for x in range(self.q):
            if (x * x + self.c1 * x + self.c0) % self.q == 0:
                raise ValueError(
                    f"x^2 + {self.c1}x + {self.c0} has root {x} mod {self.q}; not irreducible"
                )

    @property
    def order(self) -> int:
        return self.q * self.q

    def ext_poly(self) -> tuple[int, int]:
        return (self.c1, self.c0)

    # -- integer-code arithmetic ------------------------------------------

    def code(self, lo: int, hi: int = 0) -> int:
        return (hi % self.q) * self.q + (lo % self.q)

    def parts(self, a: int) -> tuple[int, int]:
        return a % self.q, a // self.q

    def is_base(self, a: int) -> bool:
        return a < self.q

    def add(self, a: int, b: int) -> int:
        q = self.q
        if a < q and b < q:
            return (a + b) % q
        return (a // q + b // q) % q * q + (a % q + b % q) % q

    def neg(self, a: int) -> int:
        q = self.q
        return (-(a // q)) % q * q + (-(a % q)) % q

    def sub(self, a: int, b: int) -> int:
        q = self.q
        if a < q and b < q:
            return (a - b) % q
        return (a // q - b // q) % q * q + (a % q - b % q) % q

    def mul(self, a: int, b: int) -> int:
        q = self.q
        if a < q and b < q:
            return a * b % q
        a0, a1 = a % q, a // q
        b0, b1 = b % q, b // q
        t = a1 * b1
        lo = (a0 * b0 - t * self.c0) % q
        hi = (a0 * b1 + a1 * b0 - t * self.c1) % q
        return hi * q + lo

    def inv(self, a: int) -> int:
        """Multiplicative inverse, via the conjugate over the base field.

        For a = a0 + a1*x the conjugate abar = (a0 - a1*c1) - a1*x satisfies
        a*abar = a0^2 - c1*a0*a1 + c0*a1^2 in GF(q), so inv(a) = abar / norm.
        """
        if a == 0:
            raise ValueError("no inverse of zero")
        q = self.q
        if a < q:
            return pow(a, q - 2, q)
        a0, a1 = a % q, a // q
        norm = (a0 * a0 - self.c1 * a0 * a1 + self.c0 * a1 * a1) % q
        ninv = pow(norm, q - 2, q)
        lo = (a0 - a1 * self.c1) * ninv % q
        hi = -a1 * ninv % q
        return hi * q + lo

    def element(self, lo: int, hi: int = 0) -> "FieldElement":
        return FieldElement(lo % self.q, hi % self.q, self)

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for GF({self.q}^2)")
        return FieldElement(code % self.q, code // self.q, self)


def field_spec(q: int) -> FieldSpec:
    """Default FieldSpec for prime q.

    Uses x^2 - r with r the smallest quadratic non-residue mod q, so that
    x itself (display code q) is a canonical element outside the base
    field.  q = 2 has no non-residue; x^2 + x + 1 is used there.
    """
    if q == 2:
        return FieldSpec(2, 1, 1)
    r = smallest_nonresidue(q)
    return FieldSpec(q, 0, (-r) % q)


@dataclass(frozen=True)
class FieldElement:
    """lo + hi*x in GF(q)[x]/(x^2 + c1*x + c0); display code hi*q + lo."""

    lo: int
    hi: int
    spec: FieldSpec

    def __post_init__(self):
        q = self.spec.q
        if not (0 <= self.lo < q and 0 <= self.hi < q):
            raise ValueError(f"coordinates ({self.lo},{self.hi}) out of range for q={q}")

    @property
    def code(self) -> int:
        return self.hi * self.spec.q + self.lo

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return ff_add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        _check_same_spec(self, other)
        return self.spec.from_code(self.spec.sub(self.code, other.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return ff_mul(self, other)

    def __neg__(self) -> "FieldElement":
        return self.spec.from_code(self.spec.neg(self.code))

    def inverse(self) -> "FieldElement":
        return ff_inv(self)

    def __repr__(self):
        return f"GF({self.spec.q}^2:{self.code})"


def _check_same_spec(a: FieldElement, b: FieldElement):
    if a.spec != b.spec:
        raise ValueError(f"mismatched field specs: {a.spec} vs {b.spec}")


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    """Componentwise sum mod q."""
    _check_same_spec(a, b)
    return a.spec.from_code(a.spec.add(a.code, b.code))


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Polynomial product reduced by the extension quadratic, then mod q."""
    _check_same_spec(a, b)
    return a.spec.from_code(a.spec.mul(a.code, b.code))


def ff_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises on zero."""
    return a.spec.from_code(a.spec.inv(a.code))


def in_base_field(a: FieldElement) -> bool:
    """True iff the element lies in GF(q), i.e. hi = 0."""
    return a.hi == 0
