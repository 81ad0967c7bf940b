"""Independent brute-force oracles used to pin expected values.

Everything here deliberately avoids the library's Gaussian elimination
and field internals: arithmetic is done longhand on (lo, hi) coordinate
pairs, determinants by permutation expansion, rank by maximal nonzero
minor search, and inverses by the extended Euclidean algorithm over the
polynomial ring.
"""

from itertools import combinations, permutations


# -- coordinate-pair arithmetic in GF(q)[x]/(x^2 + c1 x + c0) -------------

def o_add(a, b, q):
    return ((a[0] + b[0]) % q, (a[1] + b[1]) % q)


def o_mul(a, b, q, c1, c0):
    a0, a1 = a
    b0, b1 = b
    # (a0 + a1 x)(b0 + b1 x), with x^2 = -c1 x - c0
    t = a1 * b1
    return ((a0 * b0 - t * c0) % q, (a0 * b1 + a1 * b0 - t * c1) % q)


def o_sub(a, b, q):
    return ((a[0] - b[0]) % q, (a[1] - b[1]) % q)


def poly_divmod(num, den, q):
    """Division with remainder in GF(q)[x]; polynomials as low-first coeff lists."""
    num = list(num)
    out = [0] * max(1, len(num) - len(den) + 1)
    dlead = den[-1]
    dinv = pow(dlead, q - 2, q)
    for shift in range(len(num) - len(den), -1, -1):
        coef = num[shift + len(den) - 1] * dinv % q
        out[shift] = coef
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * d) % q
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return out, num


def ext_euclid_inverse(a, q, c1, c0):
    """Inverse of a = (lo, hi) via extended Euclid over GF(q)[x]."""
    mod = [c0, c1, 1]
    r0, r1 = mod, [a[0], a[1]]
    while len(r1) > 1 and r1[-1] == 0:
        r1.pop()
    s0, s1 = [0], [1]
    while r1 != [0]:
        quo, rem = poly_divmod(r0, r1, q)
        r0, r1 = r1, rem if rem else [0]
        # s_next = s0 - quo * s1
        prod = [0] * (len(quo) + len(s1) - 1)
        for i, qc in enumerate(quo):
            for j, sc in enumerate(s1):
                prod[i + j] = (prod[i + j] + qc * sc) % q
        ln = max(len(s0), len(prod))
        s_next = [((s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)) % q for i in range(ln)]
        while len(s_next) > 1 and s_next[-1] == 0:
            s_next.pop()
        s0, s1 = s1, s_next
    # r0 is the gcd, a unit for invertible a
    unit_inv = pow(r0[0], q - 2, q)
    res = [(c * unit_inv) % q for c in s0]
    _, res = poly_divmod(res + [0] * 3, mod, q) if len(res) > 2 else (None, res)
    res = (res + [0, 0])[:2]
    return (res[0], res[1])


# -- matrix oracles over coordinate pairs ---------------------------------

def det_bruteforce(rows, q, c1, c0):
    """Determinant by signed permutation expansion; entries are (lo, hi) pairs."""
    n = len(rows)
    total = (0, 0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (1, 0)
        for i in range(n):
            term = o_mul(term, rows[i][perm[i]], q, c1, c0)
        if inversions % 2:
            term = ((-term[0]) % q, (-term[1]) % q)
        total = o_add(total, term, q)
    return total


def rank_bruteforce(rows, q, c1, c0):
    """Largest r with a nonzero r x r minor."""
    nr, nc = len(rows), len(rows[0]) if rows else 0
    for r in range(min(nr, nc), 0, -1):
        for rsel in combinations(range(nr), r):
            for csel in combinations(range(nc), r):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if det_bruteforce(sub, q, c1, c0) != (0, 0):
                    return r
    return 0


def is_mds_bruteforce(rows, q, c1, c0):
    """Every maximal minor nonzero, by permutation-expansion determinants."""
    nr, nc = len(rows), len(rows[0]) if rows else 0
    if nr == 0:
        return True
    for csel in combinations(range(nc), nr):
        sub = [[rows[i][j] for j in csel] for i in rsel_all(nr)]
        if det_bruteforce(sub, q, c1, c0) == (0, 0):
            return False
    return True


def rsel_all(n):
    return list(range(n))


def codes_to_pairs(matrix):
    """Library Matrix -> (lo, hi) pair rows, through the display-code contract only."""
    qq = matrix.field.q
    return [[(e % qq, e // qq) for e in matrix.row(i)] for i in range(matrix.rows)]


# -- decoding oracle -------------------------------------------------------

def sequential_substitution(matrix, received):
    """Erasure-free prefix decoder for a unit-upper-triangular prefix.

    Solves s[i] from x[i] by subtracting the already-known symbols, the
    way the erasure-free channel is meant to be decoded; returns the list
    of message symbols (display codes).
    """
    f = matrix.field
    k = matrix.rows
    out = []
    for i in range(k):
        acc = received[i]
        for j in range(i):
            coef = matrix.entry(j, i)
            if coef:
                acc = f.sub(acc, f.mul(out[j], coef))
        out.append(acc)  # diagonal entry is 1
    return out


def admissible_bruteforce(horizon, W, B, N, erased):
    """Definition-style admissibility check over all windows, from scratch."""
    erased = set(erased)
    for i in range(horizon):
        window = [t for t in range(i, i + W) if t in erased]
        cnt = len(window)
        if cnt <= N:
            continue
        if cnt > B:
            return False
        if window[-1] - window[0] + 1 != cnt:
            return False
    return True


def det_laplace(rows, q, c1, c0):
    """Determinant by first-column Laplace expansion, memoized on the live
    row set; independent of elimination, usable up to ~15x15."""
    n = len(rows)
    memo = {}

    def go(rowmask, col):
        if col == n:
            return (1, 0)
        key = rowmask
        if key in memo:
            return memo[key]
        total = (0, 0)
        sign = 0
        for i in range(n):
            bit = 1 << i
            if not rowmask & bit:
                continue
            entry = rows[i][col]
            if entry != (0, 0):
                sub = go(rowmask & ~bit, col + 1)
                term = o_mul(entry, sub, q, c1, c0)
                if sign % 2:
                    term = ((-term[0]) % q, (-term[1]) % q)
                total = o_add(total, term, q)
            sign += 1
        memo[key] = total
        return total

    return go((1 << n) - 1, 0)


def is_mds_laplace(rows, q, c1, c0):
    """MDS check with the memoized-expansion determinant (for wider blocks)."""
    nr, nc = len(rows), len(rows[0]) if rows else 0
    if nr == 0:
        return True
    for csel in combinations(range(nc), nr):
        sub = [[rows[i][j] for j in csel] for i in range(nr)]
        if det_laplace(sub, q, c1, c0) == (0, 0):
            return False
    return True
