"""Dense polynomial arithmetic over GF(2), including arithmetic modulo x^n + 1.

A polynomial is represented as a nonnegative Python integer: bit i holds the
coefficient of x^i.  This packed form is canonical by construction (no
trailing zero coefficients) and every operation below is word-parallel,
which keeps large codeword enumerations and per-frame syndrome work cheap.

Every nonzero polynomial over GF(2) is monic, so no normalisation step is
ever required; in particular ``gcd`` returns the canonical representative
as-is.
"""

MINUS_INFINITY = float("-inf")


def degree(p: int):
    """Degree of p; the zero polynomial has degree ``MINUS_INFINITY``."""
    if p == 0:
        return MINUS_INFINITY
    return p.bit_length() - 1


def add(p: int, q: int) -> int:
    """Sum of two polynomials (coefficient-wise XOR)."""
    return p ^ q


def weight(p: int) -> int:
    """Number of nonzero coefficients."""
    return p.bit_count()


def mul(p: int, q: int) -> int:
    """Carry-less product of two polynomials."""
    if p < q:
        p, q = q, p
    out = 0
    while q:
        if q & 1:
            out ^= p
        p <<= 1
        q >>= 1
    return out


def _validate_modulus_length(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"block length must be an odd integer >= 3, got {n}")


def mul_mod(p: int, q: int, n: int) -> int:
    """Product of p and q reduced by the rule x^n = 1 (exponents mod n)."""
    _validate_modulus_length(n)
    c = mul(p, q)
    mask = (1 << n) - 1
    while c >> n:
        c = (c & mask) ^ (c >> n)
    return c


def divmod_(p: int, q: int) -> tuple[int, int]:
    """Quotient and remainder of polynomial long division by nonzero q."""
    if q == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    quo = 0
    dq = degree(q)
    while p and degree(p) >= dq:
        shift = degree(p) - dq
        quo ^= 1 << shift
        p ^= q << shift
    return quo, p


def mod(p: int, q: int) -> int:
    """Remainder of p modulo nonzero q."""
    return divmod_(p, q)[1]


def div_exact(p: int, q: int) -> int:
    """Quotient p / q when q divides p exactly; a remainder is an error."""
    quo, rem = divmod_(p, q)
    if rem:
        raise ValueError("polynomial division left a nonzero remainder")
    return quo


def gcd(p: int, q: int) -> int:
    """Greatest common divisor by the Euclidean algorithm; gcd(p, 0) = p."""
    if p == 0 and q == 0:
        raise ValueError("gcd of two zero polynomials is undefined")
    while q:
        p, q = q, mod(p, q)
    return p


def x_pow_n_plus_1(n: int) -> int:
    """The modulus polynomial x^n + 1."""
    return (1 << n) | 1


def cyclic_shift(p: int, t: int, n: int) -> int:
    """p * x^t mod x^n + 1: a cyclic shift of the coefficient vector."""
    t %= n
    if t == 0:
        return p
    mask = (1 << n) - 1
    return ((p << t) & mask) | (p >> (n - t))


def reverse_mod(p: int, n: int) -> int:
    """Map each exponent e to (n - e) mod n, i.e. evaluate x -> x^-1 in R_n."""
    out = 0
    for e in range(n):
        if (p >> e) & 1:
            out ^= 1 << ((n - e) % n)
    return out


def reciprocal(p: int) -> int:
    """x^deg(p) * p(1/x): the coefficient vector reversed up to the degree."""
    if p == 0:
        return 0
    d = p.bit_length() - 1
    out = 0
    for e in range(d + 1):
        if (p >> e) & 1:
            out ^= 1 << (d - e)
    return out


def exponents(p: int) -> list[int]:
    """Exponents with nonzero coefficient, in descending order."""
    return [e for e in range(p.bit_length() - 1, -1, -1) if (p >> e) & 1]


def from_exponents(exps) -> int:
    """Polynomial with the given exponent set; duplicates are rejected."""
    p = 0
    for e in exps:
        e = int(e)
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        bit = 1 << e
        if p & bit:
            raise ValueError(f"duplicate exponent {e}")
        p |= bit
    return p


def format_exponents(p: int) -> str:
    """Render as a comma-separated descending exponent list, e.g. "6,5,3,0"."""
    if p == 0:
        return ""
    return ",".join(str(e) for e in exponents(p))


def parse_exponents(text: str, n: int | None = None) -> int:
    """Parse the ``format_exponents`` rendering; validates range when n given."""
    text = text.strip()
    if not text:
        return 0
    exps = [int(tok) for tok in text.split(",")]
    if n is not None:
        bad = [e for e in exps if not 0 <= e < n]
        if bad:
            raise ValueError(f"exponents {bad} outside [0, {n})")
    return from_exponents(exps)
