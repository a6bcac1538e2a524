"""GF(2^m) arithmetic for locating n-th roots of unity and building minimal
polynomials of cyclotomic cosets.

Field elements are plain ints in the polynomial basis (degree < m), reduced
modulo the context modulus.  The sizes in play (m <= 14, at most 2^14
elements) allow full log/antilog tables, which all multiplication goes
through.
"""

from dataclasses import dataclass

from . import gf2poly
from .cyclotomic import multiplicative_order_of_two


def is_irreducible(f: int) -> bool:
    """Irreducibility over GF(2): no factor of degree <= deg(f)/2 survives."""
    if f <= 1:
        return False
    m = f.bit_length() - 1
    b = 2  # the polynomial x
    for _ in range(m // 2):
        b = gf2poly.mod(gf2poly.mul(b, b), f)
        if gf2poly.gcd(b ^ 2, f) != 1:
            return False
    return True


def lowest_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible of degree m (reproducible builds)."""
    for f in range(1 << m, 1 << (m + 1)):
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible of degree {m}")  # cannot happen


def _prime_factors(v: int) -> list[int]:
    out = []
    d = 2
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        out.append(v)
    return out


@dataclass(frozen=True)
class FieldContext:
    """Splitting field of x^n + 1 over GF(2) with a fixed n-th root of unity."""

    n: int
    m: int
    modulus: int
    alpha: int
    _log: tuple[int, ...]
    _exp: tuple[int, ...]

    @property
    def order(self) -> int:
        return (1 << self.m) - 1

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                raise ValueError("0^0 is undefined in the field")
            return 0
        return self._exp[(self._log[a] * e) % self.order]

    def alpha_pow(self, i: int) -> int:
        return self.power(self.alpha, i)


def build_context(n: int) -> FieldContext:
    """Field context for odd n: m = ord_2(n), lowest irreducible modulus,
    alpha = g^((2^m - 1)/n) for a multiplicative generator g."""
    m = multiplicative_order_of_two(n)
    modulus = lowest_irreducible(m)
    order = (1 << m) - 1

    def raw_mul(a, b):
        return gf2poly.mod(gf2poly.mul(a, b), modulus)

    def raw_pow(a, e):
        r = 1
        while e:
            if e & 1:
                r = raw_mul(r, a)
            a = raw_mul(a, a)
            e >>= 1
        return r

    primes = _prime_factors(order)
    generator = None
    for cand in range(2, 1 << m):
        if all(raw_pow(cand, order // p) != 1 for p in primes):
            generator = cand
            break
    if generator is None:
        raise AssertionError("multiplicative group of a finite field has a generator")

    exp = [0] * order
    log = [0] * (1 << m)
    x = 1
    for i in range(order):
        exp[i] = x
        log[x] = i
        x = raw_mul(x, generator)
    if x != 1:
        raise AssertionError("generator order mismatch")

    alpha = exp[order // n]
    # alpha has order exactly n by construction; verified because everything
    # downstream (zero sets, BCH bounds) silently breaks if it does not.
    if raw_pow(alpha, n) != 1 or any(raw_pow(alpha, n // p) == 1 for p in _prime_factors(n)):
        raise AssertionError(f"alpha does not have multiplicative order {n}")

    return FieldContext(n=n, m=m, modulus=modulus, alpha=alpha, _log=tuple(log), _exp=tuple(exp))


def minimal_polynomial(ctx: FieldContext, s: int) -> int:
    """Product of (x - alpha^i) over the coset of s, expanded over GF(2^m).

    The result always collapses to GF(2) coefficients; a non-binary
    coefficient indicates a broken field context and is rejected.
    """
    if not 0 <= s < ctx.n:
        raise ValueError(f"coset representative {s} outside [0, {ctx.n})")
    # low-to-high coefficient list over the field
    poly = [1]
    i = s
    while True:
        root = ctx.alpha_pow(i)
        nxt = [0] * (len(poly) + 1)
        for d, coeff in enumerate(poly):
            nxt[d + 1] ^= coeff
            nxt[d] ^= ctx.mul(coeff, root)
        poly = nxt
        i = 2 * i % ctx.n
        if i == s:
            break
    if any(c not in (0, 1) for c in poly):
        raise AssertionError("minimal polynomial has a coefficient outside GF(2)")
    out = 0
    for d, coeff in enumerate(poly):
        out ^= coeff << d
    return out
