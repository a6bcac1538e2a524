"""Cyclotomic cosets mod n and idempotent assembly from coset selections."""

from dataclasses import dataclass

from . import gf2poly


def multiplicative_order_of_two(n: int) -> int:
    """Smallest m with 2^m = 1 mod n; equals the size of the coset of 1."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be an odd integer >= 3, got {n}")
    m, x = 1, 2 % n
    while x != 1:
        x = 2 * x % n
        m += 1
    return m


@dataclass(frozen=True)
class CosetTable:
    """Partition of {0, ..., n-1} into orbits under doubling mod n.

    Cosets are stored sorted by representative; each coset is an ascending
    tuple whose first element is its representative (the smallest member).
    """

    n: int
    cosets: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def coset(self, s: int) -> tuple[int, ...]:
        """The coset with representative s."""
        try:
            idx = self.representatives.index(s)
        except ValueError:
            raise ValueError(f"{s} is not a coset representative mod {self.n}") from None
        return self.cosets[idx]


def build_cosets(n: int) -> CosetTable:
    """Complete coset partition of {0, ..., n-1} with minimal representatives."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be an odd integer >= 3, got {n}")
    seen = [False] * n
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        orbit = []
        x = s
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = 2 * x % n
        cosets.append(tuple(sorted(orbit)))
    cosets.sort(key=lambda c: c[0])
    return CosetTable(n=n, cosets=tuple(cosets), representatives=tuple(c[0] for c in cosets))


def idempotent_from_cosets(table: CosetTable, selection) -> int:
    """Sum of x^i over every member i of every selected coset."""
    p = 0
    for s in selection:
        for i in table.coset(s):
            p ^= 1 << i
    return p


def is_idempotent(p: int, n: int) -> bool:
    """True when p^2 = p mod x^n + 1."""
    return gf2poly.mul_mod(p, p, n) == p


def dual_idempotent(i: int, n: int) -> int:
    """Generating idempotent of the dual code: 1 + x^n i(x^-1).

    The exponent reversal maps the constant term to itself, so the net
    effect is reversal followed by toggling the constant term.  The map is
    an involution on idempotents; non-idempotent input is rejected because
    it almost always indicates a selection-assembly bug upstream.
    """
    if not is_idempotent(i, n):
        raise ValueError("input is not an idempotent mod x^n + 1")
    return gf2poly.reverse_mod(i, n) ^ 1


def reversed_coset_polynomial(table: CosetTable, s: int) -> int:
    """Sum of x^((n - i) mod n) over the coset of s, for nonzero s.

    The exponent set is again a full cyclotomic coset (negation mod n
    commutes with doubling), which is what makes sums of these blocks,
    plus the constant 1, idempotents.
    """
    if s == 0:
        raise ValueError("the coset of 0 is excluded from dual-idempotent assembly")
    n = table.n
    p = 0
    for i in table.coset(s):
        p ^= 1 << ((n - i) % n)
    return p
