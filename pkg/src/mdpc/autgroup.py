"""Automorphism-group elements of cyclic codes: cyclic shifts, Frobenius
(doubling) maps, their compositions, and uniform sampling.

Coordinates are zero-indexed throughout; this module is the only place the
index convention is fixed.
"""

import numpy as np


class Permutation:
    """Bijection on {0, ..., n-1}; mapping[i] is the image of coordinate i."""

    __slots__ = ("mapping",)

    def __init__(self, mapping):
        arr = np.asarray(mapping, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("mapping must be one-dimensional")
        arr = arr.copy()
        arr.setflags(write=False)
        if not np.array_equal(np.sort(arr), np.arange(arr.size)):
            raise ValueError("mapping is not a bijection on {0, ..., n-1}")
        self.mapping = arr

    @property
    def n(self) -> int:
        return self.mapping.size

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self.mapping, other.mapping)

    def __hash__(self):
        return hash(self.mapping.tobytes())

    def __repr__(self):
        return f"Permutation({self.mapping.tolist()})"


def identity(n: int) -> Permutation:
    return Permutation(np.arange(n))


def cyclic_shift(n: int, a: int) -> Permutation:
    """Coordinate i maps to (i + a) mod n."""
    if not 0 <= a < n:
        raise ValueError(f"shift amount {a} outside [0, {n})")
    return Permutation((np.arange(n) + a) % n)


def frobenius(n: int, j: int) -> Permutation:
    """Coordinate i maps to 2^j * i mod n; j = ord_2(n) wraps to the identity."""
    if j < 0:
        raise ValueError("Frobenius power must be nonnegative")
    return Permutation(pow(2, j, n) * np.arange(n) % n)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation applying q first, then p."""
    if p.n != q.n:
        raise ValueError("cannot compose permutations of different lengths")
    return Permutation(p.mapping[q.mapping])


def inverse(p: Permutation) -> Permutation:
    inv = np.empty(p.n, dtype=np.int64)
    inv[p.mapping] = np.arange(p.n)
    return Permutation(inv)


def apply(p: Permutation, v) -> np.ndarray:
    """Permute a length-n sequence: output position p(i) holds input element i."""
    arr = np.asarray(v)
    if arr.shape != (p.n,):
        raise ValueError(f"expected a length-{p.n} sequence, got shape {arr.shape}")
    out = np.empty_like(arr)
    out[p.mapping] = arr
    return out


def sample_random(n: int, coset1_size: int, rng: np.random.Generator) -> Permutation:
    """Uniform shift composed with a uniform Frobenius power (shift applied first)."""
    a = int(rng.integers(0, n))
    j = int(rng.integers(0, coset1_size))
    return compose(frobenius(n, j), cyclic_shift(n, a))
