"""Seedable, cross-platform pseudo-randomness.

Everything random in this package flows through :class:`Rng`, a SplitMix64
stream, so that (seed -> outputs) is reproducible bit-for-bit on any platform
and any Python build.  Bounded draws use fixed-cost multiply-shift sampling
(``(u64 * bound) >> 64``) rather than rejection, so the number of raw draws
per call is constant.
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _finalize(z: int) -> int:
    # SplitMix64 finalizer (Steele, Lea & Flood's mixing constants).
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def mix64(*parts: int) -> int:
    """Fold integers into a single 64-bit seed.

    The fold is a SplitMix64 chain: starting from 0, each part is added
    together with the golden-ratio increment and passed through the
    finalizer.  Used to derive independent seeds from (base, n, trial, salt)
    tuples; any change to any part changes the result avalanche-style.
    """
    acc = 0
    for p in parts:
        acc = _finalize((acc + _GOLDEN + (p & _MASK64)) & _MASK64)
    return acc


class Rng:
    """SplitMix64 generator with bounded sampling and permutation draws."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _finalize(self._state)

    def next_below(self, bound: int) -> int:
        """Uniform draw from ``range(bound)`` via multiply-shift.

        Bias is at most bound / 2**64, far below anything observable at the
        bounds used here (<= a few thousand).
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return (self.next_u64() * bound) >> 64

    def permutation(self, n: int) -> tuple[int, ...]:
        """Uniform permutation of 1..n by a Fisher-Yates shuffle."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        items = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]
        return tuple(items)
