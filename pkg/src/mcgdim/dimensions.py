"""Closed-form dimension formulas for mapping class groups.

Everything here is integer arithmetic.  Logarithmic bounds are decided by
comparing powers of two, never by floating point.
"""
from __future__ import annotations

from dataclasses import dataclass


class ExternalResultError(ValueError):
    """Raised when a value is only known from a result this package does not verify."""


@dataclass(frozen=True, order=True)
class MappingClassGroup:
    """The label (g, n) of Mod_g^n: genus-g closed surface with n permutable punctures."""

    genus: int
    punctures: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise ValueError(f"genus and punctures must be >= 0, got ({self.genus}, {self.punctures})")

    def __str__(self):
        return f"Mod_{self.genus}^{self.punctures}"

    def to_json(self) -> dict:
        return {"genus": self.genus, "punctures": self.punctures}


def _as_mcg(g, n=None) -> MappingClassGroup:
    if isinstance(g, MappingClassGroup):
        return g
    return MappingClassGroup(g, n if n is not None else 0)


def vcd_mcg(g, n=None) -> int:
    """Harer's virtual cohomological dimension of Mod_g^n.

    Accepts either a :class:`MappingClassGroup` or the pair ``(g, n)``.
    """
    G = _as_mcg(g, n)
    g, n = G.genus, G.punctures
    if g == 0:
        return 0 if n < 3 else n - 3
    if n == 0:
        return 1 if g == 1 else 4 * g - 5
    return 4 * g - 4 + n


def gd_mcg(g, n=None, *, allow_external: bool = False) -> int:
    """Proper geometric dimension of Mod_g^n, which equals its vcd.

    Closed surfaces of genus >= 1 are the closed-surface theorem of Aramayona and
    Martinez Perez, which this package cites but does not check; asking for them
    raises :class:`ExternalResultError` unless ``allow_external`` is set.
    """
    G = _as_mcg(g, n)
    if G.genus >= 1 and G.punctures == 0 and not allow_external:
        raise ExternalResultError(
            f"gd({G}) is covered by Aramayona-Martinez Perez, not this artifact "
            "(pass allow_external=True to get Harer's vcd)"
        )
    return vcd_mcg(G)


def vcd_spherical_braid(n: int) -> int:
    """vcd of the full spherical braid group B_n(S_0); also its gd."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return max(0, n - 3)


def omega(order: int) -> int:
    """Number of prime factors of ``order`` counted with multiplicity."""
    if order < 1:
        raise ValueError(f"need order >= 1, got {order}")
    count, p = 0, 2
    while p * p <= order:
        while order % p == 0:
            order //= p
            count += 1
        p += 1
    return count + (order > 1)


def length_upper_bound(order: int) -> int:
    """Largest integer lam with 2**lam <= order.

    Subgroup chain lengths are integers, so ``lam <= log2(order)`` holds exactly
    when ``lam <= length_upper_bound(order)``.
    """
    if order < 1:
        raise ValueError(f"need order >= 1, got {order}")
    return order.bit_length() - 1


def satisfies_length_bound(lam: int, order: int) -> bool:
    return lam >= 0 and (1 << lam) <= order


def le_pow2(x: int, p: int) -> bool:
    """Exact test of ``x <= 2**p`` for integers, without materialising 2**p."""
    if x <= 0:
        return True
    if p < 0:
        return False
    bits = x.bit_length()
    if bits <= p:
        return True
    # x == 2**p is the only remaining way to satisfy x <= 2**p
    return bits == p + 1 and x & (x - 1) == 0
