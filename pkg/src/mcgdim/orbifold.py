"""Quotient orbifolds of finite group actions on punctured surfaces.

A finite group F acting on a closed surface with signature (g_F; p_1, ..., p_k)
has one orbit of size |F|/p_i over each elliptic point and free orbits of size
|F| everywhere else.  An F-invariant set of n punctures is therefore a choice
of occupied elliptic orbits plus some number of free orbits, subject to

    n = free_orbits * |F| + sum(|F| / p_i for occupied i).

The quotient S_g^n / F has n_F = k + free_orbits marked points: an occupied
elliptic orbit becomes one marked point, already counted among the k elliptic
points.  All arithmetic is exact.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .dimensions import vcd_mcg


class InconsistentSignature(ValueError):
    pass


@dataclass(frozen=True)
class OrbifoldSignature:
    quotient_genus: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(int(p) for p in self.periods))
        if self.quotient_genus < 0:
            raise ValueError("quotient genus must be >= 0")
        if any(p < 2 for p in self.periods):
            raise ValueError(f"elliptic periods must be >= 2, got {self.periods}")

    @property
    def elliptic_count(self) -> int:
        return len(self.periods)

    def __str__(self):
        body = ",".join(map(str, self.periods))
        return f"({self.quotient_genus};{body})" if body else f"({self.quotient_genus};)"

    def to_json(self) -> dict:
        return {"genus": self.quotient_genus, "periods": list(self.periods)}

    @classmethod
    def from_json(cls, data: Mapping) -> OrbifoldSignature:
        return cls(int(data["genus"]), tuple(data["periods"]))


@dataclass(frozen=True, order=True)
class PunctureDistribution:
    occupied: frozenset = field(default_factory=frozenset)
    free_orbits: int = 0
    elliptic_count: int = 0

    @property
    def n_F(self) -> int:
        return self.elliptic_count + self.free_orbits

    def punctures(self, order: int, sig: OrbifoldSignature) -> int:
        return self.free_orbits * order + sum(order // sig.periods[i] for i in self.occupied)


def orbit_sizes(order: int, sig: OrbifoldSignature) -> tuple[int, ...]:
    """Sizes of the orbits lying over each elliptic point."""
    bad = [p for p in sig.periods if order % p]
    if bad:
        raise InconsistentSignature(f"periods {bad} do not divide |F| = {order}")
    return tuple(order // p for p in sig.periods)


def riemann_hurwitz_check(total_genus: int, order: int, sig: OrbifoldSignature) -> bool:
    """Whether chi(S_g) = |F| * chi^orb(S_g / F) holds exactly."""
    orb_chi = 2 - 2 * sig.quotient_genus - sum(1 - Fraction(1, p) for p in sig.periods)
    return 2 - 2 * total_genus == order * orb_chi


def feasible_distributions(
    order: int,
    sig: OrbifoldSignature,
    n: int,
    constraints: Mapping[int, bool] | None = None,
) -> frozenset[PunctureDistribution]:
    """Every way to place ``n`` punctures as a union of F-orbits.

    ``constraints`` optionally pins some elliptic points to occupied (True) or
    empty (False); positions index ``sig.periods``.  An empty result means no
    action with this signature preserves a set of exactly ``n`` points.
    """
    sizes = orbit_sizes(order, sig)
    constraints = constraints or {}
    k = len(sizes)
    out = set()
    for r in range(k + 1):
        for subset in combinations(range(k), r):
            chosen = set(subset)
            if any((i in chosen) != want for i, want in constraints.items()):
                continue
            rest = n - sum(sizes[i] for i in subset)
            if rest >= 0 and rest % order == 0:
                out.add(PunctureDistribution(frozenset(subset), rest // order, k))
    return frozenset(out)


def nf_values(order: int, sig: OrbifoldSignature, n: int, constraints: Mapping[int, bool] | None = None) -> frozenset[int]:
    return frozenset(d.n_F for d in feasible_distributions(order, sig, n, constraints))


def nf_upper_bound(order: int, sig: OrbifoldSignature, n: int) -> Fraction:
    """The a-priori bound n_F <= n/|F| + o_F."""
    return Fraction(n, order) + sig.elliptic_count


def vcd_weyl(sig_genus: int, n_F: int) -> int:
    """vcd of the Weyl group WF, which is commensurable with Mod_{g_F}^{n_F}."""
    return vcd_mcg(sig_genus, n_F)


def centralizer_vcd_bound(n: int, r: int) -> Fraction:
    """Upper bound n/r - 1 for vcd W(g), g of order r in Mod_0^n."""
    if n < 3 or r < 2:
        raise ValueError(f"need n >= 3 and r >= 2, got n={n}, r={r}")
    if r > n:
        raise ValueError(f"an element of order {r} cannot lie in Mod_0^{n} (needs r <= n)")
    return Fraction(n, r) - 1
