"""Finite subgroups of Mod_g^n for g = 0, 1, 2.

Genus 0 follows Stukow's classification of maximal finite subgroups of the
punctured sphere, genus 1 the crystallographic description of finite actions on
the torus, and genus 2 Broughton's table of actions on the closed genus-2
surface (stored as data).
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache

from . import permgroups as pg
from .dimensions import MappingClassGroup
from .orbifold import OrbifoldSignature, nf_values, riemann_hurwitz_check

FAMILIES = ("cyclic", "dihedral", "A4", "S4", "A5", "wallpaper_torus", "broughton")
POLYHEDRAL = ("A4", "S4", "A5")
_POLYHEDRAL_ORDER = {"A4": 12, "S4": 24, "A5": 60}

SOURCE_GENUS0 = "Stukow 2006"
SOURCE_GENUS1 = "torus quotients by (Z/s x Z/t) x| Z/m"
SOURCE_GENUS2 = "Broughton 1991"


@dataclass(frozen=True)
class FiniteGroupSpec:
    """An abstract finite group, identified by its family and parameters.

    ``params`` is ``(m,)`` for cyclic and dihedral groups (the dihedral group has
    order 2m), ``(s, t, m)`` for torus wallpaper quotients, ``(row,)`` for
    Broughton rows and empty for the polyhedral groups.
    """

    family: str
    order: int
    params: tuple[int, ...] = ()
    label: str = ""
    solvable: bool = True

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        expected = _family_order(self.family, self.params)
        if expected is not None and expected != self.order:
            raise ValueError(f"{self.family}{self.params} has order {expected}, not {self.order}")

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.family == "cyclic":
            return f"Z/{self.params[0]}"
        if self.family == "dihedral":
            return f"D_{{2({self.params[0]})}}"
        if self.family == "wallpaper_torus":
            s, t, m = self.params
            return f"(Z/{s} x Z/{t}) x| Z/{m}"
        return {"A4": "A_4", "S4": "S_4", "A5": "A_5"}[self.family]

    def __str__(self):
        return self.name

    def to_json(self) -> dict:
        out: dict = {"family": self.family}
        if self.family in ("cyclic", "dihedral"):
            out["m"] = self.params[0]
        elif self.family == "wallpaper_torus":
            out.update(zip("stm", self.params))
        elif self.family == "broughton":
            out["row"] = self.params[0]
            out["label"] = self.label
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> FiniteGroupSpec:
        fam = data["family"]
        if fam == "cyclic":
            return cyclic(int(data["m"]))
        if fam == "dihedral":
            return dihedral(int(data["m"]))
        if fam in POLYHEDRAL:
            return polyhedral(fam)
        if fam == "wallpaper_torus":
            return wallpaper_torus(int(data["s"]), int(data["t"]), int(data["m"]))
        if fam == "broughton":
            return BROUGHTON_ROWS[int(data["row"])][0]
        raise ValueError(f"unknown family {fam!r}")

    def permutation_model(self) -> pg.PermutationGroup | None:
        return _permutation_model(self)


def _family_order(family: str, params: tuple[int, ...]) -> int | None:
    if family == "cyclic":
        return params[0]
    if family == "dihedral":
        return 2 * params[0]
    if family == "wallpaper_torus":
        s, t, m = params
        return s * t * m
    return _POLYHEDRAL_ORDER.get(family)


def cyclic(m: int) -> FiniteGroupSpec:
    return FiniteGroupSpec("cyclic", m, (m,))


def dihedral(m: int) -> FiniteGroupSpec:
    return FiniteGroupSpec("dihedral", 2 * m, (m,))


def polyhedral(name: str) -> FiniteGroupSpec:
    return FiniteGroupSpec(name, _POLYHEDRAL_ORDER[name], (), solvable=name != "A5")


def wallpaper_torus(s: int, t: int, m: int) -> FiniteGroupSpec:
    return FiniteGroupSpec("wallpaper_torus", s * t * m, (s, t, m))


@dataclass(frozen=True)
class CatalogEntry:
    group: FiniteGroupSpec
    ambient: MappingClassGroup
    signature: OrbifoldSignature
    class_count: int = 1
    source: str = ""

    def to_json(self) -> dict:
        return {
            "family": self.group.family,
            "group": self.group.to_json(),
            "label": self.group.name,
            "order": self.group.order,
            "signature": self.signature.to_json(),
            "ambient": self.ambient.to_json(),
            "class_count": self.class_count,
            "source": self.source,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CatalogEntry:
        amb = data["ambient"]
        return cls(
            group=FiniteGroupSpec.from_json(data["group"]),
            ambient=MappingClassGroup(int(amb["genus"]), int(amb["punctures"])),
            signature=OrbifoldSignature.from_json(data["signature"]),
            class_count=int(data["class_count"]),
            source=data["source"],
        )


# -- genus 0 ---------------------------------------------------------------

def genus0_signature(group: FiniteGroupSpec) -> OrbifoldSignature:
    """Quotient signature of a finite rotation group of the sphere.

    For cyclic groups the two periods are the poles; for dihedral groups the
    last period is the pole pair, the first two are the equatorial axes.
    """
    if group.family == "cyclic":
        m = group.params[0]
        return OrbifoldSignature(0, (m, m))
    if group.family == "dihedral":
        return OrbifoldSignature(0, (2, 2, group.params[0]))
    periods = {"A4": (2, 3, 3), "S4": (2, 3, 4), "A5": (2, 3, 5)}
    return OrbifoldSignature(0, periods[group.family])


def maximal_genus0(n: int) -> list[FiniteGroupSpec]:
    """Maximal finite subgroups of Mod_0^n, up to isomorphism."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    out = []
    if n != 4:
        out.append(cyclic(n - 1))
    out.append(dihedral(n))
    if n == 5 or n >= 7:
        out.append(dihedral(n - 2))
    if n % 12 in (4, 10):
        out.append(polyhedral("A4"))
    if n % 24 in (0, 2, 6, 8, 12, 14, 18, 20):
        out.append(polyhedral("S4"))
    # residues are read modulo 60: the printed modulus 12 cannot produce residues up to 50
    if n % 60 in (0, 2, 12, 20, 30, 32, 42, 50):
        out.append(polyhedral("A5"))
    return out


def conjugacy_class_count(group: FiniteGroupSpec, n: int) -> int:
    """Number of conjugacy classes of subgroups of Mod_0^n isomorphic to ``group``."""
    if group.family == "cyclic" and group.params[0] == 2 and n % 2 == 0:
        return 2
    if group.family == "dihedral":
        m2 = 2 * group.params[0]
        if n % m2 == 0 or (n - 2) % m2 == 0:
            return 2
    return 1


def _divides(d: int, k: int) -> bool:
    return k == 0 or (k > 0 and k % d == 0)


@lru_cache(maxsize=None)
def _subgroups_genus0(n: int) -> tuple[CatalogEntry, ...]:
    ambient = MappingClassGroup(0, n)
    groups = []
    groups += [cyclic(m) for m in range(n, 1, -1) if any(_divides(m, n - k) for k in (0, 1, 2))]
    groups += [dihedral(m) for m in range(n, 1, -1) if _divides(m, n) or _divides(m, n - 2)]
    for name in POLYHEDRAL:
        G = polyhedral(name)
        if nf_values(G.order, genus0_signature(G), n):
            groups.append(G)
    return tuple(
        CatalogEntry(G, ambient, genus0_signature(G), conjugacy_class_count(G, n), SOURCE_GENUS0)
        for G in groups
    )


def subgroups_genus0(n: int) -> list[CatalogEntry]:
    """Nontrivial finite subgroups of Mod_0^n up to isomorphism, one entry per group.

    Cyclic and dihedral groups are the subgroups of the rotation groups of the
    maximal groups Z/(n-1), D_2n and D_2(n-2); polyhedral groups are included
    whenever some orbit decomposition of n punctures exists.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return list(_subgroups_genus0(n))


# -- genus 1 ---------------------------------------------------------------

GENUS1_SIGNATURES = {
    1: OrbifoldSignature(1, ()),
    2: OrbifoldSignature(0, (2, 2, 2, 2)),
    3: OrbifoldSignature(0, (3, 3, 3)),
    4: OrbifoldSignature(0, (2, 4, 4)),
    6: OrbifoldSignature(0, (2, 3, 6)),
}


def families_genus1(n: int) -> list[CatalogEntry]:
    """One entry per (s, t, m) with st | n and m in {1, 2, 3, 4, 6}.

    Not every triple is realised by an action (the translation lattice must be
    invariant under the rotation), so this is a superset of the finite subgroups
    of Mod_1^n.  The trivial group (1, 1, 1) is included.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    ambient = MappingClassGroup(1, n)
    out = []
    for s in range(1, n + 1):
        if n % s:
            continue
        for t in range(1, n // s + 1):
            if n % (s * t):
                continue
            for m, sig in GENUS1_SIGNATURES.items():
                out.append(CatalogEntry(wallpaper_torus(s, t, m), ambient, sig, 1, SOURCE_GENUS1))
    return out


# -- genus 2 ---------------------------------------------------------------

def _broughton_rows():
    rows = [
        ("Z/2", 2, (0, (2, 2, 2, 2, 2, 2))),
        ("Z/2", 2, (1, (2, 2))),
        ("Z/3", 3, (0, (3, 3, 3, 3))),
        ("Z/2xZ/2", 4, (0, (2, 2, 2, 2, 2))),
        ("Z/4", 4, (0, (2, 2, 4, 4))),
        ("Z/5", 5, (0, (5, 5, 5))),
        ("Z/6", 6, (0, (3, 6, 6))),
        ("Z/6", 6, (0, (2, 2, 3, 3))),
        ("D_{2(3)}", 6, (0, (2, 2, 3, 3))),
        ("Z/8", 8, (0, (2, 8, 8))),
        ("D~_2", 8, (0, (4, 4, 4))),
        ("D_{2(4)}", 8, (0, (2, 2, 2, 4))),
        ("Z/10", 10, (0, (2, 5, 10))),
        ("Z/2xZ/6", 12, (0, (2, 6, 6))),
        ("D_{4,3,-1}", 12, (0, (3, 4, 4))),
        ("D_{2(6)}", 12, (0, (2, 2, 2, 3))),
        ("D_{2,8,3}", 16, (0, (2, 4, 8))),
        ("Z/2x|(Z/2xZ/2xZ/3)", 24, (0, (2, 4, 6))),
        ("SL_2(3)", 24, (0, (3, 3, 4))),
        # printed as GL_2(4); the order-48 group in the classification is GL(2,3)
        ("GL_2(4)", 48, (0, (2, 3, 8))),
    ]
    return tuple(
        (FiniteGroupSpec("broughton", order, (i,), label), OrbifoldSignature(g, periods))
        for i, (label, order, (g, periods)) in enumerate(rows)
    )


BROUGHTON_ROWS = _broughton_rows()


def broughton_genus2(n: int = 0) -> list[CatalogEntry]:
    """The 20 conjugacy classes of nontrivial finite actions on the genus-2 surface."""
    ambient = MappingClassGroup(2, n)
    return [CatalogEntry(G, ambient, sig, 1, SOURCE_GENUS2) for G, sig in BROUGHTON_ROWS]


# -- permutation models ------------------------------------------------------

def _broughton_model(row: int) -> pg.PermutationGroup | None:
    cyc = pg.from_cycles
    if row in (0, 1):
        return pg.cyclic_group(2)
    if row == 2:
        return pg.cyclic_group(3)
    if row == 3:
        return pg.PermutationGroup(4, [cyc(4, (0, 1)), cyc(4, (2, 3))], name="Z/2xZ/2")
    if row == 4:
        return pg.cyclic_group(4)
    if row == 5:
        return pg.cyclic_group(5)
    if row in (6, 7):
        return pg.cyclic_group(6)
    if row == 8:
        return pg.dihedral_group(3)
    if row == 9:
        return pg.cyclic_group(8)
    if row == 10:
        # quaternion group inside SL(2,3)
        return pg.matrix_group_mod_p(3, [((0, 2), (1, 0)), ((1, 1), (1, 2))], name="Q8")
    if row == 11:
        return pg.dihedral_group(4)
    if row == 12:
        return pg.cyclic_group(10)
    if row == 13:
        return pg.PermutationGroup(8, [cyc(8, (0, 1)), cyc(8, range(2, 8))], name="Z/2xZ/6")
    if row == 14:
        # x^4 = y^3 = 1, x y x^-1 = y^-1
        return pg.PermutationGroup(7, [cyc(7, (0, 1), (3, 4, 5, 6)), cyc(7, (0, 1, 2))], name="D_{4,3,-1}")
    if row == 15:
        return pg.dihedral_group(6)
    if row == 16:
        # x^2 = y^8 = 1, x y x^-1 = y^3, as affine maps of Z/8
        return pg.PermutationGroup(8, [tuple((i + 1) % 8 for i in range(8)), tuple(3 * i % 8 for i in range(8))], name="D_{2,8,3}")
    if row == 17:
        # C3 x| D4 with the D4 acting through a quotient of order 2: inside S3 x D4
        gens = [cyc(7, (0, 1, 2)), cyc(7, (1, 2), (3, 4, 5, 6)), cyc(7, (4, 6))]
        return pg.PermutationGroup(7, gens, name="Z/2x|(Z/2xZ/2xZ/3)")
    if row == 18:
        return pg.matrix_group_mod_p(3, [((1, 1), (0, 1)), ((1, 0), (1, 1))], name="SL(2,3)")
    if row == 19:
        return pg.matrix_group_mod_p(3, [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((2, 0), (0, 1))], name="GL(2,3)")
    return None


def _permutation_model(G: FiniteGroupSpec) -> pg.PermutationGroup | None:
    if G.family == "cyclic":
        return pg.cyclic_group(G.params[0]) if G.order <= pg.MAX_ORDER else None
    if G.family == "dihedral":
        return pg.dihedral_group(G.params[0]) if G.order <= pg.MAX_ORDER else None
    if G.family == "A4":
        return pg.alternating_group_4()
    if G.family == "S4":
        return pg.symmetric_group_4()
    if G.family == "A5":
        return pg.alternating_group_5()
    if G.family == "broughton":
        return _broughton_model(G.params[0])
    return None


def all_genus0_groups(n_max: int) -> list[FiniteGroupSpec]:
    """Distinct groups appearing in subgroups_genus0(n) for 3 <= n <= n_max."""
    seen = {}
    for n in range(3, n_max + 1):
        for e in _subgroups_genus0(n):
            seen.setdefault(e.group, None)
    return list(seen)


def check_entry(entry: CatalogEntry) -> bool:
    return riemann_hurwitz_check(entry.ambient.genus, entry.group.order, entry.signature)
