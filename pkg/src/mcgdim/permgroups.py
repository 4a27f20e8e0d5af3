"""Small permutation groups: closure, subgroup lattices, chain length, Burnside counts.

Groups are capped at :data:`MAX_ORDER` elements, which is enough for every
concrete group the catalogs need (A_5 is the largest).  Permutations are tuples
of images ``p[i]`` on the points ``0..degree-1``; products compose right to
left, ``mul(p, q)[i] == p[q[i]]``.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

MAX_ORDER = 60

Perm = tuple


class OrderBoundExceeded(ValueError):
    pass


class InconsistentAction(ValueError):
    pass


class NonIntegralBurnsideSum(InconsistentAction):
    pass


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def from_cycles(degree: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation from disjoint cycles, e.g. ``from_cycles(4, (0, 1), (2, 3))``."""
    img = list(range(degree))
    seen = set()
    for cyc in cycles:
        for k, a in enumerate(cyc):
            if a in seen or not 0 <= a < degree:
                raise ValueError(f"bad cycle {cyc!r} on {degree} points")
            seen.add(a)
            img[a] = cyc[(k + 1) % len(cyc)]
    return tuple(img)


def _check_perm(p, degree: int) -> Perm:
    p = tuple(int(x) for x in p)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise ValueError(f"{p!r} is not a permutation of {degree} points")
    return p


class PermutationGroup:
    """The group generated by ``generators`` acting on ``degree`` points.

    Instances are immutable after construction; element and lattice data are
    computed lazily and cached.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (), name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        self.generators = tuple(_check_perm(g, degree) for g in generators)
        self.name = name

    def __repr__(self):
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermutationGroup({label}, degree={self.degree})"

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        """All elements, identity first, in breadth-first discovery order."""
        e = identity(self.degree)
        found = {e: None}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for s in self.generators:
                    y = mul(s, x)
                    if y not in found:
                        found[y] = None
                        if len(found) > MAX_ORDER:
                            raise OrderBoundExceeded(f"{self!r} has more than {MAX_ORDER} elements")
                        nxt.append(y)
            frontier = nxt
        return tuple(found)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _index(self) -> dict[Perm, int]:
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def _table(self) -> list[list[int]]:
        els, idx = self.elements, self._index
        return [[idx[mul(a, b)] for b in els] for a in els]

    @cached_property
    def _inverses(self) -> list[int]:
        idx = self._index
        return [idx[inverse(p)] for p in self.elements]

    def _closure(self, start: int, gens: Sequence[int]) -> int:
        """Bitmask of the subgroup generated by the subgroup ``start`` and ``gens``."""
        table = self._table
        members = [i for i in range(self.order) if start >> i & 1] or [0]
        mask = start | 1
        frontier = list(members)
        while frontier:
            nxt = []
            for x in frontier:
                row = table[x]
                for s in gens:
                    y = row[s]
                    if not mask >> y & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask

    def _mask_to_set(self, mask: int) -> frozenset:
        return frozenset(p for i, p in enumerate(self.elements) if mask >> i & 1)

    def _subgroup_masks(self) -> list[int]:
        # every subgroup is a join of cyclic subgroups, so joining one element
        # at a time from the cyclic subgroups reaches all of them
        n = self.order
        found: dict[int, None] = {}
        queue = []
        for g in range(n):
            h = self._closure(1, [g])
            if h not in found:
                found[h] = None
                queue.append(h)
        while queue:
            h = queue.pop()
            for g in range(n):
                if h >> g & 1:
                    continue
                k = self._closure(h, [g] + [i for i in range(n) if h >> i & 1])
                if k not in found:
                    found[k] = None
                    queue.append(k)
        return sorted(found, key=lambda m: (m.bit_count(), m))

    @cached_property
    def lattice(self) -> SubgroupLattice:
        masks = self._subgroup_masks()
        containment = tuple(
            frozenset(j for j, b in enumerate(masks) if b & a == b) for a in masks
        )
        return SubgroupLattice(
            subgroups=tuple(self._mask_to_set(m) for m in masks),
            containment=containment,
        )

    def derived_subgroup(self, mask: int | None = None) -> int:
        """Bitmask of the commutator subgroup of the subgroup ``mask`` (default: whole group)."""
        table, inv = self._table, self._inverses
        members = [i for i in range(self.order) if mask is None or mask >> i & 1]
        comms = {table[table[inv[a]][inv[b]]][table[a][b]] for a in members for b in members}
        return self._closure(1, sorted(comms))


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of a group, sorted by order, with full containment.

    ``containment[i]`` is the set of indices ``j`` with ``subgroups[j] <= subgroups[i]``.
    """

    subgroups: tuple[frozenset, ...]
    containment: tuple[frozenset, ...]

    def __len__(self):
        return len(self.subgroups)

    @property
    def orders(self) -> list[int]:
        return [len(h) for h in self.subgroups]

    def longest_chain(self) -> int:
        # subgroups are sorted by order, so every proper subgroup of i sits before i
        length = [0] * len(self.subgroups)
        for i, below in enumerate(self.containment):
            length[i] = max((length[j] + 1 for j in below if j != i), default=0)
        return length[-1]


def _as_group(G) -> PermutationGroup:
    if isinstance(G, PermutationGroup):
        return G
    raise TypeError(f"expected PermutationGroup, got {type(G).__name__}")


def enumerate_elements(G: PermutationGroup) -> frozenset:
    return frozenset(_as_group(G).elements)


def subgroup_lattice(G: PermutationGroup) -> SubgroupLattice:
    return _as_group(G).lattice


def chain_length(G: PermutationGroup) -> int:
    """Length of the longest strictly increasing subgroup chain 1 = F_0 < ... < F_k = G."""
    return _as_group(G).lattice.longest_chain()


def is_solvable(G: PermutationGroup) -> bool:
    """True iff the derived series of G reaches the trivial group."""
    G = _as_group(G)
    current = (1 << G.order) - 1
    while current != 1:
        derived = G.derived_subgroup(current)
        if derived == current:
            return False
        current = derived
    return True


def induced_action(G: PermutationGroup, generator_images: Sequence[Sequence[int]]) -> dict[Perm, Perm]:
    """Extend images of ``G.generators`` to a homomorphism G -> Sym(X).

    Raises :class:`InconsistentAction` when the images do not define a homomorphism.
    """
    G = _as_group(G)
    if len(generator_images) != len(G.generators):
        raise InconsistentAction("need one image per generator")
    size = len(generator_images[0]) if generator_images else 0
    images = [_check_perm(p, size) for p in generator_images]
    phi = {identity(G.degree): identity(size)}
    frontier = [identity(G.degree)]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(G.generators, images):
                y, img = mul(s, x), mul(t, phi[x])
                if y in phi:
                    if phi[y] != img:
                        raise InconsistentAction(f"generator images do not define an action of {G!r}")
                else:
                    phi[y] = img
                    nxt.append(y)
        frontier = nxt
    return phi


def burnside_orbit_count(G: PermutationGroup, action: Mapping[Perm, Perm] | Callable[[Perm], Perm] | None = None) -> int:
    """Number of orbits of G on a finite set, as the average number of fixed points.

    ``action`` maps each element of G to the permutation it induces on the marked
    set; it defaults to G's own action on its points.
    """
    G = _as_group(G)
    if action is None:
        act = lambda p: p  # noqa: E731
    elif callable(action):
        act = action
    else:
        act = action.__getitem__
    total = 0
    for g in G.elements:
        img = act(g)
        total += sum(1 for i, j in enumerate(img) if i == j)
    count = Fraction(total, G.order)
    if count.denominator != 1:
        raise NonIntegralBurnsideSum(f"fixed-point average {count} is not an integer")
    return int(count)


def orbit_partition(size: int, perms: Iterable[Sequence[int]]) -> list[frozenset]:
    """Orbits of the group generated by ``perms`` on ``0..size-1``, by direct search."""
    perms = [tuple(p) for p in perms]
    seen = [False] * size
    orbits = []
    for start in range(size):
        if seen[start]:
            continue
        orbit, stack = {start}, [start]
        seen[start] = True
        while stack:
            a = stack.pop()
            for p in perms:
                b = p[a]
                if not seen[b]:
                    seen[b] = True
                    orbit.add(b)
                    stack.append(b)
        orbits.append(frozenset(orbit))
    return orbits


# -- standard models -------------------------------------------------------

def cyclic_group(m: int) -> PermutationGroup:
    if m == 1:
        return PermutationGroup(1, (), name="Z/1")
    return PermutationGroup(m, [from_cycles(m, range(m))], name=f"Z/{m}")


def dihedral_group(m: int) -> PermutationGroup:
    """Dihedral group of order 2m (m >= 1)."""
    if m == 1:
        return PermutationGroup(2, [from_cycles(2, (0, 1))], name="D_2")
    if m == 2:
        gens = [from_cycles(4, (0, 1), (2, 3)), from_cycles(4, (0, 2), (1, 3))]
        return PermutationGroup(4, gens, name="D_4")
    rot = from_cycles(m, range(m))
    refl = tuple((-i) % m for i in range(m))
    return PermutationGroup(m, [rot, refl], name=f"D_{2 * m}")


def alternating_group_4() -> PermutationGroup:
    return PermutationGroup(4, [from_cycles(4, (0, 1, 2)), from_cycles(4, (0, 1), (2, 3))], name="A4")


def symmetric_group_4() -> PermutationGroup:
    return PermutationGroup(4, [from_cycles(4, (0, 1, 2, 3)), from_cycles(4, (0, 1))], name="S4")


def alternating_group_5() -> PermutationGroup:
    return PermutationGroup(5, [from_cycles(5, (0, 1, 2, 3, 4)), from_cycles(5, (0, 1, 2))], name="A5")


def matrix_group_mod_p(p: int, matrices: Sequence[Sequence[Sequence[int]]], name: str | None = None) -> PermutationGroup:
    """2x2 matrices over Z/p acting on the nonzero vectors of (Z/p)^2."""
    vectors = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}
    gens = []
    for (a, b), (c, d) in matrices:
        gens.append(tuple(index[((a * x + b * y) % p, (c * x + d * y) % p)] for x, y in vectors))
    return PermutationGroup(len(vectors), gens, name=name)
