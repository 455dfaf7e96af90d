"""Finite permutation groups with 0-based image tuples.

Everything downstream (Burnside rings, Mackey functors, representations)
consumes the types defined here.  Elements are permutations of
{0, ..., degree-1} stored as image tuples, groups keep their elements in
lexicographic order so that all derived data is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InputError, InvalidPermutation, OrderCapExceeded

Perm = Tuple[int, ...]

DEFAULT_ORDER_CAP = 2000
DEFAULT_SUBGROUP_CAP = 10000


def validate_perm(images: Sequence[int], degree: int) -> Perm:
    p = tuple(int(x) for x in images)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise InvalidPermutation(
            f"images {list(images)!r} do not define a bijection on 0..{degree - 1}"
        )
    return p


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x)); q acts first."""
    return tuple(p[v] for v in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


class FiniteGroup:
    """A finite permutation group with canonically ordered element list.

    The element order is lexicographic on image tuples, which puts the
    identity at index 0 and makes every derived table reproducible.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Perm],
        elements: Sequence[Perm],
        name: Optional[str] = None,
        product_of: Optional[Tuple["FiniteGroup", "FiniteGroup"]] = None,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.name = name
        self.product_of = product_of
        self.index_of: Dict[Perm, int] = {p: i for i, p in enumerate(self.elements)}
        self.identity_index = self.index_of[identity_perm(degree)]
        self._subgroup_cache: Dict[int, "Subgroup"] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = self.name or f"degree-{self.degree}"
        return f"FiniteGroup({label}, order={self.order})"

    @cached_property
    def mult(self) -> Tuple[Tuple[int, ...], ...]:
        """mult[i][j] = index of elements[i] o elements[j]."""
        idx = self.index_of
        return tuple(
            tuple(idx[compose(p, q)] for q in self.elements) for p in self.elements
        )

    @cached_property
    def inverse(self) -> Tuple[int, ...]:
        return tuple(self.index_of[invert(p)] for p in self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.mult[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    def conj(self, g: int, x: int) -> int:
        """Index of g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.mul(i, j) == self.mul(j, i)
            for i in range(self.order)
            for j in range(i + 1, self.order)
        )

    @cached_property
    def element_classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Conjugacy classes of elements, each sorted, ordered by least member."""
        seen = [False] * self.order
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = sorted({self.conj(g, x) for g in range(self.order)})
            for y in orbit:
                seen[y] = True
            classes.append(tuple(orbit))
        return tuple(classes)

    @cached_property
    def element_class_of(self) -> Tuple[int, ...]:
        out = [0] * self.order
        for c, members in enumerate(self.element_classes):
            for x in members:
                out[x] = c
        return tuple(out)

    def subgroup(self, indices: Iterable[int]) -> "Subgroup":
        """Canonical Subgroup object for a subset already closed under the group law."""
        elems = tuple(sorted(set(indices)))
        mask = 0
        for i in elems:
            mask |= 1 << i
        cached = self._subgroup_cache.get(mask)
        if cached is not None:
            return cached
        sub = Subgroup(self, elems, mask)
        self._subgroup_cache[mask] = sub
        return sub

    def closure_indices(self, seed: Iterable[int]) -> Tuple[int, ...]:
        """Subgroup generated by the seed indices, as a sorted index tuple."""
        known = {self.identity_index}
        queue = [self.identity_index]
        gens = sorted(set(seed))
        mult = self.mult
        while queue:
            x = queue.pop()
            for g in gens:
                y = mult[x][g]
                if y not in known:
                    known.add(y)
                    queue.append(y)
        return tuple(sorted(known))

    @cached_property
    def trivial_subgroup(self) -> "Subgroup":
        return self.subgroup((self.identity_index,))

    @cached_property
    def full_subgroup(self) -> "Subgroup":
        return self.subgroup(range(self.order))

    @cached_property
    def subgroup_table(self) -> "SubgroupTable":
        return SubgroupTable(self)


class Subgroup:
    """Subgroup of a FiniteGroup, stored as sorted element indices plus a bitmask.

    Instances are canonical per (group, member set); always construct them
    through FiniteGroup.subgroup so caches are shared.
    """

    def __init__(self, parent: FiniteGroup, elems: Tuple[int, ...], mask: int):
        self.parent = parent
        self.elems = elems
        self.mask = mask

    @property
    def order(self) -> int:
        return len(self.elems)

    def contains(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return other.mask & ~self.mask == 0

    def conjugate(self, g: int) -> "Subgroup":
        G = self.parent
        return G.subgroup(G.conj(g, x) for x in self.elems)

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return self.parent.subgroup(i for i in self.elems if other.contains(i))

    @cached_property
    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group on the same points."""
        G = self.parent
        perms = [G.elements[i] for i in self.elems]
        gens = [G.elements[i] for i in generating_indices(self)]
        return FiniteGroup(G.degree, gens, perms)

    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, elems={self.elems})"


def generating_indices(H: Subgroup) -> Tuple[int, ...]:
    """Greedy small generating sequence for a subgroup (deterministic)."""
    G = H.parent
    gens: List[int] = []
    current = (G.identity_index,)
    current_set = set(current)
    for x in H.elems:
        if x in current_set:
            continue
        gens.append(x)
        current = G.closure_indices(gens)
        current_set = set(current)
        if len(current) == H.order:
            break
    return tuple(gens)


def close(
    degree: int,
    generators: Sequence[Sequence[int]],
    cap: int = DEFAULT_ORDER_CAP,
    name: Optional[str] = None,
) -> FiniteGroup:
    """Group generated by the given permutations, with canonical element order."""
    gens = [validate_perm(g, degree) for g in generators]
    known = {identity_perm(degree)}
    queue = list(known)
    while queue:
        p = queue.pop()
        for g in gens:
            q = compose(p, g)
            if q not in known:
                if len(known) >= cap:
                    raise OrderCapExceeded(
                        f"group closure exceeded the order cap of {cap}"
                    )
                known.add(q)
                queue.append(q)
    return FiniteGroup(degree, gens, sorted(known), name=name)


class SubgroupTable:
    """All subgroups of a group, their conjugacy classes, and subconjugacy data.

    Subgroups are listed in order of (order, element tuple); classes are
    listed by the same key of their canonical representative, so two runs
    always agree.  Production enumeration is by cyclic extension (close the
    union of a known subgroup with one further element); the brute-force
    subset scan lives in the tests as the oracle.
    """

    def __init__(self, group: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP):
        self.group = group
        self.all_subgroups = self._enumerate(cap)
        self.position_of: Dict[int, int] = {
            s.mask: i for i, s in enumerate(self.all_subgroups)
        }
        self._classify()

    def _enumerate(self, cap: int) -> List[Subgroup]:
        G = self.group
        found: Dict[Tuple[int, ...], None] = {}
        trivial = (G.identity_index,)
        found[trivial] = None
        frontier = [trivial]
        while frontier:
            fresh = []
            for elems in frontier:
                for x in range(G.order):
                    if x in elems:
                        continue
                    closed = G.closure_indices(elems + (x,))
                    if closed not in found:
                        if len(found) >= cap:
                            raise OrderCapExceeded(
                                f"subgroup enumeration exceeded the cap of {cap}"
                            )
                        found[closed] = None
                        fresh.append(closed)
            frontier = fresh
        subs = [G.subgroup(elems) for elems in found]
        subs.sort(key=lambda s: (s.order, s.elems))
        return subs

    def _classify(self) -> None:
        G = self.group
        n = len(self.all_subgroups)
        class_of = [-1] * n
        # conjugator_to_rep[i]: g with g * S_i * g^-1 == class representative
        conjugator_to_rep = [G.identity_index] * n
        classes: List[List[int]] = []
        rep_positions: List[int] = []
        for i, sub in enumerate(self.all_subgroups):
            if class_of[i] >= 0:
                continue
            cls = len(classes)
            members = []
            for g in range(G.order):
                conj = sub.conjugate(g)
                j = self.position_of[conj.mask]
                if class_of[j] < 0:
                    class_of[j] = cls
                    # g S_i g^-1 = S_j, so g^-1 S_j g = S_i: conjugate S_j
                    # back to the representative S_i by g^-1.
                    conjugator_to_rep[j] = G.inv(g)
                    members.append(j)
            classes.append(sorted(members))
            rep_positions.append(i)
        self.class_of = class_of
        self.classes = classes
        self.class_reps = rep_positions
        self.conjugator_to_rep = conjugator_to_rep
        self.num_classes = len(classes)
        self._subconjugacy()

    def _subconjugacy(self) -> None:
        G = self.group
        k = self.num_classes
        table = [[False] * k for _ in range(k)]
        witness: Dict[Tuple[int, int], int] = {}
        for i in range(k):
            Ki = self.rep(i)
            for j in range(k):
                Hj = self.rep(j)
                if Ki.order > Hj.order or Hj.order % Ki.order:
                    continue
                for g in range(G.order):
                    if Hj.contains_subgroup(Ki.conjugate(g)):
                        table[i][j] = True
                        witness[(i, j)] = g
                        break
        self.subconjugacy = table
        self.witness = witness

    def rep(self, cls: int) -> Subgroup:
        return self.all_subgroups[self.class_reps[cls]]

    def class_of_subgroup(self, sub: Subgroup) -> int:
        return self.class_of[self.position_of[sub.mask]]

    def to_rep_conjugator(self, sub: Subgroup) -> int:
        """g with g * sub * g^-1 equal to the class representative."""
        return self.conjugator_to_rep[self.position_of[sub.mask]]

    def subgroups_of(self, H: Subgroup) -> List[Subgroup]:
        return [s for s in self.all_subgroups if H.contains_subgroup(s)]


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    return G.subgroup(g for g in range(G.order) if H.conjugate(g).mask == H.mask)


def weyl_order(G: FiniteGroup, H: Subgroup) -> int:
    return normalizer(G, H).order // H.order


def double_cosets(
    G: FiniteGroup, H: Subgroup, K: Subgroup
) -> List[Tuple[int, Subgroup]]:
    """One (representative, H meet gKg^-1) pair per double coset HgK.

    Representatives are the least element index of each coset, listed in
    increasing order.
    """
    seen = [False] * G.order
    out = []
    for g in range(G.order):
        if seen[g]:
            continue
        coset = {G.mul(G.mul(h, g), k) for h in H.elems for k in K.elems}
        for x in coset:
            seen[x] = True
        inter = H.intersect(K.conjugate(g))
        out.append((g, inter))
    return out


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism from a subgroup of G into a group Pi.

    images[t] is the Pi-element index assigned to source.elems[t]; the
    mapping dict form is exposed via image_of.
    """

    source: Subgroup
    target: FiniteGroup
    images: Tuple[int, ...]

    def image_of(self, parent_index: int) -> int:
        return self.images[self.source.elems.index(parent_index)]

    @property
    def image_lookup(self) -> Dict[int, int]:
        return dict(zip(self.source.elems, self.images))

    def is_trivial(self) -> bool:
        e = self.target.identity_index
        return all(v == e for v in self.images)


def _extend_hom(
    H: Subgroup, Pi: FiniteGroup, gens: Tuple[int, ...], gen_images: Tuple[int, ...]
) -> Optional[Tuple[int, ...]]:
    """Extend generator images along the Cayley graph; None if inconsistent."""
    G = H.parent
    phi: Dict[int, int] = {G.identity_index: Pi.identity_index}
    queue = [G.identity_index]
    while queue:
        x = queue.pop()
        for g, pg in zip(gens, gen_images):
            y = G.mul(x, g)
            py = Pi.mul(phi[x], pg)
            known = phi.get(y)
            if known is None:
                phi[y] = py
                queue.append(y)
            elif known != py:
                return None
    if len(phi) != H.order:
        return None
    # Confirm the homomorphism identity on every pair, not just tree edges.
    for a in H.elems:
        for b in H.elems:
            if phi[G.mul(a, b)] != Pi.mul(phi[a], phi[b]):
                return None
    return tuple(phi[x] for x in H.elems)


def hom_enumerate(H: Subgroup, Pi: FiniteGroup) -> List[GroupHom]:
    """Every homomorphism H -> Pi, in lexicographic order of image tuples."""
    gens = generating_indices(H)
    homs = []
    if not gens:
        return [GroupHom(H, Pi, (Pi.identity_index,) * H.order)]
    for gen_images in itertools.product(range(Pi.order), repeat=len(gens)):
        images = _extend_hom(H, Pi, gens, gen_images)
        if images is not None:
            homs.append(GroupHom(H, Pi, images))
    uniq = {h.images: h for h in homs}
    return [uniq[key] for key in sorted(uniq)]


@dataclass(frozen=True)
class HomClass:
    """Pi-conjugacy class of homomorphisms with its centralizer-of-image."""

    rep: GroupHom
    size: int
    centralizer: Subgroup


def conjugate_hom(theta: GroupHom, pi: int) -> GroupHom:
    Pi = theta.target
    images = tuple(Pi.conj(pi, v) for v in theta.images)
    return GroupHom(theta.source, Pi, images)


def hom_classes(H: Subgroup, Pi: FiniteGroup) -> List[HomClass]:
    """Quotient of hom_enumerate by Pi-conjugation, ordered by class rep."""
    all_homs = hom_enumerate(H, Pi)
    remaining = {h.images: h for h in all_homs}
    classes = []
    while remaining:
        key = min(remaining)
        theta = remaining[key]
        orbit = {conjugate_hom(theta, pi).images for pi in range(Pi.order)}
        for images in orbit:
            remaining.pop(images, None)
        image_set = set(theta.images)
        cent = Pi.subgroup(
            z
            for z in range(Pi.order)
            if all(Pi.mul(z, v) == Pi.mul(v, z) for v in image_set)
        )
        classes.append(HomClass(theta, len(orbit), cent))
    return classes


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """External direct product acting on the disjoint union of the point sets."""
    degree = A.degree + B.degree
    shift = A.degree

    def embed_a(p: Perm) -> Perm:
        return p + tuple(range(shift, degree))

    def embed_b(p: Perm) -> Perm:
        return tuple(range(shift)) + tuple(v + shift for v in p)

    elements = [
        pa + tuple(v + shift for v in pb)
        for pa in A.elements
        for pb in B.elements
    ]
    gens = [embed_a(g) for g in A.generators] + [embed_b(g) for g in B.generators]
    name = None
    if A.name and B.name:
        name = f"{A.name}x{B.name}"
    return FiniteGroup(degree, gens, elements, name=name, product_of=(A, B))


def product_decode(P: FiniteGroup, idx: int) -> Tuple[int, int]:
    if P.product_of is None:
        raise InputError("group was not built as a direct product")
    A, B = P.product_of
    perm = P.elements[idx]
    pa = perm[: A.degree]
    pb = tuple(v - A.degree for v in perm[A.degree :])
    return A.index_of[pa], B.index_of[pb]


def product_encode(P: FiniteGroup, a_idx: int, b_idx: int) -> int:
    if P.product_of is None:
        raise InputError("group was not built as a direct product")
    A, B = P.product_of
    perm = A.elements[a_idx] + tuple(v + A.degree for v in B.elements[b_idx])
    return P.index_of[perm]


def _cycle(n: int) -> Perm:
    return tuple((i + 1) % n for i in range(n))


_NAMED_GENERATORS: Dict[str, Tuple[int, Tuple[Perm, ...]]] = {
    "C2": (2, (_cycle(2),)),
    "C3": (3, (_cycle(3),)),
    "C4": (4, (_cycle(4),)),
    "C5": (5, (_cycle(5),)),
    "C8": (8, (_cycle(8),)),
    "C2xC2": (4, ((1, 0, 2, 3), (0, 1, 3, 2))),
    "C2xC2xC2": (6, ((1, 0, 2, 3, 4, 5), (0, 1, 3, 2, 4, 5), (0, 1, 2, 3, 5, 4))),
    "S3": (3, ((1, 0, 2), (1, 2, 0))),
    "D4": (4, ((1, 2, 3, 0), (0, 3, 2, 1))),
    # Q8 by left multiplication on (1, i, -1, -i, j, k, -j, -k).
    "Q8": (8, ((1, 2, 3, 0, 5, 6, 7, 4), (4, 7, 6, 5, 2, 1, 0, 3))),
    "S4": (4, ((1, 0, 2, 3), (1, 2, 3, 0))),
}

_NAME_ALIASES = {"SIGMA2": "Sigma2", "S2": "Sigma2"}

NAMED_GROUPS = tuple(sorted(_NAMED_GENERATORS)) + ("C7", "C9", "Sigma2")


def named_group(name: str) -> FiniteGroup:
    canonical = _NAME_ALIASES.get(name.upper(), name)
    if canonical == "Sigma2":
        return close(2, [(1, 0)], name="Sigma2")
    if canonical in ("C7", "C9"):
        n = int(canonical[1:])
        return close(n, [_cycle(n)], name=canonical)
    spec = _NAMED_GENERATORS.get(canonical)
    if spec is None:
        raise InputError(
            f"unknown group name {name!r}; known names: {', '.join(NAMED_GROUPS)}"
        )
    degree, gens = spec
    return close(degree, gens, name=canonical)


def group_from_spec(spec, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a builtin name or a {"degree", "generators"} mapping."""
    if isinstance(spec, str):
        return named_group(spec)
    if isinstance(spec, dict):
        try:
            degree = int(spec["degree"])
            generators = spec["generators"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad group spec: {exc}") from exc
        if degree <= 0:
            raise InputError("group degree must be positive")
        if not isinstance(generators, list):
            raise InputError("group generators must be a list of image arrays")
        return close(degree, generators, cap=cap)
    raise InputError(f"unsupported group spec of type {type(spec).__name__}")
