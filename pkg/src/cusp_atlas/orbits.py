"""Partition combinatorics of unipotent classes in complex classical groups.

A unipotent class in GL_N(C), Sp_N(C) or (S)O_N(C) is encoded by the
partition of N formed by its Jordan block sizes, subject to a parity rule on
multiplicities.  This module implements the classification layer used by
everything else in the package:

* which partitions are admissible for which group, and when one partition
  corresponds to two distinct classes rather than one;
* the component group of the centralizer, an elementary abelian 2-group with
  one labelled generator ``z_q`` per distinct part q of the relevant parity
  (even parts for Sp, odd parts for the orthogonal groups);
* the distinguished classes: all parts distinct, of that fixed parity;
* the cuspidal pairs: the unique (class, character) carrying a cuspidal
  local system, which exists only at triangular sizes N = d(d+1) in the
  symplectic case and square sizes N = d^2 in the orthogonal case.

Characters of component groups are stored by their values on the z_q.  For
SO_N the component group is the index-two "even" subgroup of the O_N one;
its characters are represented by either of their two extensions to the O_N
group, and two value tables name the same SO-character exactly when they
agree or differ by the global sign flip.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Optional

from .errors import DomainMismatch, InvalidPartition


class Family(str, Enum):
    SP = "Sp"
    SO_ODD = "SOodd"
    SO_EVEN = "SOeven"
    O_ODD = "Oodd"
    O_EVEN = "Oeven"
    GL = "GL"


_EVEN_SIZE = {Family.SP, Family.SO_EVEN, Family.O_EVEN}
_ODD_SIZE = {Family.SO_ODD, Family.O_ODD}


@dataclass(frozen=True)
class GroupKind:
    """A complex classical group, given by its family and matrix size."""

    family: Family
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"matrix size must be nonnegative, got {self.size}")
        if self.family in _EVEN_SIZE and self.size % 2:
            raise ValueError(f"{self.family.value} requires an even size, got {self.size}")
        if self.family in _ODD_SIZE and self.size % 2 == 0:
            raise ValueError(f"{self.family.value} requires an odd size, got {self.size}")

    @property
    def is_symplectic(self) -> bool:
        return self.family is Family.SP

    @property
    def is_orthogonal(self) -> bool:
        """True for both the special and the full orthogonal groups."""
        return self.family in (Family.SO_ODD, Family.SO_EVEN, Family.O_ODD, Family.O_EVEN)

    @property
    def is_special_orthogonal(self) -> bool:
        return self.family in (Family.SO_ODD, Family.SO_EVEN)

    @property
    def is_full_orthogonal(self) -> bool:
        return self.family in (Family.O_ODD, Family.O_EVEN)

    @property
    def is_gl(self) -> bool:
        return self.family is Family.GL

    @property
    def generator_parity(self) -> Optional[int]:
        """Parity (0 even / 1 odd) of the parts carrying z-generators."""
        if self.is_symplectic:
            return 0
        if self.is_orthogonal:
            return 1
        return None

    def __str__(self) -> str:
        return f"{self.family.value}_{self.size}"


@dataclass(frozen=True, order=True)
class Partition:
    """A partition stored weakly decreasing.

    The symbol algorithms index parts increasingly; :meth:`increasing` is
    the single conversion point.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def increasing(self) -> tuple[int, ...]:
        return tuple(reversed(self.parts))

    def multiplicity(self, q: int) -> int:
        return self.parts.count(q)

    def distinct_parts(self) -> tuple[int, ...]:
        """Distinct parts, increasing."""
        return tuple(sorted(set(self.parts)))

    def distinct_parts_of_parity(self, parity: int) -> tuple[int, ...]:
        return tuple(q for q in self.distinct_parts() if q % 2 == parity)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


class Relation(Enum):
    """Presentation tag of a centralizer component group."""

    FREE = "free"
    QUOTIENT_BY_FULL_PRODUCT = "quotient-by-full-product"
    DET_ONE_SUBGROUP = "det-one-subgroup"


@dataclass(frozen=True)
class ComponentGroupDescriptor:
    """An elementary abelian 2-group with labelled generators.

    ``order`` is 2^g for a free group and 2^(g-1) for the index-two variants
    (when at least one generator is cut down); it is stored explicitly so the
    two cases read off uniformly.
    """

    generators: tuple
    relation: Relation
    order: int

    @property
    def rank(self) -> int:
        return len(self.generators)

    def labels(self) -> tuple[str, ...]:
        return tuple(f"z_{g}" for g in self.generators)


@dataclass(frozen=True)
class SignCharacter:
    """A +/-1 valued character given on labelled Z/2 generators."""

    values: tuple[tuple[object, int], ...]

    def __init__(self, mapping: Mapping[object, int] | Iterable[tuple[object, int]] = ()):
        items = dict(mapping)
        for key, sign in items.items():
            if sign not in (1, -1):
                raise ValueError(f"character value at {key!r} must be +1 or -1, got {sign!r}")
        object.__setattr__(self, "values", tuple(sorted(items.items())))

    def __call__(self, key) -> int:
        for k, sign in self.values:
            if k == key:
                return sign
        raise DomainMismatch(f"character has no generator {key!r}")

    def keys(self) -> tuple:
        return tuple(k for k, _ in self.values)

    def as_dict(self) -> dict:
        return dict(self.values)

    def restrict(self, keys: Iterable) -> "SignCharacter":
        keep = set(keys)
        missing = keep - set(self.keys())
        if missing:
            raise DomainMismatch(f"character has no generators {sorted(missing, key=repr)!r}")
        return SignCharacter({k: s for k, s in self.values if k in keep})

    def product(self, keys: Optional[Iterable] = None) -> int:
        if keys is None:
            keys = self.keys()
        out = 1
        for k in keys:
            out *= self(k)
        return out

    def flipped(self) -> "SignCharacter":
        return SignCharacter({k: -s for k, s in self.values})

    def flip_where(self, predicate) -> "SignCharacter":
        return SignCharacter({k: (-s if predicate(k) else s) for k, s in self.values})

    def __str__(self) -> str:
        return "(" + ",".join("+" if s == 1 else "-" for _, s in self.values) + ")"


def trivial_character(keys: Iterable) -> SignCharacter:
    return SignCharacter({k: 1 for k in keys})


def same_up_to_flip(left: SignCharacter, right: SignCharacter) -> bool:
    """Equality of SO-characters represented at the O-level."""
    return left == right or left == right.flipped()


@dataclass(frozen=True)
class PartitionVerdict:
    valid: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def validate_partition(kind: GroupKind, p: Partition) -> PartitionVerdict:
    """Check p against the Jordan-type rules of the group.

    Sp: odd parts need even multiplicity; (S)O: even parts need even
    multiplicity; GL: no rule.  A total different from the matrix size is
    reported as invalid rather than raised, so callers can collect problems.
    """
    problems = []
    if p.total != kind.size:
        problems.append(f"parts sum to {p.total}, expected {kind.size}")
    if kind.is_symplectic:
        bad_parity, rule = 1, "odd"
    elif kind.is_orthogonal:
        bad_parity, rule = 0, "even"
    else:
        bad_parity = None
    if bad_parity is not None:
        for q in p.distinct_parts():
            if q % 2 == bad_parity and p.multiplicity(q) % 2:
                problems.append(f"{rule} part {q} has odd multiplicity {p.multiplicity(q)}")
    return PartitionVerdict(not problems, tuple(problems))


def require_valid(kind: GroupKind, p: Partition) -> None:
    verdict = validate_partition(kind, p)
    if not verdict:
        raise InvalidPartition(f"{p} is not a {kind} partition: " + "; ".join(verdict.problems))


def is_degenerate(p: Partition) -> bool:
    """All parts even with even multiplicities (the class-splitting case)."""
    return all(q % 2 == 0 for q in p.parts) and all(
        p.multiplicity(q) % 2 == 0 for q in p.distinct_parts()
    )


def orbit_count(kind: GroupKind, p: Partition) -> int:
    """Number of unipotent classes attached to p (2 only for degenerate SO_even)."""
    require_valid(kind, p)
    if kind.family is Family.SO_EVEN and len(p) and is_degenerate(p):
        return 2
    return 1


def component_group(kind: GroupKind, p: Partition) -> ComponentGroupDescriptor:
    """Component group of the centralizer of a class of type p."""
    require_valid(kind, p)
    parity = kind.generator_parity
    if parity is None:  # GL: connected reductive centralizer
        return ComponentGroupDescriptor((), Relation.FREE, 1)
    gens = p.distinct_parts_of_parity(parity)
    if kind.is_special_orthogonal:
        order = 2 ** max(0, len(gens) - 1)
        return ComponentGroupDescriptor(gens, Relation.QUOTIENT_BY_FULL_PRODUCT, order)
    return ComponentGroupDescriptor(gens, Relation.FREE, 2 ** len(gens))


def is_distinguished(kind: GroupKind, p: Partition) -> bool:
    """All parts distinct, of the group's generator parity.

    GL classes are never distinguished here: the reductive centralizer
    always contains a central torus.
    """
    require_valid(kind, p)
    if kind.is_gl:
        return False
    if len(set(p.parts)) != len(p.parts):
        return False
    parity = kind.generator_parity
    return all(q % 2 == parity for q in p.parts)


def triangular_d(n: int) -> Optional[int]:
    """d with d(d+1) == n, or None."""
    d = 0
    while d * (d + 1) < n:
        d += 1
    return d if d * (d + 1) == n else None


def square_d(n: int) -> Optional[int]:
    """d with d*d == n, or None."""
    d = 0
    while d * d < n:
        d += 1
    return d if d * d == n else None


def symplectic_cuspidal_partition(d: int) -> Partition:
    return Partition(2 * i for i in range(1, d + 1))


def orthogonal_cuspidal_partition(d: int) -> Partition:
    return Partition(2 * i - 1 for i in range(1, d + 1))


def symplectic_cuspidal_character(d: int) -> SignCharacter:
    """Values (-1)^i on z_{2i}."""
    return SignCharacter({2 * i: (-1) ** i for i in range(1, d + 1)})


def orthogonal_cuspidal_lift(d: int, plus: bool = True) -> SignCharacter:
    """The two extensions to the O-level group: (-1)^(i+1) on z_{2i-1}, and its flip."""
    sign = 1 if plus else -1
    return SignCharacter({2 * i - 1: sign * (-1) ** (i + 1) for i in range(1, d + 1)})


@dataclass(frozen=True)
class CuspidalPair:
    """The cuspidal (class, character) of a group, when it exists.

    For the orthogonal families ``character`` is the plus extension and
    ``minus_lift`` the other one; both restrict to the same SO-character,
    whose defining values sit on the products of consecutive generators and
    are listed in ``so_products``.
    """

    partition: Partition
    character: SignCharacter
    minus_lift: Optional[SignCharacter] = None
    so_products: tuple[tuple[tuple[int, int], int], ...] = ()


def cuspidal_pair(kind: GroupKind) -> Optional[CuspidalPair]:
    """Cuspidal pair of the group, or None when the size is not admissible."""
    n = kind.size
    if kind.is_gl:
        if n == 1:
            return CuspidalPair(Partition((1,)), SignCharacter())
        return None
    if kind.is_symplectic:
        d = triangular_d(n)
        if d is None:
            return None
        return CuspidalPair(symplectic_cuspidal_partition(d), symplectic_cuspidal_character(d))
    d = square_d(n)
    if d is None:
        return None
    products = tuple(
        (((2 * i - 1), (2 * i + 1)), -1) for i in range(1, d)
    )
    return CuspidalPair(
        orthogonal_cuspidal_partition(d),
        orthogonal_cuspidal_lift(d, plus=True),
        orthogonal_cuspidal_lift(d, plus=False),
        products,
    )


def characters_of(descriptor: ComponentGroupDescriptor) -> list[SignCharacter]:
    """All characters, as value tables on the generators.

    For the quotient presentation the two tables related by the global flip
    name the same character; one representative per class is returned, the
    one whose value on the smallest generator is +1.
    """
    gens = descriptor.generators
    out = []
    for signs in itertools.product((1, -1), repeat=len(gens)):
        if descriptor.relation is Relation.QUOTIENT_BY_FULL_PRODUCT and gens and signs[0] == -1:
            continue
        out.append(SignCharacter(dict(zip(gens, signs))))
    return out
