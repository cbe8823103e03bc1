"""Discrete enhanced parameters for the dual classical groups.

A discrete parameter of a complex classical group Sp_N or SO_N is a
multiplicity-free set of Jordan blocks (pi, a): a formal irreducible label
pi carrying a dimension and a self-duality type, and a block size a >= 1,
with sum n_pi * a = N and a parity rule tying the type of pi (x) a to the
type of the group.  Labels are purely formal: every formula in this package
consumes only (dimension, type, a, signs).

The component group of a discrete parameter is elementary abelian on one
generator z_{pi,a} per block; for an orthogonal group it is cut down to the
subgroup where the total dimension with sign -1 is even.  Characters are
stored by their values on all the z_{pi,a}; for orthogonal groups two value
tables name the same character exactly when they agree or differ by the
determinant flip (negation on the blocks of odd n_pi * a).

A pair (parameter, character) is cuspidal when the blocks of each label
descend in steps of two down to size 1 or 2 ("gapless") and the character
alternates: opposite values on consecutive blocks of a label, value -1 on
a minimal block of even size.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import DomainMismatch, InvalidParameter
from .orbits import ComponentGroupDescriptor, Family, GroupKind, Relation, SignCharacter


class SelfDualType(str, Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    GL_PAIR = "gl-pair"


class BlockGroupSide(str, Enum):
    """Type of the isometry group of a multiplicity space."""

    SP_SIDE = "sp"
    O_SIDE = "o"
    GL_SIDE = "gl"


@dataclass(frozen=True, order=True)
class IrrLabel:
    name: str
    dim: int
    sd_type: SelfDualType

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"label dimension must be positive, got {self.dim}")

    def __str__(self) -> str:
        return self.name


BlockKey = tuple[str, int]


def _block_key(label: IrrLabel, a: int) -> BlockKey:
    return (label.name, a)


_CLASSICAL_DUALS = (Family.SP, Family.SO_ODD, Family.SO_EVEN)


@dataclass(frozen=True)
class DiscreteParameter:
    """Jordan blocks of a discrete parameter of a classical dual group."""

    dual_group: GroupKind
    blocks: tuple[tuple[IrrLabel, int], ...]

    def __init__(self, dual_group: GroupKind, blocks: Iterable[tuple[IrrLabel, int]]):
        object.__setattr__(self, "dual_group", dual_group)
        object.__setattr__(
            self, "blocks",
            tuple(sorted(((label, int(a)) for label, a in blocks),
                         key=lambda ba: (ba[0].name, ba[1]))))

    def labels(self) -> tuple[IrrLabel, ...]:
        seen = []
        for label, _ in self.blocks:
            if label not in seen:
                seen.append(label)
        return tuple(seen)

    def sizes_of(self, label: IrrLabel) -> tuple[int, ...]:
        return tuple(a for lab, a in self.blocks if lab == label)

    def block_keys(self) -> tuple[BlockKey, ...]:
        return tuple(_block_key(label, a) for label, a in self.blocks)

    @property
    def dimension(self) -> int:
        return sum(label.dim * a for label, a in self.blocks)

    def __str__(self) -> str:
        inner = ",".join(f"({label},{a})" for label, a in self.blocks)
        return f"{{{inner}}}"


@dataclass(frozen=True)
class ParameterVerdict:
    valid: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def block_group_type(dual: GroupKind, label: IrrLabel) -> BlockGroupSide:
    """Type of the group acting on the multiplicity space of a label.

    Orthogonal when the label type matches the dual group type, symplectic
    when they differ, general-linear for non-self-dual bundles.
    """
    if label.sd_type is SelfDualType.GL_PAIR:
        return BlockGroupSide.GL_SIDE
    matches = (dual.is_symplectic and label.sd_type is SelfDualType.SYMPLECTIC) or (
        dual.is_special_orthogonal and label.sd_type is SelfDualType.ORTHOGONAL)
    return BlockGroupSide.O_SIDE if matches else BlockGroupSide.SP_SIDE


def required_block_parity(dual: GroupKind, label: IrrLabel) -> int:
    """Parity of admissible block sizes: even on the Sp side, odd on the O side."""
    side = block_group_type(dual, label)
    if side is BlockGroupSide.GL_SIDE:
        raise InvalidParameter("gl-pair labels have no block parity rule")
    return 0 if side is BlockGroupSide.SP_SIDE else 1


def validate_parameter(p: DiscreteParameter) -> ParameterVerdict:
    problems = []
    if p.dual_group.family not in _CLASSICAL_DUALS:
        problems.append(f"dual group {p.dual_group} is not a classical dual "
                        "(Sp / SOodd / SOeven)")
        return ParameterVerdict(False, tuple(problems))
    seen = Counter(p.block_keys())
    for key, count in sorted(seen.items()):
        if count > 1:
            problems.append(f"repeated block {key}")
    by_name: dict[str, IrrLabel] = {}
    for label, a in p.blocks:
        prior = by_name.setdefault(label.name, label)
        if prior != label:
            problems.append(f"label name {label.name!r} used with two different data")
        if a < 1:
            problems.append(f"block ({label},{a}) has nonpositive size")
            continue
        if label.sd_type is SelfDualType.GL_PAIR:
            problems.append(f"gl-pair label {label} in a discrete parameter")
            continue
        if a % 2 != required_block_parity(p.dual_group, label):
            want = "even" if required_block_parity(p.dual_group, label) == 0 else "odd"
            problems.append(
                f"block ({label},{a}): a {label.sd_type.value} label needs {want} sizes "
                f"in {p.dual_group.family.value}")
    if p.dimension != p.dual_group.size:
        problems.append(f"blocks span dimension {p.dimension}, expected {p.dual_group.size}")
    return ParameterVerdict(not problems, tuple(problems))


def require_valid_parameter(p: DiscreteParameter) -> None:
    verdict = validate_parameter(p)
    if not verdict:
        raise InvalidParameter(f"{p}: " + "; ".join(verdict.problems))


ParameterCharacter = SignCharacter  # values on the block keys (pi-name, a)


def character_on(p: DiscreteParameter, signs: Iterable[int]) -> ParameterCharacter:
    """Convenience constructor: signs aligned with the sorted block list."""
    signs = tuple(signs)
    if len(signs) != len(p.blocks):
        raise DomainMismatch(f"{len(signs)} signs for {len(p.blocks)} blocks")
    return SignCharacter(dict(zip(p.block_keys(), signs)))


def _check_parameter_char(p: DiscreteParameter, eta: ParameterCharacter) -> None:
    if set(eta.keys()) != set(p.block_keys()):
        raise DomainMismatch(
            f"character domain {eta.keys()} does not match blocks of {p}")


def det_flip(p: DiscreteParameter, eta: ParameterCharacter) -> ParameterCharacter:
    """Negate eta on the blocks of odd n_pi * a (the other value table of
    the same character of an orthogonal component group)."""
    odd_keys = {key for (label, a), key in zip(p.blocks, p.block_keys())
                if (label.dim * a) % 2}
    return eta.flip_where(lambda key: key in odd_keys)


def same_parameter_character(p: DiscreteParameter, left: ParameterCharacter,
                             right: ParameterCharacter) -> bool:
    if p.dual_group.is_symplectic:
        return left == right
    return left == right or left == det_flip(p, right)


def agroup(p: DiscreteParameter) -> tuple[ComponentGroupDescriptor, tuple[BlockKey, ...]]:
    """Component group of the parameter plus the image of the center.

    The center image is the class acting by -1 on every block (the product
    of all generators) when the dual group has center {+-1}; for SO of odd
    size the center is trivial and the image is empty.
    """
    require_valid_parameter(p)
    keys = p.block_keys()
    if p.dual_group.is_symplectic:
        descriptor = ComponentGroupDescriptor(keys, Relation.FREE, 2 ** len(keys))
    else:
        cut = any((label.dim * a) % 2 for label, a in p.blocks)
        order = 2 ** (len(keys) - 1) if cut and keys else 2 ** len(keys)
        descriptor = ComponentGroupDescriptor(keys, Relation.DET_ONE_SUBGROUP, order)
    has_center = p.dual_group.is_symplectic or p.dual_group.family is Family.SO_EVEN
    center_image = keys if has_center else ()
    return descriptor, center_image


def sgroup_factors(p: DiscreteParameter, eta: ParameterCharacter) -> bool:
    """Whether eta is trivial on the image of the center (defines a packet member)."""
    _check_parameter_char(p, eta)
    _, center_image = agroup(p)
    return eta.product(center_image) == 1


def has_no_gaps(p: DiscreteParameter) -> bool:
    """Every block of size a >= 3 sits above a block of size a - 2."""
    keys = set(p.block_keys())
    return all(a < 3 or (label.name, a - 2) in keys for label, a in p.blocks)


def is_alternating(p: DiscreteParameter, eta: ParameterCharacter) -> bool:
    """Opposite signs on consecutive blocks of a label; -1 on minimal even blocks.

    Both conditions only involve products over blocks of equal size parity,
    so the answer is the same for the two value tables of an orthogonal
    character.
    """
    _check_parameter_char(p, eta)
    for label in p.labels():
        sizes = p.sizes_of(label)
        for lo, hi in zip(sizes, sizes[1:]):
            if eta((label.name, lo)) == eta((label.name, hi)):
                return False
        if sizes and sizes[0] % 2 == 0 and eta((label.name, sizes[0])) != -1:
            return False
    return True


def is_cuspidal(p: DiscreteParameter, eta: ParameterCharacter) -> bool:
    require_valid_parameter(p)
    return has_no_gaps(p) and is_alternating(p, eta)


class ExponentMultiset:
    """Multiset of (label, half-integer) pairs, kept exact.

    Supports the few operations the support construction needs: union,
    checked difference, the canonical nonnegative half of a symmetric
    multiset, and symmetry checking.
    """

    __slots__ = ("_counts",)

    def __init__(self, entries: Iterable[tuple[IrrLabel, Fraction]] = ()):
        counts = Counter()
        for label, e in entries:
            counts[(label, Fraction(e))] += 1
        self._counts = counts

    @classmethod
    def _from_counter(cls, counts: Counter) -> "ExponentMultiset":
        out = cls()
        out._counts = Counter({k: v for k, v in counts.items() if v})
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, ExponentMultiset) and self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __iter__(self):
        for (label, e), count in sorted(self._counts.items()):
            for _ in range(count):
                yield label, e

    def __contains__(self, entry) -> bool:
        label, e = entry
        return self._counts[(label, Fraction(e))] > 0

    def multiplicity(self, label: IrrLabel, e) -> int:
        return self._counts[(label, Fraction(e))]

    def union(self, other: "ExponentMultiset") -> "ExponentMultiset":
        return ExponentMultiset._from_counter(self._counts + other._counts)

    def minus(self, other: "ExponentMultiset") -> "ExponentMultiset":
        diff = Counter(self._counts)
        for key, count in other._counts.items():
            diff[key] -= count
            if diff[key] < 0:
                raise InvalidParameter(f"multiset difference would be negative at {key}")
        return ExponentMultiset._from_counter(diff)

    def is_symmetric(self) -> bool:
        return all(count == self._counts[(label, -e)]
                   for (label, e), count in self._counts.items())

    def nonnegative_half(self) -> "ExponentMultiset":
        """H with self = H + (-H); positives keep their multiplicity, zeros halve."""
        if not self.is_symmetric():
            raise InvalidParameter("multiset is not symmetric under negation")
        half = Counter()
        for (label, e), count in self._counts.items():
            if e > 0:
                half[(label, e)] = count
            elif e == 0:
                half[(label, e)] = count // 2
        return ExponentMultiset._from_counter(half)

    def negated(self) -> "ExponentMultiset":
        return ExponentMultiset._from_counter(
            Counter({(label, -e): c for (label, e), c in self._counts.items()}))

    def entries(self) -> tuple[tuple[IrrLabel, Fraction], ...]:
        return tuple(self)

    def __repr__(self) -> str:
        inner = ",".join(f"({label},{e})" for label, e in self)
        return f"{{{{{inner}}}}}"


def block_exponents(label: IrrLabel, a: int) -> ExponentMultiset:
    """Exponents (a-1)/2 - j, j = 0..a-1, of one size-a block."""
    half = Fraction(a - 1, 2)
    return ExponentMultiset((label, half - j) for j in range(a))


def infinitesimal_character(p: DiscreteParameter) -> ExponentMultiset:
    out = ExponentMultiset()
    for label, a in p.blocks:
        out = out.union(block_exponents(label, a))
    return out


def reducibility_point(label: IrrLabel, jord: DiscreteParameter | Iterable[tuple[IrrLabel, int]],
                       dual: GroupKind) -> Fraction:
    """The nonnegative real where the twist of label meets the classical part.

    (a_max + 1)/2 when the label occurs among the blocks, 1/2 when absent
    with its type matching the dual group, 0 when absent with the types
    different.
    """
    if label.sd_type is SelfDualType.GL_PAIR:
        raise InvalidParameter("reducibility points are defined for self-dual labels only")
    blocks = jord.blocks if isinstance(jord, DiscreteParameter) else tuple(jord)
    sizes = [a for lab, a in blocks if lab == label]
    if sizes:
        return Fraction(max(sizes) + 1, 2)
    matched = (dual.is_symplectic and label.sd_type is SelfDualType.SYMPLECTIC) or (
        dual.is_special_orthogonal and label.sd_type is SelfDualType.ORTHOGONAL)
    return Fraction(1, 2) if matched else Fraction(0)


def agroup_order_oracle(p: DiscreteParameter) -> int:
    """Brute-force order of the component group over F_2 (test oracle)."""
    keys = p.block_keys()
    dims = {key: label.dim * a for (label, a), key in zip(p.blocks, p.block_keys())}
    count = 0
    for subset in itertools.product((0, 1), repeat=len(keys)):
        if p.dual_group.is_symplectic:
            count += 1
            continue
        weight = sum(dims[key] for key, bit in zip(keys, subset) if bit)
        if weight % 2 == 0:
            count += 1
    return count
