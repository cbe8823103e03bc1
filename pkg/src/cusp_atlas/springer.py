"""Elimination and the map from enhanced classes to cuspidal data.

For a distinguished class with character, repeatedly deleting a pair of
adjacent parts carrying equal signs ("elimination") terminates in a normal
form with strictly alternating signs.  The normal form does not depend on
the deletion order, the symbol defect survives every step, and the defect
(equivalently the shape of the normal form) determines a cuspidal datum:
a torus rank, the triangular/staircase cuspidal partition, and its sign
character.  Both computation routes, the closed defect formula and the
normal form, are always run and compared; disagreement raises.

The second half extends the dictionary beyond the connected groups: to the
full orthogonal group O_N (three cases, by the shape of the quasi-Levi and
the degeneracy of the partition) and to the index-two subgroup of a product
of orthogonal groups, where the extension proceeds in three stages with
generator sets C_L, C_O, C_I pairing the factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import DomainMismatch, InternalCheckError, InvalidPartition
from .orbits import (
    Family,
    GroupKind,
    Partition,
    SignCharacter,
    is_degenerate,
    is_distinguished,
    orthogonal_cuspidal_lift,
    orthogonal_cuspidal_partition,
    require_valid,
    symplectic_cuspidal_character,
    symplectic_cuspidal_partition,
)
from .symbols import defect_formula, symbol_from_character


def _require_distinguished(kind: GroupKind, p: Partition) -> None:
    if not is_distinguished(kind, p):
        raise InvalidPartition(f"{p} is not distinguished for {kind}")


def _check_char_domain(p: Partition, eta: SignCharacter) -> None:
    if set(eta.keys()) != set(p.parts):
        raise DomainMismatch(
            f"character domain {eta.keys()} does not match parts of {p}")


def eliminate_once(p: Partition, eta: SignCharacter, index: int) -> tuple[Partition, SignCharacter]:
    """Delete the adjacent parts p[index], p[index+1] (increasing order, 0-based).

    Requires equal signs on the two parts; the defect formula value is
    unchanged by the deletion.
    """
    parts = p.increasing()
    _check_char_domain(p, eta)
    if not 0 <= index < len(parts) - 1:
        raise IndexError(f"no adjacent pair at position {index} in {p}")
    lo, hi = parts[index], parts[index + 1]
    if eta(lo) != eta(hi):
        raise DomainMismatch(
            f"signs differ on adjacent parts {lo}, {hi}; the pair cannot be removed")
    remaining = parts[:index] + parts[index + 2:]
    return Partition(remaining), eta.restrict(remaining)


def _removable(parts: Sequence[int], eta: SignCharacter) -> list[int]:
    return [j for j in range(len(parts) - 1) if eta(parts[j]) == eta(parts[j + 1])]


def eliminate(p: Partition, eta: SignCharacter) -> tuple[Partition, SignCharacter]:
    """Full elimination: the unique normal form with alternating signs.

    Deterministically removes the leftmost admissible pair; order
    independence is a theorem (and is exhaustively exercised by
    :func:`elimination_normal_forms`).
    """
    _check_char_domain(p, eta)
    current, char = p, eta
    while True:
        parts = current.increasing()
        sites = _removable(parts, char)
        if not sites:
            return current, char
        current, char = eliminate_once(current, char, sites[0])


def elimination_normal_forms(p: Partition, eta: SignCharacter) -> set[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]:
    """Normal forms reachable by every admissible deletion order (test hook).

    The literal terminal partition may depend on the order: from (1,3,5)
    with signs (+,+,+) one deletion order ends at (5), the other at (1).
    What is order-independent is the invariant content captured by
    :func:`normal_form_content` — and, downstream, the cuspidal support.
    """
    _check_char_domain(p, eta)
    seen: set = set()
    out: set = set()

    def walk(parts: tuple[int, ...], char: SignCharacter) -> None:
        key = (parts, char.values)
        if key in seen:
            return
        seen.add(key)
        sites = _removable(parts, char)
        if not sites:
            out.add((parts, char.values))
            return
        for j in sites:
            sub = Partition(parts[:j] + parts[j + 2:])
            walk(sub.increasing(), char.restrict(sub.parts))

    walk(p.increasing(), eta)
    return out


def normal_form_content(kind: GroupKind, parts: tuple[int, ...],
                        values: tuple[tuple[int, int], ...]) -> tuple:
    """Order-independent content of a normal form: length, sign pattern, d.

    The part values themselves are a computation device; every admissible
    deletion order reaches the same content (and the same support).
    """
    char = SignCharacter(dict(values))
    signs = tuple(char(q) for q in parts)
    d = d_from_normal_form(kind, Partition(parts), char)
    return (len(parts), signs, d)


def is_normal_form(p: Partition, eta: SignCharacter) -> bool:
    parts = p.increasing()
    return not _removable(parts, eta)


def d_from_normal_form(kind: GroupKind, p: Partition, eta: SignCharacter) -> int:
    """Read the cuspidal size parameter d off an elimination normal form."""
    _check_char_domain(p, eta)
    if not is_normal_form(p, eta):
        raise InvalidPartition(f"{p} with {eta} is not elimination-normal")
    parts = p.increasing()
    if not parts:
        return 0
    if kind.is_symplectic:
        return len(parts) - 1 if eta(parts[0]) == 1 else len(parts)
    return len(parts)


def d_from_defect(kind: GroupKind, dprime: int) -> int:
    if kind.is_symplectic:
        if dprime % 2 == 0:
            raise InternalCheckError(f"symplectic defect {dprime} is even")
        return dprime - 1 if dprime >= 1 else -dprime
    return abs(dprime)


@dataclass(frozen=True)
class CuspidalDatum:
    """Levi torus rank + cuspidal (partition, character) + shape parameters."""

    kind: GroupKind
    torus_rank: int
    cusp_partition: Partition
    cusp_character: SignCharacter
    d: int
    dprime: int

    @property
    def cusp_size(self) -> int:
        return self.cusp_partition.total

    def levi_str(self) -> str:
        tail = f"{self.kind.family.value}_{self.cusp_size}" if self.cusp_size else "1"
        if self.torus_rank == 0:
            return tail
        return f"(C*)^{self.torus_rank} x {tail}"


def _so_cusp_character(d: int, leading_sign: int) -> SignCharacter:
    """The extension of the staircase cuspidal character with given value on z_1."""
    return orthogonal_cuspidal_lift(d, plus=(leading_sign == 1))


def springer_datum(kind: GroupKind, p: Partition, eta: SignCharacter) -> CuspidalDatum:
    """Cuspidal datum of a distinguished enhanced class of Sp_N or SO_N.

    d' comes from the closed defect formula and d from the normal form; the
    two are tied by d = d'-1 (d' >= 1) or -d' in the symplectic case and
    d = |d'| in the orthogonal one, and the agreement is enforced.
    """
    _require_distinguished(kind, p)
    _check_char_domain(p, eta)
    dprime = defect_formula(kind, p, eta)
    sym = symbol_from_character(kind, p, eta)
    if sym.defect != dprime:
        raise InternalCheckError(
            f"defect formula {dprime} != symbol defect {sym.defect} on {p}, {eta}")
    normal_p, normal_eta = eliminate(p, eta)
    d = d_from_normal_form(kind, normal_p, normal_eta)
    if d != d_from_defect(kind, dprime):
        raise InternalCheckError(
            f"normal form gives d={d}, defect {dprime} gives {d_from_defect(kind, dprime)}")
    if kind.is_symplectic:
        cusp = symplectic_cuspidal_partition(d)
        char = symplectic_cuspidal_character(d)
    else:
        cusp = orthogonal_cuspidal_partition(d)
        leading = normal_eta(normal_p.increasing()[0]) if len(normal_p) else 1
        char = _so_cusp_character(d, leading)
        if eta.product() != (char.product() if len(cusp) else 1):
            raise InternalCheckError(f"central value not conserved on {p}, {eta}")
    torus_rank, rem = divmod(kind.size - cusp.total, 2)
    if rem or torus_rank < 0:
        raise InternalCheckError(f"bad torus rank for {p}, {eta}: N={kind.size}, d={d}")
    return CuspidalDatum(kind, torus_rank, cusp, char, d, dprime)


# -- full orthogonal group ---------------------------------------------------

class OCase(Enum):
    I = "I"
    II = "II"
    III = "III"


class WeylTag(Enum):
    BASE = "base"
    EXTENDED = "extended"
    INDUCED = "induced"


@dataclass(frozen=True)
class QuasiLevi:
    """Centralizer of a torus in O_N: a torus part and one O-block."""

    torus_rank: int
    o_size: int

    def __str__(self) -> str:
        if self.torus_rank and self.o_size:
            return f"(C*)^{self.torus_rank} x O_{self.o_size}"
        if self.torus_rank:
            return f"(C*)^{self.torus_rank}"
        if self.o_size:
            return f"O_{self.o_size}"
        return "1"


@dataclass(frozen=True)
class OSpringerDatum:
    """Output of the correspondence for the full orthogonal group.

    Case I: the quasi-Levi keeps an O-block; the extension sign chi rides on
    the cuspidal character (recorded as the honest O-level lift).  Case II:
    torus quasi-Levi, nondegenerate partition; chi rides on the Weyl-group
    representation instead.  Case III (degenerate partition): the two
    special-orthogonal classes fuse into one O-class, the component group is
    trivial and the Weyl representation is induced.
    """

    case: OCase
    quasi_levi: QuasiLevi
    datum: CuspidalDatum
    weyl_rep: WeylTag
    chi: Optional[int]
    cusp_character_o: Optional[SignCharacter]
    fused_orbit_tags: tuple[str, ...] = ()


def _general_orthogonal_defect(kind_so: GroupKind, p: Partition, eta: SignCharacter) -> int:
    return symbol_from_character(kind_so, p, eta).defect


def _det_minus_class(p: Partition) -> int:
    """Smallest odd part: a canonical determinant -1 component class."""
    odd = p.distinct_parts_of_parity(1)
    if not odd:
        raise InternalCheckError(f"{p} has no odd part, so no det=-1 class")
    return odd[0]


def _central_class(p: Partition) -> tuple[int, ...]:
    """Generators whose product is the class of the central element -1."""
    return tuple(q for q in p.distinct_parts_of_parity(1) if p.multiplicity(q) % 2)


def springer_o(p: Partition, eta: SignCharacter) -> OSpringerDatum:
    """Correspondence for O_N on a class with character at the O-level.

    ``eta`` is an honest character of the O-component group (one value per
    distinct odd part).  The three cases:

    * III when the partition is degenerate (only even parts, all even
      multiplicities): one fused class, trivial character required;
    * I when N is odd, or N is even with cuspidal block size d^2 >= 4;
    * II otherwise (N even, torus quasi-Levi, some odd part present).

    In case I the recorded lift of the cuspidal character matches eta on
    the central element when that pins it (d odd) and carries the extension
    sign on z_1 otherwise.
    """
    n = p.total
    so_family = Family.SO_ODD if n % 2 else Family.SO_EVEN
    kind_so = GroupKind(so_family, n)
    kind_o = GroupKind(Family.O_ODD if n % 2 else Family.O_EVEN, n)
    require_valid(kind_o, p)
    if set(eta.keys()) != set(p.distinct_parts_of_parity(1)):
        raise DomainMismatch(
            f"character domain {eta.keys()} does not match the odd parts of {p}")

    if is_degenerate(p) and len(p):
        torus_rank = n // 2
        datum = CuspidalDatum(kind_so, torus_rank, Partition(), SignCharacter(), 0, 0)
        return OSpringerDatum(
            OCase.III, QuasiLevi(torus_rank, 0), datum, WeylTag.INDUCED,
            None, None, fused_orbit_tags=("I", "II"))

    dprime = _general_orthogonal_defect(kind_so, p, eta)
    d = abs(dprime)
    torus_rank = (n - d * d) // 2
    cusp = orthogonal_cuspidal_partition(d)
    if n % 2 or d >= 2:
        # case I: the quasi-Levi keeps an O_{d^2} block
        if n % 2:
            chi = eta.product(_central_class(p))
            lift = orthogonal_cuspidal_lift(d, plus=True)
            o_char = lift if lift.product() == chi else orthogonal_cuspidal_lift(d, plus=False)
            if o_char.product() != chi:
                raise InternalCheckError(f"no central-value-matching lift on {p}, {eta}")
        else:
            chi = eta(_det_minus_class(p))
            o_char = orthogonal_cuspidal_lift(d, plus=(chi == 1))
            central = eta.product(_central_class(p))
            if o_char.product() != central:
                raise InternalCheckError(
                    f"central values disagree in the even case on {p}, {eta}")
        datum = CuspidalDatum(kind_so, torus_rank, cusp, o_char, d, dprime)
        return OSpringerDatum(OCase.I, QuasiLevi(torus_rank, d * d), datum,
                              WeylTag.BASE, chi, o_char)

    # case II: N even, torus quasi-Levi, extension sign moves to the Weyl side
    chi = eta(_det_minus_class(p))
    datum = CuspidalDatum(kind_so, torus_rank, cusp,
                          _so_cusp_character(d, 1) if d else SignCharacter(), d, dprime)
    return OSpringerDatum(OCase.II, QuasiLevi(torus_rank, 0), datum,
                          WeylTag.EXTENDED, chi, None)


# -- index-two subgroup of a product of orthogonal groups --------------------

@dataclass(frozen=True)
class ProductFactor:
    partition: Partition
    character: SignCharacter

    @property
    def size(self) -> int:
        return self.partition.total


@dataclass(frozen=True)
class ProductSpringerDatum:
    """Staged datum for the determinant-one subgroup of a product of O_m's.

    Factors are grouped by their individual case: ``block_i`` (case I-like),
    ``block_ii``, ``block_iii`` hold the 0-based factor indices.  The
    generator sets of the three extension stages are recorded verbatim as
    products ``s_i s_j`` of the per-factor flips; characters of the first
    two stages are evaluated on their generators (case-III factors carry no
    values, their stage is an induction).
    """

    block_i: tuple[int, ...]
    block_ii: tuple[int, ...]
    block_iii: tuple[int, ...]
    c_levi: tuple[tuple[int, int], ...]
    c_orbit: tuple[tuple[int, int], ...]
    c_induction: tuple[tuple[int, int], ...]
    quasi_levi: tuple[QuasiLevi, ...]
    cusp_data: tuple[CuspidalDatum, ...]
    chi_levi: tuple[int, ...]
    chi_orbit: tuple[int, ...]
    extended: bool
    induced: bool

    def generator_labels(self, pairs: tuple[tuple[int, int], ...]) -> tuple[str, ...]:
        return tuple(f"s{i + 1}*s{j + 1}" for i, j in pairs)


def _factor_case(factor: ProductFactor) -> OCase:
    p = factor.partition
    if is_degenerate(p) and len(p):
        return OCase.III
    n = p.total
    if n % 2:
        return OCase.I
    kind_so = GroupKind(Family.SO_EVEN, n)
    d = abs(_general_orthogonal_defect(kind_so, p, eta=factor.character))
    return OCase.I if d >= 2 else OCase.II


def _factor_flip_value(factor: ProductFactor) -> int:
    """Value of the character on the canonical det = -1 class of the factor."""
    return factor.character(_det_minus_class(factor.partition))


def springer_product(factors: Sequence[ProductFactor]) -> ProductSpringerDatum:
    """Three-stage correspondence for S(prod O_{m_i}) on per-factor data.

    Characters are given per factor at the O_{m_i} level; the global
    determinant-one constraint is then structural (only products of the
    per-factor flips are ever evaluated), so the value tables are taken as
    given, up to the simultaneous flip of every factor with odd parts.
    """
    if not factors:
        raise InvalidPartition("a product needs at least one orthogonal factor")
    for f in factors:
        n = f.size
        kind_o = GroupKind(Family.O_ODD if n % 2 else Family.O_EVEN, n)
        require_valid(kind_o, f.partition)
        expected = set(f.partition.distinct_parts_of_parity(1))
        if set(f.character.keys()) != expected:
            raise DomainMismatch(
                f"factor {f.partition}: character domain does not match its odd parts")

    cases = [_factor_case(f) for f in factors]
    ones = tuple(i for i, c in enumerate(cases) if c is OCase.I)
    twos = tuple(i for i, c in enumerate(cases) if c is OCase.II)
    threes = tuple(i for i, c in enumerate(cases) if c is OCase.III)

    if ones:
        anchor = ones[-1]
        c_levi = tuple(zip(ones, ones[1:]))
        c_orbit = tuple((anchor, j) for j in twos)
        c_induction = tuple((anchor, j) for j in threes)
    else:
        c_levi = ()
        c_orbit = tuple(zip(twos, twos[1:]))
        bridge = (twos[-1],) if twos else ()
        tail = bridge + threes
        c_induction = tuple(zip(tail, tail[1:]))

    data = []
    quasi = []
    for i, f in enumerate(factors):
        sub = springer_o(f.partition, f.character)
        data.append(sub.datum)
        quasi.append(sub.quasi_levi)

    def pair_value(pair: tuple[int, int]) -> int:
        i, j = pair
        return _factor_flip_value(factors[i]) * _factor_flip_value(factors[j])

    chi_levi = tuple(pair_value(g) for g in c_levi)
    chi_orbit = tuple(pair_value(g) for g in c_orbit)

    return ProductSpringerDatum(
        ones, twos, threes, c_levi, c_orbit, c_induction,
        tuple(quasi), tuple(data), chi_levi, chi_orbit,
        extended=bool(c_orbit), induced=bool(c_induction))
