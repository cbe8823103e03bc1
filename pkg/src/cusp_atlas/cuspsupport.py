"""Cuspidal support of discrete enhanced parameters, by two routes.

Each label slice of a parameter is a distinguished partition (the block
sizes) with signs; elimination turns it into a cuspidal datum, and the
exponents the slice loses on the way become general-linear twist factors.
Concretely, per label:

* d comes from the slice's elimination normal form (with the defect
  formula cross-checked against it);
* the classical part keeps the staircase blocks (pi,2),...,(pi,2d) on the
  symplectic side, (pi,1),...,(pi,2d-1) on the orthogonal one, carrying the
  canonical alternating character;
* the correction multiset E_c = exponents(slice) - exponents(staircase) is
  symmetric; its canonical nonnegative half E' lists the twist exponents,
  one general-linear factor GL_{n_pi} per entry (exponent 0 entries are
  untwisted self-dual pairs and stay explicit).

The second route rewrites the normal form through the increasing block map
psi (size 2(i-1) or 2i on the symplectic side by the leading sign, 2i-1 on
the orthogonal side) and harvests the twists as integer segments, one per
surviving block plus one per eliminated pair.  The two routes must produce
identical supports; :func:`check_support` bundles that comparison with the
conservation laws (infinitesimal character, dimension, idempotence, and the
fixed-point criterion: support = self exactly for gapless alternating data).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainMismatch, InternalCheckError, InvalidParameter
from .orbits import Family, GroupKind, Partition, SignCharacter
from .springer import CuspidalDatum, springer_datum
from .lparams import (
    BlockGroupSide,
    DiscreteParameter,
    ExponentMultiset,
    IrrLabel,
    ParameterCharacter,
    block_exponents,
    block_group_type,
    infinitesimal_character,
    is_cuspidal,
    require_valid_parameter,
)


def _slice_group(side: BlockGroupSide, m: int) -> GroupKind:
    if side is BlockGroupSide.SP_SIDE:
        return GroupKind(Family.SP, m)
    if side is BlockGroupSide.O_SIDE:
        return GroupKind(Family.SO_ODD if m % 2 else Family.SO_EVEN, m)
    raise InvalidParameter("gl-pair labels do not occur in discrete parameters")


def _slice_character(label: IrrLabel, sizes: Iterable[int], eta: ParameterCharacter) -> SignCharacter:
    return SignCharacter({a: eta((label.name, a)) for a in sizes})


def _check_char(p: DiscreteParameter, eta: ParameterCharacter) -> None:
    if set(eta.keys()) != set(p.block_keys()):
        raise DomainMismatch(f"character domain {eta.keys()} does not match blocks of {p}")


@dataclass(frozen=True)
class ECMultiset:
    """Correction exponents of one slice: the full multiset and its half."""

    e_c: ExponentMultiset
    e_prime: ExponentMultiset


def staircase_exponents(label: IrrLabel, side: BlockGroupSide, d: int) -> ExponentMultiset:
    out = ExponentMultiset()
    sizes = range(2, 2 * d + 1, 2) if side is BlockGroupSide.SP_SIDE else range(1, 2 * d, 2)
    for a in sizes:
        out = out.union(block_exponents(label, a))
    return out


def ec_multiset(label: IrrLabel, side: BlockGroupSide, sizes: Iterable[int], d: int) -> ECMultiset:
    """E_c = slice exponents minus staircase exponents, split as E' + (-E')."""
    sizes = tuple(sizes)
    total = ExponentMultiset()
    for a in sizes:
        total = total.union(block_exponents(label, a))
    try:
        e_c = total.minus(staircase_exponents(label, side, d))
    except InvalidParameter as exc:
        raise InvalidParameter(
            f"staircase of size parameter {d} does not embed in slice {sizes}: {exc}") from exc
    if not e_c.is_symmetric():
        raise InternalCheckError(f"correction multiset of slice {sizes}, d={d} is asymmetric")
    return ECMultiset(e_c, e_c.nonnegative_half())


@dataclass(frozen=True)
class LeviDescriptor:
    """Product of general-linear twist factors and one classical block."""

    gl_ranks: tuple[tuple[str, int, int], ...]  # (label name, n_pi, number of factors)
    classical: GroupKind

    def __str__(self) -> str:
        pieces = [f"GL_{n}^{count}" for _, n, count in self.gl_ranks if count]
        pieces.append(str(self.classical))
        return " x ".join(pieces)


@dataclass(frozen=True)
class SliceSupport:
    label: IrrLabel
    side: BlockGroupSide
    sizes: tuple[int, ...]
    datum: CuspidalDatum
    correction: ECMultiset

    @property
    def ell(self) -> int:
        return len(self.correction.e_prime)


@dataclass(frozen=True)
class CuspidalSupport:
    gl_twists: ExponentMultiset
    cusp_param: DiscreteParameter
    cusp_char: ParameterCharacter
    levi: LeviDescriptor
    slices: tuple[SliceSupport, ...] = ()

    def is_self(self, p: DiscreteParameter, eta: ParameterCharacter) -> bool:
        return (len(self.gl_twists) == 0 and self.cusp_param == p
                and self.cusp_char == eta)

    def key(self) -> tuple:
        """Comparison key ignoring the per-slice diagnostics."""
        return (self.gl_twists, self.cusp_param, self.cusp_char, self.levi)


def _classical_part(dual: GroupKind, blocks, chars) -> tuple[DiscreteParameter, ParameterCharacter]:
    n_sharp = sum(label.dim * a for label, a in blocks)
    try:
        group = GroupKind(dual.family, n_sharp)
    except ValueError as exc:  # parity of the classical part is a theorem
        raise InternalCheckError(f"classical part of size {n_sharp} for {dual}: {exc}") from exc
    param = DiscreteParameter(group, blocks)
    require_valid_parameter(param)
    return param, SignCharacter(chars)


def _assemble(dual: GroupKind, slices: list[SliceSupport]) -> CuspidalSupport:
    twists = ExponentMultiset()
    blocks: list[tuple[IrrLabel, int]] = []
    chars: dict = {}
    gl_ranks = []
    for s in slices:
        twists = twists.union(s.correction.e_prime)
        for a in s.datum.cusp_partition.parts:
            blocks.append((s.label, a))
            chars[(s.label.name, a)] = s.datum.cusp_character(a)
        gl_ranks.append((s.label.name, s.label.dim, s.ell))
        if s.ell != s.datum.torus_rank:
            raise InternalCheckError(
                f"slice {s.label}: {s.ell} twists but torus rank {s.datum.torus_rank}")
    param, char = _classical_part(dual, blocks, chars)
    levi = LeviDescriptor(tuple(sorted(gl_ranks)), param.dual_group)
    return CuspidalSupport(twists, param, char, levi, tuple(slices))


def support(p: DiscreteParameter, eta: ParameterCharacter) -> CuspidalSupport:
    """Cuspidal support via per-slice data and correction multisets."""
    require_valid_parameter(p)
    _check_char(p, eta)
    slices = []
    for label in p.labels():
        sizes = p.sizes_of(label)
        side = block_group_type(p.dual_group, label)
        group = _slice_group(side, sum(sizes))
        datum = springer_datum(group, Partition(sizes), _slice_character(label, sizes, eta))
        correction = ec_multiset(label, side, sizes, datum.d)
        slices.append(SliceSupport(label, side, sizes, datum, correction))
    return _assemble(p.dual_group, slices)


def _psi_map(side: BlockGroupSide, normal: Partition, char: SignCharacter) -> tuple[tuple[int, ...], int]:
    """Increasing block map of the normal form, and the resulting d."""
    parts = normal.increasing()
    if not parts:
        return (), 0
    if side is BlockGroupSide.SP_SIDE:
        if char(parts[0]) == 1:
            return tuple(2 * i for i in range(len(parts))), len(parts) - 1
        return tuple(2 * (i + 1) for i in range(len(parts))), len(parts)
    return tuple(2 * i + 1 for i in range(len(parts))), len(parts)


def _segment(top: int, length: int, label: IrrLabel) -> ExponentMultiset:
    """Exponents (top-1)/2 - f for f = 0..length-1, folded to be nonnegative."""
    start = Fraction(top - 1, 2)
    return ExponentMultiset((label, abs(start - f)) for f in range(length))


def _slice_psi_support(label: IrrLabel, side: BlockGroupSide, sizes: tuple[int, ...],
                       slice_char: SignCharacter,
                       removed: Sequence[tuple[int, int]],
                       terminal: Partition, terminal_char: SignCharacter) -> SliceSupport:
    """Assemble one slice's support from an elimination history."""
    group = _slice_group(side, sum(sizes))
    psi, d = _psi_map(side, terminal, terminal_char)
    twists = ExponentMultiset()
    cusp_values: dict[int, int] = {}
    for a, image in zip(terminal.increasing(), psi):
        twists = twists.union(_segment(a, (a - image) // 2, label))
        if image >= 1:
            cusp_values[image] = terminal_char(a)
    for lo, hi in removed:
        twists = twists.union(_segment(hi, (lo + hi) // 2, label))

    if side is BlockGroupSide.SP_SIDE:
        cusp = Partition(range(2, 2 * d + 1, 2))
    else:
        cusp = Partition(range(1, 2 * d, 2))
    if set(cusp_values) != set(cusp.parts):
        raise InternalCheckError(
            f"psi image {sorted(cusp_values)} is not the staircase of d={d}")
    datum = CuspidalDatum(group, (sum(sizes) - cusp.total) // 2, cusp,
                          SignCharacter(cusp_values), d,
                          dprime=_dprime_from(side, d, terminal_char, terminal))
    correction = ECMultiset(twists.union(twists.negated()), twists)
    return SliceSupport(label, side, sizes, datum, correction)


def _eliminate_leftmost(sizes: tuple[int, ...], slice_char: SignCharacter):
    removed: list[tuple[int, int]] = []
    current, char = Partition(sizes), slice_char
    while True:
        parts = current.increasing()
        site = next((j for j in range(len(parts) - 1)
                     if char(parts[j]) == char(parts[j + 1])), None)
        if site is None:
            return removed, current, char
        removed.append((parts[site], parts[site + 1]))
        keep = parts[:site] + parts[site + 2:]
        current, char = Partition(keep), char.restrict(keep)


def support_via_psi(p: DiscreteParameter, eta: ParameterCharacter) -> CuspidalSupport:
    """Cuspidal support through the normal form and the block map psi.

    Surviving blocks contribute the segment from their size down to their
    psi-image; each eliminated pair (lo, hi) contributes the segment of
    length (lo + hi)/2 below hi.  Must equal :func:`support`.
    """
    require_valid_parameter(p)
    _check_char(p, eta)
    slices = []
    for label in p.labels():
        sizes = p.sizes_of(label)
        side = block_group_type(p.dual_group, label)
        slice_char = _slice_character(label, sizes, eta)
        removed, terminal, terminal_char = _eliminate_leftmost(sizes, slice_char)
        slices.append(_slice_psi_support(label, side, sizes, slice_char,
                                         removed, terminal, terminal_char))
    result = _assemble(p.dual_group, slices)
    direct_key = support(p, eta).key()
    if result.key() != direct_key:
        raise InternalCheckError(
            f"the two support routes disagree on {p}, {eta}")
    return result


def all_order_slice_supports(label: IrrLabel, side: BlockGroupSide,
                             sizes: tuple[int, ...],
                             slice_char: SignCharacter) -> set:
    """Slice supports over every admissible elimination order (test hook).

    Returns the set of (twist multiset, cuspidal blocks, cuspidal values)
    triples; order independence of the support means this is a singleton.
    """
    out = set()

    def walk(parts: tuple[int, ...], char: SignCharacter,
             removed: tuple[tuple[int, int], ...]) -> None:
        sites = [j for j in range(len(parts) - 1) if char(parts[j]) == char(parts[j + 1])]
        if not sites:
            s = _slice_psi_support(label, side, sizes, slice_char,
                                   removed, Partition(parts), char)
            out.add((s.correction.e_prime, s.datum.cusp_partition.parts,
                     s.datum.cusp_character.values))
            return
        for j in sites:
            keep = parts[:j] + parts[j + 2:]
            walk(keep, char.restrict(keep), removed + ((parts[j], parts[j + 1]),))

    walk(tuple(sorted(sizes)), slice_char, ())
    return out


def _dprime_from(side: BlockGroupSide, d: int, char: SignCharacter, normal: Partition) -> int:
    if side is BlockGroupSide.O_SIDE:
        return d
    parts = normal.increasing()
    if not parts:
        return 1
    return d + 1 if char(parts[0]) == 1 else -d


@dataclass(frozen=True)
class SupportReport:
    infinitesimal_preserved: bool
    dimension_conserved: bool
    idempotent: bool
    fixed_point_iff_cuspidal: bool
    routes_agree: bool

    def ok(self) -> bool:
        return all((self.infinitesimal_preserved, self.dimension_conserved,
                    self.idempotent, self.fixed_point_iff_cuspidal, self.routes_agree))

    def failures(self) -> tuple[str, ...]:
        names = ("infinitesimal_preserved", "dimension_conserved", "idempotent",
                 "fixed_point_iff_cuspidal", "routes_agree")
        return tuple(n for n in names if not getattr(self, n))


def support_infinitesimal(sup: CuspidalSupport) -> ExponentMultiset:
    """Exponent multiset of a support: +-e per twist plus the classical part.

    An exponent-0 twist is an untwisted self-dual pair and contributes the
    entry (label, 0) twice, which the plain symmetrization already does.
    """
    out = infinitesimal_character(sup.cusp_param)
    doubled = sup.gl_twists.union(sup.gl_twists.negated())
    return out.union(doubled)


def check_support(p: DiscreteParameter, eta: ParameterCharacter) -> SupportReport:
    sup = support(p, eta)
    inf_ok = infinitesimal_character(p) == support_infinitesimal(sup)
    twist_dims = 2 * sum(label.dim for label, _ in sup.gl_twists)
    dim_ok = twist_dims + sup.cusp_param.dimension == p.dual_group.size
    again = support(sup.cusp_param, sup.cusp_char)
    idem_ok = again.is_self(sup.cusp_param, sup.cusp_char)
    fixed = sup.is_self(p, eta)
    fix_ok = fixed == is_cuspidal(p, eta)
    try:
        via = support_via_psi(p, eta)
        routes_ok = via.key() == sup.key()
    except InternalCheckError:
        routes_ok = False
    return SupportReport(inf_ok, dim_ok, idem_ok, fix_ok, routes_ok)
