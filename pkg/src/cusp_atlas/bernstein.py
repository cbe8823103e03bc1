"""Weyl-group and Hecke-algebra data attached to an inertial triple.

An inertial triple consists of general-linear factors (a self-dual or
gl-pair label pi_i with an exponent ell_i, a torsion order t_i and the
block total m'_{pi_i zeta_i} of its companion twist) together with the
classical cuspidal parameter; the classical block totals m'_pi are read off
the parameter.  The relative Weyl group decomposes factorwise:

    gl-pair factor                 -> type A_{ell-1}
    self-dual, sp-side, m' = 0     -> type C_ell
    self-dual, sp-side, m' != 0    -> type B_ell
    self-dual, o-side,  m' != 0    -> type B_ell
    self-dual, o-side,  m' = 0     -> type D_ell, flagged (*)

with ell = 0 giving a trivial factor.  Degenerate ranks (A_0, D_1, D_2) are
emitted with their explicit rank tags, never silently reclassified.  The
complement R-group is generated by the flips s_{i,ell_i} of the starred
factors; for an even special-orthogonal group whose Levi has no classical
block of size >= 4 the odd-dimensional starred factors only enter through
pairwise products, and the generator list is stored verbatim.

Hecke parameters per self-dual factor: x+ is the reducibility point of
pi against the classical blocks, x- that of its companion twist (whose
block total determines its staircase, hence its largest block).  On a type
B factor the short root carries lambda + lambda* theta = 2x+ or 2x- by the
sign theta; every other simple root carries 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import NormalizationError
from .lparams import (
    BlockGroupSide,
    DiscreteParameter,
    IrrLabel,
    SelfDualType,
    block_group_type,
    reducibility_point,
    require_valid_parameter,
)
from .orbits import Family, GroupKind, square_d, triangular_d


@dataclass(frozen=True)
class GLFactor:
    label: IrrLabel
    ell: int
    torsion: int = 1
    partner_mprime: int = 0

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError("a factor exponent must be nonnegative")
        if self.torsion < 1:
            raise ValueError("torsion is a positive integer")
        if self.partner_mprime < 0:
            raise ValueError("a block total is nonnegative")


@dataclass(frozen=True)
class InertialTriple:
    dual_group: GroupKind
    gl_factors: tuple[GLFactor, ...]
    cusp_param: DiscreteParameter

    def __init__(self, dual_group: GroupKind, gl_factors: Iterable[GLFactor],
                 cusp_param: DiscreteParameter):
        object.__setattr__(self, "dual_group", dual_group)
        object.__setattr__(self, "gl_factors", tuple(gl_factors))
        object.__setattr__(self, "cusp_param", cusp_param)
        self._validate()

    def _validate(self):
        require_valid_parameter(self.cusp_param)
        if self.cusp_param.dual_group.family is not self.dual_group.family:
            raise NormalizationError("classical part must have the ambient family")
        names = [f.label.name for f in self.gl_factors]
        if len(set(names)) != len(names):
            raise NormalizationError("factor labels must be pairwise distinct")
        for f in self.gl_factors:
            if f.label.sd_type is SelfDualType.GL_PAIR:
                continue
            if self.mprime(f.label) < f.partner_mprime:
                raise NormalizationError(
                    f"factor {f.label}: the self-dual representative must carry the "
                    f"larger block total (m'={self.mprime(f.label)} < {f.partner_mprime})")
        derived = self.cusp_param.dimension + sum(2 * f.label.dim * f.ell
                                                  for f in self.gl_factors)
        if derived != self.dual_group.size:
            raise NormalizationError(
                f"factors and classical part span {derived}, ambient size is "
                f"{self.dual_group.size}")

    def mprime(self, label: IrrLabel) -> int:
        return sum(a for lab, a in self.cusp_param.blocks if lab.name == label.name)

    @property
    def n_sharp(self) -> int:
        return self.cusp_param.dimension


class RootType(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class WeylFactor:
    label: IrrLabel
    root_type: RootType
    rank: int
    star: bool = False

    def __str__(self) -> str:
        if self.root_type is RootType.TRIVIAL:
            return "1"
        return f"{self.root_type.value}_{self.rank}" + ("*" if self.star else "")


@dataclass(frozen=True)
class RGroupDescriptor:
    """Generator list of the complement group, stored verbatim."""

    case: str
    generators: tuple[str, ...]

    @property
    def order(self) -> int:
        return 2 ** len(self.generators)


@dataclass(frozen=True)
class WeylDescriptor:
    factors: tuple[WeylFactor, ...]
    r_group: RGroupDescriptor


def _factor_type(triple: InertialTriple, factor: GLFactor) -> WeylFactor:
    if factor.ell == 0:
        return WeylFactor(factor.label, RootType.TRIVIAL, 0)
    if factor.label.sd_type is SelfDualType.GL_PAIR:
        return WeylFactor(factor.label, RootType.A, factor.ell - 1)
    side = block_group_type(triple.dual_group, factor.label)
    mprime = triple.mprime(factor.label)
    if mprime:
        return WeylFactor(factor.label, RootType.B, factor.ell)
    if side is BlockGroupSide.SP_SIDE:
        return WeylFactor(factor.label, RootType.C, factor.ell)
    return WeylFactor(factor.label, RootType.D, factor.ell, star=True)


def weyl_descriptor(triple: InertialTriple) -> WeylDescriptor:
    """Weyl factor types plus the R-group generator list."""
    factors = tuple(_factor_type(triple, f) for f in triple.gl_factors)
    starred = [i for i, f in enumerate(factors) if f.star]

    def flip(i: int) -> str:
        return f"s{i + 1},{triple.gl_factors[i].ell}"

    family = triple.dual_group.family
    if family is not Family.SO_EVEN or triple.n_sharp >= 4:
        # The flip of a starred factor normalizes everything on its own
        # (the classical orthogonal block absorbs the determinant).
        case = "split" if family is not Family.SO_EVEN else "so-even-classical"
        gens = tuple(flip(i) for i in starred)
        return WeylDescriptor(factors, RGroupDescriptor(case, gens))
    # Even special-orthogonal group, no classical block: single flips only
    # exist for even-dimensional labels; odd-dimensional ones pair up.
    even_dim = [i for i in starred if triple.gl_factors[i].label.dim % 2 == 0]
    odd_dim = [i for i in starred if triple.gl_factors[i].label.dim % 2 == 1]
    gens = [flip(i) for i in even_dim]
    gens += [f"{flip(i)}*{flip(j)}" for i, j in zip(odd_dim, odd_dim[1:])]
    return WeylDescriptor(factors, RGroupDescriptor("so-even-gl-levi", tuple(gens)))


def _staircase_top(side: BlockGroupSide, total: int) -> int:
    """Largest block of the staircase with the given block total."""
    if side is BlockGroupSide.SP_SIDE:
        d = triangular_d(total)
        if d is None:
            raise NormalizationError(f"{total} is not a staircase total 2+4+...+2d")
        return 2 * d
    d = square_d(total)
    if d is None:
        raise NormalizationError(f"{total} is not a staircase total 1+3+...+(2d-1)")
    return 2 * d - 1


@dataclass(frozen=True)
class HeckeFactorParams:
    label: IrrLabel
    root_type: RootType
    rank: int
    x_plus: Optional[Fraction]
    x_minus: Optional[Fraction]
    lam: Optional[Fraction]
    lam_star: Optional[Fraction]
    mu_short: Optional[Fraction]
    mu_other: Optional[int]


@dataclass(frozen=True)
class HeckeParams:
    factors: tuple[HeckeFactorParams, ...]


def hecke_parameters(triple: InertialTriple,
                     theta: Optional[Mapping[str, int]] = None) -> HeckeParams:
    """Graded parameter function per factor; theta maps label name -> +-1."""
    theta = dict(theta or {})
    for name, sign in theta.items():
        if sign not in (1, -1):
            raise NormalizationError(f"theta[{name!r}] must be +1 or -1")
    descriptor = weyl_descriptor(triple)
    out = []
    for factor, wf in zip(triple.gl_factors, descriptor.factors):
        if factor.label.sd_type is SelfDualType.GL_PAIR:
            out.append(HeckeFactorParams(factor.label, wf.root_type, wf.rank,
                                         None, None, None, None, None,
                                         2 if wf.rank else None))
            continue
        x_plus = reducibility_point(factor.label, triple.cusp_param, triple.dual_group)
        side = block_group_type(triple.dual_group, factor.label)
        if factor.partner_mprime:
            x_minus = Fraction(_staircase_top(side, factor.partner_mprime) + 1, 2)
        else:
            # the companion twist has the same self-duality type as the label
            x_minus = reducibility_point(factor.label, (), triple.dual_group)
        if x_plus < x_minus:
            raise NormalizationError(
                f"factor {factor.label}: x+={x_plus} < x-={x_minus}; "
                "the triple is not normalized")
        lam, lam_star = x_plus + x_minus, x_plus - x_minus
        if wf.root_type is RootType.B:
            sign = theta.get(factor.label.name, 1)
            mu_short = lam + lam_star * sign
        else:
            mu_short = None
        mu_other = 2 if wf.rank and not (wf.root_type is RootType.B and wf.rank == 1) else None
        out.append(HeckeFactorParams(factor.label, wf.root_type, wf.rank,
                                     x_plus, x_minus, lam, lam_star, mu_short, mu_other))
    return HeckeParams(tuple(out))


@dataclass(frozen=True)
class TorusDimension:
    total: int
    torsions: tuple[tuple[str, int, int], ...]  # (label name, ell, torsion)


def torus_dim(triple: InertialTriple) -> TorusDimension:
    """Dimension of the inertial parameter torus, torsions carried verbatim."""
    return TorusDimension(
        sum(f.ell for f in triple.gl_factors),
        tuple((f.label.name, f.ell, f.torsion) for f in triple.gl_factors))
