"""Exhaustive enumeration of classes, characters and parameters.

Everything here is brute force on purpose: these generators feed the
property checks and the census tables, so they must be independent of the
closed formulas they exercise.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import BoundExceeded, InvalidParameter
from .lparams import (
    DiscreteParameter,
    IrrLabel,
    ParameterCharacter,
    SelfDualType,
    det_flip,
    required_block_parity,
)
from .orbits import (
    Family,
    GroupKind,
    Partition,
    SignCharacter,
    characters_of,
    component_group,
    orbit_count,
    validate_partition,
)
from .springer import d_from_defect
from .symbols import symbol_from_character


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, parts weakly decreasing."""
    if n == 0:
        yield ()
        return
    top = min(n, max_part) if max_part is not None else n
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def group_partitions(kind: GroupKind) -> Iterator[Partition]:
    """Partitions classifying unipotent classes of the group."""
    for parts in partitions_of(kind.size):
        p = Partition(parts)
        if validate_partition(kind, p):
            yield p


def distinct_part_partitions(n: int, parity: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into distinct parts of the given parity, increasing."""
    def rec(remaining: int, minimum: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        part = minimum
        while part <= remaining:
            for rest in rec(remaining - part, part + 2):
                yield (part,) + rest
            part += 2
    start = 2 if parity == 0 else 1
    yield from rec(n, start)


def distinguished_pairs(kind: GroupKind) -> Iterator[tuple[Partition, SignCharacter]]:
    """Distinguished partitions with every sign vector (at the O-level)."""
    parity = kind.generator_parity
    if parity is None:
        return
    for parts in distinct_part_partitions(kind.size, parity):
        for signs in itertools.product((1, -1), repeat=len(parts)):
            yield Partition(parts), SignCharacter(dict(zip(parts, signs)))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    if n < 0:
        return 0
    return sum(1 for _ in partitions_of(n))


def bipartition_count(n: int) -> int:
    """Pairs of partitions with total size n (class count of the rank-n
    hyperoctahedral Weyl group)."""
    return sum(partition_count(a) * partition_count(n - a) for a in range(n + 1))


def orbit_pair_d(kind: GroupKind, p: Partition, eta: SignCharacter) -> int:
    """Cuspidal size parameter of any enhanced class, via its symbol defect."""
    return d_from_defect(kind, symbol_from_character(kind, p, eta).defect)


def unipotent_census(kind: GroupKind) -> dict:
    """Count enhanced unipotent classes, bucketed by cuspidal datum size d."""
    if kind.family not in (Family.SP, Family.SO_ODD, Family.SO_EVEN):
        raise InvalidParameter(f"census supports Sp and SO groups, not {kind}")
    total = 0
    by_d: dict[int, int] = {}
    for p in group_partitions(kind):
        copies = orbit_count(kind, p)
        for eta in characters_of(component_group(kind, p)):
            d = orbit_pair_d(kind, p, eta)
            total += copies
            by_d[d] = by_d.get(d, 0) + copies
    return {"pairs": total, "by_d": dict(sorted(by_d.items()))}


def springer_count_identity(n: int) -> tuple[int, int, dict[int, int], dict[int, int]]:
    """Both sides of the class-count identity for Sp_n, per d-bucket.

    Left: exhaustive census of enhanced classes.  Right: one hyperoctahedral
    character count per admissible cuspidal datum.
    """
    census = unipotent_census(GroupKind(Family.SP, n))
    predicted: dict[int, int] = {}
    d = 0
    while d * (d + 1) <= n:
        if (n - d * (d + 1)) % 2 == 0:
            predicted[d] = bipartition_count((n - d * (d + 1)) // 2)
        d += 1
    return census["pairs"], sum(predicted.values()), census["by_d"], predicted


DEFAULT_SIGNATURE = (IrrLabel("u", 1, SelfDualType.ORTHOGONAL),)


def enumerate_parameters(
    dual: GroupKind,
    signature: Sequence[IrrLabel] = DEFAULT_SIGNATURE,
    bound: Optional[int] = None,
) -> Iterator[tuple[DiscreteParameter, ParameterCharacter]]:
    """All discrete enhanced parameters on the given labels, duplicate-free.

    Block sizes per label are distinct with the parity its type forces;
    characters of an orthogonal component group are represented once per
    determinant-flip class.
    """
    if bound is not None and dual.size > bound:
        raise BoundExceeded(f"size {dual.size} exceeds the enumeration bound {bound}")
    labels = tuple(signature)
    if len({lab.name for lab in labels}) != len(labels):
        raise InvalidParameter("signature labels must have distinct names")
    for lab in labels:
        if lab.sd_type is SelfDualType.GL_PAIR:
            raise InvalidParameter("discrete parameters carry self-dual labels only")

    def assignments(idx: int, remaining: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(labels):
            if remaining == 0:
                yield ()
            return
        label = labels[idx]
        parity = required_block_parity(dual, label)
        for budget in range(0, remaining + 1):
            if budget % label.dim:
                continue
            for sizes in distinct_part_partitions(budget // label.dim, parity):
                for rest in assignments(idx + 1, remaining - budget):
                    yield (sizes,) + rest

    for sizing in assignments(0, dual.size):
        blocks = [(label, a) for label, sizes in zip(labels, sizing) for a in sizes]
        param = DiscreteParameter(dual, blocks)
        keys = param.block_keys()
        seen: set = set()
        for signs in itertools.product((1, -1), repeat=len(keys)):
            eta = SignCharacter(dict(zip(keys, signs)))
            if not dual.is_symplectic:
                flipped = det_flip(param, eta)
                canon = min(eta.values, flipped.values)
                if canon in seen:
                    continue
                seen.add(canon)
                eta = SignCharacter(dict(canon))
            yield param, eta


def parameter_census(dual: GroupKind, signature: Sequence[IrrLabel] = DEFAULT_SIGNATURE,
                     bound: Optional[int] = None) -> dict:
    """Counts of enumerated enhanced parameters, bucketed by slice sides."""
    count = 0
    cuspidal = 0
    from .lparams import is_cuspidal

    for param, eta in enumerate_parameters(dual, signature, bound):
        count += 1
        if is_cuspidal(param, eta):
            cuspidal += 1
    return {"parameters": count, "cuspidal": cuspidal}
