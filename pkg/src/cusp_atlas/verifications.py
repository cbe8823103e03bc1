"""The invariant suite behind `cusp-atlas selfcheck` and the acceptance tests.

Each check exhausts a finite range and returns (name, passed, detail); the
ranges are configurable so the command-line run stays quick while the test
suite pushes the documented bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import census
from .cuspsupport import all_order_slice_supports, check_support
from .errors import InternalCheckError
from .lparams import BlockGroupSide, IrrLabel, SelfDualType
from .orbits import Family, GroupKind, cuspidal_pair
from .springer import (
    elimination_normal_forms,
    eliminate_once,
    normal_form_content,
    springer_datum,
)
from .symbols import defect_formula, symbol_from_character


@dataclass(frozen=True)
class Limits:
    defect: int = 20
    orders: int = 16
    support: int = 14
    census: int = 12
    cuspidal: int = 25


def _distinguished_kinds(n: int) -> list[GroupKind]:
    kinds = []
    if n % 2 == 0:
        kinds.append(GroupKind(Family.SP, n))
        kinds.append(GroupKind(Family.SO_EVEN, n))
    else:
        kinds.append(GroupKind(Family.SO_ODD, n))
    return kinds


def check_defect_coherence(limit: int) -> tuple[bool, str]:
    """Formula defect == symbol defect, and invariance under every single step."""
    checked = 0
    for n in range(1, limit + 1):
        for kind in _distinguished_kinds(n):
            for p, eta in census.distinguished_pairs(kind):
                before = defect_formula(kind, p, eta)
                if symbol_from_character(kind, p, eta).defect != before:
                    return False, f"defect mismatch at {kind} {p} {eta}"
                parts = p.increasing()
                for j in range(len(parts) - 1):
                    if eta(parts[j]) != eta(parts[j + 1]):
                        continue
                    q, chi = eliminate_once(p, eta, j)
                    shrunk = GroupKind(kind.family, q.total) if q.total else kind
                    after = (defect_formula(shrunk, q, chi) if len(q)
                             else (1 if kind.is_symplectic else 0))
                    if after != before:
                        return False, f"defect not conserved at {kind} {p} {eta} step {j}"
                checked += 1
    return True, f"{checked} distinguished pairs"


def check_order_independence(limit: int) -> tuple[bool, str]:
    """Every deletion order reaches one normal-form content and one support."""
    checked = 0
    for n in range(1, limit + 1):
        for kind in _distinguished_kinds(n):
            side = (BlockGroupSide.SP_SIDE if kind.is_symplectic
                    else BlockGroupSide.O_SIDE)
            label = IrrLabel("u", 1, SelfDualType.ORTHOGONAL)
            for p, eta in census.distinguished_pairs(kind):
                shrunk_kind = kind
                contents = {
                    normal_form_content(GroupKind(kind.family, sum(parts)) if parts
                                        else shrunk_kind, parts, values)
                    for parts, values in elimination_normal_forms(p, eta)}
                if len(contents) != 1:
                    return False, f"{len(contents)} normal-form contents for {kind} {p} {eta}"
                supports = all_order_slice_supports(label, side, p.increasing(), eta)
                if len(supports) != 1:
                    return False, f"{len(supports)} supports for {kind} {p} {eta}"
                checked += 1
    return True, f"{checked} pairs, single content and support each"


def check_count_identity(limit: int) -> tuple[bool, str]:
    for n in range(2, limit + 1, 2):
        total, predicted, by_d, by_d_predicted = census.springer_count_identity(n)
        if total != predicted or by_d != by_d_predicted:
            return False, (f"Sp_{n}: census {total} {by_d} vs "
                           f"predicted {predicted} {by_d_predicted}")
    return True, f"Sp_N census matches for even N <= {limit}"


def check_cuspidal_fixed_points(limit: int) -> tuple[bool, str]:
    """The cuspidal pair of each admissible size N <= limit is its own datum."""
    count = 0
    d = 1
    while d * (d + 1) <= limit:
        n = d * (d + 1)
        kind = GroupKind(Family.SP, n)
        pair = cuspidal_pair(kind)
        datum = springer_datum(kind, pair.partition, pair.character)
        if (datum.torus_rank, datum.cusp_partition, datum.cusp_character) != (
                0, pair.partition, pair.character):
            return False, f"Sp_{n} cuspidal pair moved"
        count += 1
        d += 1
    d = 1
    while d * d <= limit:
        n = d * d
        family = Family.SO_ODD if n % 2 else Family.SO_EVEN
        kind = GroupKind(family, n)
        pair = cuspidal_pair(kind)
        for lift in (pair.character, pair.minus_lift):
            datum = springer_datum(kind, pair.partition, lift)
            if datum.torus_rank != 0 or datum.cusp_partition != pair.partition:
                return False, f"SO_{n} cuspidal pair moved"
            if datum.cusp_character != lift:
                return False, f"SO_{n} cuspidal lift not restored"
        count += 1
        d += 1
    return True, f"{count} cuspidal pairs fixed"


def check_support_invariants(limit: int) -> tuple[bool, str]:
    checked = 0
    for family in (Family.SP, Family.SO_ODD, Family.SO_EVEN):
        for n in range(1, limit + 1):
            try:
                dual = GroupKind(family, n)
            except ValueError:
                continue
            for param, eta in census.enumerate_parameters(dual):
                try:
                    report = check_support(param, eta)
                except InternalCheckError as exc:
                    return False, f"{param} {eta}: {exc}"
                if not report.ok():
                    return False, f"{param} {eta}: {report.failures()}"
                checked += 1
    return True, f"{checked} enhanced parameters"


def run_all(limits: Limits) -> list[tuple[str, bool, str]]:
    checks: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
        ("count-identity", lambda: check_count_identity(limits.census)),
        ("defect-coherence", lambda: check_defect_coherence(limits.defect)),
        ("order-independence", lambda: check_order_independence(limits.orders)),
        ("cuspidal-fixed-points", lambda: check_cuspidal_fixed_points(limits.cuspidal)),
        ("support-invariants", lambda: check_support_invariants(limits.support)),
    ]
    results = []
    for name, runner in checks:
        try:
            ok, detail = runner()
        except Exception as exc:  # a crash is a failed check, surfaced verbatim
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
