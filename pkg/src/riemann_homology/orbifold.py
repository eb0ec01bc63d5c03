"""Signature calculus for genus-zero Fuchsian orbifolds.

A signature ``(0; k_1, ..., k_{n+1})`` is stored as the sorted tuple of its
cone orders. The homology group of a signature is the abelianization
``Z^{n+1} / <x_1 + ... + x_{n+1}, k_1 x_1, ..., k_{n+1} x_{n+1}>``, and its
homology cover is the surface uniformized by the derived subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Iterable, Optional

from .intlin import AbelianGroup, IntMatrix, quotient_structure


class SignatureError(ValueError):
    """Raised for malformed cone-order lists."""


class NonHyperbolicError(ValueError):
    """Raised when a signature does not describe a hyperbolic orbifold."""


class MaclachlanError(ValueError):
    """Raised when an operation needs a torsion-free derived subgroup."""


@dataclass(frozen=True)
class Signature:
    """Genus-zero signature, normalized to ascending cone orders."""

    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int]):
        orders = tuple(sorted(int(k) for k in orders))
        if len(orders) < 3:
            raise SignatureError(
                f"a signature needs at least 3 cone orders, got {len(orders)}"
            )
        if orders[0] < 2:
            raise SignatureError(f"cone orders must be >= 2, got {orders[0]}")
        object.__setattr__(self, "orders", orders)

    def __len__(self):
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.orders)) == 1

    def angle_excess(self) -> Fraction:
        """``sum(1 - 1/k_j) - 2``; positive exactly for hyperbolic signatures."""
        return sum((1 - Fraction(1, k) for k in self.orders), Fraction(0)) - 2

    def kind(self) -> str:
        e = self.angle_excess()
        if e > 0:
            return "hyperbolic"
        return "Euclidean" if e == 0 else "spherical"

    def __str__(self):
        return "(0;" + ",".join(map(str, self.orders)) + ")"


def signature_lcm(sig: Signature) -> int:
    return lcm(*sig.orders)


def maclachlan_check(sig: Signature) -> tuple[bool, Optional[int]]:
    """Check that dropping any single cone order keeps the lcm.

    Returns ``(True, None)`` or ``(False, j)`` with ``j`` the smallest
    position, counted from 1 like ``k_1, ..., k_{n+1}``, whose removal
    lowers the lcm.
    """
    total = signature_lcm(sig)
    orders = sig.orders
    for j in range(len(orders)):
        if lcm(*orders[:j], *orders[j + 1:]) != total:
            return False, j + 1
    return True, None


def relation_matrix(sig: Signature) -> IntMatrix:
    """Rows: the all-ones relation, then ``k_j e_j`` for every cone point."""
    m = len(sig)
    rows = [[1] * m]
    for j, k in enumerate(sig.orders):
        row = [0] * m
        row[j] = k
        rows.append(row)
    return IntMatrix.from_rows(rows, m)


def homology_group(sig: Signature) -> AbelianGroup:
    group = quotient_structure(len(sig), relation_matrix(sig))
    assert group.free_rank == 0
    return group


def homology_order(sig: Signature, cross_check: bool = False) -> int:
    """Order of the homology group via ``prod(k_j) / lcm(k_j)``.

    With ``cross_check`` the value is compared to the Smith normal form
    computation and a mismatch raises ``AssertionError``.
    """
    order = prod(sig.orders) // signature_lcm(sig)
    if cross_check:
        snf_order = homology_group(sig).order
        assert order == snf_order, f"{sig}: formula {order} != SNF {snf_order}"
    return order


def homology_genus(sig: Signature) -> int:
    """Genus of the homology cover by Riemann-Hurwitz, in exact arithmetic."""
    excess = sig.angle_excess()
    if excess <= 0:
        raise NonHyperbolicError(f"signature {sig} is {sig.kind()}, not hyperbolic")
    genus = 1 + homology_order(sig) * excess / 2
    if genus.denominator != 1:
        raise MaclachlanError(
            f"signature {sig} gives non-integral cover genus {genus}; "
            "its derived subgroup has torsion"
        )
    return int(genus)


@dataclass(frozen=True)
class HomologyVerdict:
    signature: Signature
    maclachlan_ok: bool
    failing_index: Optional[int]
    cover_genus: Optional[int]
    group: AbelianGroup
    group_order: int

    @property
    def failing_order(self) -> Optional[int]:
        if self.failing_index is None:
            return None
        return self.signature.orders[self.failing_index - 1]

    @property
    def is_homology(self) -> bool:
        return self.maclachlan_ok and self.cover_genus is not None and self.cover_genus >= 2

    def to_dict(self) -> dict:
        return {
            "signature": list(self.signature.orders),
            "maclachlan_ok": self.maclachlan_ok,
            "failing_index": self.failing_index,
            "failing_order": self.failing_order,
            "invariant_factors": list(self.group.invariant_factors),
            "order": self.group_order,
            "genus": self.cover_genus,
            "is_homology": self.is_homology,
        }


def is_homology_signature(sig: Signature) -> HomologyVerdict:
    """Bundle the Maclachlan test, the homology group and the cover genus.

    A signature failing Maclachlan's condition is reported without a genus
    (its cover is an orbifold, not a surface). A Maclachlan signature that is
    not hyperbolic raises :class:`NonHyperbolicError`.
    """
    ok, bad = maclachlan_check(sig)
    group = homology_group(sig)
    order = homology_order(sig)
    assert order == group.order
    genus = homology_genus(sig) if ok else None
    return HomologyVerdict(sig, ok, bad, genus, group, order)


def is_homology_pair(sig: Signature, candidate: AbelianGroup) -> bool:
    return homology_group(sig) == candidate


def euler_characteristic(genus: int, cone_orders: Iterable[int]) -> Fraction:
    """Orbifold Euler characteristic ``2 - 2g - sum(1 - 1/m)``."""
    return 2 - 2 * genus - sum((1 - Fraction(1, m) for m in cone_orders), Fraction(0))


def quotient_cone_order(stabilizer: int, existing: int) -> int:
    """Cone order of the image of a point under a finite quotient map.

    ``stabilizer`` is the order of the point's stabilizer and ``existing`` its
    cone order before quotienting (1 for a regular point). A result of 1 means
    the image is a regular point.
    """
    if stabilizer < 1 or existing < 1:
        raise ValueError("stabilizer order and cone order must be >= 1")
    return stabilizer * existing
