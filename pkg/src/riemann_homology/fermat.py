"""Generalized Fermat curves and the homology-cover construction.

A generalized Fermat group of type ``(k, n)`` is ``A = Z_k^n`` acting on the
fiber product of ``n - 1`` Fermat curves of degree ``k``. Elements of ``A``
are modelled as exponent vectors: ``a_j`` multiplies the ``j``-th projective
coordinate by a primitive ``k``-th root of unity, so ``a_j`` is the ``j``-th
standard basis vector mod ``k`` and ``a_{n+1} = -(a_1 + ... + a_n)``.

Axes are numbered from 1 (``a_1, ..., a_{n+1}``) to match the coordinates
``x_1, ..., x_{n+1}`` of the curve model.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

from .intlin import AbelianGroup, IntMatrix, quotient_structure
from .orbifold import (
    MaclachlanError,
    Signature,
    euler_characteristic,
    homology_genus,
    homology_group,
    homology_order,
    is_homology_signature,
    maclachlan_check,
    quotient_cone_order,
    signature_lcm,
)


@dataclass(frozen=True, order=True)
class FermatType:
    k: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.n < 2:
            raise ValueError(f"type ({self.k},{self.n}) needs k >= 2 and n >= 2")
        if (self.k - 1) * (self.n - 1) <= 2:
            raise ValueError(
                f"type ({self.k},{self.n}) is not hyperbolic: (k-1)(n-1) must exceed 2"
            )

    @property
    def signature(self) -> Signature:
        return Signature([self.k] * (self.n + 1))

    @property
    def group_order(self) -> int:
        return self.k ** self.n

    def __str__(self):
        return f"({self.k},{self.n})"


def fermat_genus(t: FermatType) -> int:
    """Closed-form genus ``1 + k^(n-1) ((n-1)(k-1) - 2) / 2``.

    Cross-checked against Riemann-Hurwitz on the uniform signature.
    """
    k, n = t.k, t.n
    twice = k ** (n - 1) * ((n - 1) * (k - 1) - 2)
    assert twice % 2 == 0
    g = 1 + twice // 2
    assert g == homology_genus(t.signature), f"genus formula disagrees for {t}"
    return g


@dataclass(frozen=True)
class ExponentVector:
    coords: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "coords", tuple(c % self.modulus for c in self.coords))

    def __add__(self, other: ExponentVector) -> ExponentVector:
        self._check(other)
        return ExponentVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.modulus)

    def __neg__(self) -> ExponentVector:
        return ExponentVector(tuple(-a for a in self.coords), self.modulus)

    def __sub__(self, other: ExponentVector) -> ExponentVector:
        return self + (-other)

    def __mul__(self, e: int) -> ExponentVector:
        return ExponentVector(tuple(e * a for a in self.coords), self.modulus)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other):
        if self.modulus != other.modulus or len(self.coords) != len(other.coords):
            raise ValueError("exponent vectors live in different groups")

    @classmethod
    def zero(cls, n: int, k: int) -> ExponentVector:
        return cls((0,) * n, k)

    @classmethod
    def basis(cls, j: int, n: int, k: int) -> ExponentVector:
        """The standard generator ``a_j`` for ``1 <= j <= n``."""
        return cls(tuple(int(i == j - 1) for i in range(n)), k)


def generators(t: FermatType) -> list[ExponentVector]:
    """``[a_1, ..., a_n, a_{n+1}]``; the list sums to zero."""
    gens = [ExponentVector.basis(j, t.n, t.k) for j in range(1, t.n + 1)]
    total = ExponentVector.zero(t.n, t.k)
    for g in gens:
        total = total + g
    gens.append(-total)
    return gens


def fixed_point_classification(t: FermatType, v: ExponentVector) -> Optional[tuple[int, int]]:
    """Return ``(j, e)`` when ``v = e * a_j`` with ``e`` nonzero mod ``k``.

    Those are exactly the elements acting with fixed points; their fixed
    points are those of ``a_j``. The identity and every non-axial element
    (acting freely) give ``None``.
    """
    if v.modulus != t.k or len(v.coords) != t.n:
        raise ValueError(f"vector does not belong to Z_{t.k}^{t.n}")
    support = [i for i, c in enumerate(v.coords) if c]
    if not support:
        return None
    if len(support) == 1:
        i = support[0]
        return i + 1, v.coords[i]
    if len(support) == t.n and len(set(v.coords)) == 1:
        return t.n + 1, (-v.coords[0]) % t.k
    return None


def _check_permutation(sigma: Sequence[int], size: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, size + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{size}")
    return sigma


def permutation_action(t: FermatType, sigma: Sequence[int]) -> IntMatrix:
    """Matrix of the automorphism of ``Z_k^n`` sending ``a_j`` to ``a_sigma(j)``.

    ``sigma`` lists the images ``(sigma(1), ..., sigma(n+1))``. Columns of the
    result are the images of ``a_1, ..., a_n``; entries are reduced mod ``k``.
    """
    sigma = _check_permutation(sigma, t.n + 1)
    gens = generators(t)
    cols = [gens[sigma[j] - 1].coords for j in range(t.n)]
    m = IntMatrix.from_rows([[cols[j][i] for j in range(t.n)] for i in range(t.n)], t.n)

    image_last = apply(m, gens[t.n])
    assert image_last == gens[sigma[t.n] - 1], "permutation action is inconsistent"
    assert gcd(m.determinant(), t.k) == 1, "permutation action is not invertible"
    return m


def apply(m: IntMatrix, v: ExponentVector) -> ExponentVector:
    return ExponentVector(
        tuple(sum(m[i, j] * v.coords[j] for j in range(m.cols)) for i in range(m.rows)),
        v.modulus,
    )


BranchValue = Union[int, Fraction, str]


@dataclass(frozen=True)
class CurveEquation:
    lambda_index: int
    coordinates: tuple[int, int, int]


@dataclass(frozen=True)
class CurveModel:
    """Fiber product ``lambda_j x_1^k + x_2^k + x_{j+3}^k = 0``, ``lambda_0 = 1``."""

    degree: int
    lambdas: tuple[BranchValue, ...]
    equations: tuple[CurveEquation, ...]

    @property
    def branch_values(self) -> list[str]:
        return ["inf", "0", "1"] + [str(lam) for lam in self.lambdas]

    @property
    def projection(self) -> str:
        return f"[x_1 : ... : x_{len(self.equations) + 2}] -> -(x_2/x_1)^{self.degree}"

    def coefficient(self, eq: CurveEquation) -> BranchValue:
        return 1 if eq.lambda_index == 0 else self.lambdas[eq.lambda_index - 1]

    def to_text(self) -> str:
        k = self.degree
        lines = []
        for eq in self.equations:
            c = self.coefficient(eq)
            if c == 1:
                head = ""
            elif c == -1:
                head = "-"
            elif isinstance(c, str):
                head = f"{c}*"
            else:
                head = f"({c})*"
            i, j, l = eq.coordinates
            lines.append(f"{head}x_{i}^{k} + x_{j}^{k} + x_{l}^{k} = 0")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "equations": [
                {"lambda_index": eq.lambda_index, "coordinates": list(eq.coordinates)}
                for eq in self.equations
            ],
            "branch_values": self.branch_values,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _normalize_branch_value(lam) -> BranchValue:
    if isinstance(lam, str):
        try:
            lam = Fraction(lam)
        except ValueError:
            if not lam.isidentifier():
                raise ValueError(f"branch value {lam!r} is neither a rational nor a symbol")
            return lam
    if isinstance(lam, float):
        raise ValueError("branch values must be exact (int, Fraction or symbol)")
    lam = Fraction(lam)
    return int(lam) if lam.denominator == 1 else lam


def curve_model(t: FermatType, lambdas: Sequence[BranchValue] = ()) -> CurveModel:
    """Equations of the generalized Fermat curve with branch values ``inf, 0, 1, lambdas``."""
    lams = tuple(_normalize_branch_value(lam) for lam in lambdas)
    if len(lams) != t.n - 2:
        raise ValueError(f"type {t} needs {t.n - 2} branch values, got {len(lams)}")
    for lam in lams:
        if lam in (0, 1):
            raise ValueError(f"branch value {lam} collides with 0 or 1")
    if len(set(lams)) != len(lams):
        raise ValueError(f"branch values must be pairwise distinct: {lams}")
    eqs = [CurveEquation(0, (1, 2, 3))]
    eqs += [CurveEquation(j, (1, 2, j + 3)) for j in range(1, t.n - 1)]
    return CurveModel(t.k, lams, tuple(eqs))


@dataclass(frozen=True)
class CoverConstruction:
    """Quotient of ``H_A = Z_mu^n`` by the subgroup ``K_A``."""

    signature: Signature
    mu: int
    k_a_generators: tuple[ExponentVector, ...]
    quotient: AbelianGroup

    @property
    def rank(self) -> int:
        return len(self.signature) - 1

    def to_dict(self) -> dict:
        return {
            "signature": list(self.signature.orders),
            "mu": self.mu,
            "ambient": [self.mu] * self.rank,
            "k_a_generators": [list(v.coords) for v in self.k_a_generators],
            "invariant_factors": list(self.quotient.invariant_factors),
            "order": self.quotient.order,
        }


def homology_cover_construction(sig: Signature) -> CoverConstruction:
    ok, bad = maclachlan_check(sig)
    if not ok:
        raise MaclachlanError(
            f"{sig} fails Maclachlan's condition at order {sig.orders[bad - 1]}"
        )
    mu = signature_lcm(sig)
    n = len(sig) - 1
    gens = [ExponentVector.basis(j, n, mu) * sig.orders[j - 1] for j in range(1, n + 1)]
    gens.append(ExponentVector((sig.orders[n],) * n, mu))
    relations = [[mu * int(i == j) for j in range(n)] for i in range(n)]
    relations += [list(g.coords) for g in gens]
    quotient = quotient_structure(n, relations)
    assert quotient == homology_group(sig), f"H_A/K_A differs from the homology group of {sig}"
    return CoverConstruction(sig, mu, tuple(gens), quotient)


@dataclass(frozen=True)
class OrbifoldStructure:
    genus: int
    cone_classes: tuple[tuple[int, int], ...]  # (point_count, cone_order)

    @property
    def cone_orders(self) -> list[int]:
        return [order for count, order in self.cone_classes for _ in range(count)]

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "cone_classes": [{"points": c, "order": o} for c, o in self.cone_classes],
        }

    def __str__(self):
        if not self.cone_classes:
            return f"genus {self.genus}, no cone points"
        parts = ", ".join(f"{c} points of order {o}" for c, o in self.cone_classes)
        return f"genus {self.genus}; {parts}"


def orbifold_structure(sig: Signature) -> OrbifoldStructure:
    """Cone data of the orbifold on the homology cover.

    Points over the ``j``-th branch value have stabilizer of order ``k_j``;
    there are ``|A| / k_j`` of them and they carry cone order ``mu / k_j``
    when that exceeds 1. Classes with equal cone order are merged.
    """
    verdict = is_homology_signature(sig)
    if not verdict.is_homology:
        raise MaclachlanError(
            f"{sig} fails Maclachlan's condition at order {verdict.failing_order}"
        )
    mu = signature_lcm(sig)
    counts: Counter = Counter()
    for kj in sig.orders:
        if mu // kj >= 2:
            counts[mu // kj] += verdict.group_order // kj
    classes = tuple(sorted(((c, o) for o, c in counts.items()), key=lambda co: co[1]))
    return OrbifoldStructure(verdict.cover_genus, classes)


def orbifold_riemann_hurwitz_ok(sig: Signature, structure: OrbifoldStructure) -> bool:
    """Recompute the cover's Euler characteristic from the quotient data.

    Every cone point upstairs maps to a branch point of order ``mu`` under the
    quotient rule, so the orbifold ``S^{orb,A}`` must be an ``|A|``-sheeted
    cover of the sphere with ``n+1`` cone points of order ``mu``.
    """
    mu = signature_lcm(sig)
    order = homology_order(sig)
    images = Counter()
    for count, cone in structure.cone_classes:
        stabilizer = mu // cone
        images[quotient_cone_order(stabilizer, cone)] += count * stabilizer
    free_over_branch = sum(order // kj for kj in sig.orders if kj == mu)
    images[mu] += free_over_branch * mu
    # Each branch point of order mu has |A| / stabilizer preimages; counting
    # preimages weighted by stabilizer order must give |A| per branch point.
    if images != Counter({mu: order * len(sig)}):
        return False
    downstairs = euler_characteristic(0, [mu] * len(sig))
    upstairs = euler_characteristic(structure.genus, structure.cone_orders)
    return upstairs == order * downstairs
