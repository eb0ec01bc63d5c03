"""Catalog of homology signatures up to a genus bound, plus worked examples.

The enumerator is exhaustive. Write ``P`` for the product of the cone
orders and ``mu`` for their lcm, so that ``|A| = P / mu`` and
``2g - 2 = |A| (sum(1 - 1/k_j) - 2)``. The angle excess of a hyperbolic
genus-zero signature is at least 1/42, hence ``|A| <= 84 (g - 1)``. Every
cone order divides ``mu`` and ``mu`` divides ``|A|``, so it is enough to
loop over ``mu <= 84 (g_max - 1)`` and multisets of divisors of ``mu``,
pruning on ``P <= 84 (g_max - 1) mu`` and on the genus lower bound of a
hyperbolic prefix (both only grow when an entry is appended or enlarged).
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from math import lcm
from typing import Optional

from .fermat import OrbifoldStructure, orbifold_structure
from .intlin import AbelianGroup
from .orbifold import (
    Signature,
    homology_group,
    homology_order,
    is_homology_pair,
    is_homology_signature,
    maclachlan_check,
)


@dataclass(frozen=True)
class CatalogEntry:
    signature: Signature
    group: AbelianGroup
    order: int
    genus: int
    is_fermat: bool
    orbifold: OrbifoldStructure

    @classmethod
    def from_signature(cls, sig: Signature) -> CatalogEntry:
        verdict = is_homology_signature(sig)
        if not verdict.is_homology:
            raise ValueError(f"{sig} is not a homology signature")
        return cls(sig, verdict.group, verdict.group_order, verdict.cover_genus,
                   sig.is_uniform, orbifold_structure(sig))

    @property
    def sort_key(self):
        return self.genus, len(self.signature), self.signature.orders

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "signature": list(self.signature.orders),
            "invariant_factors": list(self.group.invariant_factors),
            "order": self.order,
            "is_fermat": self.is_fermat,
            "orbifold_cone_classes": [{"points": c, "order": o}
                                      for c, o in self.orbifold.cone_classes],
        }


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _signatures_with_lcm(mu: int, genus_max: int) -> list[tuple[int, ...]]:
    """Maclachlan signatures with lcm exactly ``mu`` and cover genus <= ``genus_max``."""
    divs = [d for d in _divisors(mu) if d >= 2]
    prod_cap = 84 * (genus_max - 1) * mu
    # excess is tracked as mu * (sum(1 - 1/k_j) - 2), an integer since k_j | mu;
    # the prefix genus bound 1 + P excess / (2 mu) exceeds genus_max iff
    # P * scaled_excess > 2 (genus_max - 1) mu^2.
    genus_cap = 2 * (genus_max - 1) * mu * mu
    out = []

    def extend(prefix, start, prod, excess):
        if len(prefix) >= 3 and excess > 0:
            if lcm(*prefix) == mu and maclachlan_check(Signature(prefix))[0]:
                out.append(tuple(prefix))
        for i in range(start, len(divs)):
            d = divs[i]
            p2 = prod * d
            e2 = excess + mu - mu // d
            if p2 > prod_cap or (e2 > 0 and p2 * e2 > genus_cap):
                break
            prefix.append(d)
            extend(prefix, i, p2, e2)
            prefix.pop()

    extend([], 0, 1, -2 * mu)
    return out


def enumerate_homology_signatures(genus_min: int, genus_max: int) -> list[CatalogEntry]:
    """Every Maclachlan signature whose homology cover has genus in the range.

    Sorted by (genus, number of cone points, orders).
    """
    if not 2 <= genus_min <= genus_max:
        raise ValueError(f"invalid genus range [{genus_min}, {genus_max}]")
    entries = []
    for mu in range(2, 84 * (genus_max - 1) + 1):
        for orders in _signatures_with_lcm(mu, genus_max):
            sig = Signature(orders)
            entry = CatalogEntry.from_signature(sig)
            if genus_min <= entry.genus <= genus_max:
                entries.append(entry)
    entries.sort(key=lambda e: e.sort_key)
    return entries


@dataclass(frozen=True)
class BoundViolation:
    signature: Signature
    bound: str
    order: int
    limit: int


@dataclass(frozen=True)
class BoundsReport:
    checked: int
    violations: tuple[BoundViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_bounds(entries: list[CatalogEntry]) -> BoundsReport:
    """Check |A| <= 4(g+1), cyclic |A| <= 4g+2 and |A| <= 84(g-1) on catalog output."""
    bad = []
    for e in entries:
        g = e.genus
        limits = [("abelian 4(g+1)", 4 * (g + 1)), ("Hurwitz 84(g-1)", 84 * (g - 1))]
        if e.group.is_cyclic:
            limits.append(("cyclic 4g+2", 4 * g + 2))
        bad += [BoundViolation(e.signature, name, e.order, lim)
                for name, lim in limits if e.order > lim]
    return BoundsReport(len(entries), tuple(bad))


def fermat_n_unique(entries: list[CatalogEntry]) -> bool:
    """No two uniform entries share both genus and cone order."""
    seen = Counter((e.genus, e.signature.orders[0]) for e in entries if e.is_fermat)
    return all(c == 1 for c in seen.values())


@dataclass(frozen=True)
class Fixture:
    name: str
    signature: Signature
    expected_group: AbelianGroup
    expected_genus: int
    expected_orbifold: Optional[tuple[tuple[int, int], ...]] = None
    rejected_groups: tuple[AbelianGroup, ...] = ()
    notes: dict = field(default_factory=dict, compare=False, hash=False)


@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    message: str


class FixtureMismatch(AssertionError):
    def __init__(self, failures: list[FixtureResult]):
        self.failures = failures
        super().__init__("fixture mismatch: " + "; ".join(
            f"{f.name}: {f.message}" for f in failures))


def _ab(*factors: int) -> AbelianGroup:
    return AbelianGroup(tuple(factors))


def paper_fixtures() -> list[Fixture]:
    """Worked examples of homology pairs (and one non-example)."""
    fixtures = [
        Fixture("z10", Signature([2, 5, 10]), _ab(10), 2,
                notes={"group": "<x1,x2,x3 : x1^2 = x2^5 = x3^10 = x1 x2 x3 = 1>"}),
        Fixture("klein-quartic", Signature([7, 7, 7]), _ab(7, 7), 15,
                expected_orbifold=(), rejected_groups=(_ab(7),),
                notes={"curve": "x^7 + y^7 + z^7 = 0",
                       "non_example": "y^7 = x z^4 (x - z)^2 with A = Z_7"}),
        Fixture("example-1", Signature([2, 8, 8]), _ab(2, 8), 3,
                expected_orbifold=((8, 4),),
                notes={"curve": "w^2 = u^8 - 1",
                       "a": "(u, w) -> (sqrt(i) u, w)",
                       "b": "(u, w) -> (-u, -w)",
                       "c": "(u, w) -> (1/u, i w / u^4)"}),
        Fixture("example-2", Signature([2, 2, 3, 3]), _ab(6), 2,
                expected_orbifold=((4, 2), (6, 3)),
                notes={"curve": "y^2 = x (x^4 - 1)",
                       "eta": "(x, y) -> (i (1 + x)/(1 - x), 2 (1 - i) y / (x - 1)^3)",
                       "rho": "(x, y) -> (-x, i y)"}),
    ]
    for g in (2, 4, 6, 8):
        fixtures.append(Fixture(
            f"example-3-g{g}-A", Signature([2, 2 * g + 2, 2 * g + 2]), _ab(2, 2 * g + 2), g,
            expected_orbifold=((2 * g + 2, g + 1),),
            notes={"curve": f"y^2 = x^{2 * g + 2} - 1",
                   "alpha": f"(x, y) -> (exp(pi i/{g + 1}) x, y)",
                   "tau": "(x, y) -> (x, -y)"}))
        fixtures.append(Fixture(
            f"example-3-g{g}-B", Signature([2, 2, g + 1, g + 1]), _ab(2 * g + 2), g,
            notes={"curve": f"y^2 = x^{2 * g + 2} - 1", "generators": "alpha^2, tau"}))
    return fixtures


def verify_fixture(f: Fixture) -> FixtureResult:
    problems = []
    group = homology_group(f.signature)
    if group != f.expected_group:
        problems.append(f"group {group} != expected {f.expected_group}")
    if not is_homology_pair(f.signature, f.expected_group):
        problems.append("expected group is not a homology pair")
    for rejected in f.rejected_groups:
        if is_homology_pair(f.signature, rejected):
            problems.append(f"{rejected} should not be a homology group")
    verdict = is_homology_signature(f.signature)
    if verdict.cover_genus != f.expected_genus:
        problems.append(f"genus {verdict.cover_genus} != expected {f.expected_genus}")
    if homology_order(f.signature) != f.expected_group.order:
        problems.append("order formula disagrees with expected group")
    if f.expected_orbifold is not None:
        orb = orbifold_structure(f.signature)
        if orb.cone_classes != f.expected_orbifold:
            problems.append(f"orbifold {orb.cone_classes} != expected {f.expected_orbifold}")
    return FixtureResult(f.name, not problems, "; ".join(problems) or "ok")


def verify_fixtures(fixtures: Optional[list[Fixture]] = None) -> list[FixtureResult]:
    """Verify fixtures; raise :class:`FixtureMismatch` naming every failure."""
    results = [verify_fixture(f) for f in (fixtures if fixtures is not None else paper_fixtures())]
    failures = [r for r in results if not r.ok]
    if failures:
        raise FixtureMismatch(failures)
    return results


CSV_COLUMNS = ["genus", "signature", "invariant_factors", "order", "is_fermat",
               "orbifold_cone_classes"]


def to_csv(entries: list[CatalogEntry]) -> str:
    """Comma-separated rows; list-valued fields are space-separated."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for e in entries:
        writer.writerow([
            e.genus,
            " ".join(map(str, e.signature.orders)),
            " ".join(map(str, e.group.invariant_factors)),
            e.order,
            str(e.is_fermat).lower(),
            " ".join(f"{c}x{o}" for c, o in e.orbifold.cone_classes),
        ])
    return buf.getvalue()


def to_json(entries: list[CatalogEntry]) -> str:
    return json.dumps([e.to_dict() for e in entries])
