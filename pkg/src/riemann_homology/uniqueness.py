"""Finite replay of the argument that a surface carries at most one
generalized Fermat group.

Suppose ``A = Z_k^n`` and ``B = Z_l^m`` (``k != l``) are both generalized
Fermat groups of the same surface. Each induces an abelian group of
automorphisms of the other's quotient sphere: a cyclic group ``Z_q`` or the
Klein group. The two resulting quotient orbifolds coincide, and matching
their cone orders leads to a contradiction in every case. This module
enumerates the possible quotient signatures, checks the named case
constraints, and cross-checks them by matching every pair of concrete
quotient orbifolds.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .fermat import FermatType, fermat_genus
from .orbifold import Signature, euler_characteristic, quotient_cone_order

__all__ = [
    "QuotientScenario", "CaseVerdict", "CoexistenceReport", "DiophantineReport",
    "FeasibleCoexistenceError", "quotient_cone_order", "cyclic_case_signatures",
    "klein_case_signatures", "coexistence_check", "genus_collision_scan",
    "diophantine_check",
]


class FeasibleCoexistenceError(RuntimeError):
    """A pair of distinct Fermat types survived every case check."""


@dataclass(frozen=True)
class QuotientScenario:
    """Quotient of the ``(0; k, ..., k)`` orbifold by a cyclic or Klein group.

    ``orders`` lists the cone orders coming from cone points of the base;
    for a cyclic group the ``2 - beta`` fixed points of the rotation that are
    not cone points become extra cone points of order ``q``
    (``extra_orders``). ``valid`` is False when ``orders`` alone has fewer
    than three entries.
    """

    base_type: FermatType
    group: str  # "cyclic" or "klein"
    q: Optional[int]
    params: tuple[int, ...]  # (alpha, beta) or (alpha, beta_1, beta_2)
    orders: tuple[int, ...]
    extra_orders: tuple[int, ...] = ()

    @property
    def valid(self) -> bool:
        return len(self.orders) >= 3

    @property
    def signature(self) -> Optional[Signature]:
        return Signature(self.orders) if self.valid else None

    @property
    def full_orders(self) -> tuple[int, ...]:
        return tuple(sorted(self.orders + self.extra_orders))

    @property
    def group_order(self) -> int:
        return self.q if self.group == "cyclic" else 4

    def riemann_hurwitz_ok(self) -> bool:
        base = euler_characteristic(0, [self.base_type.k] * (self.base_type.n + 1))
        quotient = euler_characteristic(0, self.full_orders)
        return self.group_order * quotient == base


def cyclic_case_signatures(t: FermatType, q: int) -> list[QuotientScenario]:
    """All ``alpha >= 1``, ``beta in {0,1,2}`` with ``n + 1 = alpha q + beta``."""
    if q < 2:
        raise ValueError("q must be at least 2")
    k, total = t.k, t.n + 1
    out = []
    for beta in (0, 1, 2):
        rest = total - beta
        if rest >= q and rest % q == 0:
            alpha = rest // q
            orders = tuple(sorted([k] * alpha + [quotient_cone_order(q, k)] * beta))
            extra = (quotient_cone_order(q, 1),) * (2 - beta)
            out.append(QuotientScenario(t, "cyclic", q, (alpha, beta), orders, extra))
    return sorted(out, key=lambda s: s.params, reverse=True)


def klein_case_signatures(t: FermatType) -> list[QuotientScenario]:
    """All ``alpha >= 0``, ``beta_1 + beta_2 = 3`` with ``n + 1 = 4 alpha + 2 beta_1``."""
    k, total = t.k, t.n + 1
    out = []
    for beta1 in range(4):
        beta2 = 3 - beta1
        rest = total - 2 * beta1
        if rest >= 0 and rest % 4 == 0:
            alpha = rest // 4
            orders = tuple(sorted([k] * alpha
                                  + [quotient_cone_order(2, k)] * beta1
                                  + [quotient_cone_order(2, 1)] * beta2))
            out.append(QuotientScenario(t, "klein", None, (alpha, beta1, beta2), orders))
    return sorted(out, key=lambda s: s.params, reverse=True)


@dataclass(frozen=True)
class CaseVerdict:
    label: str
    roles: str  # which group acts cyclically / as Klein group, e.g. "A~=Z_p, B~=V4"
    feasible: bool
    reason: str

    def to_dict(self) -> dict:
        return {"label": self.label, "roles": self.roles,
                "feasible": self.feasible, "reason": self.reason}


@dataclass(frozen=True)
class CoexistenceReport:
    type_a: FermatType
    type_b: FermatType
    genus_a: int
    genus_b: int
    case_verdicts: tuple[CaseVerdict, ...] = field(default=())

    @property
    def same_genus(self) -> bool:
        return self.genus_a == self.genus_b

    @property
    def feasible_overall(self) -> bool:
        return self.same_genus and any(v.feasible for v in self.case_verdicts)

    def to_dict(self) -> dict:
        return {
            "type_a": [self.type_a.k, self.type_a.n],
            "type_b": [self.type_b.k, self.type_b.n],
            "genus": self.genus_a if self.same_genus else None,
            "genus_a": self.genus_a,
            "genus_b": self.genus_b,
            "same_genus": self.same_genus,
            "cases": [v.to_dict() for v in self.case_verdicts],
            "feasible_overall": self.feasible_overall,
        }


def _cyclic_scenarios(t: FermatType) -> list[QuotientScenario]:
    return [s for q in range(2, t.n + 2) for s in cyclic_case_signatures(t, q)]


def _matches(x: QuotientScenario, y: QuotientScenario) -> bool:
    return Counter(x.full_orders) == Counter(y.full_orders)


def _describe(s: QuotientScenario) -> str:
    return f"{s.group}{'' if s.q is None else f'(q={s.q})'}{s.params}->{s.full_orders}"


def _case(label, roles, pairs, predicate_feasible, constraint, select=lambda on_a, on_b: True):
    """Combine a named constraint with the concrete scenario matching.

    ``pairs`` holds ``(scenario on O_A, scenario on O_B)``; ``select``
    restricts them to this sub-case.
    """
    pairs = [(sa, sb) for sa, sb in pairs if select(sa, sb)]
    hits = [(sa, sb) for sa, sb in pairs if _matches(sa, sb)]
    feasible = predicate_feasible or bool(hits)
    reason = f"{constraint}; {len(pairs)} quotient pairs compared, {len(hits)} coincide"
    if hits:
        reason += ": " + "; ".join(f"{_describe(a)} = {_describe(b)}" for a, b in hits)
    return CaseVerdict(label, roles, feasible, reason)


def _cyclic_klein_cases(a: FermatType, b: FermatType, roles: str) -> list[CaseVerdict]:
    """``B`` induces a Klein group on ``O_A``; ``A`` induces ``Z_p`` on ``O_B``."""
    k, n, l, m = a.k, a.n, b.k, b.n
    pairs = [(sa, sb) for sa in klein_case_signatures(a) for sb in _cyclic_scenarios(b)]

    # (a): beta_2 = 0 forces k = p l and 2k = l.
    feas_a = any(k == p * l and 2 * k == l for p in range(2, m + 2))
    # (b): l = 2, k = 2p, n + 1 = 4 alpha, m + 1 = 3p + alpha with alpha in {1, 2},
    # after which equal genera become an exponential diophantine equation.
    feas_b = False
    constraint_b = "l=2, k=2p, n+1=4alpha, m+1=3p+alpha"
    if l == 2 and k % 2 == 0 and k // 2 >= 2 and (n + 1) % 4 == 0 and (n + 1) // 4 in (1, 2):
        p, alpha = k // 2, (n + 1) // 4
        if m + 1 == 3 * p + alpha:
            feas_b = fermat_genus(a) == fermat_genus(b)
            constraint_b += f" hold with p={p}, alpha={alpha}; genera " + (
                "agree" if feas_b else "differ")
        else:
            constraint_b += " fail"
    else:
        constraint_b += " fail"
    return [
        _case("2a", roles, pairs, feas_a, "k=pl and 2k=l force 2p=1",
              lambda sa, sb: sa.params[2] == 0),
        _case("2b", roles, pairs, feas_b, constraint_b,
              lambda sa, sb: sa.params[2] > 0),
    ]


def _klein_klein_cases(a: FermatType, b: FermatType) -> list[CaseVerdict]:
    k, l = a.k, b.k
    roles = "A~=V4, B~=V4"
    pairs = [(sa, sb) for sa in klein_case_signatures(a) for sb in klein_case_signatures(b)]
    # Each sub-case fixes what the cone orders k and 2k of O_A/B~ are matched with.
    subcases = [
        ("3a", "k=2l and 2k=l", lambda k, l: k == 2 * l and 2 * k == l),
        ("3b", "k=2l and 2k=2", lambda k, l: k == 2 * l and 2 * k == 2),
        ("3c", "k=2, 2k=l and 2=2l", lambda k, l: k == 2 and 2 * k == l and 2 == 2 * l),
        ("3d", "k=2, 2k=2l and 2=l, so k=l", lambda k, l: k == 2 and 2 * k == 2 * l and l == 2),
    ]

    def classify(k, l):
        for x, y in ((k, l), (l, k)):
            if x == 2 * y:
                return "3a" if 2 * x == y else "3b"
            if x == 2:
                return "3c" if 2 * x == y else "3d"
        return None

    out = []
    for label, text, pred in subcases:
        feas = pred(k, l) or pred(l, k)
        out.append(_case(label, roles, pairs, feas, text + " is contradictory",
                         lambda sa, sb, label=label: classify(k, l) == label))
    stray = [(sa, sb) for sa, sb in pairs if classify(k, l) is None and _matches(sa, sb)]
    if stray:
        out.append(_case("3", roles, stray, False, "coincidence outside sub-cases (a)-(d)"))
    return out


def coexistence_check(a: FermatType, b: FermatType) -> CoexistenceReport:
    """Decide whether generalized Fermat groups of types ``a`` and ``b`` can share a surface.

    Every case is checked in both role orderings where they differ. A case
    is feasible if its named constraints can be met or if some pair of
    concrete quotient orbifolds from that case coincides.
    """
    if a.k == b.k:
        raise ValueError("same type parameter; covered by prior uniqueness result")
    ga, gb = fermat_genus(a), fermat_genus(b)
    if ga != gb:
        return CoexistenceReport(a, b, ga, gb)

    k, n, l, m = a.k, a.n, b.k, b.n
    verdicts = []
    # (1) A~ = Z_p on O_B and B~ = Z_q on O_A.
    pairs = [(sa, sb) for sa in _cyclic_scenarios(a) for sb in _cyclic_scenarios(b)]
    feas1 = any(k == p * l and q * k == l for p in range(2, m + 2) for q in range(2, n + 2))
    verdicts.append(_case("1", "A~=Z_p, B~=Z_q", pairs, feas1, "k=pl and qk=l force pq=1"))
    # (2) one induced group cyclic, the other Klein, in both role orderings.
    verdicts += _cyclic_klein_cases(a, b, "A~=Z_p, B~=V4")
    verdicts += _cyclic_klein_cases(b, a, "B~=Z_p, A~=V4")
    # (3) both Klein.
    verdicts += _klein_klein_cases(a, b)
    return CoexistenceReport(a, b, ga, gb, tuple(verdicts))


def fermat_types_in_box(k_max: int, n_max: int) -> list[FermatType]:
    return [FermatType(k, n) for k in range(2, k_max + 1) for n in range(2, n_max + 1)
            if (k - 1) * (n - 1) > 2]


def genus_collision_scan(k_max: int, n_max: int, strict: bool = True) -> list[CoexistenceReport]:
    """Run :func:`coexistence_check` on every same-genus pair of types in the box.

    With ``strict`` a feasible report raises :class:`FeasibleCoexistenceError`.
    """
    if k_max < 3 or n_max < 2:
        raise ValueError("need k_max >= 3 and n_max >= 2")
    by_genus = defaultdict(list)
    for t in fermat_types_in_box(k_max, n_max):
        by_genus[fermat_genus(t)].append(t)
    reports = []
    for types in by_genus.values():
        for a, b in combinations(sorted(types), 2):
            if a.k != b.k:
                reports.append(coexistence_check(a, b))
    reports.sort(key=lambda r: (r.genus_a, r.type_a.k, r.type_a.n, r.type_b.k, r.type_b.n))
    bad = [r for r in reports if r.feasible_overall]
    if strict and bad:
        raise FeasibleCoexistenceError(
            "feasible coexistence: " + ", ".join(f"{r.type_a}/{r.type_b}" for r in bad))
    return reports


@dataclass(frozen=True)
class EquationCertificate:
    name: str
    solutions: tuple[int, ...]
    crossover: Optional[int]  # from here on the left side exceeds the right
    monotone_from: int  # from here on the ratio left/right increases
    p_max: int

    @property
    def certified(self) -> bool:
        return self.crossover is not None and self.monotone_from <= self.crossover

    @property
    def ok(self) -> bool:
        return not self.solutions and self.certified

    def to_dict(self) -> dict:
        return {"equation": self.name, "solutions": list(self.solutions),
                "crossover": self.crossover, "monotone_from": self.monotone_from,
                "certified": self.certified, "p_max": self.p_max, "ok": self.ok}


@dataclass(frozen=True)
class DiophantineReport:
    p_max: int
    equations: tuple[EquationCertificate, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.equations)

    def to_dict(self) -> dict:
        return {"p_max": self.p_max, "ok": self.ok,
                "equations": [e.to_dict() for e in self.equations]}


_EQUATIONS: list[tuple[str, Callable[[int], int], Callable[[int], int]]] = [
    ("3*2^(3p) = 32*p^2", lambda p: 3 * 2 ** (3 * p), lambda p: 32 * p * p),
    ("2^(3p) = 256*p^6", lambda p: 2 ** (3 * p), lambda p: 256 * p ** 6),
]


def _certify(name, lhs, rhs, p_max) -> EquationCertificate:
    ps = range(2, p_max + 1)
    left = [lhs(p) for p in ps]
    right = [rhs(p) for p in ps]
    solutions = tuple(p for p, x, y in zip(ps, left, right) if x == y)

    crossover = None
    for i in range(len(left) - 1, -1, -1):
        if left[i] <= right[i]:
            break
        crossover = ps[i]

    # ratio(p+1) > ratio(p)  <=>  L(p+1) R(p) > L(p) R(p+1)
    monotone_from = p_max
    for i in range(len(left) - 2, -1, -1):
        if left[i + 1] * right[i] <= left[i] * right[i + 1]:
            break
        monotone_from = ps[i]
    return EquationCertificate(name, solutions, crossover, monotone_from, p_max)


def diophantine_check(p_max: int) -> DiophantineReport:
    """Certify that neither exponential equation has a solution in ``[2, p_max]``.

    Besides the pointwise check, each certificate records the crossover after
    which the left side stays larger and the point from which the ratio of
    the two sides is increasing.
    """
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    return DiophantineReport(p_max, tuple(_certify(name, lhs, rhs, p_max)
                                          for name, lhs, rhs in _EQUATIONS))

