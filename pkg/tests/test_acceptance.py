"""Acceptance criteria, one test each, with their wall-clock limits.

The conftest prints a PASS/FAIL line per criterion in the terminal summary.
"""

import io
import itertools
import json
import random
import time

from riemann_homology.catalog import check_bounds, enumerate_homology_signatures
from riemann_homology.cli import dispatch
from riemann_homology.fermat import (
    FermatType,
    fermat_genus,
    homology_cover_construction,
    orbifold_structure,
)
from riemann_homology.intlin import AbelianGroup, IntMatrix, quotient_structure, smith_normal_form
from riemann_homology.orbifold import (
    Signature,
    homology_genus,
    homology_group,
    homology_order,
    is_homology_pair,
    maclachlan_check,
)
from riemann_homology.uniqueness import diophantine_check, genus_collision_scan

from oracles import brute_force_catalog, coset_enumeration


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f} s, limit {self.limit} s"


def test_01_z10_pair():
    with Timer(1):
        out, err = io.StringIO(), io.StringIO()
        assert dispatch(["homology-group", "2", "5", "10", "--format", "json"], out, err) == 0
        data = json.loads(out.getvalue())
        assert data["invariant_factors"] == [10]
        assert data["genus"] == 2


def test_02_klein_quartic_non_example():
    with Timer(1):
        sig = Signature([7, 7, 7])
        assert homology_order(sig) == 49
        assert not is_homology_pair(sig, AbelianGroup((7,)))
        assert homology_genus(sig) == 15


def test_03_fermat_genus_consistency():
    with Timer(10):
        checked = 0
        for k in range(2, 51):
            for n in range(2, 13):
                if (k - 1) * (n - 1) > 2:
                    t = FermatType(k, n)
                    assert fermat_genus(t) == homology_genus(Signature([k] * (n + 1)))
                    checked += 1
        assert checked == 49 * 11 - 3


def test_04_example_2_8_8():
    with Timer(1):
        sig = Signature([2, 8, 8])
        assert homology_group(sig).invariant_factors == (2, 8)
        assert homology_genus(sig) == 3
        assert orbifold_structure(sig).cone_classes == ((8, 4),)


def test_05_hyperelliptic_examples():
    with Timer(1):
        for g in (2, 4, 6, 8):
            a = Signature([2, 2 * g + 2, 2 * g + 2])
            assert homology_group(a).invariant_factors == (2, 2 * g + 2)
            assert homology_genus(a) == g
            assert orbifold_structure(a).cone_classes == ((2 * g + 2, g + 1),)
            b = Signature([2, 2, g + 1, g + 1])
            assert homology_group(b).invariant_factors == (2 * g + 2,)
            assert homology_genus(b) == g


def test_06_cover_construction_box():
    with Timer(60):
        count = 0
        for length in range(3, 7):
            for orders in itertools.combinations_with_replacement(range(2, 21), length):
                sig = Signature(orders)
                if not maclachlan_check(sig)[0]:
                    continue
                c = homology_cover_construction(sig)
                assert c.quotient.invariant_factors == homology_group(sig).invariant_factors
                count += 1
        assert count > 0


def test_07_genus_collision_scan():
    with Timer(120):
        reports = genus_collision_scan(12, 10)
        pairs = {((r.type_a.k, r.type_a.n), (r.type_b.k, r.type_b.n)) for r in reports}
        assert len(reports) >= 1
        assert ((3, 3), (6, 2)) in pairs
        assert all(r.type_a.k != r.type_b.k and r.same_genus for r in reports)
        assert [r for r in reports if r.feasible_overall] == []


def test_08_diophantine_certificates():
    with Timer(10):
        report = diophantine_check(10 ** 4)
        assert report.ok
        for e in report.equations:
            assert e.solutions == ()
            assert e.certified and e.monotone_from <= e.crossover


def _check_snf(m):
    res = smith_normal_form(m)
    assert res.u @ m @ res.v == res.d
    assert abs(res.u.determinant()) == 1 and abs(res.v.determinant()) == 1
    assert res.d.is_diagonal()
    diag = res.diagonal
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)


def test_09_snf_property_suite():
    rng = random.Random(20240917)
    compared = 0
    with Timer(60):
        for _ in range(1000):
            r, c = rng.randint(1, 8), rng.randint(1, 8)
            rows = [[rng.randint(-50, 50) for _ in range(c)] for _ in range(r)]
            m = IntMatrix.from_rows(rows, c)
            _check_snf(m)
            expected = coset_enumeration(rows, c, limit=5000)
            g = quotient_structure(c, m)
            if g.free_rank == 0 and g.order <= 5000:
                assert expected == (g.order, g.exponent)
                compared += 1
            else:
                assert expected is None
    assert compared > 100


def test_10_catalog_and_bounds():
    with Timer(120):
        genus_two = enumerate_homology_signatures(2, 2)
        got = {e.signature.orders: e.group.invariant_factors for e in genus_two}
        assert got == {(2, 2, 3, 3): (6,), (2, 5, 10): (10,), (2, 6, 6): (2, 6)}
        assert set(brute_force_catalog(2, 2)) == set(got)
        report = check_bounds(enumerate_homology_signatures(2, 30))
        assert report.ok, report.violations
