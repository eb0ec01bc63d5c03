"""Command-line front end.

Exit codes: 0 on success, 1 when a check fails (Maclachlan's condition,
a fixture mismatch, a feasible coexistence, ...), 2 on usage errors.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from importlib import resources
from typing import Optional, Sequence

from . import catalog, fermat, orbifold, uniqueness
from .orbifold import MaclachlanError, NonHyperbolicError, Signature, SignatureError


def load_schema(command: str) -> dict:
    """JSON schema for the ``--format json`` output of a subcommand."""
    path = resources.files(__package__).joinpath("schemas", f"{command}.json")
    return json.loads(path.read_text())


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _add_format(p, choices=("text", "json")):
    p.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="riemann-homology",
                     description="Homology groups of Riemann surfaces.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    for name, help_ in [
        ("check-signature", "Maclachlan test, homology group and cover genus"),
        ("homology-group", "invariant factors of the abelianization"),
        ("genus", "genus of the homology cover"),
        ("orbifold", "cone data of the orbifold on the homology cover"),
        ("cover", "H_A / K_A construction inside Z_mu^n"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("orders", nargs="+", type=int, metavar="k")
        _add_format(p)

    p = sub.add_parser("fermat", help="generalized Fermat type data")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit-curve", action="store_true")
    p.add_argument("--lambdas", nargs="*", default=[],
                   help="branch values: integers, fractions p/q, or symbol names")
    _add_format(p)

    p = sub.add_parser("uniqueness", help="same-genus Fermat type collision scan")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("diophantine", help="certify the exponential equations have no solutions")
    p.add_argument("--p-max", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("enumerate", help="catalog of homology signatures")
    p.add_argument("--genus-min", type=int, required=True)
    p.add_argument("--genus-max", type=int, required=True)
    _add_format(p, ("text", "json", "csv"))

    p = sub.add_parser("fixtures", help="verify the worked examples")
    _add_format(p)
    return parser


def _signature(args, err) -> Signature:
    try:
        sig = Signature(args.orders)
    except SignatureError as exc:
        raise UsageError(str(exc))
    if list(sig.orders) != list(args.orders):
        print(f"note: reordered signature to {sig}", file=err)
    return sig


def _cmd_check_signature(args, out, err):
    sig = _signature(args, err)
    v = orbifold.is_homology_signature(sig)
    if args.format == "json":
        out.write(json.dumps(v.to_dict()) + "\n")
    elif not v.maclachlan_ok:
        out.write(f"Maclachlan fails at j={v.failing_index} (order {v.failing_order})\n")
    else:
        out.write(f"homology signature; group {v.group}; genus {v.cover_genus}\n")
    return 0 if v.is_homology else 1


def _cmd_homology_group(args, out, err):
    sig = _signature(args, err)
    v = orbifold.is_homology_signature(sig)
    if args.format == "json":
        out.write(json.dumps({
            "signature": list(sig.orders),
            "invariant_factors": list(v.group.invariant_factors),
            "order": v.group_order,
            "genus": v.cover_genus,
        }) + "\n")
    else:
        factors = list(v.group.invariant_factors)
        genus = v.cover_genus if v.maclachlan_ok else "undefined (Maclachlan fails)"
        out.write(f"group {v.group}; invariant factors {factors}; "
                  f"order {v.group_order}; genus {genus}\n")
    return 0 if v.maclachlan_ok else 1


def _cmd_genus(args, out, err):
    sig = _signature(args, err)
    g = orbifold.homology_genus(sig)
    out.write(json.dumps({"signature": list(sig.orders), "genus": g}) + "\n"
              if args.format == "json" else f"{g}\n")
    return 0


def _cmd_orbifold(args, out, err):
    sig = _signature(args, err)
    s = fermat.orbifold_structure(sig)
    if args.format == "json":
        out.write(json.dumps({"signature": list(sig.orders), **s.to_dict()}) + "\n")
    else:
        out.write(f"{s}\n")
    return 0


def _cmd_cover(args, out, err):
    sig = _signature(args, err)
    c = fermat.homology_cover_construction(sig)
    if args.format == "json":
        out.write(json.dumps(c.to_dict()) + "\n")
    else:
        gens = ", ".join(str(list(v.coords)) for v in c.k_a_generators)
        out.write(f"mu {c.mu}; H_A = Z_{c.mu}^{c.rank}; K_A generated by {gens}\n"
                  f"H_A/K_A = {c.quotient} (order {c.quotient.order})\n")
    return 0


def _cmd_fermat(args, out, err):
    try:
        t = fermat.FermatType(args.k, args.n)
        model = fermat.curve_model(t, args.lambdas) if args.emit_curve else None
    except ValueError as exc:
        raise UsageError(str(exc))
    g = fermat.fermat_genus(t)
    gens = [list(v.coords) for v in fermat.generators(t)]
    if args.format == "json":
        doc = {"k": t.k, "n": t.n, "genus": g, "group_order": t.group_order,
               "generators": gens}
        if model is not None:
            doc["curve"] = model.to_dict()
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"type {t}; group Z_{t.k}^{t.n} (order {t.group_order}); genus {g}\n")
        for j, v in enumerate(gens, 1):
            out.write(f"a_{j} = {v}\n")
        if model is not None:
            out.write(model.to_text() + "\n")
            out.write(f"branch values: {', '.join(model.branch_values)}\n")
            out.write(f"projection: {model.projection}\n")
    return 0


def _cmd_uniqueness(args, out, err):
    try:
        reports = uniqueness.genus_collision_scan(args.k_max, args.n_max, strict=False)
    except ValueError as exc:
        raise UsageError(str(exc))
    feasible = [r for r in reports if r.feasible_overall]
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in reports]) + "\n")
    else:
        for r in reports:
            status = "FEASIBLE" if r.feasible_overall else "infeasible"
            out.write(f"genus {r.genus_a}: {r.type_a} vs {r.type_b}: {status}\n")
            for v in r.case_verdicts:
                out.write(f"  case {v.label} [{v.roles}]: "
                          f"{'feasible' if v.feasible else 'infeasible'} ({v.reason})\n")
        out.write(f"{len(reports)} same-genus pairs, {len(feasible)} feasible\n")
    return 1 if feasible else 0


def _cmd_diophantine(args, out, err):
    try:
        report = uniqueness.diophantine_check(args.p_max)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        out.write(json.dumps(report.to_dict()) + "\n")
    else:
        for e in report.equations:
            out.write(f"{e.name}: "
                      f"{len(e.solutions)} solutions in [2, {e.p_max}]; "
                      f"left side larger from p={e.crossover}; "
                      f"ratio increasing from p={e.monotone_from}\n")
    return 0 if report.ok else 1


def _cmd_enumerate(args, out, err):
    try:
        entries = catalog.enumerate_homology_signatures(args.genus_min, args.genus_max)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        out.write(catalog.to_json(entries) + "\n")
    elif args.format == "csv":
        out.write(catalog.to_csv(entries))
    else:
        for e in entries:
            out.write(f"genus {e.genus}: {e.signature} -> {e.group} (order {e.order})"
                      f"{' [Fermat]' if e.is_fermat else ''}; {e.orbifold}\n")
    bounds = catalog.check_bounds(entries)
    for v in bounds.violations:
        print(f"bound violated: {v.signature} {v.bound}: {v.order} > {v.limit}", file=err)
    return 0 if bounds.ok else 1


def _cmd_fixtures(args, out, err):
    results = [catalog.verify_fixture(f) for f in catalog.paper_fixtures()]
    if args.format == "json":
        out.write(json.dumps([{"name": r.name, "ok": r.ok, "message": r.message}
                              for r in results]) + "\n")
    else:
        for r in results:
            out.write(f"{'ok  ' if r.ok else 'FAIL'} {r.name}: {r.message}\n")
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {
    "check-signature": _cmd_check_signature,
    "homology-group": _cmd_homology_group,
    "genus": _cmd_genus,
    "orbifold": _cmd_orbifold,
    "cover": _cmd_cover,
    "fermat": _cmd_fermat,
    "uniqueness": _cmd_uniqueness,
    "diophantine": _cmd_diophantine,
    "enumerate": _cmd_enumerate,
    "fixtures": _cmd_fixtures,
}


def dispatch(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    buf = io.StringIO()
    try:
        args = build_parser().parse_args(argv)
        code = COMMANDS[args.command](args, buf, stderr)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return exc.code or 0
    except (MaclachlanError, NonHyperbolicError) as exc:
        stdout.write(buf.getvalue())
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write(buf.getvalue())
    return code


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
