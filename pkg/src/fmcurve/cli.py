"""Command line: ``fmcurve <subcommand> [flags]``.

Exit codes: 0 all checks pass (flagged discrepancies allowed), 1 some check
failed, 2 bad usage, 3 malformed --mu JSON, 4 --mu outside the parameter domain.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from datetime import datetime, timezone

from fmcurve import checks, moduli
from fmcurve.checks import Context, Report
from fmcurve.omega import FIXTURE, ModuliPoint, OmegaError, random_point

EXIT_FAIL, EXIT_USAGE, EXIT_JSON, EXIT_OMEGA = 1, 2, 3, 4
SUITES = ("verify-lemma", "verify-smooth", "verify-aut", "verify-relations", "genus-report", "verify-fm", "verify-all")


class MuJsonError(Exception):
    pass


def parse_mu(text: str) -> ModuliPoint:
    """'mu0', 'random', 'random:SEED' or a JSON list of four field elements."""
    if text == "mu0":
        return moduli.mu0()
    if text == "random" or text.startswith("random:"):
        seed = text.partition(":")[2] or "0"
        try:
            return random_point(random.Random(int(seed)))
        except ValueError as exc:
            raise MuJsonError(f"bad seed {seed!r}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MuJsonError(f"--mu is not valid JSON: {exc}") from exc
    try:
        return ModuliPoint.from_json(data)
    except OmegaError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MuJsonError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--precision", type=int, default=64, help="bits for complex approximations")

    p = argparse.ArgumentParser(prog="fmcurve", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-lemma", parents=[common], help="lambda-invariant subgroups of the deck group")
    s = sub.add_parser("verify-smooth", parents=[common], help="smoothness certificate")
    s.add_argument("--mu", default="mu0")
    s = sub.add_parser("verify-aut", parents=[common], help="lifts of the order-7 and order-2 symmetries")
    s.add_argument("--mu0", action="store_true", help="accepted for symmetry; the lifts live at mu0")
    s = sub.add_parser("verify-relations", parents=[common], help="relations of the genus-7 quotient")
    s.add_argument("--mu", default=None)
    s = sub.add_parser("emit-model", parents=[common], help="derived model of a genus-7 quotient")
    s.add_argument("--mu", default="mu0")
    s.add_argument("--quotient", choices=("K", "Kstar"), default="K")
    s = sub.add_parser("j-report", parents=[common], help="j-invariants of the seven elliptic factors")
    s.add_argument("--mu", default="mu0")
    sub.add_parser("genus-report", parents=[common], help="genus and cone data of the quotient chain")
    s = sub.add_parser("equiv", parents=[common], help="are two parameters in one orbit of the moduli action")
    s.add_argument("--mu", required=True)
    s.add_argument("--mu-prime", required=True)
    sub.add_parser("verify-fm", parents=[common], help="every check at the special point mu0")
    sub.add_parser("verify-all", parents=[common], help="every registered check")
    return p


def render_reports(reports: list[Report], fmt: str, command: str) -> str:
    flags = [r for r in reports if r.status == checks.FLAG]
    if fmt == "json":
        return json.dumps({
            "command": command,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "summary": {s: sum(1 for r in reports if r.status == s) for s in (checks.PASS, checks.FAIL, checks.FLAG)},
            "reports": [r.to_json() for r in reports],
        }, indent=2, sort_keys=False)
    width = max(len(r.name) for r in reports)
    lines = [f"{r.status.upper():<20} {r.name:<{width}}  {r.anchor}" for r in reports]
    if flags:
        lines.append("")
        lines.append(f"{len(flags)} published statement(s) flagged as discrepancies: "
                     + ", ".join(r.name for r in flags))
    failed = [r for r in reports if r.status == checks.FAIL]
    for r in failed:
        lines.append(f"FAILED {r.name}: {json.dumps(r.details)}")
    return "\n".join(lines)


def _run(args) -> int:
    ctx = Context(precision=args.precision)
    cmd = args.command

    if cmd in SUITES:
        if getattr(args, "mu", None):
            ctx.mu = parse_mu(args.mu)
        elif cmd == "verify-relations":
            ctx.mu = FIXTURE
        reports = checks.run_suite(cmd, ctx)
        if cmd == "genus-report" and args.format == "text":
            table = ["subgroup      order  genus  cones"]
            table += [f"{r['subgroup']:<13} {r['order']:>5}  {r['genus']:>5}  {r['cone_orders']}"
                      for r in checks.genus_table()]
            print("\n".join(table) + "\n")
        print(render_reports(reports, args.format, cmd))
        return checks.exit_status(reports)

    if cmd == "emit-model":
        mu = parse_mu(args.mu)
        data = checks.emit_model(mu, args.quotient)
        reports = []
        if args.quotient == "Kstar":
            reports = [r for r in checks.run_suite("emit-model", Context(mu, args.precision)) if r.name == "kstar-display"]
        if args.format == "json":
            data["reports"] = [r.to_json() for r in reports]
            print(json.dumps(data, indent=2))
        else:
            print("\n".join(data["fiber_product"]["equations"]))
            print(f"{len(data['invariant_monomials'])} invariant monomials, "
                  f"{len(data['binomial_relations'])} binomial relations")
            for r in reports:
                print(f"{r.status.upper()}: {r.name} ({r.anchor})")
        return checks.exit_status(reports)

    if cmd == "j-report":
        mu = parse_mu(args.mu)
        data = checks.j_report(mu, args.precision)
        if args.format == "json":
            print(json.dumps(data, indent=2))
        else:
            for label, v in data.items():
                print(f"{label}  line {v['line']}  j = {v['approx']}")
            print(f"{len({tuple(v['j']) for v in data.values()})} distinct value(s)")
        return 0

    if cmd == "equiv":
        mu, other = parse_mu(args.mu), parse_mu(args.mu_prime)
        eq = moduli.equivalent(mu, other)
        if args.format == "json":
            print(json.dumps({"equivalent": eq is not None, "word": eq.word if eq else None,
                              "perm": list(eq.perm) if eq else None}))
        else:
            print("inequivalent" if eq is None else (eq.word or "(identity)"))
        return 0

    raise AssertionError(f"unhandled command {cmd}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.precision < 16:
        print("fmcurve: --precision must be at least 16", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args)
    except MuJsonError as exc:
        print(f"fmcurve: malformed --mu: {exc}", file=sys.stderr)
        return EXIT_JSON
    except OmegaError as exc:
        print(f"fmcurve: parameter outside the domain: {exc}", file=sys.stderr)
        return EXIT_OMEGA


if __name__ == "__main__":
    sys.exit(main())
