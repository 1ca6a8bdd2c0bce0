"""Command-line surface: invariant tables, verifiers, and the poly kernel.

Three top-level commands:

* ``invariants`` prints the closed-form tables (dual surface, branch
  curve, developables, projected surfaces);
* ``verify`` runs the identity suites, symbolically or over a degree
  range, the local-model checks, and one-off plane-curve relation checks;
* ``poly`` exposes the exact kernel on explicit surfaces and points.

Output is aligned name/value columns by default or a stable JSON document
with ``--json`` (top-level keys: command, inputs, results, checks).
Integers beyond 2^53 - 1 are emitted as decimal strings; enumerative
counts are emitted as decimal strings uniformly so the schema does not
depend on their size.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
3 mathematical domain error (singular point, wrong homogeneity, ...).

``--modp P`` switches the kernel to the prime field GF(P).  Commands that
report values (everything under ``poly``) refuse modular mode, since
reported values are exact rational statements; the verify suites accept
it as a fast identity-check mode.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import invariants, localmodels, randomchecks
from .curvature import classify_surface_point, hessian_determinant, second_fundamental_form
from .flecnodal import flecnodal_covariants, flecnodal_member, max_contact_order
from .plucker import (
    PlaneCurveCharacters,
    complete_developable,
    dejonquieres_count,
    generator_identities_symbolic,
    rank_profile,
    verify_plucker_relations,
)
from .polarity import line_multiplicity, polar, polar_kic, tangent_cone, tangent_hyperplane
from .polyring import (
    INFINITY,
    QQ,
    DomainError,
    Mod,
    ParseError,
    Poly,
    PolyRing,
    PrimeField,
    ProjPoint,
)
from .reporting import Check, FAIL, PASS, WARN

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_JSON_INT_LIMIT = 2 ** 53 - 1


class UsageError(Exception):
    pass


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if value is INFINITY:
        return "infinity"
    if isinstance(value, int):
        return str(value) if abs(value) > _JSON_INT_LIMIT else value
    if isinstance(value, float):
        return "infinity" if value == INFINITY else value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else _jsonable(int(value))
    if isinstance(value, (Poly, Mod, ProjPoint)):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _count_str(value):
    """Enumerative counts go out as decimal strings, whatever their size."""
    if isinstance(value, Poly):
        return str(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)
    return str(value)


class CommandResult:
    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.results: dict = {}
        self.checks: list = []

    def add_checks(self, checks):
        self.checks.extend(checks)

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    def render(self, as_json: bool) -> str:
        if as_json:
            doc = {
                "command": self.command,
                "inputs": _jsonable(self.inputs),
                "results": _jsonable(self.results),
                "checks": [
                    {
                        "name": c.name,
                        "status": c.status,
                        "lhs": _jsonable(c.lhs),
                        "rhs": _jsonable(c.rhs),
                    }
                    for c in self.checks
                ],
            }
            return json.dumps(doc, indent=2)
        lines = []
        if self.results:
            width = max(len(str(k)) for k in self.results)
            for key, value in self.results.items():
                if isinstance(value, dict):
                    lines.append(f"{key}:")
                    sub = max((len(str(k)) for k in value), default=0)
                    for k2, v2 in value.items():
                        lines.append(f"  {str(k2).ljust(sub)}  {v2}")
                else:
                    lines.append(f"{str(key).ljust(width)}  {value}")
        for c in self.checks:
            mark = {PASS: "pass", FAIL: "FAIL", WARN: "warn"}[c.status]
            detail = ""
            if c.status == FAIL:
                detail = f"  [lhs={c.lhs} rhs={c.rhs}]"
            elif c.status == WARN and c.lhs is not None:
                detail = f"  ({c.lhs})"
            lines.append(f"{mark}  {c.name}{detail}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def _field_from_args(args):
    p = getattr(args, "modp", None)
    if p is None:
        return QQ
    return PrimeField(p)


def _load_surface(args, ring: PolyRing) -> Poly:
    if getattr(args, "expr", None):
        text = args.expr
    elif getattr(args, "surface", None):
        with open(args.surface, "r", encoding="utf-8") as handle:
            text = handle.read().strip()
    else:
        raise UsageError("one of --expr or --surface is required")
    return ring.parse(text)


def _parse_point(text: str, ring: PolyRing) -> ProjPoint:
    parts = [p.strip() for p in text.split(",")]
    coords = []
    for p in parts:
        if "/" in p:
            num, den = p.split("/", 1)
            coords.append(Fraction(int(num), int(den)))
        else:
            coords.append(Fraction(int(p)))
    if len(coords) != len(ring.variables):
        raise UsageError(
            f"expected {len(ring.variables)} coordinates, got {len(coords)}"
        )
    return ProjPoint(coords, ring.field)


def _parse_mults(text: str) -> dict:
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        s, _, count = piece.partition(":")
        out[int(s)] = int(count) if count else 1
    return out


def _parse_chars(text: str) -> dict:
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        key, _, value = piece.partition("=")
        if not value:
            raise UsageError(f"expected name=value, got {piece!r}")
        out[key.strip()] = int(value)
    return out


# ---------------------------------------------------------------------------
# invariants command
# ---------------------------------------------------------------------------


def _plane_chars_dict(chars: PlaneCurveCharacters) -> dict:
    out = {
        "degree": _count_str(chars.degree),
        "class": _count_str(chars.dual_degree),
        "nodes": _count_str(chars.nodes),
        "cusps": _count_str(chars.cusps),
        "bitangents": _count_str(chars.bitangents),
        "flexes": _count_str(chars.flexes),
    }
    if chars.genus is not None:
        out["genus"] = _count_str(chars.genus)
    return out


def _developable_dict(chars) -> dict:
    out = {
        "order": _count_str(chars.m),
        "class": _count_str(chars.n),
        "rank": _count_str(chars.r),
        "stationary_planes": _count_str(chars.alpha),
        "stationary_points": _count_str(chars.beta),
        "double_curve": _count_str(chars.x),
        "dual_double_curve": _count_str(chars.y),
        "apparent_nodes_dual": _count_str(chars.g),
        "apparent_nodes_edge": _count_str(chars.h),
    }
    if chars.genus is not None:
        out["genus"] = _count_str(chars.genus)
    return out


def cmd_invariants(args) -> CommandResult:
    sub = args.table
    if sub == "surface":
        result = CommandResult("invariants surface", {"degree": args.degree})
        table = invariants.dual_surface_table(args.degree)
        result.results = {
            "degree": _count_str(table.degree),
            "dual_degree": _count_str(table.dual_degree),
            "cone_degree": _count_str(table.cone_degree),
            "node_curve": _count_str(table.node_curve),
            "cusp_curve": _count_str(table.cusp_curve),
            "flex_edges": _count_str(table.flex_edges),
            "node_meets": _count_str(table.node_meets),
            "cusp_meets": _count_str(table.cusp_meets),
            "swallowtail": _count_str(table.swallowtails),
            "gamma": _count_str(table.gammas),
            "tritangent": _count_str(table.tritangents),
            "bitangent_edges": _count_str(table.bitangent_edges),
            "node_apparent": _count_str(table.node_apparent),
            "cusp_apparent": _count_str(table.cusp_apparent),
            "plain_meets": _count_str(table.plain_meets),
            "flecnodal_nodes": _count_str(table.flecnodal_nodes),
            "flecnodal_tangencies": _count_str(table.flecnodal_tangencies),
            "hessian_developable": _developable_dict(table.hessian),
            "node_couple": {
                "class": _count_str(table.node_couple.class_degree),
                "apparent_nodes": _count_str(table.node_couple.apparent_double_points),
                "cusps": _count_str(table.node_couple.cusps),
                "triple_points": _count_str(table.node_couple.triple_points),
                "rank": _count_str(table.node_couple.rank),
            },
        }
        result.add_checks(invariants.verify_dual_relations(args.degree))
        for message in table.warnings:
            result.add_checks([Check("table warning", message, None, WARN)])
        return result
    if sub == "branch":
        result = CommandResult("invariants branch", {"degree": args.degree})
        chars = invariants.branch_curve_characters(args.degree)
        result.results = _plane_chars_dict(chars)
        result.add_checks(verify_plucker_relations(chars))
        return result
    if sub == "developable":
        result = CommandResult("invariants developable", {"degree": args.degree})
        hess = invariants.hessian_developable_characters(args.degree)
        couple = invariants.nodecouple_characters(args.degree)
        result.results = {
            "hessian_developable": _developable_dict(hess),
            "node_couple": {
                "class": _count_str(couple.class_degree),
                "apparent_nodes": _count_str(couple.apparent_double_points),
                "cusps": _count_str(couple.cusps),
                "triple_points": _count_str(couple.triple_points),
                "rank": _count_str(couple.rank),
            },
        }
        return result
    if sub == "projected":
        inputs = {"n": args.n, "pi": args.pi, "pa": args.pa, "ksq": args.ksq}
        result = CommandResult("invariants projected", inputs)
        table = invariants.projected_surface_table(args.n, args.pi, args.pa, args.ksq)
        result.results = {
            "class": _count_str(table.class_degree),
            "double_curve": _count_str(table.double_curve),
            "double_genus": _count_str(table.double_genus),
            "neutral_genus": _count_str(table.neutral_genus),
            "triple_points": _count_str(table.triple_points),
            "pinch_points": _count_str(table.pinch_points),
            "chern_c2": _count_str(table.chern_c2),
            "branch_degree": _count_str(table.branch_degree),
            "branch_genus": _count_str(table.branch_genus),
            "nodes": _count_str(table.nodes),
            "cusps": _count_str(table.cusps),
            "bitangents": _count_str(table.bitangents),
            "flexes": _count_str(table.flexes),
        }
        result.add_checks(table.checks)
        return result
    raise UsageError(f"unknown invariants table {sub!r}")


# ---------------------------------------------------------------------------
# verify command
# ---------------------------------------------------------------------------


def _models_checks() -> list:
    checks = []
    disc = localmodels.tacnode_discriminant()
    reference = localmodels.reference_discriminant()
    status = PASS if disc == reference else FAIL
    checks.append(Check("tacnode discriminant matches the reference form", str(disc), str(reference), status))
    for model in (localmodels.SWALLOWTAIL, localmodels.GAMMA, localmodels.TRIPLE_T):
        for name, ok in localmodels.stratum_check(model):
            checks.append(Check(name, None, None, PASS if ok else FAIL))
    sw = localmodels.stratum_model(localmodels.SWALLOWTAIL)
    contact = localmodels.contact_order(
        sw.ordinary.parametrization, sw.cuspidal.ideal, sw.ordinary.covering_degree
    )
    checks.append(
        Check(
            "swallowtail double curves meet with multiplicity 2",
            contact,
            2,
            PASS if contact == 2 else FAIL,
        )
    )
    return checks


def cmd_verify(args) -> CommandResult:
    sub = args.suite
    if sub == "models":
        result = CommandResult("verify models", {})
        result.add_checks(_models_checks())
        return result
    if sub == "plucker":
        chars_map = _parse_chars(args.chars)
        wanted = ("degree", "class", "nodes", "cusps", "bitangents", "flexes")
        missing = [k for k in wanted if k not in chars_map]
        if missing:
            raise UsageError(f"--chars must set {', '.join(wanted)} (missing {missing})")
        chars = PlaneCurveCharacters(
            degree=chars_map["degree"],
            dual_degree=chars_map["class"],
            nodes=chars_map["nodes"],
            cusps=chars_map["cusps"],
            bitangents=chars_map["bitangents"],
            flexes=chars_map["flexes"],
        )
        result = CommandResult("verify plucker", chars_map)
        result.add_checks(verify_plucker_relations(chars))
        return result
    if sub == "all":
        inputs = {"seed": args.seed, "trials": args.trials}
        if args.degree_range:
            inputs["degree_range"] = args.degree_range
        else:
            inputs["mode"] = "symbolic"
        if args.modp:
            inputs["modp"] = args.modp
        result = CommandResult("verify all", inputs)
        result.add_checks(_models_checks())
        result.add_checks(generator_identities_symbolic())
        if args.degree_range:
            lo, hi = args.degree_range
            for n in range(lo, hi + 1):
                for check in invariants.verify_dual_relations(n):
                    result.add_checks(
                        [Check(f"{check.name} [n={n}]", check.lhs, check.rhs, check.status)]
                    )
        else:
            sym = invariants.symbolic_degree()
            result.add_checks(invariants.verify_dual_relations(sym))
        result.add_checks(invariants.verify_projection_pipelines())
        field = _field_from_args(args)
        result.add_checks(randomchecks.property_suite(field, args.seed, args.trials))
        return result
    raise UsageError(f"unknown verify suite {sub!r}")


# ---------------------------------------------------------------------------
# poly command
# ---------------------------------------------------------------------------


def _contact_str(value):
    return "infinity" if value == INFINITY else str(value)


def cmd_poly(args) -> CommandResult:
    if getattr(args, "modp", None) is not None:
        raise UsageError(
            "poly subcommands report exact values and refuse modular mode"
        )
    ring = PolyRing()
    sub = args.operation
    inputs = {
        k: v
        for k, v in vars(args).items()
        if k in ("operation", "expr", "surface", "point", "dir", "order", "m",
                 "genus", "mult", "dim", "k", "chars")
        and v is not None
    }
    result = CommandResult(f"poly {sub}", inputs)

    if sub == "dejonquieres":
        if args.m is None or args.genus is None or not args.mult:
            raise UsageError("dejonquieres needs --m, --genus, and --mult")
        count = dejonquieres_count(args.m, args.genus, _parse_mults(args.mult))
        result.results = {"count": _count_str(count)}
        return result
    if sub == "rank-profile":
        if args.m is None or args.genus is None or args.k is None:
            raise UsageError("rank-profile needs --m, --genus, and --k")
        dim = args.dim or 3
        ks = [int(x) for x in args.k.split(",")]
        profile = rank_profile(dim, args.m, args.genus, ks)
        dual = profile.dual()
        result.results = {
            "ranks": [_count_str(r) for r in profile.ranks],
            "dual_ranks": [_count_str(r) for r in dual.ranks],
            "hyperosculation": [_count_str(x) for x in profile.k],
        }
        return result
    if sub == "developable":
        if not args.chars:
            raise UsageError("developable needs --chars name=value,...")
        chars, checks = complete_developable(**_parse_chars(args.chars))
        result.results = _developable_dict(chars)
        result.add_checks(checks)
        return result

    F = _load_surface(args, ring)
    if sub == "hessian":
        result.results = {"hessian": str(hessian_determinant(F))}
        return result
    if sub == "covariants":
        pair = flecnodal_covariants(F)
        result.results = {
            "theta": str(pair.theta),
            "phi": str(pair.phi),
            "combination": str(pair.combination),
            "degrees": {k: v for k, v in pair.degrees.items()},
        }
        return result

    if not args.point:
        raise UsageError(f"poly {sub} needs --point")
    point = _parse_point(args.point, ring)
    if sub == "polar":
        order = args.order if args.order is not None else 1
        result.results = {"polar": str(polar(F, point, order))}
        return result
    if sub == "polar-kic":
        order = args.order if args.order is not None else 1
        result.results = {"polar_kic": str(polar_kic(F, point, order))}
        return result
    if sub == "tangent-plane":
        result.results = {"tangent_plane": str(tangent_hyperplane(F, point))}
        return result
    if sub == "tangent-cone":
        report = tangent_cone(F, point)
        result.results = {
            "multiplicity": report.multiplicity,
            "cone": str(report.cone),
            "chart_variables": list(report.chart.variables),
            "chart_matrix": [[str(x) for x in row] for row in report.matrix],
        }
        return result
    if sub == "second-form":
        form = second_fundamental_form(F, point)
        result.results = {
            "matrix": [[str(x) for x in row] for row in form.matrix],
            "rank": form.rank,
        }
        return result
    if sub == "classify":
        cls = classify_surface_point(F, point)
        result.results = {
            "kind": cls.kind.value,
            "discriminant": str(cls.asymptotic.discriminant),
            "asymptotic_directions": [str(p) for p in cls.asymptotic.directions],
            "contacts": [_contact_str(c) for c in cls.asymptotic.contacts],
            "all_tangent_directions": cls.asymptotic.all_tangent_directions,
        }
        return result
    if sub == "contact":
        report = max_contact_order(F, point)
        result.results = {
            "order": report.order.value,
            "line_direction": None
            if report.line_direction is None
            else str(report.line_direction),
        }
        return result
    if sub == "flecnodal":
        result.results = {"flecnodal": flecnodal_member(F, point)}
        return result
    if sub == "line-mult":
        if not args.dir:
            raise UsageError("line-mult needs --dir")
        direction = _parse_point(args.dir, ring)
        report = line_multiplicity(F, point, direction)
        result.results = {
            "multiplicity": _contact_str(report.multiplicity),
            "polar_memberships": list(report.polar_memberships),
            "restriction": str(report.restriction),
        }
        return result
    raise UsageError(f"unknown poly operation {sub!r}")


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _degree_range(text: str):
    lo, _, hi = text.partition("..")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected A..B") from exc
    if lo_i < 3 or hi_i < lo_i:
        raise argparse.ArgumentTypeError("range must satisfy 3 <= A <= B")
    return (lo_i, hi_i)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarcalc",
        description="Exact enumerative invariants and polar calculus in P^3.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit a JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", parents=[shared], help="closed-form invariant tables")
    inv.add_argument("table", choices=("surface", "branch", "developable", "projected"))
    inv.add_argument("--degree", type=int, help="surface degree (>= 3 for surface tables)")
    inv.add_argument("--n", type=int, help="section degree C^2")
    inv.add_argument("--pi", type=int, help="section genus")
    inv.add_argument("--pa", type=int, help="arithmetic genus of the normalization")
    inv.add_argument("--ksq", type=int, help="canonical self-intersection K^2")

    ver = sub.add_parser("verify", parents=[shared], help="identity suites")
    ver.add_argument("suite", choices=("all", "models", "plucker"))
    ver.add_argument("--symbolic", action="store_true", help="polynomial-identity mode (default)")
    ver.add_argument("--degree-range", type=_degree_range, help="integer sweep A..B")
    ver.add_argument("--chars", help="degree=..,class=..,nodes=..,cusps=..,bitangents=..,flexes=..")
    ver.add_argument("--seed", type=int, default=20240913, help="seed for the property batches")
    ver.add_argument("--trials", type=int, default=25, help="trials per property batch")
    ver.add_argument("--modp", type=int, help="run property batches over GF(p)")

    pol = sub.add_parser("poly", parents=[shared], help="exact kernel on explicit data")
    pol.add_argument(
        "operation",
        choices=(
            "polar", "polar-kic", "tangent-plane", "line-mult", "tangent-cone",
            "hessian", "second-form", "classify", "covariants", "contact",
            "flecnodal", "dejonquieres", "rank-profile", "developable",
        ),
    )
    pol.add_argument("--expr", help="surface equation in the expression grammar")
    pol.add_argument("--surface", help="file holding one expression")
    pol.add_argument("--point", help="projective point a,b,c,d (rationals allowed)")
    pol.add_argument("--dir", help="second projective point for line contact")
    pol.add_argument("--order", type=int, help="polar order k")
    pol.add_argument("--m", type=int, help="series degree / curve degree")
    pol.add_argument("--genus", type=int, help="curve genus")
    pol.add_argument("--mult", help="multiplicity pattern s:m_s,...")
    pol.add_argument("--dim", type=int, help="ambient dimension for rank profiles")
    pol.add_argument("--k", help="hyperosculation totals k_1,...,k_N")
    pol.add_argument("--chars", help="known developable characters name=value,...")
    pol.add_argument("--modp", type=int, help="(refused: poly reports exact values)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "invariants":
            if args.table in ("surface", "branch", "developable"):
                if args.degree is None:
                    raise UsageError(f"invariants {args.table} needs --degree")
                minimum = 2 if args.table == "branch" else 3
                if args.degree < minimum:
                    raise UsageError(f"--degree must be at least {minimum}")
            if args.table == "projected" and None in (args.n, args.pi, args.pa, args.ksq):
                raise UsageError("invariants projected needs --n --pi --pa --ksq")
            result = cmd_invariants(args)
        elif args.command == "verify":
            if args.suite == "plucker" and not args.chars:
                raise UsageError("verify plucker needs --chars")
            if args.suite == "all" and args.symbolic and args.degree_range:
                raise UsageError("--symbolic and --degree-range are exclusive")
            result = cmd_verify(args)
        elif args.command == "poly":
            result = cmd_poly(args)
        else:  # pragma: no cover
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(result.render(args.json))
    return EXIT_CHECK_FAILED if result.failed else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
