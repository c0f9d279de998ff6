"""Command-line interface: ``kuores <subcommand> [options]``.

Exit status is 0 on success, 1 when a requested certificate could not be
produced (or a campaign found a failure), 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .campaign import THEOREMS, theorem_campaign
from .errors import KuoresError, ParseError
from .expr_parse import parse_poly, tokenize
from .factor_ff import PrimePowerStructure, factor_any, is_irreducible, prime_power_structure
from .galois_harness import frobenius_orbits, splitting_field, transitivity_check
from .newton_polygon import (
    IrreducibilityVerdict,
    Verdict,
    dumas_irreducible,
    newton_polygon,
    prime_power_over_series,
    weighted_initial_part,
)
from .numeric import QQ, PrimeField
from .polynomial import Poly, gcd_monic
from .resultant import kuo_resultant, resultant

EXAMPLE_F = "Y^2 - X^3"
EXAMPLE_1_G = "(Y^2 - X^3)^2 - X^7"
EXAMPLE_2_G = "(Y^2-X^3)^2 - X^5*Y"

JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "field", "inputs", "result", "verdict", "prime_power", "report"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "field": {"type": "string"},
        "inputs": {"type": "object"},
        "result": {"type": "object"},
        "verdict": {"enum": ["irreducible", "reducible", "inconclusive", None]},
        "prime_power": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["base", "exponent"],
                    "additionalProperties": False,
                    "properties": {
                        "base": {"type": "string"},
                        "exponent": {"type": "integer", "minimum": 1},
                    },
                },
            ]
        },
        "report": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["theorem", "field", "trials", "seed", "passed", "failed",
                                 "counterexample", "wall_time"],
                    "additionalProperties": False,
                    "properties": {
                        "theorem": {"enum": list(THEOREMS)},
                        "field": {"type": "string"},
                        "trials": {"type": "integer", "minimum": 1},
                        "seed": {"type": "integer", "minimum": 0},
                        "passed": {"type": "integer", "minimum": 0},
                        "failed": {"type": "integer", "minimum": 0},
                        "counterexample": {"type": ["object", "null"]},
                        "wall_time": {"type": ["number", "null"]},
                    },
                },
            ]
        },
    },
}


class UsageError(Exception):
    pass


class FieldSpec:
    """Parsed ``--field`` value: ``q``, ``fp:<p>`` or ``qx``."""

    def __init__(self, text: str):
        self.text = text
        if text == "q" or text == "qx":
            self.kind, self.domain = text, QQ
        elif text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise UsageError(f"bad prime in field spec {text!r}") from None
            try:
                self.domain = PrimeField(p)
            except KuoresError as exc:
                raise UsageError(str(exc)) from None
            self.kind = "fp"
        else:
            raise UsageError(f"unknown field {text!r}; use q, fp:<prime> or qx")

    def __str__(self):
        return self.text


def _variables_in(text: str) -> list[str]:
    try:
        return [t.text for t in tokenize(text) if t.kind == "var"]
    except ParseError:
        return []


def _parse_univariate(text: str, field: FieldSpec, default: str = "X") -> Poly:
    seen = _variables_in(text)
    var = next((v for v in ("X", "Y", "T", "Z") if v in seen), default)
    return parse_poly(text, (var,), field.domain)


def _parse_in_y(text: str, field: FieldSpec) -> Poly:
    if field.kind == "qx":
        return parse_poly(text, ("Y", "X"), QQ)
    return parse_poly(text, ("Y",), field.domain)


def _parse_bivariate(text: str, field: FieldSpec) -> Poly:
    seen = _variables_in(text)
    outer = "Y" if "Y" in seen and "T" not in seen else "T"
    return parse_poly(text, (outer, "X"), field.domain)


def _pp_json(pp) -> Optional[dict]:
    if isinstance(pp, PrimePowerStructure):
        return {"base": str(pp.base), "exponent": pp.exponent}
    return None


def _doc(command, field, inputs, result, verdict=None, prime_power=None, report=None) -> dict:
    return {
        "command": command,
        "field": str(field) if field is not None else None,
        "inputs": inputs,
        "result": result,
        "verdict": verdict.value if isinstance(verdict, Verdict) else verdict,
        "prime_power": prime_power,
        "report": report,
    }


def _rational_prime_power(h: Poly) -> Optional[PrimePowerStructure]:
    # over Q only a power of a linear polynomial can be certified here
    s = h.exquo(gcd_monic(h, h.derivative()))
    n = h.degree
    if s.degree == 1 and s ** n == h:
        return PrimePowerStructure(s, n)
    return None


def _kuo_analysis(g: Poly, f: Poly, field: FieldSpec, seed: int):
    """(h, prime-power structure or None, verdict about g, reason)."""
    h = kuo_resultant(g, f).h
    if field.kind == "fp":
        pp = prime_power_structure(h, seed)
        verdict = Verdict.IRREDUCIBLE if is_irreducible(g) else Verdict.REDUCIBLE
        reason = "decided by the Rabin irreducibility test over the prime field"
        return h, pp, verdict, reason
    if field.kind == "qx":
        pp = prime_power_over_series(h)
        if not isinstance(pp, PrimePowerStructure):
            return h, None, Verdict.INCONCLUSIVE, pp.reason
    else:
        pp = _rational_prime_power(h)
    if g.degree == 1:
        return h, pp, Verdict.IRREDUCIBLE, "g is linear"
    if pp is not None and pp.exponent == 1 and pp.base.degree == h.degree:
        return h, pp, Verdict.IRREDUCIBLE, "h is irreducible, so g cannot factor"
    return h, pp, Verdict.INCONCLUSIVE, "h is not certified irreducible; no conclusion about g"


def cmd_kuo(args) -> tuple[dict, int, list[str]]:
    field = FieldSpec(args.field)
    g, f = _parse_in_y(args.g, field), _parse_in_y(args.f, field)
    h, pp, verdict, reason = _kuo_analysis(g, f, field, args.seed)
    lines = [f"h = {h}"]
    if pp is not None:
        lines.append(f"prime power: base {pp.base}, exponent {pp.exponent}")
    else:
        lines.append("prime power: not certified")
    lines.append(f"g: {verdict.value} ({reason})")
    doc = _doc("kuo", field, {"g": str(g), "f": str(f)},
               {"h": str(h), "degree": h.degree, "reason": reason}, verdict, _pp_json(pp))
    return doc, 0, lines


def cmd_resultant(args):
    field = FieldSpec(args.field)
    a, b = _parse_in_y(args.a, field), _parse_in_y(args.b, field)
    r = resultant(a, b, "Y", check=True)
    doc = _doc("resultant", field, {"a": str(a), "b": str(b)}, {"resultant": str(r)})
    return doc, 0, [f"Res_Y = {r}"]


def _require_fp(field: FieldSpec, command: str):
    if field.kind != "fp":
        raise UsageError(f"{command} needs --field fp:<prime>")


def cmd_factor(args):
    field = FieldSpec(args.field)
    _require_fp(field, "factor")
    a = _parse_univariate(args.poly, field)
    if a.degree < 1:
        raise UsageError("cannot factor a constant")
    fz = factor_any(a, args.seed)
    irreducible = len(fz.factors) == 1 and fz.factors[0][1] == 1
    pp = PrimePowerStructure(*fz.factors[0]) if len(fz.factors) == 1 else None
    result = {
        "unit": str(fz.unit),
        "factors": [{"factor": str(b), "multiplicity": e} for b, e in fz.factors],
        "factorization": str(fz),
    }
    verdict = Verdict.IRREDUCIBLE if irreducible else Verdict.REDUCIBLE
    doc = _doc("factor", field, {"poly": str(a)}, result, verdict, _pp_json(pp))
    return doc, 0, [str(fz)]


def cmd_irred(args):
    field = FieldSpec(args.field)
    if args.poly is None and (args.g is None or args.f is None):
        raise UsageError("irred needs --poly, or both --g and --f")
    if args.poly is None:
        g, f = _parse_in_y(args.g, field), _parse_in_y(args.f, field)
        h, pp, verdict, reason = _kuo_analysis(g, f, field, args.seed)
        inputs = {"g": str(g), "f": str(f)}
        result = {"h": str(h), "reason": reason}
        lines = [f"h = {h}", f"g: {verdict.value} ({reason})"]
    elif field.kind == "fp":
        a = _parse_univariate(args.poly, field)
        if a.degree < 1:
            raise UsageError("constant polynomial")
        ok = is_irreducible(a.monic())
        verdict = Verdict.IRREDUCIBLE if ok else Verdict.REDUCIBLE
        pp = None
        inputs, result = {"poly": str(a)}, {"reason": "Rabin irreducibility test"}
        lines = [f"{a}: {verdict.value}"]
    elif field.kind == "qx":
        a = _parse_bivariate(args.poly, field)
        v: IrreducibilityVerdict = dumas_irreducible(a)
        verdict, pp = v.verdict, None
        inputs, result = {"poly": str(a)}, {"reason": v.reason}
        lines = [f"{a}: {verdict.value} ({v.reason})"]
    else:
        a = _parse_univariate(args.poly, field)
        verdict = Verdict.IRREDUCIBLE if a.degree == 1 else Verdict.INCONCLUSIVE
        pp = None
        inputs, result = {"poly": str(a)}, {"reason": "only linear polynomials are certified over Q"}
        lines = [f"{a}: {verdict.value}"]
    doc = _doc("irred", field, inputs, result, verdict, _pp_json(pp))
    return doc, 0 if verdict is Verdict.IRREDUCIBLE else 1, lines


def _require_series(field: FieldSpec, command: str):
    if field.kind == "q":
        raise UsageError(f"{command} needs --field qx or fp:<prime>")


def cmd_newton(args):
    field = FieldSpec(args.field)
    _require_series(field, "newton")
    h = _parse_bivariate(args.poly, field)
    poly = newton_polygon(h)
    result = {
        "points": [list(p) for p in poly.points],
        "vertices": [list(v) for v in poly.vertices],
        "edges": [[list(a), list(b)] for a, b in poly.edges],
    }
    lines = [f"support: {list(poly.points)}", f"vertices: {list(poly.vertices)}"]
    verdict = None
    if h.is_monic() and h.degree >= 1:
        v = dumas_irreducible(h)
        verdict = v.verdict
        result["reason"] = v.reason
        lines.append(f"Dumas: {v.verdict.value} ({v.reason})")
    return _doc("newton", field, {"poly": str(h)}, result, verdict), 0, lines


def cmd_initial_part(args):
    field = FieldSpec(args.field)
    _require_series(field, "initial-part")
    try:
        a, b = (int(x) for x in args.weights.split(","))
    except ValueError:
        raise UsageError("--weights expects two integers a,b") from None
    if a < 1 or b < 1:
        raise UsageError("weights must be positive")
    h = _parse_bivariate(args.poly, field)
    init = weighted_initial_part(h, a, b)
    doc = _doc("initial-part", field, {"poly": str(h), "weights": [a, b]},
               {"initial_part": str(init)})
    return doc, 0, [str(init)]


def cmd_galois(args):
    field = FieldSpec(args.field)
    _require_fp(field, "galois")
    f = _parse_univariate(args.poly, field)
    if f.degree < 1:
        raise UsageError("constant polynomial")
    f = f.monic()
    S = splitting_field(f, args.seed)
    orbits = frobenius_orbits(S)
    transitive = transitivity_check(f, args.seed)
    pp = prime_power_structure(f, args.seed)
    irreducible = pp is not None and pp.exponent == 1
    result = {
        "splitting_degree": S.degree,
        "modulus": str(Poly(list(S.field.modulus), field.domain, "Z")),
        "roots": [{"root": str(r), "multiplicity": m} for r, m in S.roots],
        "orbits": [[str(x) for x in o] for o in orbits.orbits],
        "transitive": transitive,
    }
    lines = [
        f"splitting field: F_{field.domain.p}^{S.degree} = F_{field.domain.p}[Z]/({result['modulus']})",
        "roots: " + ", ".join(f"{r} (x{m})" for r, m in S.roots),
        f"Frobenius orbits: {len(orbits)}" + "".join(
            f"\n  {{{', '.join(str(x) for x in o)}}}" for o in orbits.orbits),
        f"transitive: {'yes' if transitive else 'no'}",
    ]
    verdict = Verdict.IRREDUCIBLE if irreducible else Verdict.REDUCIBLE
    return _doc("galois", field, {"poly": str(f)}, result, verdict, _pp_json(pp)), 0, lines


def cmd_verify(args):
    p = args.p
    if p is None:
        if args.field and args.field.startswith("fp:"):
            p = FieldSpec(args.field).domain.p
        else:
            raise UsageError("verify needs --p <prime>")
    try:
        PrimeField(p)
    except KuoresError as exc:
        raise UsageError(str(exc)) from None
    try:
        rep = theorem_campaign(args.theorem, p, args.max_deg, args.trials, args.seed,
                               timing=args.timing)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [
        f"theorem {rep.theorem} over {rep.field}: {rep.passed}/{rep.trials} passed, "
        f"{rep.failed} failed (seed {rep.seed})"
    ]
    if rep.counterexample:
        lines.append(f"first counterexample: {rep.counterexample}")
    if rep.wall_time is not None:
        lines.append(f"wall time: {rep.wall_time:.3f} s")
    inputs = {"theorem": rep.theorem, "p": p, "max_deg": args.max_deg, "trials": rep.trials}
    doc = _doc("verify", rep.field, inputs, {"passed": rep.passed, "failed": rep.failed},
               report=rep.to_dict())
    return doc, 0 if rep.failed == 0 else 1, lines


def run_examples() -> tuple[dict, bool]:
    """Both worked examples over Q[X], end to end."""
    qx = FieldSpec("qx")
    f = _parse_in_y(EXAMPLE_F, qx)
    out = {}

    g1 = _parse_in_y(EXAMPLE_1_G, qx)
    h1, pp1, v1, _ = _kuo_analysis(g1, f, qx, 0)
    expect_h1 = parse_poly("T^4 - 2*X^7*T^2 + X^14", ("T", "X"))
    base1 = parse_poly("T^2 - X^7", ("T", "X"))
    ok1 = (h1 == expect_h1 and pp1 is not None and pp1.base == base1 and pp1.exponent == 2
           and dumas_irreducible(pp1.base).irreducible)
    out["example1"] = {"g": str(g1), "f": str(f), "h": str(h1),
                       "prime_power": _pp_json(pp1), "g_verdict": v1.value, "pass": ok1}

    g2 = _parse_in_y(EXAMPLE_2_G, qx)
    h2, pp2, v2, _ = _kuo_analysis(g2, f, qx, 0)
    expect_h2 = parse_poly("T^4 - X^10*T - X^13", ("T", "X"))
    init = weighted_initial_part(h2, 4, 13)
    ok2 = (h2 == expect_h2 and init == parse_poly("T^4 - X^13", ("T", "X"))
           and dumas_irreducible(h2).irreducible and v2 is Verdict.IRREDUCIBLE)
    out["example2"] = {"g": str(g2), "f": str(f), "h": str(h2), "initial_part": str(init),
                       "dumas": dumas_irreducible(h2).reason, "g_verdict": v2.value, "pass": ok2}
    return out, ok1 and ok2


def cmd_examples(args):
    out, ok = run_examples()
    e1, e2 = out["example1"], out["example2"]
    lines = [
        "worked example: h is a square",
        f"  g = {e1['g']}",
        f"  f = {e1['f']}",
        f"  h = {e1['h']}",
        f"  h = ({e1['prime_power']['base']})^{e1['prime_power']['exponent']}"
        if e1["prime_power"] else "  h: prime power not certified",
        f"  g: {e1['g_verdict']}",
        f"  {'PASS' if e1['pass'] else 'FAIL'}",
        "worked example: h is irreducible",
        f"  g = {e2['g']}",
        f"  h = {e2['h']}",
        f"  initial part for weights (4,13): {e2['initial_part']}",
        f"  Dumas: {e2['dumas']}",
        f"  g: {e2['g_verdict']} (h is irreducible, so g cannot factor)",
        f"  {'PASS' if e2['pass'] else 'FAIL'}",
        "PASS" if ok else "FAIL",
    ]
    out["pass"] = ok
    return _doc("examples", "qx", {}, out), 0 if ok else 1, lines


COMMANDS = {
    "kuo": cmd_kuo,
    "resultant": cmd_resultant,
    "factor": cmd_factor,
    "irred": cmd_irred,
    "newton": cmd_newton,
    "initial-part": cmd_initial_part,
    "galois": cmd_galois,
    "verify": cmd_verify,
    "examples": cmd_examples,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="q | fp:<prime> | qx")
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")

    parser = argparse.ArgumentParser(
        prog="kuores",
        description="Composed resultants, finite-field factorization and irreducibility checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("kuo", parents=[common], help="h(T) = (-1)^deg g Res_Y(g, f - T)")
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)

    p = sub.add_parser("resultant", parents=[common], help="Res_Y(a, b)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor over F_p")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("irred", parents=[common], help="irreducibility certificate")
    p.add_argument("--poly")
    p.add_argument("--g")
    p.add_argument("--f")

    p = sub.add_parser("newton", parents=[common], help="Newton polygon in (T, X)")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("initial-part", parents=[common], help="weighted initial part")
    p.add_argument("--poly", required=True)
    p.add_argument("--weights", required=True, help="a,b for w(i, j) = a*i + b*j")

    p = sub.add_parser("galois", parents=[common], help="splitting field and Frobenius orbits")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("verify", parents=[common], help="randomized verification campaign")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-deg", type=int, default=6)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")

    sub.add_parser("examples", parents=[common], help="reproduce the two worked examples")
    return parser


_DEFAULT_FIELD = {"factor": "fp:5", "galois": "fp:5", "kuo": "qx", "resultant": "q",
                  "irred": "qx", "newton": "qx", "initial-part": "qx"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.field is None:
        args.field = _DEFAULT_FIELD.get(args.command)
    if args.seed < 0 or args.seed >= 1 << 64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        doc, code, lines = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except ParseError as exc:
        print(f"kuores: parse error: {exc}", file=sys.stderr)
        return 2
    except KuoresError as exc:
        print(f"kuores: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(doc, indent=2, default=_json_default))
    else:
        print("\n".join(lines))
    return code


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


if __name__ == "__main__":
    sys.exit(main())
