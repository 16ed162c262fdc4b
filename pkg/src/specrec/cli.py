"""Command-line front end.

One JSON document goes to standard output per run; a readable table goes to
standard error unless ``--json-only`` is given.  Exit status: 0 when every
certified check passes, 1 when one fails, 2 on invalid input or missing data.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import degenerate, globalq, verify
from .errors import InsufficientCache, ParseError, SpecrecError
from .hecke import IdealFactorization
from .local import EvalPoint, SatakeGL2, SatakeGL3
from .weights import h_global

SCHEMA = "specrec-report/1"


@dataclass
class RunReport:
    command: str
    parameters: dict
    checks: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    wall_time: float = 0.0
    error: str | None = None

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    def to_json(self, timing: bool = False) -> dict:
        doc = {
            "schema": SCHEMA,
            "command": self.command,
            "parameters": _jsonable(self.parameters),
            "status": self.status,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
            "results": _jsonable(self.results),
        }
        if self.error is not None:
            doc["error"] = self.error
        if timing:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return {"exact": str(x), "float": float(x)}
    if isinstance(x, complex):
        return {"re": _num(x.real), "im": _num(x.imag)}
    if isinstance(x, float):
        return _num(x)
    return str(x)


def _num(v: float):
    return v if math.isfinite(v) else str(v)


# -- parsing -----------------------------------------------------------------------------


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise ParseError(f"cannot parse {text!r} as a complex number") from exc


def parse_ideal(text: str) -> IdealFactorization:
    """'1', '7', '2^3*5' -> IdealFactorization."""
    text = text.strip()
    if text in ("", "1"):
        return IdealFactorization.unit()
    exps: dict[int, int] = {}
    for token in text.split("*"):
        m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", token)
        if not m:
            raise ParseError(f"bad ideal factor {token!r} in {text!r}")
        p, e = int(m.group(1)), int(m.group(2) or 1)
        from ._util import is_prime

        if not is_prime(p) or e < 1:
            raise ParseError(f"{token!r} is not a prime power with positive exponent")
        exps[p] = exps.get(p, 0) + e
    return IdealFactorization(exps)


def parse_pi(items: list[str]) -> dict[int, SatakeGL2]:
    """Each item 'p:key=value,...' with keys cond, alpha, lambda."""
    out: dict[int, SatakeGL2] = {}
    for item in items or []:
        if ":" not in item:
            raise ParseError(f"local data {item!r} must look like 'p:cond=1,alpha=...'")
        head, body = item.split(":", 1)
        try:
            p = int(head)
        except ValueError as exc:
            raise ParseError(f"bad prime {head!r}") from exc
        fields = {}
        for kv in filter(None, body.split(",")):
            if "=" not in kv:
                raise ParseError(f"bad field {kv!r} in {item!r}")
            k, v = kv.split("=", 1)
            fields[k.strip()] = v.strip()
        unknown = set(fields) - {"cond", "alpha", "lambda"}
        if unknown:
            raise ParseError(f"unknown keys {sorted(unknown)} in {item!r}")
        try:
            cond = int(fields.get("cond", "0"))
        except ValueError as exc:
            raise ParseError(f"bad conductor in {item!r}") from exc
        try:
            if cond == 0:
                if "lambda" in fields:
                    rep = SatakeGL2.from_hecke_eigenvalue(parse_complex(fields["lambda"]))
                elif "alpha" in fields:
                    rep = SatakeGL2.unramified(parse_complex(fields["alpha"]))
                else:
                    raise ParseError(f"unramified data at {p} needs alpha or lambda")
            elif cond == 1:
                if "alpha" not in fields:
                    raise ParseError(f"conductor-1 data at {p} needs alpha")
                rep = SatakeGL2.ramified(1, parse_complex(fields["alpha"]))
            else:
                rep = SatakeGL2.ramified(cond)
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"invalid local data {item!r}: {exc}") from exc
        out[p] = rep
    return out


def parse_gl3(text: str) -> SatakeGL3:
    parts = [parse_complex(t) for t in text.split(",")]
    if len(parts) != 3:
        raise ParseError("--Pi needs three comma-separated Satake parameters")
    try:
        return SatakeGL3(tuple(parts))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# -- commands ------------------------------------------------------------------------------


def _load_tau(args, N: int) -> globalq.TauTable:
    if args.cache:
        try:
            t = globalq.read_tau_cache(args.cache)
        except FileNotFoundError as exc:
            raise InsufficientCache(f"tau cache {args.cache} does not exist") from exc
        if t.N < N:
            raise InsufficientCache(f"tau cache {args.cache} covers n <= {t.N}, need {N}")
        return t
    return globalq.tau_table(N)


def cmd_verify(args) -> RunReport:
    params = {"suite": args.suite, "seed": args.seed, "tol": args.tol, "trunc": args.trunc, "prime_cutoff": args.prime_cutoff}
    opt = verify.SuiteOptions(seed=args.seed, tol=args.tol, trunc=args.trunc, prime_cutoff=args.prime_cutoff)
    if args.suite in ("global", "all"):
        opt.tau = _load_tau(args, max(args.prime_cutoff, 200))
    checks = verify.run_suite(args.suite, opt)
    return RunReport("verify", params, checks)


def cmd_weight(args) -> RunReport:
    q = parse_ideal(args.q)
    l = parse_ideal(args.l)
    pi = parse_pi(args.pi)
    Pi = parse_gl3(args.Pi)
    pt = EvalPoint(parse_complex(args.s), parse_complex(args.w))
    params = {"q": args.q, "l": args.l, "pi": list(args.pi or []), "Pi": args.Pi, "s": pt.s, "w": pt.w, "tol": args.tol}
    gw = h_global(Pi, pi, q, l, pt, args.tol, delta_infinity=not args.archimedean_ramified, conjugate=args.conjugate)
    results = {
        "H": gw.value,
        "tail_bound": gw.tail_bound,
        "factors": {
            "delta_infinity": gw.delta_infinity,
            "phi_over_Nq2": Fraction(q.totient(), q.norm**2),
            "lambda_hat_over_Nl_w": gw.lambda_hat_term,
            "h_q": gw.h_q,
        },
        "local": {p: {"value": v.value, "tail_bound": v.tail_bound, "truncation": v.truncation} for p, v in gw.local.items()},
    }
    checks = [
        verify.Check("weight.tail_bound", "pass" if gw.tail_bound < args.tol else "fail", gw.tail_bound, None, args.tol)
    ]
    return RunReport("weight", params, checks, results)


def cmd_tau(args) -> RunReport:
    if args.N < 1:
        raise ParseError("N must be >= 1")
    if not args.cache:
        raise ParseError("tau needs --cache PATH")
    t = globalq.tau_table(args.N)
    globalq.write_tau_cache(args.cache, t)
    results = {"N": t.N, "path": args.cache, "lines": t.N, "head": [t[n] for n in range(1, min(t.N, 5) + 1)]}
    return RunReport("tau", {"N": args.N, "cache": args.cache}, [], results)


def cmd_central(args) -> RunReport:
    from ._util import is_prime

    p, P = args.p, args.prime_cutoff
    if not is_prime(p):
        raise ParseError(f"level {p} is not prime")
    t = _load_tau(args, P)
    L = globalq.global_lvalues(t, P)
    main = globalq.corollary_main_term(L, p, Fraction(args.vartheta))
    one = IdealFactorization.unit()
    half = Fraction(1, 2)
    R = degenerate.residue_term(L, SatakeGL3.trivial(), one, one, EvalPoint(half, half))
    D = degenerate.central_degenerate(L)
    rel = max(abs(R - main.main / 2), abs(D - main.main / 2)) / max(abs(main.main), 1e-300)
    # drift of the Lambda(1) estimate under a change of cutoff
    if t.N >= 2 * P:
        other, label = globalq.truncated_L_gl3(t, 1, 2 * P), f"P -> 2P ({P} -> {2 * P})"
    else:
        other, label = globalq.truncated_L_gl3(t, 1, max(2, P // 2)), f"P/2 -> P ({P // 2} -> {P})"
    base = globalq.truncated_L_gl3(t, 1, P)
    drift = abs(other.value - base.value) / abs(base.value)
    results = {
        "Lambda(1,Pi)": L.get(degenerate.LAMBDA_1),
        "Lambda(0,Pi)": L.lam(0),
        "xi_F(2)": L.get(degenerate.XI_2),
        "main_term": main.main,
        "residue_constant": R,
        "degenerate_constant": D,
        "error_exponent": main.error_exponent,
        "weight_prefactor": main.weight_prefactor,
        "provenance": dict(L.provenance),
        "self_dual": L.self_dual,
        "drift": {"relative": drift, "between": label},
    }
    checks = [
        verify.Check("central.consistency", "pass" if rel < 1e-12 else "fail", rel, None, 1e-12, detail="R = D = main/2 at d_F = 1"),
        verify.Check("central.main_term", "estimate", abs(main.main), drift * abs(main.main), None, detail="Euler product at s = 1 is not certified"),
        verify.Check("central.lambda_drift", "estimate", drift, None, None, detail=label),
    ]
    return RunReport("central", {"p": p, "prime_cutoff": P, "cache": args.cache, "vartheta": args.vartheta}, checks, results)


# -- driver ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-only", action="store_true", help="suppress the table on standard error")
    common.add_argument("--timing", action="store_true", help="include wall time in the JSON report")

    parser = argparse.ArgumentParser(prog="specrec", description="Weights, degenerate terms and checks for spectral reciprocity.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=1e-10)
    v.add_argument("--trunc", type=int, default=None)
    v.add_argument("--prime-cutoff", type=int, default=1000)
    v.add_argument("--cache", default=None, help="tau cache file for the global suite")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("weight", parents=[common], help="evaluate the global weight H(pi)")
    w.add_argument("--q", default="1", help="level ideal, e.g. '2^2*3'")
    w.add_argument("--l", default="1", help="twist ideal, coprime to q")
    w.add_argument("--pi", action="append", metavar="P:FIELDS", help="local GL(2) data, e.g. '2:cond=1,alpha=-0.7071' or '3:lambda=1.2'")
    w.add_argument("--Pi", default="1,1,1", help="GL(3) Satake parameters g1,g2,g3 used at every prime")
    w.add_argument("--s", default="0.5")
    w.add_argument("--w", default="0.5")
    w.add_argument("--tol", type=float, default=1e-10)
    w.add_argument("--no-conjugate", dest="conjugate", action="store_false", help="pair with lambda_pi instead of its conjugate")
    w.add_argument("--archimedean-ramified", action="store_true", help="pi is not spherical at infinity")
    w.set_defaults(func=cmd_weight)

    t = sub.add_parser("tau", parents=[common], help="write the Ramanujan tau cache")
    t.add_argument("--N", type=int, required=True)
    t.add_argument("--cache", required=True)
    t.set_defaults(func=cmd_tau)

    c = sub.add_parser("central", parents=[common], help="central-point constants for Pi = sym^2 Delta")
    c.add_argument("--p", type=int, default=11, help="prime level")
    c.add_argument("--prime-cutoff", type=int, default=1000)
    c.add_argument("--cache", default=None)
    c.add_argument("--vartheta", default="7/64")
    c.set_defaults(func=cmd_central)
    return parser


def _table(report: RunReport) -> str:
    lines = [f"{report.command}: {report.status}"]
    if report.error:
        lines.append(f"  error: {report.error}")
    for c in sorted(report.checks, key=lambda c: c.name):
        val = "-" if c.value is None else f"{c.value:.3e}"
        tol = "-" if c.tolerance is None else f"{c.tolerance:.1e}"
        lines.append(f"  {c.status:<8} {c.name:<44} value={val:<11} tol={tol}")
    for k, v in report.results.items():
        if not isinstance(v, dict):
            lines.append(f"  {k} = {v}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (SpecrecError, OSError) as exc:
        report = RunReport(args.command, {k: v for k, v in vars(args).items() if k != "func"}, error=f"{type(exc).__name__}: {exc}")
    report.wall_time = time.perf_counter() - start
    json.dump(report.to_json(args.timing), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    if not args.json_only:
        print(_table(report), file=sys.stderr)
    if report.error is not None:
        return 2
    return 1 if report.status == "fail" else 0


if __name__ == "__main__":
    sys.exit(main())
