"""Command-line front end.

    quatbound bounds poly.json [--json] [--t4-variant theorem|matrix]
    quatbound zeros poly.json [--check] [--json]
    quatbound verify --degrees 3,4,5 --trials 100 --seed 42 --max-coeff 5 [--slack 1e-9]

Exit codes: 0 success, 1 a bound was violated (or the numerics failed),
2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .bounds import SOUND_BOUNDS, BoundReport, T4Variant, best_bound, norm_domination
from .errors import PreconditionViolation, QuatboundError, SchemaError
from .qpoly import RightPolynomial, deflate_zero_constant, normalize_monic
from .zeros import ZeroKind, ZeroSet, find_zeros, random_polynomial_with_known_zero

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(QuatboundError):
    pass


def parse_polynomial(obj) -> RightPolynomial:
    if not isinstance(obj, dict):
        raise SchemaError("top level: expected an object with a 'coefficients' field")
    if "coefficients" not in obj:
        raise SchemaError("coefficients: missing")
    coeffs = obj["coefficients"]
    if not isinstance(coeffs, list) or not coeffs:
        raise SchemaError("coefficients: expected a non-empty list")
    for i, c in enumerate(coeffs):
        if not isinstance(c, list) or len(c) != 4:
            raise SchemaError(f"coefficients[{i}]: expected a list of 4 numbers")
        for m, v in enumerate(c):
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise SchemaError(f"coefficients[{i}][{m}]: expected a finite number, got {v!r}")
    return RightPolynomial(coeffs)


def parse_polynomial_file(path) -> RightPolynomial:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    return parse_polynomial(obj)


def _fmt(v) -> str:
    return f"{v:.12g}" if isinstance(v, float) else str(v)


def format_report_table(report: BoundReport) -> str:
    extra = ("alpha_t1", "alpha_t2", "beta_t2", "gamma_theorem", "gamma_matrix")
    width = max(len(k) for k in (*report.entries, *extra))
    lines = [f"degree {report.degree}, t4 variant {report.t4_variant.value}"]
    lines += [f"{name:<{width}}  {_fmt(v)}" for name, v in report.entries.items()]
    for name in extra:
        v = getattr(report, name)
        if v is not None:
            lines.append(f"{name:<{width}}  {_fmt(v)}")
    lines.append(f"{'best':<{width}}  {_fmt(report.best)} ({report.best_name})")
    lines += [f"note: {n}" for n in report.notes]
    return "\n".join(lines)


def format_zeros_table(zs: ZeroSet) -> str:
    lines = [f"{'kind':<10} {'s':>14} {'t':>14} {'residual':>10}  witness"]
    for c in zs.classes:
        lines.append(f"{c.kind.value:<10} {c.s:>14.9g} {c.t:>14.9g} {c.residual:>10.2e}  {c.witness}")
    lines.append(f"max_modulus {zs.max_modulus:.12g}")
    if zs.empty:
        lines.append("no zeros found")
    return "\n".join(lines)


def check_domination(zs: ZeroSet, report: BoundReport, slack: float) -> list[dict]:
    """Every (zero, sound bound) pair with ``|z| > bound * (1 + slack)``."""
    out = []
    for c in zs.zeros():
        for name, v in report.applicable().items():
            if name in SOUND_BOUNDS and c.modulus > v * (1.0 + slack):
                out.append({"bound": name, "value": v, "zero_modulus": c.modulus})
    return out


def cmd_bounds(args) -> int:
    f = parse_polynomial_file(args.file)
    report = best_bound(f, T4Variant(args.t4_variant))
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(format_report_table(report))
    return EXIT_OK


def cmd_zeros(args) -> int:
    f = parse_polynomial_file(args.file)
    zs = find_zeros(f)
    out = {"zeros": zs.to_dict()}
    violations = []
    if args.check:
        violations = check_domination(zs, best_bound(f), 1e-9)
        out["violations"] = violations
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(format_zeros_table(zs))
        if args.check:
            if violations:
                for v in violations:
                    print(f"VIOLATION {v['bound']}={v['value']:.12g} < |z|={v['zero_modulus']:.12g}")
            else:
                print("all bounds dominate")
    return EXIT_VIOLATION if violations else EXIT_OK


@dataclass(frozen=True)
class VerifyConfig:
    degrees: tuple[int, ...]
    trials: int
    seed: int
    max_coeff: float
    slack: float = 1e-9

    def __post_init__(self):
        if not self.degrees or any(d < 2 for d in self.degrees):
            raise UsageError("degrees must all be >= 2")
        if self.trials < 1:
            raise UsageError("trials must be >= 1")
        if self.seed < 0:
            raise UsageError("seed must be >= 0")
        if not (self.max_coeff > 0 and math.isfinite(self.max_coeff)):
            raise UsageError("max-coeff must be a positive number")
        if not (self.slack >= 0 and math.isfinite(self.slack)):
            raise UsageError("slack must be >= 0")


def trial_seed(seed: int, degree: int, trial: int) -> int:
    return int(np.random.SeedSequence([seed, degree, trial]).generate_state(1)[0])


def run_trial(config: VerifyConfig, degree: int, trial: int) -> dict:
    """One sweep trial; returns ratios ``max|z| / bound`` and any failures."""
    f, planted = random_polynomial_with_known_zero(degree, trial_seed(config.seed, degree, trial), config.max_coeff)
    zs = find_zeros(f)
    report = best_bound(f)
    failures = [dict(kind="bound", **v) for v in check_domination(zs, report, config.slack)]

    if not any(
        c.kind is not ZeroKind.NONE
        and abs(c.s - planted.w) <= 1e-6 * (1 + abs(planted))
        and abs(c.t - planted.imag_abs) <= 1e-6 * (1 + abs(planted))
        for c in zs.classes
    ):
        failures.append({"kind": "planted_zero_missing", "planted": planted.to_list()})

    g, _ = deflate_zero_constant(normalize_monic(f))
    if g.degree >= 2:
        for name, (lhs, rhs, ok) in norm_domination(g).items():
            if not ok:
                failures.append({"kind": "norm_domination", "check": name, "lhs": lhs, "rhs": rhs})

    ratios = {
        name: (zs.max_modulus / v if v > 0 else 0.0) for name, v in report.applicable().items()
    }
    t4_theorem = report.value("t4_theorem")
    t4_theorem_violated = t4_theorem is not None and zs.max_modulus > t4_theorem * (1 + config.slack)
    return {
        "polynomial": f.to_dict(),
        "failures": failures,
        "ratios": ratios,
        "t4_theorem_violated": t4_theorem_violated,
    }


def run_verify(config: VerifyConfig) -> dict:
    passed = failed = 0
    t4_theorem_violations = 0
    stats: dict[str, list[float]] = {}
    failures = []
    for degree in config.degrees:
        for trial in range(config.trials):
            res = run_trial(config, degree, trial)
            if res["failures"]:
                failed += 1
                failures.append(
                    {"degree": degree, "trial": trial, "polynomial": res["polynomial"], "failures": res["failures"]}
                )
            else:
                passed += 1
            t4_theorem_violations += res["t4_theorem_violated"]
            for name, r in res["ratios"].items():
                stats.setdefault(name, []).append(r)
    summary = {
        "config": {
            "degrees": list(config.degrees),
            "trials": config.trials,
            "seed": config.seed,
            "max_coeff": config.max_coeff,
            "slack": config.slack,
            "rng": "numpy PCG64 via SeedSequence([seed, degree, trial])",
        },
        "total": passed + failed,
        "passed": passed,
        "failed": failed,
        "t4_theorem_violations": t4_theorem_violations,
        "ratio_stats": {
            name: {
                "tightest": max(v),
                "loosest": min(v),
                "mean": math.fsum(v) / len(v),
            }
            for name, v in sorted(stats.items())
        },
        "failures": failures,
    }
    return summary


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"--degrees: cannot parse {text!r}") from None


def cmd_verify(args) -> int:
    config = VerifyConfig(
        degrees=_parse_degrees(args.degrees),
        trials=args.trials,
        seed=args.seed,
        max_coeff=args.max_coeff,
        slack=args.slack,
    )
    summary = run_verify(config)
    print(json.dumps(summary, indent=2, sort_keys=True))
    print(f"{summary['passed']}/{summary['total']} pass", file=sys.stderr)
    return EXIT_VIOLATION if summary["failed"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quatbound", description="Zero bounds for quaternion polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="print every bound for one polynomial")
    b.add_argument("file")
    b.add_argument("--json", action="store_true")
    b.add_argument("--t4-variant", choices=[v.value for v in T4Variant], default="matrix")
    b.set_defaults(func=cmd_bounds)

    z = sub.add_parser("zeros", help="find the zero classes of one polynomial")
    z.add_argument("file")
    z.add_argument("--check", action="store_true", help="check every bound against the zeros")
    z.add_argument("--json", action="store_true")
    z.set_defaults(func=cmd_zeros)

    v = sub.add_parser("verify", help="randomized soundness sweep")
    v.add_argument("--degrees", default="3,4,5,6")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--max-coeff", type=float, default=5.0)
    v.add_argument("--slack", type=float, default=1e-9)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, SchemaError, UsageError, PreconditionViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuatboundError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
