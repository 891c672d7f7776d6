"""Command-line front end: verify one configuration or sweep a grid.

Exit codes: 0 success, 1 identity failure or a dominance violation under a
verified certificate, 2 invalid configuration (including expression syntax
errors), 3 math/domain errors during evaluation, 4 I/O errors while writing
the report.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .bounds import (
    BoundInputs,
    BoundReport,
    bound_t31,
    bound_t32,
    bound_t33,
    bound_t34,
    classical_bound,
    estimate_m4,
    make_bound_report,
)
from .convexity import (
    DEFAULT_CERT_SAMPLES,
    SKIPPED,
    VERIFIED,
    ConvexityCertificate,
    certify_phi_convexity,
)
from .domain import HALF_PI, PhiInterval
from .expr import EvalDomainError, ParseError, parse
from .identity import DEFAULT_IDENTITY_TOL, IdentityReport, identity_residual
from .quad import DEFAULT_TOL, QuadratureError
from .report import (
    render_csv_sweep,
    render_csv_verify,
    render_json,
    render_table_sweep,
    render_table_verify,
    sweep_json_doc,
    verify_json_doc,
)

__all__ = [
    "RunConfig",
    "RunReport",
    "SweepConfig",
    "SweepCell",
    "SweepSummary",
    "SweepReport",
    "ConfigError",
    "cmd_verify",
    "cmd_sweep",
    "emit_report",
    "main",
    "run",
]

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_MATH = 3
EXIT_IO = 4

FORMATS = ("table", "json", "csv")
DEFAULT_Q_LIST = (1.0, 1.5, 2.0, 3.0, 5.0)
THEOREM_ORDER = ("T31", "T32", "T33", "T34", "CLASSICAL")
M4_SAMPLES = 101

# phi accepts radians as a decimal or one of these exact tokens
PHI_TOKENS = {
    "0": 0.0,
    "pi/6": math.pi / 6.0,
    "pi/4": math.pi / 4.0,
    "pi/3": math.pi / 3.0,
    "pi/2": math.pi / 2.0,
}

VERDICT_ALL_DOMINANT = "all-dominant"
VERDICT_VIOLATIONS = "violations-listed"


class ConfigError(Exception):
    """Invalid run configuration (maps to exit code 2)."""


@dataclass(frozen=True)
class RunConfig:
    expression: str
    a: float
    b: float
    phi: float = 0.0
    qs: tuple[float, ...] = DEFAULT_Q_LIST
    oracle_tol: float = DEFAULT_TOL
    identity_tol: float = DEFAULT_IDENTITY_TOL
    certificate_samples: int = DEFAULT_CERT_SAMPLES
    fmt: str = "table"
    output: Optional[str] = None


@dataclass(frozen=True)
class RunReport:
    config: RunConfig
    identity: IdentityReport
    identity_ok: bool
    certificates: tuple[ConvexityCertificate, ...]
    bounds: tuple[BoundReport, ...]
    classical: Optional[BoundReport]
    m4_estimate: Optional[float]
    verdict: str

    def all_rows(self) -> tuple[BoundReport, ...]:
        if self.classical is None:
            return self.bounds
        return self.bounds + (self.classical,)

    @property
    def passed(self) -> bool:
        """Identity within tolerance and no verified-certificate violation."""
        if not self.identity_ok:
            return False
        return not any(r.certificate_status == VERIFIED and not r.dominant
                       for r in self.bounds)


def validate_config(config: RunConfig) -> None:
    if not config.expression.strip():
        raise ConfigError("expression must be nonempty")
    if not (math.isfinite(config.a) and math.isfinite(config.b)):
        raise ConfigError("interval endpoints must be finite")
    if not config.a < config.b:
        raise ConfigError(f"need a < b, got a={config.a}, b={config.b}")
    if not 0.0 <= config.phi <= HALF_PI:
        raise ConfigError(f"phi must lie in [0, pi/2], got {config.phi}")
    if not config.qs:
        raise ConfigError("q list must be nonempty")
    for q in config.qs:
        if not (math.isfinite(q) and q >= 1.0):
            raise ConfigError(f"every q must be finite and >= 1, got {q}")
    if not config.oracle_tol > 0.0:
        raise ConfigError(f"oracle tolerance must be positive, got {config.oracle_tol}")
    if not config.identity_tol > 0.0:
        raise ConfigError(f"identity tolerance must be positive, got {config.identity_tol}")
    if config.certificate_samples < 3:
        raise ConfigError(f"certificate samples must be >= 3, got {config.certificate_samples}")
    if config.fmt not in FORMATS:
        raise ConfigError(f"unknown output format {config.fmt!r}")


def cmd_verify(config: RunConfig) -> RunReport:
    """Run the full pipeline for one configuration.

    parse -> identity residual -> certificate per q -> every applicable
    bound -> classical bound (phi = 0 only) -> verdict.
    """
    validate_config(config)
    f = parse(config.expression)
    iv = PhiInterval(config.a, config.b, config.phi)

    identity = identity_residual(f, iv, tol=config.oracle_tol)
    identity_ok = identity.residual <= config.identity_tol
    actual = abs(identity.lhs)

    certificates = tuple(
        certify_phi_convexity(f, iv, q, samples=config.certificate_samples)
        for q in config.qs
    )

    rows: list[BoundReport] = []
    for cert in certificates:
        inputs = BoundInputs.from_function(f, iv, cert.q)
        rows.append(make_bound_report("T31", cert.q, bound_t31(inputs), actual, cert.status))
        if cert.q > 1.0:
            rows.append(make_bound_report("T32", cert.q, bound_t32(inputs), actual, cert.status))
            rows.append(make_bound_report("T33", cert.q, bound_t33(inputs), actual, cert.status))
        rows.append(make_bound_report("T34", cert.q, bound_t34(inputs), actual, cert.status))

    classical = None
    m4 = None
    if config.phi == 0.0:
        m4 = estimate_m4(f, iv, M4_SAMPLES)
        classical = make_bound_report("CLASSICAL", None, classical_bound(m4, iv.length),
                                      actual, SKIPPED)

    all_rows = rows + ([classical] if classical is not None else [])
    verdict = (VERDICT_ALL_DOMINANT if all(r.dominant for r in all_rows)
               else VERDICT_VIOLATIONS)
    return RunReport(config, identity, identity_ok, certificates, tuple(rows),
                     classical, m4, verdict)


@dataclass(frozen=True)
class SweepConfig:
    expressions: tuple[str, ...]
    a_values: tuple[float, ...]
    b_values: tuple[float, ...]
    phi_values: tuple[float, ...]
    q_values: tuple[float, ...]
    oracle_tol: float = DEFAULT_TOL
    identity_tol: float = DEFAULT_IDENTITY_TOL
    certificate_samples: int = DEFAULT_CERT_SAMPLES
    fmt: str = "table"
    output: Optional[str] = None


@dataclass(frozen=True)
class SweepCell:
    config: RunConfig
    report: Optional[RunReport]
    error: Optional[str]


@dataclass(frozen=True)
class SweepSummary:
    cells: int
    errors: int
    max_residual: Optional[float]
    min_slack: dict[str, Optional[float]]
    violations: int
    verified_violations: int


@dataclass(frozen=True)
class SweepReport:
    cells: tuple[SweepCell, ...]
    summary: SweepSummary

    @property
    def passed(self) -> bool:
        return all(cell.report.passed for cell in self.cells if cell.report is not None)


def cmd_sweep(config: SweepConfig) -> SweepReport:
    """Cartesian-product verify runs; failing cells are recorded, not fatal."""
    for name, values in (("expression", config.expressions), ("a", config.a_values),
                         ("b", config.b_values), ("phi", config.phi_values),
                         ("q", config.q_values)):
        if not values:
            raise ConfigError(f"{name} list must be nonempty")

    cells: list[SweepCell] = []
    for expression, a, b, phi, q in product(config.expressions, config.a_values,
                                            config.b_values, config.phi_values,
                                            config.q_values):
        cell_config = RunConfig(
            expression=expression, a=a, b=b, phi=phi, qs=(q,),
            oracle_tol=config.oracle_tol, identity_tol=config.identity_tol,
            certificate_samples=config.certificate_samples,
            fmt=config.fmt, output=None,
        )
        try:
            cells.append(SweepCell(cell_config, cmd_verify(cell_config), None))
        except (ConfigError, ParseError, EvalDomainError, QuadratureError, ValueError) as exc:
            cells.append(SweepCell(cell_config, None, str(exc)))
    return SweepReport(tuple(cells), _summarize(cells))


def _summarize(cells: Sequence[SweepCell]) -> SweepSummary:
    residuals = [cell.report.identity.residual for cell in cells if cell.report is not None]
    rows = [row for cell in cells if cell.report is not None
            for row in cell.report.all_rows()]
    min_slack: dict[str, Optional[float]] = {}
    for theorem in THEOREM_ORDER:
        slacks = [row.slack for row in rows if row.theorem == theorem]
        min_slack[theorem] = min(slacks) if slacks else None
    violations = sum(1 for row in rows if not row.dominant)
    verified_violations = sum(
        1 for row in rows if not row.dominant and row.certificate_status == VERIFIED
    )
    return SweepSummary(
        cells=len(cells),
        errors=sum(1 for cell in cells if cell.report is None),
        max_residual=max(residuals) if residuals else None,
        min_slack=min_slack,
        violations=violations,
        verified_violations=verified_violations,
    )


def emit_report(report, fmt: str, path: Optional[str] = None) -> None:
    """Write the rendered report to ``path`` or standard output (UTF-8)."""
    if isinstance(report, SweepReport):
        if fmt == "json":
            text = render_json(sweep_json_doc(report))
        elif fmt == "csv":
            text = render_csv_sweep(report)
        else:
            text = render_table_sweep(report)
    else:
        if fmt == "json":
            text = render_json(verify_json_doc(report))
        elif fmt == "csv":
            text = render_csv_verify(report)
        else:
            text = render_table_verify(report)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# Argument handling

def parse_phi(token: str) -> float:
    text = token.strip()
    if text in PHI_TOKENS:
        return PHI_TOKENS[text]
    try:
        return float(text)
    except ValueError:
        raise ConfigError(
            f"invalid phi {token!r}: expected radians or one of {', '.join(PHI_TOKENS)}"
        ) from None


def _parse_float_list(text: str, name: str) -> tuple[float, ...]:
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise ConfigError(f"{name} list must be nonempty")
    try:
        return tuple(float(piece) for piece in items)
    except ValueError as exc:
        raise ConfigError(f"invalid {name} list {text!r}: {exc}") from None


def _parse_phi_list(text: str) -> tuple[float, ...]:
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise ConfigError("phi list must be nonempty")
    return tuple(parse_phi(piece) for piece in items)


def _add_common_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=DEFAULT_TOL,
                     help="quadrature oracle tolerance (default 1e-11)")
    sub.add_argument("--identity-tol", type=float, default=DEFAULT_IDENTITY_TOL,
                     help="identity residual tolerance (default 1e-8)")
    sub.add_argument("--samples", type=int, default=DEFAULT_CERT_SAMPLES,
                     help="convexity certificate sample count (default 1001)")
    sub.add_argument("--format", dest="fmt", choices=FORMATS, default="table",
                     help="output format (default table)")
    sub.add_argument("--output", "-o", default=None,
                     help="write the report to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simpbound",
        description="Verify the Simpson-functional error identity on rotated "
                    "segments and certify its closed-form bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one configuration")
    verify.add_argument("--f", dest="expression", required=True, metavar="EXPR",
                        help="expression in x, e.g. 'exp(x) + x^2'")
    verify.add_argument("--a", type=float, required=True, help="left endpoint")
    verify.add_argument("--b", type=float, required=True, help="right endpoint")
    verify.add_argument("--phi", default="0",
                        help="rotation angle in radians, or 0, pi/6, pi/4, pi/3, pi/2")
    verify.add_argument("--q", default="1,1.5,2,3,5",
                        help="comma-separated exponents q >= 1")
    _add_common_arguments(verify)

    sweep = sub.add_parser("sweep", help="cartesian grid of configurations")
    sweep.add_argument("--f", dest="expressions", action="append", required=True,
                       metavar="EXPR", help="expression (repeatable)")
    sweep.add_argument("--a", default="0", help="comma-separated left endpoints")
    sweep.add_argument("--b", default="1", help="comma-separated right endpoints")
    sweep.add_argument("--phi", default="0", help="comma-separated angles")
    sweep.add_argument("--q", default="1,1.5,2,3,5", help="comma-separated exponents")
    _add_common_arguments(sweep)

    return parser


def _verify_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        expression=args.expression,
        a=args.a,
        b=args.b,
        phi=parse_phi(args.phi),
        qs=_parse_float_list(args.q, "q"),
        oracle_tol=args.tol,
        identity_tol=args.identity_tol,
        certificate_samples=args.samples,
        fmt=args.fmt,
        output=args.output,
    )


def _sweep_config(args: argparse.Namespace) -> SweepConfig:
    return SweepConfig(
        expressions=tuple(args.expressions),
        a_values=_parse_float_list(args.a, "a"),
        b_values=_parse_float_list(args.b, "b"),
        phi_values=_parse_phi_list(args.phi),
        q_values=_parse_float_list(args.q, "q"),
        oracle_tol=args.tol,
        identity_tol=args.identity_tol,
        certificate_samples=args.samples,
        fmt=args.fmt,
        output=args.output,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            config = _verify_config(args)
            report = cmd_verify(config)
            fmt, output, passed = config.fmt, config.output, report.passed
        else:
            sweep_config = _sweep_config(args)
            report = cmd_sweep(sweep_config)
            fmt, output, passed = sweep_config.fmt, sweep_config.output, report.passed
    except (ConfigError, ParseError) as exc:
        print(f"simpbound: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (EvalDomainError, QuadratureError, ValueError) as exc:
        print(f"simpbound: {exc}", file=sys.stderr)
        return EXIT_MATH
    try:
        emit_report(report, fmt, output)
    except OSError as exc:
        print(f"simpbound: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if passed else EXIT_VIOLATION


def run() -> None:
    raise SystemExit(main())
