"""Command-line interface with deterministic JSON/CSV output.

Every subcommand prints an output envelope {command, inputs, result,
certificates?}; rationals serialize as lowest-terms "p/q" strings and
repeated runs are byte-identical.  Exit codes: 0 for any computed result
(including verdict "no"), 2 for invalid input, 1 for internal failures.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from .capacities import DominanceReport, cap_seq
from .cone import ConeClass, ConeDecision, move_log_json, pairing
from .embed import (
    Ellipsoid,
    EmbedDecision,
    ball_packing,
    capacity_check,
    decide,
    squeeze,
    staircase_point,
)
from .oracle import constraint_scan
from .rational import format_rational, parse_rational
from .weights import continued_fraction, weight_sequence

SCAN_CLASS_LIMIT = 10  # constraint scans are exponential in the class length


def _positive(text: str, what: str) -> Fraction:
    value = parse_rational(text)
    if value <= 0:
        raise ValueError(f"{what} must be positive, got {text!r}")
    return value


def _parse_pair(text: str, what: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"{what} must be two comma-separated rationals, got {text!r}")
    return _positive(parts[0], what), _positive(parts[1], what)


def _parse_domains(text: str) -> list[Ellipsoid]:
    chunks = [chunk for chunk in text.split(";") if chunk.strip()]
    if not chunks:
        raise ValueError("domain list must not be empty")
    return [Ellipsoid(*_parse_pair(chunk, "domain")) for chunk in chunks]


def _ellipsoid_json(e: Ellipsoid) -> list[str]:
    return [format_rational(e.a), format_rational(e.b)]


def _cone_class_json(c: ConeClass) -> dict:
    return {
        "mu": format_rational(c.mu),
        "coeffs": [format_rational(x) for x in c.coeffs],
    }


def _cone_certificate_json(dec: ConeDecision) -> dict:
    cert: dict = {"reason": dec.reason}
    if dec.volume is not None:
        cert["volume"] = {
            "mu_sq": format_rational(dec.volume[0]),
            "square_sum": format_rational(dec.volume[1]),
        }
    if dec.reduced_form is not None:
        cert["reduced_form"] = [format_rational(dec.reduced_form.mu)] + [
            format_rational(c) for c in dec.reduced_form.coeffs
        ]
    if dec.negative_index is not None:
        cert["negative_index"] = dec.negative_index
    cert["move_log"] = move_log_json(dec.move_log)
    return cert


def _dominance_json(report: DominanceReport) -> dict:
    if report.first_violation is None:
        return {"holds_up_to": report.holds_up_to}
    k, lhs, rhs = report.first_violation
    return {
        "first_violation": {
            "k": k,
            "lhs": format_rational(lhs),
            "rhs": format_rational(rhs),
        }
    }


def _decision_result(dec: EmbedDecision) -> dict:
    result: dict = {
        "verdict": "yes" if dec.verdict else "no",
        "route": dec.route,
        "reason": dec.cone.reason,
        "ball_list": [format_rational(b) for b in dec.ball_list],
        "cone_class": _cone_class_json(dec.cone_class),
    }
    if dec.capacity_report is not None:
        result["capacity_check"] = _dominance_json(dec.capacity_report)
    if dec.capacity_witness is not None:
        k, lhs, rhs = dec.capacity_witness
        result["capacity_witness"] = {
            "k": k,
            "lhs": format_rational(lhs),
            "rhs": format_rational(rhs),
        }
    return result


def _decision_certificates(dec: EmbedDecision) -> dict:
    certs = {"cone": _cone_certificate_json(dec.cone)}
    if not dec.verdict and len(dec.cone_class.coeffs) <= SCAN_CLASS_LIMIT:
        witness = constraint_scan(dec.cone_class)
        if witness is not None:
            certs["oracle_witness"] = {
                "d": witness.d,
                "m": list(witness.m),
                "pairing": format_rational(pairing(dec.cone_class, witness)),
            }
    return certs


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text)
    else:
        Path(out).write_text(text + "\n", encoding="utf-8")


def _emit_envelope(
    command: str,
    inputs: dict,
    result: dict,
    certificates: dict | None = None,
    out: str | None = None,
) -> None:
    envelope: dict = {"command": command, "inputs": inputs, "result": result}
    if certificates is not None:
        envelope["certificates"] = certificates
    _emit(json.dumps(envelope, indent=2), out)


@click.group()
@click.version_option(version="0.1.0", prog_name="symcap")
def cli() -> None:
    """Exact embedding capacities for symplectic ellipsoids and balls."""


@cli.command()
@click.argument("a")
@click.argument("b")
@click.option("--count", "-k", "count", type=int, required=True, help="Last index K.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(), default=None, help="Write to file.")
def caps(a: str, b: str, count: int, fmt: str, out: str | None) -> None:
    """Capacity sequence of the ellipsoid E(A, B), indices 0..K."""
    fa, fb = _positive(a, "a"), _positive(b, "b")
    seq = cap_seq(fa, fb, count)
    if fmt == "csv":
        lines = ["k,value"] + [
            f"{k},{format_rational(v)}" for k, v in enumerate(seq.terms)
        ]
        _emit("\n".join(lines), out)
        return
    _emit_envelope(
        "caps",
        {"a": format_rational(fa), "b": format_rational(fb), "count": count},
        {"terms": [format_rational(v) for v in seq.terms]},
        out=out,
    )


@cli.command()
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.option("--out", type=click.Path(), default=None, help="Write to file.")
def weights(p: int, q: int, out: str | None) -> None:
    """Weight expansion and continued fraction of the pair P >= Q >= 1."""
    seq = weight_sequence(p, q)
    _emit_envelope(
        "weights",
        {"p": p, "q": q},
        {
            "weights": [str(w) for w in seq.flatten()],
            "parts": [[str(value), mult] for value, mult in seq.parts],
            "continued_fraction": continued_fraction(p, q),
            "square_sum": str(seq.square_sum()),
        },
        out=out,
    )


@cli.command("decide")
@click.option("--domain", required=True, help='Ellipsoids "a,b[;a2,b2;...]".')
@click.option("--target", "target_text", required=True, help='Target "c,d".')
@click.option("--certificate", is_flag=True, help="Include reduction certificates.")
@click.option(
    "--capacity-check",
    "capacity_k",
    type=int,
    default=None,
    help="Also compare capacity sequences up to index K.",
)
@click.option("--out", type=click.Path(), default=None, help="Write to file.")
def decide_cmd(
    domain: str,
    target_text: str,
    certificate: bool,
    capacity_k: int | None,
    out: str | None,
) -> None:
    """Decide embedding of open ellipsoids into a target ellipsoid."""
    domains = _parse_domains(domain)
    target = Ellipsoid(*_parse_pair(target_text, "target"))
    dec = decide(domains, target, capacity_k=capacity_k)
    _emit_envelope(
        "decide",
        {
            "domains": [_ellipsoid_json(d) for d in domains],
            "target": _ellipsoid_json(target),
        },
        _decision_result(dec),
        certificates=_decision_certificates(dec) if certificate else None,
        out=out,
    )


@cli.command()
@click.argument("sizes")
@click.option("--into", "mu", required=True, help="Target ball capacity.")
@click.option("--certificate", is_flag=True, help="Include reduction certificates.")
@click.option("--out", type=click.Path(), default=None, help="Write to file.")
def pack(sizes: str, mu: str, certificate: bool, out: str | None) -> None:
    """Decide packing of open balls SIZES (comma-separated) into B(MU)."""
    ball_sizes = [_positive(s, "ball size") for s in sizes.split(",") if s.strip()]
    if not ball_sizes:
        raise ValueError("ball size list must not be empty")
    target = _positive(mu, "target capacity")
    dec = ball_packing(ball_sizes, target)
    _emit_envelope(
        "pack",
        {
            "sizes": [format_rational(s) for s in ball_sizes],
            "into": format_rational(target),
        },
        _decision_result(dec),
        certificates=_decision_certificates(dec) if certificate else None,
        out=out,
    )


@cli.command("squeeze")
@click.option("--domain", required=True, help='Domain ellipsoid "a,b".')
@click.option("--target", "target_text", required=True, help='Target "c,d".')
@click.option("--eps", required=True, help="Bracket width tolerance.")
@click.option("--out", type=click.Path(), default=None, help="Write to file.")
def squeeze_cmd(domain: str, target_text: str, eps: str, out: str | None) -> None:
    """Bracket the optimal capacity scale for embedding domain in target."""
    dom = Ellipsoid(*_parse_pair(domain, "domain"))
    target = Ellipsoid(*_parse_pair(target_text, "target"))
    lo, hi = squeeze(dom, target, _positive(eps, "eps"))
    _emit_envelope(
        "squeeze",
        {
            "domain": _ellipsoid_json(dom),
            "target": _ellipsoid_json(target),
            "eps": format_rational(Fraction(eps)),
        },
        {
            "lo": format_rational(lo),
            "hi": format_rational(hi),
            "width": format_rational(hi - lo),
        },
        out=out,
    )


@cli.command("staircase")
@click.option("--min", "a_min", required=True, help="First aspect value (>= 1).")
@click.option("--max", "a_max", required=True, help="Last aspect value.")
@click.option("--step", required=True, help="Aspect increment.")
@click.option("--eps", required=True, help="Bracket width tolerance.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(), default=None, help="Write to file.")
@click.option(
    "--plot",
    "plot_path",
    type=click.Path(),
    default=None,
    help="Also render the staircase figure to this file.",
)
def staircase_cmd(
    a_min: str,
    a_max: str,
    step: str,
    eps: str,
    fmt: str,
    out: str | None,
    plot_path: str | None,
) -> None:
    """Sweep c(a) over a range of aspects; rows are a,lo,hi."""
    lo_a = _positive(a_min, "min")
    hi_a = _positive(a_max, "max")
    h = _positive(step, "step")
    tol = _positive(eps, "eps")
    if hi_a < lo_a:
        raise ValueError("max must be at least min")
    rows = []
    a = lo_a
    while a <= hi_a:
        lo, hi = staircase_point(a, tol)
        rows.append((a, lo, hi))
        a += h
    if plot_path is not None:
        from . import viz  # deferred: pulls in matplotlib

        viz.render_staircase(rows, plot_path)
    if fmt == "csv":
        lines = ["a,lo,hi"] + [
            f"{format_rational(a)},{format_rational(lo)},{format_rational(hi)}"
            for a, lo, hi in rows
        ]
        _emit("\n".join(lines), out)
        return
    _emit_envelope(
        "staircase",
        {
            "min": format_rational(lo_a),
            "max": format_rational(hi_a),
            "step": format_rational(h),
            "eps": format_rational(tol),
        },
        {
            "rows": [
                {
                    "a": format_rational(a),
                    "lo": format_rational(lo),
                    "hi": format_rational(hi),
                }
                for a, lo, hi in rows
            ]
        },
        out=out,
    )


def run(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, prog_name="symcap", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        print(f"error: {exc.format_message()}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
