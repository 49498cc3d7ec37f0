"""Command-line interface: extract, verify, oracle, gen.

Exit codes: 0 success (or valid certificate), 1 invalid certificate,
2 input error (bad files, bad arguments), 3 pipeline error (density too low,
sampler/guarantee failure). Diagnostics go to stderr; results to stdout.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import (
    CertificateFormatError,
    EdgeListFormatError,
    PipelineError,
)
from .fileio import (
    emit_certificate,
    emit_edge_list,
    gnp_generate,
    parse_certificate,
    parse_edge_list,
)
from .pipeline import MODE_BEST_EFFORT, MODE_GUARANTEE, PipelineConfig, run_pipeline
from .verification import ORACLE_VERTEX_CAP, hadwiger_number, verify_certificate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_PIPELINE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kminor",
        description="Extract and verify complete-graph minor certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract a complete-minor certificate")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--d", required=True, type=int, help="density parameter (integer)")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument(
        "--mode", choices=[MODE_BEST_EFFORT, MODE_GUARANTEE], default=MODE_BEST_EFFORT
    )
    p.add_argument("--max-retries", type=int, default=1000)
    p.add_argument("--out", help="write the certificate here (default: stdout)")

    p = sub.add_parser("verify", help="verify a certificate against a graph")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--cert", required=True, help="certificate file")

    p = sub.add_parser("oracle", help="exact Hadwiger number (small graphs)")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--max-order", type=int, default=None)

    p = sub.add_parser("gen", help="write a seeded G(n, p) edge list")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--p", required=True, type=float)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--out", required=True)

    return parser


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    # fixed newline so certificate bytes match across platforms
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _cmd_extract(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_text(args.input))
    cfg = PipelineConfig(
        d=args.d, seed=args.seed, mode=args.mode, retry_cap=args.max_retries
    )
    cert = run_pipeline(g, cfg)
    print(f"order {cert.order}")
    document = emit_certificate(cert)
    if args.out:
        _write_text(args.out, document)
    else:
        sys.stdout.write(document)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_text(args.input))
    cert = parse_certificate(_read_text(args.cert))
    report = verify_certificate(g, cert.branch_sets)
    if report.valid:
        print("VALID")
        return EXIT_OK
    for violation in report.violations:
        print(str(violation))
    return EXIT_INVALID


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_text(args.input))
    if g.vertex_count > ORACLE_VERTEX_CAP:
        print(
            f"error: oracle capped at {ORACLE_VERTEX_CAP} vertices, "
            f"got {g.vertex_count}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    print(hadwiger_number(g, max_order=args.max_order))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if not 0.0 <= args.p <= 1.0:
        print(f"error: p must be in [0, 1], got {args.p}", file=sys.stderr)
        return EXIT_INPUT
    if args.n < 0:
        print("error: n must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    g = gnp_generate(args.n, args.p, args.seed)
    _write_text(args.out, emit_edge_list(g))
    return EXIT_OK


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "extract": _cmd_extract,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "gen": _cmd_gen,
    }
    try:
        return handlers[args.command](args)
    except (EdgeListFormatError, CertificateFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PIPELINE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
