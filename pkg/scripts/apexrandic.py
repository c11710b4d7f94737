"""
CLI apexrandic
==============

Subcomandos: randic, apex, audit, scan-plot, enumerate.

Códigos de salida:
- 0: todas las afirmaciones escaneadas se cumplen
- 1: se encontró un contraejemplo o violación (el reporte se emite completo)
- 2: error de uso, de lectura o rango inviable
- 3: inconsistencia interna (bug)

Uso:
    python scripts/apexrandic.py audit conjecture --k 2 --n 7 --no-timing
"""

import argparse
import os
import sys
import time
from typing import Any, List, NamedTuple, Optional, Sequence

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import settings  # noqa: E402
from core.exceptions import ApexRandicError, ConsistencyError, UsageError  # noqa: E402
from core.logger import get_logger, setup_logging  # noqa: E402
from core.workers import resolve_jobs  # noqa: E402
from models.enums import AuditClaim, EnumerationStrategy, OutputFormat  # noqa: E402
from schemas.enumeration import EnumerationSummary  # noqa: E402
from schemas.run import RunConfig  # noqa: E402

logger = get_logger("cli")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

LEMMA_CLAIMS = {
    AuditClaim.LEMMA2, AuditClaim.LEMMA3, AuditClaim.LEMMA4, AuditClaim.LEMMA5, AuditClaim.LEMMA6,
}


class CommandResult(NamedTuple):
    """Salida de un subcomando antes de serializar"""
    config: RunConfig
    report: Any
    exit_code: int
    csv_header: Optional[Sequence[str]] = None
    csv_rows: Optional[List[List[Any]]] = None
    text: Optional[str] = None


# ======================================================================
# Parser
# ======================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apexrandic",
        description="Índice de Randić exacto y k-apex trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    randic = sub.add_parser("randic", help="Índice de Randić exacto por grafo")
    _add_input(randic)
    _add_output(randic)

    apex = sub.add_parser("apex", help="Número apex con testigo y árbol residual")
    _add_input(apex)
    _add_output(apex)

    audit = sub.add_parser("audit", help="Audita un lema, teorema, corolario o la conjetura")
    audit.add_argument("claim", type=AuditClaim, choices=list(AuditClaim), metavar="CLAIM",
                       help=", ".join(claim.value for claim in AuditClaim))
    audit.add_argument("--k", type=int)
    audit.add_argument("--n", type=int)
    audit.add_argument("--m", type=int, help="Parámetro m de corollary2")
    audit.add_argument("--grid", help="Grilla de x para los lemas: 'inicio..fin[:paso]'")
    audit.add_argument("--params", help="Valores de a o m separados por coma (lemma2, lemma4, lemma6)")
    audit.add_argument("--relative", action="store_true", help="La grilla se suma a cada parámetro")
    _add_strategy(audit)
    _add_output(audit)

    plot = sub.add_parser("scan-plot", help="Filas CSV (n, cantidad, max R, cota) para graficar")
    plot.add_argument("--k", type=int, required=True)
    plot.add_argument("--n-range", required=True, help="'inicio..fin'")
    _add_strategy(plot)
    _add_output(plot)

    enum = sub.add_parser("enumerate", help="Cuenta o lista grafos conexos o k-apex trees")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--k", type=int, help="Número apex; sin --k se enumeran los conexos")
    enum.add_argument("--cross-check", action="store_true", help="Corre las estrategias A y B y las compara")
    enum.add_argument("--list", action="store_true", help="Emite los graph6 canónicos, uno por línea")
    _add_strategy(enum)
    _add_output(enum)
    return parser


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="Archivo graph6 o lista de aristas ('-' para stdin)")


def _add_strategy(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--strategy", type=EnumerationStrategy, choices=list(EnumerationStrategy),
                        default=None, help="Estrategia de enumeración de k-apex trees")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, default=None, help="Procesos (por defecto APEXRANDIC_JOBS)")
    parser.add_argument("--format", type=OutputFormat, choices=list(OutputFormat), default=None)
    parser.add_argument("--output", help="Archivo de salida (por defecto stdout)")
    parser.add_argument("--allow-large", action="store_true", help="Levanta las guardas de enumeración")
    parser.add_argument("--no-timing", action="store_true", help="Omite tiempo y procesos del bloque run")


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise UsageError(f"'{args.command}' requiere {', '.join(missing)}")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise UsageError(f"No se pudo leer '{path}': {exc.strerror}")


# ======================================================================
# Subcomandos
# ======================================================================

def cmd_randic(args: argparse.Namespace, fmt: OutputFormat) -> CommandResult:
    from schemas.randic import RandicEntry
    from services.graph_io_service import read_graphs

    entries = [RandicEntry.of(g, line) for line, g in read_graphs(_read_input(args.input))]
    config = RunConfig(command="randic", input=args.input, format=fmt)
    rows = [
        [e.line, e.graph6, e.n, e.m, e.value.exact, e.value.decimal, e.gap.decimal, e.asymmetric_edges]
        for e in entries
    ]
    header = ("line", "graph6", "n", "m", "R_exact", "R_decimal", "gap_decimal", "asymmetric_edges")
    return CommandResult(config, entries, EXIT_OK, header, rows)


def cmd_apex(args: argparse.Namespace, fmt: OutputFormat) -> CommandResult:
    from schemas.apex import ApexReport
    from services.graph_io_service import read_graphs

    reports = [ApexReport.of(g, line) for line, g in read_graphs(_read_input(args.input))]
    for report in reports:
        if report.error:
            logger.warning(f"[APEX] línea {report.line}: {report.error}")
    exit_code = EXIT_VIOLATION if any(r.error for r in reports) else EXIT_OK
    config = RunConfig(command="apex", input=args.input, format=fmt)
    rows = [
        [r.line, r.graph6, r.n, r.m, r.k, " ".join(map(str, r.witness)), r.residual, r.error]
        for r in reports
    ]
    header = ("line", "graph6", "n", "m", "k", "witness", "residual", "error")
    return CommandResult(config, reports, exit_code, header, rows)


def cmd_audit(args: argparse.Namespace, fmt: OutputFormat) -> CommandResult:
    from services import apex_service, family_service, lemma_service
    from services.enumeration_service import resolve_strategy

    if fmt is OutputFormat.CSV:
        raise UsageError("audit solo emite JSON")
    claim: AuditClaim = args.claim
    params = [p.strip() for p in args.params.split(",") if p.strip()] if args.params else None
    config = RunConfig(
        command="audit", claim=claim, k=args.k, n=args.n, m=args.m, grid=args.grid,
        params=params, strategy=args.strategy, format=fmt, allow_large=args.allow_large,
    )

    if claim in LEMMA_CLAIMS:
        from schemas.audit import LemmaGrid

        _require(args, "grid")
        grid = LemmaGrid.parse(args.grid, params, args.relative)
        report = lemma_service.audit_lemma(claim.lemma_id, grid, args.jobs)
        return CommandResult(config, report, EXIT_OK if report.holds else EXIT_VIOLATION)

    if claim is AuditClaim.LEMMA1:
        _require(args, "n")
        report = lemma_service.audit_gap_identity(args.n, args.jobs, args.allow_large)
        return CommandResult(config, report, EXIT_OK if report.holds else EXIT_VIOLATION)

    _require(args, "k", "n")
    if claim is AuditClaim.COROLLARY2:
        _require(args, "m")
    if args.k >= 1 and args.n > args.k:
        resolve_strategy(args.k, args.n, args.strategy, args.allow_large)

    if claim is AuditClaim.THEOREM1:
        report = apex_service.audit_nonregularity(args.k, args.n, args.jobs, args.strategy, args.allow_large)
        holds = report.theorem_consistent
    elif claim is AuditClaim.COROLLARY1:
        report = family_service.check_corollary_gap2(args.k, args.n, args.jobs, args.strategy, args.allow_large)
        holds = report.holds
    elif claim is AuditClaim.COROLLARY2:
        report = family_service.check_corollary_many_asym(
            args.k, args.n, args.m, args.jobs, args.strategy, args.allow_large
        )
        holds = report.holds
    else:
        report = family_service.verify_conjecture(args.k, args.n, args.jobs, args.strategy, args.allow_large)
        holds = report.conjecture_holds
    return CommandResult(config, report, EXIT_OK if holds else EXIT_VIOLATION)


def cmd_scan_plot(args: argparse.Namespace, fmt: OutputFormat) -> CommandResult:
    from services.report_service import SCAN_PLOT_HEADER, parse_n_range, scan_plot_rows

    n_values = parse_n_range(args.n_range)
    config = RunConfig(
        command="scan-plot", k=args.k, n_range=n_values, strategy=args.strategy,
        format=fmt, allow_large=args.allow_large,
    )
    rows = scan_plot_rows(args.k, n_values, args.jobs, args.strategy, args.allow_large)
    report = [dict(zip(SCAN_PLOT_HEADER, row)) for row in rows]
    exit_code = EXIT_VIOLATION if any(row[-1] == "fails" for row in rows) else EXIT_OK
    return CommandResult(config, report, exit_code, SCAN_PLOT_HEADER, rows)


def cmd_enumerate(args: argparse.Namespace, fmt: OutputFormat) -> CommandResult:
    from services import enumeration_service as enumeration
    from services.graph_io_service import write_graph6

    config = RunConfig(
        command="enumerate", k=args.k, n=args.n, strategy=args.strategy,
        format=fmt, allow_large=args.allow_large,
    )
    if args.list:
        if args.k is None:
            codes = [write_graph6(g) for g in enumeration.enumerate_connected(args.n, args.jobs, args.allow_large)]
        else:
            codes = enumeration.apex_tree_codes(args.k, args.n, args.strategy, args.jobs, args.allow_large)
        return CommandResult(config, codes, EXIT_OK, text="".join(f"{code}\n" for code in codes))

    if args.k is None:
        summary = enumeration.summarize_connected(args.n, args.jobs, args.allow_large)
    elif args.cross_check:
        summary = enumeration.count_cross_check(args.k, args.n, args.jobs, args.allow_large)
    else:
        summary = enumeration.summarize_apex_trees(args.k, args.n, args.strategy, args.jobs, args.allow_large)
    header = ("n", "k", "filter", "count", "strategy", "count_a", "count_b")
    row = [summary.n, summary.k, summary.filter, summary.count, summary.strategy, summary.count_a, summary.count_b]
    return CommandResult(config, summary, EXIT_OK, header, [row])


COMMANDS = {
    "randic": cmd_randic,
    "apex": cmd_apex,
    "audit": cmd_audit,
    "scan-plot": cmd_scan_plot,
    "enumerate": cmd_enumerate,
}


# ======================================================================
# Punto de entrada
# ======================================================================

def render(result: CommandResult, fmt: OutputFormat, jobs: int, wall_time: float, timing: bool) -> str:
    from services.report_service import build_envelope, render_csv, render_json

    if result.text is not None:
        return result.text
    if fmt is OutputFormat.CSV:
        return render_csv(result.csv_header, result.csv_rows)
    return render_json(build_envelope(result.config, result.report, jobs=jobs, wall_time=wall_time, timing=timing))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging()
    default_format = OutputFormat.CSV if args.command == "scan-plot" else OutputFormat.JSON
    fmt = args.format or default_format

    started = time.perf_counter()
    try:
        if args.jobs is not None and args.jobs < 1:
            raise UsageError(f"--jobs debe ser ≥ 1, recibido {args.jobs}")
        result = COMMANDS[args.command](args, fmt)
        timing = settings.REPORT_TIMING and not args.no_timing
        if not timing and isinstance(result.report, EnumerationSummary):
            result = result._replace(report=result.report.model_copy(update={"wall_time": None}))
        output = render(result, fmt, resolve_jobs(args.jobs), time.perf_counter() - started, timing)
    except ConsistencyError as exc:
        logger.error(f"[ERROR] inconsistencia interna: {exc}")
        return EXIT_INTERNAL
    except ApexRandicError as exc:
        logger.error(f"[ERROR] {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
