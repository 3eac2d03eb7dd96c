import json
import logging
import sys
import time
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from src.cli.router import build_parser
from src.core.config import settings
from src.core.exceptions import ToolkitException
from src.core.logging_setup import setup_logging
from src.models.report import TOOL_NAME, TOOL_VERSION, ExitCode, RunReport

logger = logging.getLogger(__name__)


def _render(report: RunReport, console: Console) -> None:
    """Человекочитаемый вывод отчета"""
    if report.criteria:
        table = Table(title="Acceptance criteria")
        table.add_column("#", justify="right")
        table.add_column("Criterion")
        table.add_column("Result")
        table.add_column("Checked", justify="right")
        table.add_column("Seconds", justify="right")
        table.add_column("Detail")
        for result in report.criteria:
            status = "[green]PASS[/green]" if result.passed else "[red]FAIL[/red]"
            detail = result.detail
            if result.skipped:
                detail = f"{detail} (skipped: {'; '.join(result.skipped)})" if detail else f"skipped: {'; '.join(result.skipped)}"
            table.add_row(str(result.number), result.title, status, str(result.checked), f"{result.seconds:.2f}", detail)
        console.print(table)

    table = Table(title=f"{TOOL_NAME} {TOOL_VERSION}", show_header=False)
    table.add_column("field", style="bold")
    table.add_column("value")
    table.add_row("command", " ".join(report.command))
    table.add_row("verdict", report.verdict)
    table.add_row("exit code", f"{report.exit_code.value} ({report.exit_code.name.lower()})")
    if report.seed is not None:
        table.add_row("seed", str(report.seed))
    for key, value in report.data.items():
        text = value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)
        table.add_row(key, text)
    for path, digest in report.input_hashes.items():
        table.add_row(f"sha256 {path}", digest)
    table.add_row("seconds", f"{report.seconds:.3f}")
    console.print(table)


def dispatch(argv: List[str]) -> RunReport:
    """Разобрать аргументы и выполнить подкоманду"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    logger.info("=" * 60)
    logger.info(f"{TOOL_NAME} {TOOL_VERSION}: {' '.join(argv)}")
    logger.info("=" * 60)
    for key, value in settings.budget_summary().items():
        logger.info(f"{key}: {value}")
    logger.info(f"Seed: {args.seed}")
    logger.info("=" * 60)

    started = time.perf_counter()
    report = args.handler(args)
    report.command = list(argv)
    report.seconds = round(time.perf_counter() - started, 3)
    return report


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    json_output = "--json" in argv
    try:
        report = dispatch(argv)
    except SystemExit as e:
        # argparse: --help и ошибки разбора
        return int(e.code or 0)
    except (ToolkitException, OSError) as e:
        logger.debug(f"{type(e).__name__}: {e}", exc_info=True)
        report = RunReport(command=list(argv), verdict=f"error: {e}", exit_code=ExitCode.ERROR,
                           data={"error": type(e).__name__})
        if not json_output:
            Console(stderr=True).print(f"[red]{type(e).__name__}[/red]: {e}")
            return ExitCode.ERROR.value

    if json_output:
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")
    elif report.output is not None:
        sys.stdout.write(report.output + "\n")
    else:
        _render(report, Console())
    return report.exit_code.value


if __name__ == "__main__":
    sys.exit(main())
