import argparse

from src.cli.commands import block, check, clean, construct, gen, lang, match, probe, tw, verify
from src.models.report import TOOL_NAME, TOOL_VERSION

# Порядок подключения = порядок в справке
COMMANDS = [gen, check, construct, tw, match, clean, block, probe, lang, verify]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Кисточки, хасслы, массивы и t-чистые графы: генерация, проверка, решатели",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--json", action="store_true", help="Печатать отчет в JSON")
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Уровень логирования (по умолчанию из настроек)")
    parser.add_argument("--seed", type=int, default=None, help="Зерно для случайных подкоманд")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        module.register(subparsers)
    return parser
