import logging
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from src.core.exceptions import FormatException
from src.models.language import PatternSet

logger = logging.getLogger(__name__)


def parse_patterns(text: str) -> PatternSet:
    """Одна двоичная строка на строку файла; # - комментарий до конца строки"""
    patterns: List[str] = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise FormatException(f"not a binary string: {line!r}", number)
        patterns.append(line)
    try:
        return PatternSet(patterns=tuple(patterns))
    except ValidationError:
        raise FormatException("pattern file contains no patterns")


def format_patterns(patterns: PatternSet) -> str:
    return "".join(f"{p}\n" for p in patterns.patterns)


def read_patterns(path: Union[str, Path]) -> PatternSet:
    patterns = parse_patterns(Path(path).read_text())
    logger.debug(f"Read {len(patterns.patterns)} patterns from {path}")
    return patterns
