import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

from src.core.config import settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: Optional[str] = None, json_output: Optional[bool] = None) -> None:
    """Настроить корневой логгер (текстовый формат или JSON)"""
    level_name = (level or settings.log_level).upper()
    use_json = settings.log_json if json_output is None else json_output

    handlers = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file))

    formatter = jsonlogger.JsonFormatter(LOG_FORMAT) if use_json else logging.Formatter(LOG_FORMAT)
    for handler in handlers:
        handler.setFormatter(formatter)

    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    for handler in handlers:
        root.addHandler(handler)

    log_level = getattr(logging, level_name, logging.INFO)
    root.setLevel(log_level)
    # Также настроим логирование для всех модулей src
    logging.getLogger('src').setLevel(log_level)
