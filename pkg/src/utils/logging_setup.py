"""
📝 Configuration du logging (console colorée sur stderr, fichier optionnel)
"""

import logging
import sys
from pathlib import Path
from typing import Optional

import colorlog

from src.utils.config import DEFAULT_LOG_FORMAT

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def setup_logging(level: str = "INFO", log_file: Optional[str] = None, fmt: str = DEFAULT_LOG_FORMAT) -> logging.Logger:
    """Configure le logger racine ; stdout reste réservé aux résultats"""
    level = level.upper()
    if level not in LEVELS:
        raise ValueError(f"Niveau de logging inconnu: {level}")

    console = colorlog.StreamHandler(sys.stderr)
    console.setFormatter(colorlog.ColoredFormatter(
        "%(log_color)s" + fmt,
        log_colors={
            "DEBUG": "cyan",
            "INFO": "green",
            "WARNING": "yellow",
            "ERROR": "red",
            "CRITICAL": "bold_red",
        },
    ))
    handlers = [console]

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(fmt))
        handlers.append(file_handler)

    logging.basicConfig(level=getattr(logging, level), handlers=handlers, force=True)
    return logging.getLogger("ghb")
