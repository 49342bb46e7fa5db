import logging
import sys
from typing import Dict

from colorama import Fore

from .config import params
from .util import colored_text

level_relations: Dict[str, int] = {
    'debug': logging.DEBUG,
    'info': logging.INFO,
    'warning': logging.WARNING,
    'error': logging.ERROR,
    'critical': logging.CRITICAL,
}

level_colors: Dict[int, str] = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED,
}


class ColoredFormatter(logging.Formatter):
    """
    Formatter that colors the level name of each record.
    """

    def __init__(self, fmt: str = '%(levelname)s %(name)s: %(message)s'):
        super().__init__(fmt)

    def format(self, record: logging.LogRecord):
        record = logging.makeLogRecord(record.__dict__)
        color = level_colors.get(record.levelno, Fore.RESET)
        record.levelname = colored_text(f'[{record.levelname}]', color)
        return super().format(record)


_root = logging.getLogger('ssw')


def get_logger(name: str) -> logging.Logger:
    if not _root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(ColoredFormatter())
        _root.addHandler(handler)
        _root.setLevel(level_relations[params['log.level']])
        _root.propagate = False
    return logging.getLogger(name)


def set_level(level: str):
    if level not in level_relations:
        raise ValueError(f'Unknown logging level \'{level}\'.')
    get_logger('ssw').setLevel(level_relations[level])
