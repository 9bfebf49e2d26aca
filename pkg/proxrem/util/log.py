# -*- coding: utf-8 -*-
"""Console and file logging helpers for proxrem."""

import logging
import os
import sys
from typing import Optional

RESET = "\033[0m"
GREEN = "\033[32m"
RED = "\033[31m"
YELLOW = "\033[33m"

__log_logger__: Optional[logging.Logger] = None
__quiet__ = False
__verbose__ = False


def get_log_logger() -> Optional[logging.Logger]:
    """Returns the file logger, or None if file logging is off."""
    return __log_logger__


def init_log_logger(name: str = "proxrem-log", level: int = logging.DEBUG,
                    log_file: str = "log/proxrem.log"):
    """Initializes the file logger with the given name and level."""
    global __log_logger__
    __log_logger__ = logging.getLogger(name)
    __log_logger__.setLevel(level)
    __log_logger__.handlers.clear()
    log_path = os.path.dirname(log_file)
    if log_path and not os.path.exists(log_path):
        os.makedirs(log_path)
    fh = logging.FileHandler(log_file, mode='a')
    fm = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    fh.setLevel(level)
    fh.setFormatter(fm)
    __log_logger__.addHandler(fh)


def close_log_logger():
    """Detaches and closes the file handlers of the file logger."""
    global __log_logger__
    if __log_logger__ is None:
        return
    for h in list(__log_logger__.handlers):
        h.close()
        __log_logger__.removeHandler(h)
    __log_logger__ = None


def set_quiet(quiet: bool):
    """Silences console output of info/echo helpers (errors still print)."""
    global __quiet__
    __quiet__ = quiet


def set_verbose(verbose: bool):
    """Shows debug messages on stderr (they always reach the file logger)."""
    global __verbose__
    __verbose__ = verbose


def log_msg(msg: str, level=logging.INFO):
    logger = get_log_logger()
    if logger:
        logger.log(level, msg)


def message(msg: str, end: str = "\n"):
    """Prints a payload line (report, graph6, table) to stdout."""
    print(msg, flush=True, end=end)
    log_msg(msg, logging.INFO)


def debug(msg: str):
    """Prints a debug message."""
    if __verbose__ and not __quiet__:
        print(f"[DEBUG] {msg}", file=sys.stderr)
    log_msg(msg, logging.DEBUG)


def echo(msg: str):
    """Prints a message without any formatting."""
    if not __quiet__:
        print(msg, file=sys.stderr, flush=True)
    log_msg(msg, logging.INFO)


def echo_g(msg: str):
    """Prints an info message green."""
    if not __quiet__:
        print(f"{GREEN}%s{RESET}" % msg, file=sys.stderr, flush=True)
    log_msg(msg, logging.INFO)


def echo_r(msg: str):
    """Prints an error message red."""
    print(f"{RED}%s{RESET}" % msg, file=sys.stderr, flush=True)
    log_msg(msg, logging.ERROR)


def echo_y(msg: str):
    """Prints a warning message yellow."""
    if not __quiet__:
        print(f"{YELLOW}%s{RESET}" % msg, file=sys.stderr, flush=True)
    log_msg(msg, logging.WARNING)


def info(msg: str):
    """Prints an info message."""
    if not __quiet__:
        print(f"{GREEN}[INFO] %s{RESET}" % msg, file=sys.stderr, flush=True)
    log_msg(msg, logging.INFO)


def warning(msg: str):
    """Prints a warning message."""
    if not __quiet__:
        print(f"{YELLOW}[WARN] %s{RESET}" % msg, file=sys.stderr, flush=True)
    log_msg(msg, logging.WARNING)


def error(msg: str):
    """Prints an error message."""
    print(f"{RED}[ERROR] %s{RESET}" % msg, file=sys.stderr, flush=True)
    log_msg(msg, logging.ERROR)
