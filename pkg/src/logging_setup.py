"""Logging configuration for command-line entry points.

Library modules only create loggers; handlers are installed here, once, by
the CLI.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler


def configure_logging(verbose: int = 0, console: Console | None = None) -> None:
    """Install a rich handler on the root logger.

    Args:
        verbose: 0 for INFO, 1 for DEBUG on the ``src`` loggers, 2 or more for
            DEBUG everywhere
        console: Console the handler writes to (stderr console by default)
    """
    handler = RichHandler(
        console=console or Console(stderr=True),
        rich_tracebacks=True,
        show_time=False,
    )
    logging.basicConfig(
        level=logging.INFO,
        format="%(message)s",
        handlers=[handler],
        force=True,
    )
    if verbose >= 2:
        logging.getLogger().setLevel(logging.DEBUG)
        logging.getLogger("src").setLevel(logging.DEBUG)
    elif verbose == 1:
        logging.getLogger("src").setLevel(logging.DEBUG)
    else:
        logging.getLogger("src").setLevel(logging.INFO)
