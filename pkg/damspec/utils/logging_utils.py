import logging
import typing


def make_divider_block() -> str:
    return "=" * 35


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """
    Root logging setup for the command line entry point. ``quiet`` wins over
    ``verbose``.
    """
    level: int = logging.INFO
    if quiet:
        level = logging.WARNING
    elif verbose:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def log_block(logger: logging.Logger, title: str, lines: typing.Iterable[str]) -> None:
    """
    Writes a framed multi-line debug dump.
    """
    logger.debug(make_divider_block())
    logger.debug(title)
    logger.debug(make_divider_block())
    for line in lines:
        logger.debug(line)
    logger.debug(make_divider_block())
