import logging
import sys

from loguru import logger


class InterceptHandler(logging.Handler):
    """
    Default handler from examples in loguru documentation.

    This handler intercepts all log requests and
    passes them to loguru.

    For more info see:
    https://loguru.readthedocs.io/en/stable/overview.html#entirely-compatible-with-standard-logging
    """

    def emit(self, record: logging.LogRecord) -> None:  # pragma: no cover
        """
        Propagates logs to loguru.

        :param record: record to log.
        """
        try:
            level: str | int = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Find caller from where originated the logged message
        frame, depth = logging.currentframe(), 2
        while frame.f_code.co_filename == logging.__file__ or frame.f_code.co_filename == __file__:
            frame = frame.f_back  # type: ignore
            depth += 1
        logger.opt(depth=depth, exception=record.exc_info).log(
            level,
            record.getMessage(),
        )


def configure_intercepter(level: str = "INFO") -> None:
    """
    Routes the standard logging module (numpy, networkx and friends) through loguru.

    The root logger gets a single InterceptHandler; its level follows the level the
    CLI was asked for so third-party debug chatter only shows up on request.
    """
    intercept_handler = InterceptHandler()
    logging.basicConfig(handlers=[intercept_handler], level=level, force=True)


def configure_pretty_logging(level: str = "INFO") -> None:
    """
    Configures the logging system to output pretty logs.

    Enables the 'uc_spectra' logger, installs the intercept handler, removes all
    existing loguru handlers and adds one that writes colourised records to stderr.
    Results are printed on stdout, so logs never mix with CSV/JSON output.
    """
    logger.enable("uc_spectra")

    configure_intercepter(level)

    logger.remove()
    logger.add(
        sys.stderr,
        level=level,
        backtrace=False,
        diagnose=False,
        serialize=False,
        colorize=True,
    )


def configure_json_logging(level: str = "INFO") -> None:
    """
    Configures the logging system to output logs in JSON format.

    Same as configure_pretty_logging, but every record is serialized by loguru into
    one JSON object per line on stderr.
    """
    logger.enable("uc_spectra")

    configure_intercepter(level)

    logger.remove()
    logger.add(
        sys.stderr,
        format="{message}",
        level=level,
        backtrace=False,
        diagnose=False,
        serialize=True,
    )
