import logging
from typing import Optional

from .config import get_settings

_PACKAGE_LOGGER = "poroshock"


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """Attach the lab's stream handler to the package logger.

    Safe to call more than once; the handler is installed only the first time.
    """
    app_settings = get_settings()
    logger = logging.getLogger(_PACKAGE_LOGGER)
    logger.setLevel((level or app_settings.LOG_LEVEL).upper())

    if not any(getattr(h, "_poroshock", False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter(
                "[%(asctime)s] [%(levelname)s] [%(name)s] [%(funcName)s():%(lineno)s] "
                f"[APP:{app_settings.APP_NAME} PID:%(process)d TID:%(thread)d] - %(message)s"
            )
        )
        handler._poroshock = True
        logger.addHandler(handler)
    return logger
