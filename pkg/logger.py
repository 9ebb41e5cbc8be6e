# file loggers; stdout stays reserved for command output
import os
import logging
from logging.handlers import TimedRotatingFileHandler
from config import LOGGER_PATH, LOG_BACKUP_COUNT, LOG_MAX_BYTES

FORMAT = '[%(asctime)-15s][%(filename)s:%(lineno)d][%(levelname)s] %(message)s'
loggers = {}

os.makedirs(LOGGER_PATH, exist_ok=True)


class SizeAndTimedRotatingFileHandler(TimedRotatingFileHandler):
    """Rolls over at midnight, or earlier once the file reaches max_bytes."""

    def __init__(self, filename, max_bytes=LOG_MAX_BYTES, backup_count=LOG_BACKUP_COUNT):
        super().__init__(filename, when='midnight', backupCount=backup_count)
        self.max_bytes = max_bytes

    def shouldRollover(self, record):
        if super().shouldRollover(record):
            return True
        return os.path.exists(self.baseFilename) and os.path.getsize(self.baseFilename) >= self.max_bytes


def setup_logger(name, log_file, level=logging.DEBUG, max_bytes=LOG_MAX_BYTES):
    """
    Logger writing to log_file, cached by name so repeated imports share one handler.
    """
    name = f"cokernel_{name}"
    if loggers.get(name):
        return loggers.get(name)

    handler = SizeAndTimedRotatingFileHandler(log_file, max_bytes=max_bytes)
    handler.setFormatter(logging.Formatter(FORMAT))
    handler.setLevel(level)
    logger2 = logging.getLogger(name)
    logger2.setLevel(level)
    logger2.addHandler(handler)
    logger2.propagate = False
    loggers[name] = logger2
    return logger2


logger_access = setup_logger("access", os.path.join(LOGGER_PATH, 'access.log'))
logger_experiment = setup_logger("experiment", os.path.join(LOGGER_PATH, 'experiment.log'))
logger_error = setup_logger("error", os.path.join(LOGGER_PATH, 'error.log'))
