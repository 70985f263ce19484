import json
import logging
import os
import sys
import uuid
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler

from utils.settings import get_settings


class JsonFormatter(logging.Formatter):
    def __init__(self, json_format=False):
        """
        :param json_format: True for one JSON object per line, False for the console layout
        """
        super().__init__()
        self.json_format = json_format

    def format(self, record):
        log_record = {
            "timestamp": self.formatTime(record, self.datefmt),
            "log_level": record.levelname,
            "log_id": str(uuid.uuid4()),
            "name": record.name,
            "file": os.path.basename(record.pathname),
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
        }
        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)

        if self.json_format:
            return json.dumps(log_record)

        text = (
            f"[{log_record['timestamp']}] {log_record['log_level']} "
            f"[{log_record['file']}:{log_record['line']} - {log_record['function']}] "
            f"{log_record['message']}"
        )
        if "exception" in log_record:
            text = f"{text}\n{log_record['exception']}"
        return text


class Logger:
    def __init__(self, name, level=None, log_dir=None, log_file="torsionlab.log", run_log_file="runs.log"):
        """
        :param name: logger name, normally the module name
        :param level: logging level; DEBUG when TORSIONLAB_DEBUG or DEBUG is set
        :param log_dir: directory for rotating files; empty string disables file output
        :param log_file: application log file name
        :param run_log_file: file receiving one JSON line per command or request
        """
        settings = get_settings()
        if level is None:
            debug = settings.debug or os.getenv("DEBUG", "").lower() in {"1", "true", "yes"}
            level = logging.DEBUG if debug else logging.INFO
        if log_dir is None:
            log_dir = settings.log_dir

        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)
        self.logger.propagate = False

        self.run_logger = logging.getLogger(f"{name}_runs")
        self.run_logger.setLevel(level)
        self.run_logger.propagate = False

        # handlers are shared per logger name, attach them once
        if not self.logger.handlers:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(JsonFormatter(json_format=settings.log_format == "json"))
            self.logger.addHandler(console_handler)

            if log_dir:
                os.makedirs(log_dir, exist_ok=True)
                app_file_handler = RotatingFileHandler(
                    os.path.join(log_dir, log_file), maxBytes=10 * 1024 * 1024, backupCount=5
                )
                app_file_handler.setFormatter(JsonFormatter(json_format=True))
                self.logger.addHandler(app_file_handler)

        if not self.run_logger.handlers:
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)
                run_file_handler = RotatingFileHandler(
                    os.path.join(log_dir, run_log_file), maxBytes=10 * 1024 * 1024, backupCount=5
                )
                run_file_handler.setFormatter(logging.Formatter("%(message)s"))
                self.run_logger.addHandler(run_file_handler)
            else:
                self.run_logger.addHandler(logging.NullHandler())

    def info(self, message):
        self.logger.info(message, stacklevel=2)

    def debug(self, message):
        self.logger.debug(message, stacklevel=2)

    def warning(self, message):
        self.logger.warning(message, stacklevel=2)

    def error(self, message, exc_info=False):
        self.logger.error(message, exc_info=exc_info, stacklevel=2)

    def run_log(self, command, target, status, details=None):
        """
        Record one experiment run.
        :param command: CLI subcommand or API route
        :param target: what the run acted on (curve text, suite name, output path)
        :param status: "success" or an error class name
        :param details: extra JSON-serializable context
        """
        run_record = {
            "timestamp": self._get_current_time(),
            "command": command,
            "target": target,
            "status": status,
            "details": details,
        }
        self.run_logger.info(json.dumps(run_record, default=str), stacklevel=2)

    @staticmethod
    def _get_current_time():
        return datetime.now(timezone.utc).isoformat()
