"""Tests for configuration, logging and helper utilities."""

import logging

import pytest

from config.settings import Settings
from utils.helpers import PerformanceTimer
from utils.logger import Logger, log_performance


class TestSettings:

    def test_defaults_written_when_missing(self, tmp_path):
        path = tmp_path / "sub" / "config.ini"
        settings = Settings(path)
        assert path.exists()
        assert settings.get_report_format() == "text"
        assert settings.get_identity_filter() is None
        assert settings.get_search_directory() is None
        assert settings.get("logging", "level") == "WARNING"

    def test_values_from_file(self, tmp_path):
        path = tmp_path / "config.ini"
        path.write_text("[report]\ndefault_format = Machine\n"
                        "[suite]\nidentities = torsion_free, weyl_zero\n"
                        "[models]\nsearch_directory = models_dir\n", encoding="utf-8")
        settings = Settings(path)
        assert settings.get_report_format() == "machine"
        assert settings.get_identity_filter() == ["torsion_free", "weyl_zero"]
        assert settings.get_search_directory().name == "models_dir"

    def test_unknown_report_format_falls_back(self, tmp_path):
        path = tmp_path / "config.ini"
        path.write_text("[report]\ndefault_format = xml\n", encoding="utf-8")
        assert Settings(path).get_report_format() == "text"

    def test_typed_getters(self, tmp_path):
        path = tmp_path / "config.ini"
        path.write_text("[logging]\nlog_to_file = yes\nlevel = loud\n", encoding="utf-8")
        settings = Settings(path)
        assert settings.getboolean("logging", "log_to_file") is True
        assert settings.getboolean("logging", "level", fallback=True) is True
        assert settings.getboolean("missing", "option") is False
        assert settings.get("missing", "option", "fallback") == "fallback"

    def test_save_keeps_loaded_values(self, tmp_path):
        path = tmp_path / "config.ini"
        path.write_text("[report]\ndefault_format = machine\n", encoding="utf-8")
        settings = Settings(path)
        path.unlink()
        settings.save()
        reloaded = Settings(path)
        assert reloaded.get_report_format() == "machine"
        assert reloaded.get("logging", "level") == "WARNING"


class TestLogger:

    def test_singleton(self):
        assert Logger() is Logger()
        assert Logger.get_logger() is logging.getLogger("Paracontact")

    def test_set_level(self):
        logger = Logger()
        logger.set_level("DEBUG")
        assert logger.console_handler.level == logging.DEBUG
        logger.set_level("not-a-level")
        assert logger.console_handler.level == logging.DEBUG
        logger.set_level(logging.WARNING)
        assert logger.console_handler.level == logging.WARNING

    def test_configure_adds_file_handler(self, tmp_path):
        path = tmp_path / "config.ini"
        path.write_text(f"[logging]\nlevel = ERROR\nlog_to_file = True\nlog_directory = {tmp_path / 'logs'}\n",
                        encoding="utf-8")
        logger = Logger()
        before = list(logger.logger.handlers)
        try:
            logger.configure(Settings(path))
            assert logger.console_handler.level == logging.ERROR
            assert logger.log_file is not None and logger.log_file.parent == tmp_path / "logs"
            Logger.get_logger().info("written to the log file")
        finally:
            for handler in logger.logger.handlers[len(before):]:
                handler.close()
                logger.logger.removeHandler(handler)
            logger.set_level(logging.WARNING)
        assert "written to the log file" in logger.log_file.read_text(encoding="utf-8")

    def test_log_performance(self, caplog):
        @log_performance
        def square(x):
            return x * x

        @log_performance
        def broken():
            raise RuntimeError("boom")

        logger = Logger.get_logger()
        logger.addHandler(caplog.handler)
        try:
            assert square(4) == 16
            with pytest.raises(RuntimeError):
                broken()
        finally:
            logger.removeHandler(caplog.handler)
        assert "Function square executed in" in caplog.text
        assert "Function broken failed after" in caplog.text
        assert "boom" in caplog.text


def test_performance_timer():
    with PerformanceTimer("noop", log_result=False) as timer:
        sum(range(10))
    assert timer.get_duration() >= 0
    assert PerformanceTimer().get_duration() == 0.0
