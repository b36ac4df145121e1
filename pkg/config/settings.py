"""
Configuration management for the paracontact geometry engine
"""

import configparser
from pathlib import Path

from utils.logger import Logger


class Settings:
    """Application settings manager"""

    REPORT_FORMATS = ('text', 'machine')

    def __init__(self, config_file=None):
        """Initialize settings manager"""
        self.logger = Logger.get_logger()
        self.config_file = Path(config_file) if config_file else Path(__file__).parent / "config.ini"
        self.config = configparser.ConfigParser()
        self._load_defaults()
        self.load()

    def _load_defaults(self):
        """Load default configuration values"""
        defaults = {
            'report': {
                'default_format': 'text'
            },
            'suite': {
                'identities': 'all'
            },
            'models': {
                'search_directory': ''
            },
            'logging': {
                'level': 'WARNING',
                'log_to_file': 'False',
                'log_directory': 'logs'
            }
        }

        for section, options in defaults.items():
            self.config.add_section(section)
            for key, value in options.items():
                self.config.set(section, key, value)

    def load(self):
        """Load configuration from file"""
        try:
            if self.config_file.exists():
                self.config.read(self.config_file, encoding='utf-8')
                self.logger.debug(f"Configuration loaded from {self.config_file}")
            else:
                self.logger.debug("Configuration file not found, using defaults")
                self.save()  # Create default config file

        except configparser.Error as e:
            self.logger.error(f"Error loading configuration: {e}")

    def save(self):
        """Save configuration to file"""
        try:
            self.config_file.parent.mkdir(parents=True, exist_ok=True)

            with open(self.config_file, 'w', encoding='utf-8') as f:
                self.config.write(f)

            self.logger.debug(f"Configuration saved to {self.config_file}")

        except OSError as e:
            self.logger.error(f"Error saving configuration: {e}")

    def get(self, section, option, fallback=None):
        """Get configuration value"""
        try:
            return self.config.get(section, option, fallback=fallback)
        except (configparser.NoSectionError, configparser.NoOptionError):
            return fallback

    def getboolean(self, section, option, fallback=False):
        """Get boolean configuration value"""
        try:
            return self.config.getboolean(section, option, fallback=fallback)
        except (configparser.NoSectionError, configparser.NoOptionError, ValueError):
            return fallback

    def get_report_format(self):
        """Get the default report format, falling back to text"""
        fmt = self.get('report', 'default_format', 'text').strip().lower()
        if fmt not in self.REPORT_FORMATS:
            self.logger.warning(f"Unknown report format '{fmt}' in configuration, using text")
            return 'text'
        return fmt

    def get_identity_filter(self):
        """Get the default identity filter (None means all)"""
        value = self.get('suite', 'identities', 'all').strip()
        if not value or value.lower() == 'all':
            return None
        return [name.strip() for name in value.split(',') if name.strip()]

    def get_search_directory(self):
        """Get the extra directory searched for model files"""
        value = self.get('models', 'search_directory', '').strip()
        return Path(value) if value else None
