"""
Configuration management for the HOMFLYPT tools.
Handles environment variables, .env files, and default settings.
"""

import os
import logging
from typing import Optional, Dict, Any
from dataclasses import dataclass, field

from dotenv import load_dotenv

from .skein_f import EvalConfig, LeafConvention, Strategy
from .utils.stabilization import StabilizationConfig

CONVENTIONS = tuple(c.value for c in LeafConvention)
STRATEGIES = tuple(s.value for s in Strategy)

_TRUE = {"1", "true", "yes", "on"}


@dataclass
class EngineConfig:
    """Configuration of the F-engine."""
    convention: str = "forced"
    strategy: str = "staircase"
    memo_enabled: bool = True
    record_tree: bool = False

    def to_eval_config(self, record_tree: Optional[bool] = None) -> EvalConfig:
        """
        Build the evaluation config.

        Raises:
            ValueError: On an unknown convention or strategy name
        """
        return EvalConfig(
            convention=LeafConvention(self.convention),
            strategy=Strategy(self.strategy),
            record_tree=self.record_tree if record_tree is None else record_tree,
            memo_enabled=self.memo_enabled,
        )


@dataclass
class RunConfig:
    """Configuration for corpus and law runs."""
    threads: int = 1
    seed: int = 7
    cases: int = 200


@dataclass
class LoggingConfig:
    """Configuration for logging."""
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    enable_file_logging: bool = False
    log_file_path: Optional[str] = None


@dataclass
class ToolsConfig:
    """Main configuration for the HOMFLYPT tools."""
    engine: EngineConfig = field(default_factory=EngineConfig)
    stabilization: StabilizationConfig = field(default_factory=StabilizationConfig)
    run: RunConfig = field(default_factory=RunConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def from_environment(cls, env_file: Optional[str] = None) -> 'ToolsConfig':
        """
        Create configuration from environment variables.

        Args:
            env_file: Optional .env file; the default lookup is used when omitted

        Returns:
            ToolsConfig instance with values from environment

        Raises:
            ValueError: If a numeric variable cannot be parsed
        """
        load_dotenv(env_file)

        engine_config = EngineConfig(
            convention=os.getenv('HOMFLY_CONVENTION', 'forced').strip().lower(),
            strategy=os.getenv('HOMFLY_STRATEGY', 'staircase').strip().lower(),
            memo_enabled=os.getenv('HOMFLY_MEMO', 'true').strip().lower() in _TRUE,
            record_tree=os.getenv('HOMFLY_RECORD_TREE', 'false').strip().lower() in _TRUE
        )

        stabilization_config = StabilizationConfig(
            verify_extra=int(os.getenv('HOMFLY_VERIFY_EXTRA', '5')),
            backoff_multiplier=float(os.getenv('HOMFLY_BACKOFF_MULTIPLIER', '2')),
            max_attempts=int(os.getenv('HOMFLY_MAX_ATTEMPTS', '6'))
        )

        run_config = RunConfig(
            threads=int(os.getenv('HOMFLY_THREADS', '1')),
            seed=int(os.getenv('HOMFLY_SEED', '7')),
            cases=int(os.getenv('HOMFLY_CASES', '200'))
        )

        log_file = os.getenv('HOMFLY_LOG_FILE')
        logging_config = LoggingConfig(
            level=os.getenv('HOMFLY_LOG_LEVEL', 'INFO'),
            format=os.getenv('HOMFLY_LOG_FORMAT',
                             "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
            enable_file_logging=bool(log_file),
            log_file_path=log_file
        )

        return cls(
            engine=engine_config,
            stabilization=stabilization_config,
            run=run_config,
            logging=logging_config
        )


def setup_logging(config: LoggingConfig):
    """
    Configure logging based on the provided configuration.
    Console output goes to stderr; stdout is reserved for results.

    Args:
        config: Logging configuration
    """
    level = getattr(logging, config.level.upper(), logging.INFO)

    handlers = []

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(logging.Formatter(config.format))
    handlers.append(console_handler)

    if config.enable_file_logging and config.log_file_path:
        try:
            file_handler = logging.FileHandler(config.log_file_path)
            file_handler.setFormatter(logging.Formatter(config.format))
            handlers.append(file_handler)
        except Exception as e:
            logging.warning(f"Failed to setup file logging: {e}")

    logging.basicConfig(
        level=level,
        format=config.format,
        handlers=handlers,
        force=True
    )


def get_default_config() -> ToolsConfig:
    """
    Get default configuration from environment variables.

    Returns:
        Default ToolsConfig instance
    """
    return ToolsConfig.from_environment()


def validate_config(config: ToolsConfig) -> Dict[str, Any]:
    """
    Validate configuration and return validation results.

    Args:
        config: Configuration to validate

    Returns:
        Dict with validation results
    """
    results = {
        "valid": True,
        "errors": [],
        "warnings": []
    }

    if config.engine.convention not in CONVENTIONS:
        results["errors"].append(f"Unknown convention '{config.engine.convention}'")
        results["valid"] = False

    if config.engine.strategy not in STRATEGIES:
        results["errors"].append(f"Unknown strategy '{config.engine.strategy}'")
        results["valid"] = False

    if config.stabilization.verify_extra < 3:
        results["errors"].append("verify_extra must be at least 3")
        results["valid"] = False

    if config.stabilization.max_attempts < 1:
        results["errors"].append("max_attempts must be at least 1")
        results["valid"] = False

    if config.stabilization.backoff_multiplier <= 1:
        results["warnings"].append("Backoff multiplier <= 1 only advances the window by one step per attempt")

    if config.run.threads < 1:
        results["errors"].append("threads must be at least 1")
        results["valid"] = False

    if config.run.cases < 0:
        results["warnings"].append("Negative case count runs no cases")

    return results


# Global configuration instance
_config = None

def get_config() -> ToolsConfig:
    """
    Get the global configuration instance.

    Returns:
        ToolsConfig instance
    """
    global _config
    if _config is None:
        _config = get_default_config()
        setup_logging(_config.logging)
    return _config


def set_config(config: ToolsConfig):
    """
    Set the global configuration instance.

    Args:
        config: Configuration to set
    """
    global _config
    _config = config
    setup_logging(config.logging)


# Environment variable documentation
ENV_VARS_HELP = """
HOMFLYPT Tools Environment Variables (all optional, also read from .env):

Engine:
  HOMFLY_CONVENTION             Unlink leaf convention: forced | paper (default: forced)
  HOMFLY_STRATEGY               Tree strategy: staircase | negfirst (default: staircase)
  HOMFLY_MEMO                   Share the memo cache (default: true)
  HOMFLY_RECORD_TREE            Record computation trees by default (default: false)

Q-recovery window search:
  HOMFLY_VERIFY_EXTRA           Extra verification points, >= 3 (default: 5)
  HOMFLY_BACKOFF_MULTIPLIER     Growth factor of the window start (default: 2)
  HOMFLY_MAX_ATTEMPTS           Maximum windows tried (default: 6)

Runs:
  HOMFLY_THREADS                Worker pool size (default: 1)
  HOMFLY_SEED                   Fuzz seed (default: 7)
  HOMFLY_CASES                  Fuzz case count (default: 200)

Logging:
  HOMFLY_LOG_LEVEL              Logging level (default: INFO)
  HOMFLY_LOG_FILE               Log file path (optional)
  HOMFLY_LOG_FORMAT             Log message format (optional)
"""
