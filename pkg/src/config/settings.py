"""
Configuration Settings Module
Manages process-wide settings loaded from the environment and .env files
"""

from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Application configuration settings"""
    # TENEIG_THREADS, TENEIG_DEBUG_MODE, ... ; unrelated keys are ignored
    model_config = SettingsConfigDict(
        env_prefix="TENEIG_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False,
    )

    # Application Settings
    app_name: str = "TenEig"
    app_version: str = "1.1.0"
    debug_mode: bool = Field(default=False)
    log_level: str = Field(default="INFO")
    log_folder_path: Optional[Path] = Field(default=None)

    # Solver Settings
    threads: int = Field(default=4)
    show_progress: bool = Field(default=False)
    default_seed: int = Field(default=0)

    @field_validator("threads")
    @classmethod
    def check_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError("threads must be at least 1")
        return v

    @field_validator("log_level")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("log_folder_path")
    @classmethod
    def create_folder(cls, v: Optional[Path]) -> Optional[Path]:
        """Create the log folder if it doesn't exist"""
        if v:
            path = Path(v)
            path.mkdir(parents=True, exist_ok=True)
            return path
        return v

    def console_level(self) -> str:
        """Level for the console sink"""
        return "DEBUG" if self.debug_mode else self.log_level

    def validate_required_settings(self):
        """Validate cross-field constraints"""
        errors = []

        if self.threads > 256:
            errors.append("TENEIG_THREADS must not exceed 256")
        if self.log_folder_path is not None and not self.log_folder_path.is_dir():
            errors.append(f"TENEIG_LOG_FOLDER_PATH is not a directory: {self.log_folder_path}")

        if errors:
            raise ValueError(f"Configuration errors: {', '.join(errors)}")


# Create global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the process-wide settings instance"""
    return settings
