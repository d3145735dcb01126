#!/usr/bin/env python3
"""
TenEig - Command Line Entry Point
"""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.main import run_cli


if __name__ == "__main__":
    sys.exit(run_cli())
