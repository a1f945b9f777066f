"""
Pytest configuration file.

Puts the repository root on sys.path so tests import the ``src`` package directly.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
