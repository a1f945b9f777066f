#!/usr/bin/env python3
"""
Run the bcom command-line front end from a source checkout.

Example:
    python scripts/bcom.py homology --group S3 --tau zmod:2 --ell 2 --max-degree 3
"""

import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
