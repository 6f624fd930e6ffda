#!/usr/bin/env python3
"""
distmin
=======
Minimal-distortion diffeomorphisms between closed planar curves.

Usage:
    python scripts/distmin.py analytic --lm 6.283185307 --ln 12.566370614
    python scripts/distmin.py diagnose --lm 1 --ln 0.5
    python scripts/distmin.py minimize --source m.csv --target n.csv --out u.csv

Set DISTMIN_LOG=quiet|info|debug to control stderr logging.
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.interfaces.cli import run


if __name__ == "__main__":
    sys.exit(run())
