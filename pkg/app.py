"""
ballmorph command-line application.

Computes weighted intrinsic volumes of unions of balls, their gradients,
degeneracy reports and oracle checks, writing one JSON document per run.
Run ``python app.py --help`` for the subcommands.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.main import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
