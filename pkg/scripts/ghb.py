#!/usr/bin/env python3
"""
Point d'entrée de la ligne de commande ghb
"""

import sys
from pathlib import Path

# Ajouter la racine du projet au PYTHONPATH
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
