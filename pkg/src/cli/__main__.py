"""
src/cli/__main__.py
Entry point for `python -m src.cli`.
"""
import sys

from src.cli.main import main

sys.exit(main())
