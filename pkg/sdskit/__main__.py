# -*- coding: utf-8 -*-
"""Run the sdskit command line with ``python -m sdskit``."""
import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
