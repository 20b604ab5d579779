"""Entry point for ``python -m symstress``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
