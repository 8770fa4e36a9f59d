"""Module entry point: ``python -m hilbertnorm`` behaves like the
``hilbertnorm`` console script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
