"""Module entry point for `python -m kmodes`."""

from .cli import main

main()
