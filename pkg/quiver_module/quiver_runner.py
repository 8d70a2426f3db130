"""Entry point for the quiver-coefficient command line."""

from __future__ import annotations

from quiver_core.cli import main

if __name__ == "__main__":
    main()
