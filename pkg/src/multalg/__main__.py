"""Entry point for ``python -m multalg``."""

from .cli import main

raise SystemExit(main())
