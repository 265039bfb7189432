"""``python -m aft_sim``: the ``aft-sim`` console script without installing it.

    python -m aft_sim run par_celsius --csv decisions.csv
"""

from __future__ import annotations

import sys

from .cli import main

if __name__ == "__main__":  # pragma: no cover - exercised via runpy in tests/e2e
    raise SystemExit(main(sys.argv[1:]))
