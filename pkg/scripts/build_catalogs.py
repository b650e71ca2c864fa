#!/usr/bin/env python3
"""Drive the long sequence searches, caching blocks for resume.

Run from the repository root:

    python3 scripts/build_catalogs.py 14 15 16 17 18

Each length is searched with the deep symmetry cut and two worker
processes; block results land in the cache directory (default
.golay3-work under the repo root, override with GOLAY3_CACHE_DIR) so
interrupted runs resume where they left off.
"""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from golay3.search import _search_raw


def main() -> None:
    lengths = [int(a) for a in sys.argv[1:]] or [14, 15, 16, 17]
    cache = os.environ.get("GOLAY3_CACHE_DIR") or os.path.join(
        os.path.dirname(__file__), "..", ".golay3-work"
    )
    os.makedirs(cache, exist_ok=True)
    for s in lengths:
        t0 = time.time()
        found = _search_raw(s, "deep", threads=2, cache_dir=cache)
        print(f"s={s}: {len(found)} canonical-cut triads in "
              f"{time.time() - t0:.0f}s", flush=True)


if __name__ == "__main__":
    main()
