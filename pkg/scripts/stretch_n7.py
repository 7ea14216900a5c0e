"""The n = 7 rows through the SD engine, with timings.

Roughly 1.5 minutes on one core: about 45 s to grow the canonical positive
threshold functions on 7 variables, then one pass per genus.
"""

import json
import time

from goldilocks.chambers import REFERENCE_POSITIVE, REFERENCE_ZERO, count_chambers
from goldilocks.enumeration import Engine, Genus, canonical_positive_ltfs


def main():
    out = {}
    t0 = time.perf_counter()
    reps = canonical_positive_ltfs(7)
    out["canonical_positive_ltfs"] = len(reps)
    out["generate_seconds"] = round(time.perf_counter() - t0, 1)
    for genus, ref in ((Genus.POSITIVE, REFERENCE_POSITIVE[7]), (Genus.ZERO, REFERENCE_ZERO[7])):
        t0 = time.perf_counter()
        row = count_chambers(7, genus, Engine.SD)
        out[genus.value] = {**row.to_json(), "seconds": round(time.perf_counter() - t0, 1),
                            "matches_reference": (row.count, row.orbit_count) == ref}
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
