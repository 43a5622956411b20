"""Check the Tait identity on seeded random cubic multigraphs and tabulate by vertex count."""

from __future__ import annotations

import argparse
import time
from collections import defaultdict

from webfloer import tait


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-vertices", type=int, default=8)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()

    t = time.perf_counter()
    rows: dict[int, list[int]] = defaultdict(lambda: [0, 0, 0])  # graphs, failures, zero counts
    for g in tait.random_cubic_multigraphs(args.max_vertices, args.seed, args.count):
        lhs = tait.count_tait_exhaustive(g)
        rhs, _ = tait.identity_rhs(g)
        row = rows[len(g.vertices)]
        row[0] += 1
        row[1] += lhs != rhs
        row[2] += lhs == 0
    print(f"{'V':>3} {'graphs':>7} {'failures':>9} {'uncolourable':>13}")
    for v in sorted(rows):
        print(f"{v:>3} {rows[v][0]:>7} {rows[v][1]:>9} {rows[v][2]:>13}")
    print(f"{time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
