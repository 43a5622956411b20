"""Print framed ranks of unlinks by summing over based 1-sets, next to the closed forms."""

from __future__ import annotations

import argparse

from webfloer import catalogue, webs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    print(f"{'n':>2} {'rank':>6} {'4^(n-1)':>8} {'restricted':>11} {'3^(n-1)':>8}")
    for n in range(1, args.max_n + 1):
        web = webs.unlink(n)
        full = catalogue.framed_rank(web, "c1").rank
        res = catalogue.framed_rank(web, "c1", restrict_spinc=True).rank
        print(f"{n:>2} {full:>6} {4 ** (n - 1):>8} {res:>11} {3 ** (n - 1):>8}")
    extra = catalogue.framed_rank(webs.theta_plus_unknot(), "p")
    print(f"theta + unknot, basepoint on the circle: {extra.rank}")


if __name__ == "__main__":
    main()
