"""Run the golden corpus, report failures and write the canonical JSON result."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from webfloer import corpus
from webfloer.webmodel import canonical_json


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=4)
    ap.add_argument("--out", type=Path, default=Path("corpus_result.json"))
    args = ap.parse_args()
    t = time.perf_counter()
    res = corpus.run_corpus(threads=args.threads)
    args.out.write_text(canonical_json(res) + "\n", encoding="utf-8")
    for row in res["entries"]:
        if not row["pass"]:
            print(f"FAIL {row['name']}: {row.get('error') or (row.get('expected'), row.get('got'))}")
    print(f"{res['passed']}/{res['total']} passed in {time.perf_counter() - t:.1f}s -> {args.out}")
    return 1 if res["failed"] else 0


if __name__ == "__main__":
    sys.exit(main())
