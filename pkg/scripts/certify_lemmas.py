#!/usr/bin/env python3
"""Exhaustively certify the congruence recipes and pair tables for all 36
(a mod 6, b mod 6) residue pairs and print one line per pair."""

import time

from quatcube import lemma_residue_check


def main() -> int:
    start = time.perf_counter()
    failed = 0
    for a6 in range(6):
        for b6 in range(6):
            rep = lemma_residue_check(a6, b6)
            status = "ok" if rep.passed else f"FAILED ({len(rep.failures)})"
            swapped = ", swapped" if rep.case.swapped else ""
            print(
                f"({a6},{b6}) [{rep.case}{swapped}] "
                f"{rep.classes_checked} recipe classes, "
                f"{rep.pair_targets_checked} pair targets: {status}"
            )
            failed += not rep.passed
    print(f"done in {time.perf_counter() - start:.2f}s, {failed} failing pairs")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
