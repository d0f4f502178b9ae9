#!/usr/bin/env python3
"""Spot-check minimal representations against the proven lower bounds.

In rings where 3 divides at most one parameter, 3+3i needs 3 cubes (the
2-cube system is obstructed mod 9/3); where 3 divides both, 4 needs 4
cubes (cube triples miss 4 mod 9).  The bounded searches then look for
witnesses at the minimum counts.
"""

import time

from quatcube import (
    Quaternion,
    RingParams,
    SearchConfig,
    min_cubes_search,
    three_cube_residues_mod9,
    two_cube_obstruction,
)


def main() -> int:
    p11 = RingParams(1, 1)
    target = Quaternion(p11, 3, 3, 0, 0)
    print("ring (1,1):")
    print("  2-cube obstruction for 3+3i:", two_cube_obstruction(p11, target))
    start = time.perf_counter()
    roots = min_cubes_search(target, SearchConfig(max_cubes=3, coeff_bound=10, outer_bound=6))
    elapsed = time.perf_counter() - start
    if roots is None:
        print(f"  3-cube search: inconclusive within the box ({elapsed:.1f}s)")
    else:
        print(f"  3+3i = {' + '.join(f'({r})^3' for r in roots)}  ({elapsed:.1f}s)")

    p33 = RingParams(3, 3)
    four = Quaternion.scalar(p33, 4)
    print("ring (3,3):")
    print("  cube-triple residues mod 9:", sorted(three_cube_residues_mod9()))
    print("  2-cube search for 4 (bound 30):",
          min_cubes_search(four, SearchConfig(max_cubes=2, coeff_bound=30)))
    print("  3-cube search for 4 (bound 20):",
          min_cubes_search(four, SearchConfig(max_cubes=3, coeff_bound=20)))
    roots = min_cubes_search(four, SearchConfig(max_cubes=4, coeff_bound=1, outer_bound=1))
    print(f"  4 = {' + '.join(f'({r})^3' for r in roots)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
