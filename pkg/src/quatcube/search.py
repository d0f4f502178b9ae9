"""Bounded search and exhaustive modular verification oracles.

Everything here is deliberately independent of the constructive
decomposition pipeline, so the two can certify each other:

* :func:`min_cubes_search` -- box-bounded minimal-representation search
  by meet-in-the-middle over a table of single cubes;
* :func:`three_cube_residues_mod9` / :func:`two_cube_obstruction` --
  modular enumerators proving the two non-representability witnesses;
* :func:`lemma_residue_check` -- exhaustive certification of the
  congruence recipes and pair tables over whole residue classes.

The searches prune with attainable mod-9 coefficient patterns of cubes
(and of sums of two or three cubes).  Pruning only ever skips regions
proven empty, so results are identical with and without it, and parallel
runs return exactly what a serial run returns.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from itertools import product

from .decompose import cube_root_congruence, select_pair
from .errors import InvalidResidues, MixedRings
from .quat import Quaternion, RingParams, cube, swap_iso
from .residues import (
    Case,
    CaseTag,
    ResidueClass,
    classify_case,
    in_S,
    in_T2,
    in_T3,
)

Coeffs = tuple[int, int, int, int]

_DIV3 = (0, 3)

# keep the (root, cube) list in memory only for boxes up to this many points
_ENTRY_CACHE_LIMIT = 600_000


@dataclass(frozen=True)
class SearchConfig:
    """Box bounds for minimal-representation search.

    Each root coefficient ranges over [-coeff_bound, coeff_bound]; for
    searches with 3 or 4 cubes the outermost root(s) use the (usually
    smaller) outer_bound box, defaulting to coeff_bound.  Absence within
    a box is never a proof of non-representability.
    """

    max_cubes: int
    coeff_bound: int = 10
    outer_bound: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.max_cubes <= 4:
            raise ValueError(f"max_cubes must be in 1..4, got {self.max_cubes}")
        if self.coeff_bound < 0:
            raise ValueError(f"coeff_bound must be non-negative, got {self.coeff_bound}")
        if self.outer_bound is not None and self.outer_bound < 0:
            raise ValueError(f"outer_bound must be non-negative, got {self.outer_bound}")

    @property
    def outer(self) -> int:
        return self.coeff_bound if self.outer_bound is None else self.outer_bound


@dataclass(frozen=True)
class LemmaReport:
    """Result of certifying the recipes of one (a mod 6, b mod 6) pair."""

    case: CaseTag
    classes_checked: int
    failures: tuple[ResidueClass, ...]
    pair_targets_checked: int

    @property
    def passed(self) -> bool:
        return not self.failures


def _cube_coeffs(a: int, b: int, c: Coeffs) -> Coeffs:
    c0, c1, c2, c3 = c
    p = a * c1 * c1 + b * c2 * c2 + a * b * c3 * c3
    f = 3 * c0 * c0 - p
    return ((c0 * c0 - 3 * p) * c0, f * c1, f * c2, f * c3)


def _sig(c: Coeffs) -> Coeffs:
    return (c[0] % 9, c[1] % 9, c[2] % 9, c[3] % 9)


def _encode(s0: int, s1: int, s2: int, s3: int) -> int:
    # base-32 digits keep sums of up to three mod-9 signatures carry-free
    return (s0 << 15) | (s1 << 10) | (s2 << 5) | s3


class _BitGrid:
    """Constant-time bit membership over base-32-encoded signatures."""

    __slots__ = ("_bytes",)

    def __init__(self, mask: int) -> None:
        self._bytes = mask.to_bytes((mask.bit_length() + 7) // 8 or 1, "little")

    def test(self, idx: int) -> bool:
        byte = idx >> 3
        if byte >= len(self._bytes):
            return False
        return (self._bytes[byte] >> (idx & 7)) & 1 == 1


class _Mod9Tables:
    """Attainable mod-9 coefficient patterns of cubes in one ring.

    Depends only on (a mod 9, b mod 9).  ``cube_sig`` maps each root
    signature to its cube's signature; the grids answer whether a target
    signature is attainable as a sum of one, two or three cube
    signatures.
    """

    __slots__ = (
        "cube_sig",
        "single",
        "by_cube_sig",
        "_pairs",
        "_triples",
        "_first_ok_memo",
        "_admissible_memo",
    )

    def __init__(self, a9: int, b9: int) -> None:
        cube_sig: dict[Coeffs, Coeffs] = {}
        by_cube_sig: dict[Coeffs, list[Coeffs]] = {}
        for s in product(range(9), repeat=4):
            cs = _sig(_cube_coeffs(a9, b9, s))
            cube_sig[s] = cs
            by_cube_sig.setdefault(cs, []).append(s)
        self.cube_sig = cube_sig
        self.single = frozenset(by_cube_sig)
        self.by_cube_sig = by_cube_sig

        codes = sorted({_encode(*s) for s in self.single})
        mask = 0
        for c in codes:
            mask |= 1 << c
        pair = 0
        for c in codes:
            pair |= mask << c
        triple = 0
        for c in codes:
            triple |= pair << c
        self._pairs = _BitGrid(pair)
        self._triples = _BitGrid(triple)
        self._first_ok_memo: dict[Coeffs, frozenset[Coeffs]] = {}
        self._admissible_memo: dict[Coeffs, tuple[Coeffs, ...]] = {}

    def pair_attainable(self, s: Coeffs) -> bool:
        test = self._pairs.test
        for u0 in (s[0], s[0] + 9):
            for u1 in (s[1], s[1] + 9):
                for u2 in (s[2], s[2] + 9):
                    for u3 in (s[3], s[3] + 9):
                        if test(_encode(u0, u1, u2, u3)):
                            return True
        return False

    def triple_attainable(self, s: Coeffs) -> bool:
        test = self._triples.test
        for u0 in (s[0], s[0] + 9, s[0] + 18):
            for u1 in (s[1], s[1] + 9, s[1] + 18):
                for u2 in (s[2], s[2] + 9, s[2] + 18):
                    for u3 in (s[3], s[3] + 9, s[3] + 18):
                        if test(_encode(u0, u1, u2, u3)):
                            return True
        return False

    def first_root_classes(self, target_sig: Coeffs) -> frozenset[Coeffs]:
        """Root classes mod 9 whose cube leaves a pair-attainable remainder."""
        got = self._first_ok_memo.get(target_sig)
        if got is None:
            t0, t1, t2, t3 = target_sig
            got = frozenset(
                s
                for s, cs in self.cube_sig.items()
                if self.pair_attainable(
                    ((t0 - cs[0]) % 9, (t1 - cs[1]) % 9, (t2 - cs[2]) % 9, (t3 - cs[3]) % 9)
                )
            )
            self._first_ok_memo[target_sig] = got
        return got

    def admissible_root_classes(self, target_sig: Coeffs) -> tuple[Coeffs, ...]:
        """Root classes mod 9 whose cube leaves a single-cube-attainable
        remainder; a root outside these classes cannot be half of a pair
        summing to the target."""
        got = self._admissible_memo.get(target_sig)
        if got is None:
            t0, t1, t2, t3 = target_sig
            out: list[Coeffs] = []
            for c in self.single:
                need = ((t0 - c[0]) % 9, (t1 - c[1]) % 9, (t2 - c[2]) % 9, (t3 - c[3]) % 9)
                roots = self.by_cube_sig.get(need)
                if roots is not None:
                    out.extend(roots)
            got = tuple(out)
            self._admissible_memo[target_sig] = got
        return got


_MOD9_CACHE: dict[tuple[int, int], _Mod9Tables] = {}


def _mod9_tables(params: RingParams) -> _Mod9Tables:
    key = (params.a % 9, params.b % 9)
    tabs = _MOD9_CACHE.get(key)
    if tabs is None:
        tabs = _Mod9Tables(*key)
        _MOD9_CACHE[key] = tabs
    return tabs


class _SearchSpace:
    """Lazily built cube table for one (ring, coeff_bound) box."""

    def __init__(self, params: RingParams, bound: int) -> None:
        self.params = params
        self.bound = bound
        self._table: dict[Coeffs, Coeffs] | None = None
        self._entries: list[tuple[Coeffs, Coeffs]] | None = None
        self._by_class: dict[Coeffs, list[tuple[Coeffs, Coeffs]]] | None = None

    def _box(self) -> int:
        return (2 * self.bound + 1) ** 4

    def iter_entries(self):
        """(root, cube) pairs in lexicographic root order."""
        if self._entries is not None:
            return iter(self._entries)
        a, b = self.params.a, self.params.b
        rng = range(-self.bound, self.bound + 1)
        gen = ((c, _cube_coeffs(a, b, c)) for c in product(rng, rng, rng, rng))
        if self._box() <= _ENTRY_CACHE_LIMIT:
            self._entries = list(gen)
            return iter(self._entries)
        return gen

    def by_class(self) -> dict[Coeffs, list[tuple[Coeffs, Coeffs]]] | None:
        """Entries grouped by root class mod 9, each group in lexicographic
        root order.  None for boxes too large to keep in memory."""
        if self._box() > _ENTRY_CACHE_LIMIT:
            return None
        if self._by_class is None:
            grouped: dict[Coeffs, list[tuple[Coeffs, Coeffs]]] = {}
            for root, cub in self.iter_entries():
                key = (root[0] % 9, root[1] % 9, root[2] % 9, root[3] % 9)
                grouped.setdefault(key, []).append((root, cub))
            self._by_class = grouped
        return self._by_class

    def table(self) -> dict[Coeffs, Coeffs]:
        """Cube value -> lexicographically least root producing it."""
        if self._table is None:
            t: dict[Coeffs, Coeffs] = {}
            for root, cub in self.iter_entries():
                if cub not in t:
                    t[cub] = root
            self._table = t
        return self._table


def _scan_two(space: _SearchSpace, tabs: _Mod9Tables, t: Coeffs) -> tuple[Coeffs, Coeffs] | None:
    """Least (x, y) with x**3 + y**3 = t, both in the coeff box.

    A first root x can only work when the remainder t - x**3 has an
    attainable mod-9 pattern, which restricts x to the admissible classes
    (typically well under a tenth of the box).  Scanning each admissible
    class list in order and taking the minimum over per-class first hits
    yields exactly the pair a full lexicographic scan would find.
    """
    if not tabs.pair_attainable(_sig(t)):
        return None
    table = space.table()
    get = table.get
    t0, t1, t2, t3 = t
    grouped = space.by_class()
    if grouped is None:
        # box too large to partition: plain streaming scan
        for root, cub in space.iter_entries():
            got = get((t0 - cub[0], t1 - cub[1], t2 - cub[2], t3 - cub[3]))
            if got is not None:
                return root, got
        return None
    best: tuple[Coeffs, Coeffs] | None = None
    for cls in tabs.admissible_root_classes(_sig(t)):
        for root, cub in grouped.get(cls, ()):
            if best is not None and root >= best[0]:
                break  # later roots in this class are larger still
            got = get((t0 - cub[0], t1 - cub[1], t2 - cub[2], t3 - cub[3]))
            if got is not None:
                best = (root, got)
                break  # first hit in a class is that class's least
    return best


def _sub4(t: Coeffs, c: Coeffs) -> Coeffs:
    return (t[0] - c[0], t[1] - c[1], t[2] - c[2], t[3] - c[3])


def _scan_three_range(
    space: _SearchSpace,
    tabs: _Mod9Tables,
    t: Coeffs,
    outer: int,
    first_ok: frozenset[Coeffs],
    w0_values,
) -> tuple[Coeffs, Coeffs, Coeffs] | None:
    a, b = space.params.a, space.params.b
    rng = range(-outer, outer + 1)
    for w0 in w0_values:
        for w1 in rng:
            for w2 in rng:
                for w3 in rng:
                    if (w0 % 9, w1 % 9, w2 % 9, w3 % 9) not in first_ok:
                        continue
                    w = (w0, w1, w2, w3)
                    res = _scan_two(space, tabs, _sub4(t, _cube_coeffs(a, b, w)))
                    if res is not None:
                        return (w, *res)
    return None


# worker context inherited through fork; set immediately before Pool creation
_PARALLEL_CTX: tuple | None = None


def _scan_three_chunk(w0: int):
    space, tabs, t, outer, first_ok = _PARALLEL_CTX
    return _scan_three_range(space, tabs, t, outer, first_ok, (w0,))


def _scan_three(
    space: _SearchSpace,
    tabs: _Mod9Tables,
    t: Coeffs,
    outer: int,
    workers: int,
) -> tuple[Coeffs, Coeffs, Coeffs] | None:
    if not tabs.triple_attainable(_sig(t)):
        return None
    first_ok = tabs.first_root_classes(_sig(t))
    if not first_ok:
        return None
    w0_values = range(-outer, outer + 1)
    if workers <= 1:
        return _scan_three_range(space, tabs, t, outer, first_ok, w0_values)

    # parallel: one chunk per leading coefficient, consumed in order, so
    # the first hit is the same lexicographic minimum a serial run finds
    space.table()  # force before fork so children share these copy-on-write
    space.by_class()
    global _PARALLEL_CTX
    _PARALLEL_CTX = (space, tabs, t, outer, first_ok)
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return _scan_three_range(space, tabs, t, outer, first_ok, w0_values)
    try:
        with ctx.Pool(workers) as pool:
            for res in pool.imap(_scan_three_chunk, w0_values):
                if res is not None:
                    return res
        return None
    finally:
        _PARALLEL_CTX = None


def _scan_four(
    space: _SearchSpace,
    tabs: _Mod9Tables,
    t: Coeffs,
    outer: int,
) -> tuple[Coeffs, ...] | None:
    a, b = space.params.a, space.params.b
    rng = range(-outer, outer + 1)
    for w in product(rng, rng, rng, rng):
        t1 = _sub4(t, _cube_coeffs(a, b, w))
        if not tabs.triple_attainable(_sig(t1)):
            continue
        first_ok = tabs.first_root_classes(_sig(t1))
        if not first_ok:
            continue
        res = _scan_three_range(space, tabs, t1, outer, first_ok, rng)
        if res is not None:
            return (w, *res)
    return None


def min_cubes_search(
    alpha: Quaternion, cfg: SearchConfig, workers: int = 1
) -> list[Quaternion] | None:
    """Least list of at most cfg.max_cubes roots in the box cubing to alpha.

    Tries k = 1, 2, ... in turn; within each k the returned list is the
    lexicographically least one the box contains (roots compared as
    coefficient tuples, first root most significant).  Returns None when
    no representation exists within the bounds, which proves nothing
    beyond the box.  ``workers`` > 1 splits the outermost loop of the
    3-cube search across processes; results are identical to a serial
    run.
    """
    params = alpha.params
    t = alpha.coefficients()
    space = _SearchSpace(params, cfg.coeff_bound)
    tabs = _mod9_tables(params)

    for k in range(1, cfg.max_cubes + 1):
        found: tuple[Coeffs, ...] | None = None
        if k == 1:
            if _sig(t) in tabs.single:
                root = space.table().get(t)
                if root is not None:
                    found = (root,)
        elif k == 2:
            res = _scan_two(space, tabs, t)
            if res is not None:
                found = res
        elif k == 3:
            res = _scan_three(space, tabs, t, cfg.outer, workers)
            if res is not None:
                found = res
        else:
            res = _scan_four(space, tabs, t, cfg.outer)
            if res is not None:
                found = res
        if found is not None:
            return [Quaternion(params, *c) for c in found]
    return None


def three_cube_residues_mod9() -> set[int]:
    """Residues mod 9 attainable by x**3 + y**3 + z**3 over the integers.

    Enumerates all 9**3 triples; the result is {0,1,2,3,6,7,8}, so 4 and
    5 are unattainable.  Any quaternion whose ring has both a and b
    divisible by 3 has cube real parts congruent to integer cubes mod 9,
    which is why the scalar 4 needs a fourth cube there.
    """
    out = set()
    for x in range(9):
        for y in range(9):
            for z in range(9):
                out.add((x**3 + y**3 + z**3) % 9)
    return out


def two_cube_obstruction(params: RingParams, target: Quaternion) -> bool:
    """True iff the coefficient system for target = x**3 + y**3 is unsolvable
    with the real equation taken mod 9 and the pure equations mod 3.

    A True answer is a rigorous proof that target is not a sum of two
    cubes in the ring; False only means the congruences are satisfiable.
    The enumeration covers all 9**8 residue tuples by meeting the two
    halves in the middle: each half contributes one of at most 9 * 27
    patterns (real mod 9, pures mod 3).
    """
    if target.params != params:
        raise MixedRings("target must belong to the ring under test")
    a9, b9 = params.a % 9, params.b % 9
    patterns = set()
    for x in product(range(9), repeat=4):
        c = _cube_coeffs(a9, b9, x)
        patterns.add((c[0] % 9, c[1] % 3, c[2] % 3, c[3] % 3))
    g0 = target.c0 % 9
    g1, g2, g3 = (c % 3 for c in target.imaginary())
    for r, p1, p2, p3 in patterns:
        if ((g0 - r) % 9, (g1 - p1) % 3, (g2 - p2) % 3, (g3 - p3) % 3) in patterns:
            return False
    return True


def _congruences_hold(x: Quaternion, alpha: Quaternion) -> bool:
    c = cube(x)
    return (c.c0 - alpha.c0) % 3 == 0 and all(
        (cc - ac) % 6 == 0 for cc, ac in zip(c.imaginary(), alpha.imaginary())
    )


def _pair_ok(
    first: ResidueClass, second: ResidueClass, target: Quaternion, tag: CaseTag
) -> bool:
    t0, t1, t2, t3 = (c % 6 for c in target.coefficients())
    if tag.case is Case.CASE1:
        if not (in_S(first) and in_S(second)):
            return False
    elif t2 % 3 == 0:
        if not (in_T2(first) and in_T2(second)):
            return False
    elif t3 % 3 == 0:
        if not (in_T3(first) and in_T3(second)):
            return False
    else:
        if not (in_T2(first) and in_T3(second)):
            return False
    return (
        (first.r0 + second.r0 - t0) % 3 == 0
        and (first.r1 + second.r1 - t1) % 6 == 0
        and (first.r2 + second.r2 - t2) % 6 == 0
        and (first.r3 + second.r3 - t3) % 6 == 0
    )


def lemma_residue_check(a6: int, b6: int) -> LemmaReport:
    """Exhaustively certify the congruence recipe and pair tables for one
    (a mod 6, b mod 6) pair.

    For the pair's case this checks, over every residue class in the
    case's set (192 classes for S and for T2 + T3, 48 for case 3), that
    the recipe root's cube matches the class mod 3 on the real part and
    mod 6 on the imaginary parts; for cases 1 and 2 it additionally runs
    the pair selection over all 1296 target classes and validates set
    membership and the sums.  Swapped orientations are certified through
    the mirror-ring isomorphism, exactly as the decomposer uses them.
    """
    if not (0 <= a6 <= 5 and 0 <= b6 <= 5):
        raise InvalidResidues(f"residues must lie in 0..5, got ({a6}, {b6})")
    params = RingParams(a6 if a6 else 6, b6 if b6 else 6)
    tag = classify_case(params)
    failures: list[ResidueClass] = []
    classes_checked = 0
    pair_targets = 0

    def rc(r: Coeffs) -> ResidueClass:
        return ResidueClass(r[0], r[1], r[2], r[3], a6, b6)

    if tag.case is Case.CASE3:
        for r0 in range(6):
            for r in product(_DIV3, repeat=3):
                classes_checked += 1
                alpha = Quaternion(params, r0, r[0], r[1], r[2])
                x = cube_root_congruence(alpha, tag)
                if not _congruences_hold(x, alpha):
                    failures.append(rc((r0, r[0], r[1], r[2])))
    elif not tag.swapped:
        for r in product(range(6), repeat=4):
            cls = rc(r)
            if tag.case is Case.CASE1:
                if not in_S(cls):
                    continue
            elif not (in_T2(cls) or in_T3(cls)):
                continue
            classes_checked += 1
            alpha = cls.lift(params)
            x = cube_root_congruence(alpha, tag)
            if not _congruences_hold(x, alpha):
                failures.append(cls)
        for r in product(range(6), repeat=4):
            pair_targets += 1
            target = Quaternion(params, *r)
            first, second = select_pair(target, tag)
            if not _pair_ok(first, second, target, tag):
                failures.append(rc(r))
    else:
        # swapped 2b/2c: certify the composed route through the isomorphism
        norm_tag = classify_case(params.swapped())
        for r in product(range(6), repeat=4):
            alpha = Quaternion(params, *r)
            alpha_n = swap_iso(alpha)
            cls_n = ResidueClass.of(alpha_n)
            if not (in_T2(cls_n) or in_T3(cls_n)):
                continue
            classes_checked += 1
            x = swap_iso(cube_root_congruence(alpha_n, norm_tag))
            if not _congruences_hold(x, alpha):
                failures.append(rc(r))
        for r in product(range(6), repeat=4):
            pair_targets += 1
            target_n = swap_iso(Quaternion(params, *r))
            first, second = select_pair(target_n, norm_tag)
            if not _pair_ok(first, second, target_n, norm_tag):
                failures.append(rc(r))

    return LemmaReport(tag, classes_checked, tuple(failures), pair_targets)
