"""Exact emptiness prover for floor-sum constraint systems on [0,1)^3.

A constraint (n, c) selects the points of the half-open unit cube whose
coordinates satisfy floor(n*v_1) + floor(n*v_2) + floor(n*v_3) = n-1-c.
Regions are maintained as unions of half-open rational boxes, optionally
restricted to the ordered simplex v_1 <= v_2 <= v_3.  Refining a box against
a constraint splits each axis at the multiples of 1/n it contains; on every
resulting cell the floor sum is constant, so membership is decided exactly.

All endpoints are `fractions.Fraction`; there is no floating point anywhere,
so an "empty" verdict is a proof of emptiness for the given system.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

DEFAULT_BOX_LIMIT = 10**6
_BOX_LIMIT_ENV = "MLDLAB_BOX_LIMIT"


class BoxLimitExceeded(RuntimeError):
    """A refinement produced more boxes than the configured budget allows."""


def box_limit() -> int:
    raw = os.environ.get(_BOX_LIMIT_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise ValueError(f"{_BOX_LIMIT_ENV} must be an integer") from exc
    return DEFAULT_BOX_LIMIT


@dataclass(frozen=True)
class FloorConstraint:
    """{v in [0,1)^3 : sum_i floor(n*v_i) = n-1-c}."""

    n: int
    c: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.c < 1:
            raise ValueError("c must be at least 1")

    @property
    def target(self) -> int:
        return self.n - 1 - self.c

    def holds_at(self, point) -> bool:
        return sum(math.floor(self.n * Fraction(v)) for v in point) == self.target


@dataclass(frozen=True)
class GammaSet:
    """A finite set of floor constraints, kept sorted by (n, c)."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted({(int(n), int(c)) for n, c in self.pairs}))
        for n, c in pairs:
            if n < 2 or c < 1:
                raise ValueError(f"invalid constraint pair ({n}, {c})")
        object.__setattr__(self, "pairs", pairs)

    def constraints(self):
        return [FloorConstraint(n, c) for n, c in self.pairs]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class Box:
    """Product of three half-open rational intervals [lo_i, hi_i) inside [0,1]."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        ivs = tuple((Fraction(lo), Fraction(hi)) for lo, hi in self.intervals)
        if len(ivs) != 3:
            raise ValueError("boxes are three-dimensional here")
        for lo, hi in ivs:
            if not (0 <= lo <= hi <= 1):
                raise ValueError(f"interval [{lo}, {hi}) escapes [0, 1]")
        object.__setattr__(self, "intervals", ivs)

    @property
    def is_empty(self) -> bool:
        return any(lo == hi for lo, hi in self.intervals)

    def contains(self, point) -> bool:
        return all(lo <= Fraction(v) < hi
                   for (lo, hi), v in zip(self.intervals, point))

    def ordered_corner(self):
        """Smallest point of the box with v_1 <= v_2 <= v_3, or None.

        Greedy: v_1 = lo_1, then each later coordinate is the larger of its
        lower bound and the previous coordinate; feasible iff each stays
        strictly below its upper bound.  Correct for half-open intervals.
        """
        point = []
        prev = None
        for lo, hi in self.intervals:
            v = lo if prev is None else max(lo, prev)
            if not v < hi:
                return None
            point.append(v)
            prev = v
        return tuple(point)


@dataclass(frozen=True)
class BoxUnion:
    """A finite union of boxes, optionally cut down to the ordered simplex.

    Overlaps between boxes are permitted; no disjointness is maintained.
    Empty boxes, and simplex-infeasible ones when the flag is set, are
    dropped on construction.
    """

    boxes: tuple[Box, ...]
    ordered_simplex: bool = False

    def __post_init__(self):
        kept = tuple(b for b in self.boxes
                     if not b.is_empty
                     and (not self.ordered_simplex or b.ordered_corner() is not None))
        object.__setattr__(self, "boxes", kept)

    @property
    def is_empty(self) -> bool:
        return not self.boxes

    def contains(self, point) -> bool:
        point = tuple(Fraction(v) for v in point)
        if self.ordered_simplex and not all(a <= b for a, b in zip(point, point[1:])):
            return False
        return any(b.contains(point) for b in self.boxes)

    def witness(self):
        """A rational member point (greedy corner of the first box), or None."""
        for b in self.boxes:
            if self.ordered_simplex:
                corner = b.ordered_corner()
                if corner is not None:
                    return corner
            else:
                return tuple(lo for lo, _ in b.intervals)
        return None


def unit_cube(ordered_simplex: bool = True) -> BoxUnion:
    one = Fraction(1)
    zero = Fraction(0)
    return BoxUnion((Box(((zero, one), (zero, one), (zero, one))),), ordered_simplex)


def _axis_cells(lo: Fraction, hi: Fraction, n: int):
    """Split [lo, hi) at the multiples of 1/n it contains.

    Yields (lo', hi', m) cells with floor(n*v) = m constant on each.
    """
    cuts = [Fraction(j, n) for j in range(math.floor(lo * n) + 1, math.ceil(hi * n))]
    points = [lo] + cuts + [hi]
    return [(a, b, math.floor(a * n)) for a, b in zip(points, points[1:])]


def constraint_refine(U: BoxUnion, fc: FloorConstraint, limit: int | None = None) -> BoxUnion:
    """U intersected with the constraint region, as a new BoxUnion.

    Each box splits along each axis at the contained multiples of 1/n; the
    sub-boxes with floor sum equal to the target survive.  Raises
    BoxLimitExceeded when the output would exceed the box budget.
    """
    if limit is None:
        limit = box_limit()
    out: list[Box] = []
    for box in U.boxes:
        (l1, h1), (l2, h2), (l3, h3) = box.intervals
        cells1 = _axis_cells(l1, h1, fc.n)
        cells2 = _axis_cells(l2, h2, fc.n)
        cells3 = {m: (a, b) for a, b, m in _axis_cells(l3, h3, fc.n)}
        for a1, b1, m1 in cells1:
            for a2, b2, m2 in cells2:
                rest = fc.target - m1 - m2
                cell3 = cells3.get(rest)
                if cell3 is None:
                    continue
                candidate = Box(((a1, b1), (a2, b2), cell3))
                if U.ordered_simplex and candidate.ordered_corner() is None:
                    continue
                out.append(candidate)
                if len(out) > limit:
                    raise BoxLimitExceeded(
                        f"more than {limit} boxes while refining against "
                        f"(n={fc.n}, c={fc.c})")
    return BoxUnion(tuple(out), U.ordered_simplex)


@dataclass(frozen=True)
class SystemResult:
    """Outcome of running a constraint system against an initial region.

    verdict is "empty" (with the constraint prefix that killed the region)
    or "witness" (with a rational point of the residual region).
    """

    verdict: str
    applied: tuple[tuple[int, int], ...]
    box_counts: tuple[int, ...]
    witness: tuple[Fraction, ...] | None
    initial_boxes: int

    @property
    def is_empty(self) -> bool:
        return self.verdict == "empty"

    def certificate(self) -> dict:
        return {
            "verdict": self.verdict,
            "initial_boxes": self.initial_boxes,
            "constraints": [list(p) for p in self.applied],
            "box_counts": list(self.box_counts),
            "witness": None if self.witness is None else
                       [_fmt(v) for v in self.witness],
        }


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def system_empty(initial: BoxUnion, G: GammaSet, limit: int | None = None) -> SystemResult:
    """Apply the constraints of G in ascending (n, c) order and report.

    Small-n constraints prune hardest, so ascending order keeps intermediate
    box counts low.  The verdict itself does not depend on the order.
    """
    region = initial
    applied: list[tuple[int, int]] = []
    counts: list[int] = []
    for n, c in G:
        region = constraint_refine(region, FloorConstraint(n, c), limit)
        applied.append((n, c))
        counts.append(len(region.boxes))
        if region.is_empty:
            return SystemResult("empty", tuple(applied), tuple(counts), None,
                                len(initial.boxes))
    return SystemResult("witness", tuple(applied), tuple(counts),
                        region.witness(), len(initial.boxes))


def gamma_of_interval(a, b, n_max: int) -> GammaSet:
    """Constraint pairs attached to the open interval (a, b), capped at n <= n_max.

    For finite b: all (n, c) with n >= 2 and (c-1)*b + 1 <= n <= c*a - 1.
    For b = None (infinity): c = 1 and 2 <= n <= a - 1.
    """
    a = Fraction(a)
    if a <= 1:
        raise ValueError("left endpoint must exceed 1")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    pairs = []
    if b is None:
        hi = min(n_max, math.floor(a - 1))
        pairs = [(n, 1) for n in range(2, hi + 1)]
        return GammaSet(tuple(pairs))
    b = Fraction(b)
    if b <= a:
        raise ValueError("need a < b")
    c = 1
    while (c - 1) * b + 1 <= n_max:
        lo = max(2, math.ceil((c - 1) * b + 1))
        hi = min(n_max, math.floor(c * a - 1))
        pairs.extend((n, c) for n in range(lo, hi + 1))
        c += 1
    return GammaSet(tuple(pairs))


def vl_box(l: int) -> BoxUnion:
    """The one-box region [0, 1/(6l+2)) x [(2l-1)/(6l-2), 1/3) x [(3l-1)/(6l-1), 1/2)."""
    if l < 4:
        raise ValueError("l must be at least 4")
    box = Box(((Fraction(0), Fraction(1, 6 * l + 2)),
               (Fraction(2 * l - 1, 6 * l - 2), Fraction(1, 3)),
               (Fraction(3 * l - 1, 6 * l - 1), Fraction(1, 2))))
    return BoxUnion((box,), ordered_simplex=True)


def _grid_cells(U: BoxUnion, grids) -> set:
    """Cells of the per-axis breakpoint grids covered by U (exact cover).

    Every box endpoint of U must appear in the grids, so each box is exactly
    a union of grid cells.
    """
    cells = set()
    for box in U.boxes:
        spans = []
        for (lo, hi), grid in zip(box.intervals, grids):
            i, j = grid.index(lo), grid.index(hi)
            spans.append(range(i, j))
        cells.update(product(*spans))
    return cells


def _cell_feasible(cell, grids) -> bool:
    box = Box(tuple((grid[i], grid[i + 1]) for i, grid in zip(cell, grids)))
    return box.ordered_corner() is not None


def boxunion_equal(A: BoxUnion, B: BoxUnion) -> bool:
    """Set equality of the two regions, via their common breakpoint grid.

    Both unions are refined to the merged per-axis grids; the regions agree
    exactly when no cell of the symmetric difference meets the (shared)
    ordered-simplex restriction.
    """
    if A.ordered_simplex != B.ordered_simplex:
        raise ValueError("cannot compare unions with different simplex flags")
    grids = []
    for axis in range(3):
        pts = set()
        for U in (A, B):
            for box in U.boxes:
                lo, hi = box.intervals[axis]
                pts.update((lo, hi))
        grids.append(sorted(pts) or [Fraction(0)])
    diff = _grid_cells(A, grids) ^ _grid_cells(B, grids)
    if not A.ordered_simplex:
        return not diff
    return all(not _cell_feasible(cell, grids) for cell in diff)


def verify_vl_step(l: int, limit: int | None = None) -> bool:
    """Check that refining the level-l box by its three constraints gives level l+1."""
    region = vl_box(l)
    for n, c in ((6 * l + 4, l + 1), (6 * l + 5, l + 1), (6 * l + 8, l + 2)):
        region = constraint_refine(region, FloorConstraint(n, c), limit)
    return boxunion_equal(region, vl_box(l + 1))


def shared_case_constraints(k: int) -> GammaSet:
    """The ten constraints carving the four-box region out of the simplex."""
    return GammaSet((
        (6 * k + 6, k + 1), (6 * k + 4, k + 1), (6 * k + 3, k + 1),
        (6 * k + 5, k + 1), (12 * k + 3, 2 * k + 1), (12 * k + 4, 2 * k + 1),
        (18 * k + 6, 3 * k + 1), (18 * k + 5, 3 * k + 1),
        (12 * k + 5, 2 * k + 1), (24 * k + 5, 4 * k + 1),
    ))


def case_initial_region(k: int, limit: int | None = None) -> BoxUnion:
    """The four-box union for level k, refined by the ten shared constraints."""
    if k < 4:
        raise ValueError("k must be at least 4")
    third, half = Fraction(1, 3), Fraction(1, 2)
    boxes = (
        Box(((Fraction(1, 6 * k + 3), Fraction(1, 6 * k + 2)),
             (third - Fraction(1, 18 * k + 6), third - Fraction(1, 18 * k + 12)),
             (half - Fraction(1, 12 * k + 4), half - Fraction(1, 12 * k + 6)))),
        Box(((Fraction(1, 6 * k + 4), Fraction(1, 6 * k + 3)),
             (third - Fraction(1, 18 * k + 6), third - Fraction(1, 18 * k + 12)),
             (half - Fraction(1, 12 * k + 6), half - Fraction(1, 12 * k + 10)))),
        Box(((Fraction(1, 6 * k + 5), Fraction(1, 6 * k + 4)),
             (third - Fraction(1, 18 * k + 12), third - Fraction(2, 54 * k + 15)),
             (half - Fraction(1, 12 * k + 6), half - Fraction(1, 12 * k + 10)))),
        Box(((Fraction(1, 6 * k + 6), Fraction(1, 6 * k + 5)),
             (third - Fraction(1, 18 * k + 12), third - Fraction(2, 54 * k + 15)),
             (half - Fraction(1, 12 * k + 10), half - Fraction(3, 48 * k + 10)))),
    )
    region = BoxUnion(boxes, ordered_simplex=True)
    for n, c in shared_case_constraints(k):
        region = constraint_refine(region, FloorConstraint(n, c), limit)
    return region


def case_constraints(k: int, case_id: int) -> GammaSet:
    """The extra constraint list of one of the ten interval cases at level k."""
    if not 1 <= case_id <= 10:
        raise ValueError("case_id must lie in [1, 10]")
    table = {
        1: ((12 * k + 7, 2 * k + 1), (18 * k + 8, 3 * k + 1),
            (24 * k + 9, 4 * k + 1), (30 * k + 10, 5 * k + 1)),
        2: ((12 * k + 7, 2 * k + 1), (18 * k + 8, 3 * k + 1),
            (24 * k + 9, 4 * k + 1), (30 * k + 12, 5 * k + 2)),
        3: ((12 * k + 7, 2 * k + 1), (18 * k + 8, 3 * k + 1),
            (24 * k + 11, 4 * k + 2)),
        4: ((12 * k + 7, 2 * k + 1), (18 * k + 10, 3 * k + 2),
            (30 * k + 16, 5 * k + 2)),
        5: ((12 * k + 7, 2 * k + 1), (18 * k + 10, 3 * k + 2),
            (30 * k + 18, 5 * k + 3)),
        6: ((12 * k + 9, 3 * k + 2), (18 * k + 14, 3 * k + 2),
            (30 * k + 22, 5 * k + 3), (60 * k + 41, 10 * k + 6)),
        7: ((12 * k + 9, 3 * k + 2), (18 * k + 14, 3 * k + 2),
            (30 * k + 24, 5 * k + 4)),
        8: ((12 * k + 9, 3 * k + 2), (18 * k + 16, 3 * k + 3),
            (24 * k + 21, 4 * k + 3), (24 * k + 6, 4 * k + 1)),
        9: ((12 * k + 9, 3 * k + 2), (18 * k + 16, 3 * k + 3),
            (24 * k + 23, 4 * k + 4), (24 * k + 6, 4 * k + 1),
            (18 * k + 18, 3 * k + 3), (24 * k + 24, 4 * k + 4),
            (30 * k + 28, 5 * k + 4)),
        10: ((12 * k + 9, 3 * k + 2), (18 * k + 16, 3 * k + 3),
             (24 * k + 23, 4 * k + 4), (24 * k + 6, 4 * k + 1),
             (18 * k + 18, 3 * k + 3), (24 * k + 24, 4 * k + 4),
             (30 * k + 30, 5 * k + 5)),
    }
    return GammaSet(table[case_id])


def verify_case(k: int, case_id: int, limit: int | None = None) -> SystemResult:
    """Run one interval case at level k; an 'empty' verdict is the expected one."""
    if k < 4:
        raise ValueError("k must be at least 4")
    initial = case_initial_region(k, limit)
    return system_empty(initial, case_constraints(k, case_id), limit)


def _case_task(args):
    k, case_id, limit = args
    return (k, case_id, verify_case(k, case_id, limit))


def verify_cases(ks, case_ids, limit: int | None = None, jobs: int = 1):
    """Run a block of case verifications, optionally across a process pool.

    Yields (k, case_id, SystemResult) in deterministic (k, case_id) order.
    """
    tasks = [(k, cid, limit) for k in ks for cid in case_ids]
    if jobs <= 1:
        for task in tasks:
            yield _case_task(task)
        return
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_case_task, tasks)


# Breakpoints of the interval grid: 0, 1/5, 1/4, 1/3, 2/5, 1/2, 3/5, 2/3, 3/4, 4/5, 1.
GRID_ALPHAS = (Fraction(0), Fraction(1, 5), Fraction(1, 4), Fraction(1, 3),
               Fraction(2, 5), Fraction(1, 2), Fraction(3, 5), Fraction(2, 3),
               Fraction(3, 4), Fraction(4, 5), Fraction(1))


def s_grid_intervals() -> list[tuple[Fraction, Fraction | None]]:
    """The 41 intervals of the verification grid, as (a, b) with b=None for infinity.

    Two explicit head intervals (13, inf) and (11, 13), then the refinements
    (6 + 1/(l + alpha_{i+1}), 6 + 1/(l + alpha_i)) for l in [0, 3] and
    i in [0, 9], excluding (l, i) = (0, 0) whose right endpoint degenerates
    to infinity (that range is already covered by the two head intervals).
    """
    out: list[tuple[Fraction, Fraction | None]] = [
        (Fraction(13), None), (Fraction(11), Fraction(13))]
    for l in range(4):
        for i in range(10):
            if (l, i) == (0, 0):
                continue
            a = 6 + 1 / (l + GRID_ALPHAS[i + 1])
            b = 6 + 1 / (l + GRID_ALPHAS[i])
            out.append((a, b))
    return out


def _s_grid_task(args):
    a, b, n_max, limit = args
    G = gamma_of_interval(a, b, n_max)
    result = system_empty(unit_cube(ordered_simplex=True), G, limit)
    return {"interval": [_fmt(a), "inf" if b is None else _fmt(b)],
            **result.certificate()}


def verify_s_grid(n_max: int, limit: int | None = None, jobs: int = 1) -> list[dict]:
    """Run every interval of the grid against the unit cube; report per-interval."""
    tasks = [(a, b, n_max, limit) for a, b in s_grid_intervals()]
    if jobs <= 1:
        return [_s_grid_task(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_s_grid_task, tasks))
