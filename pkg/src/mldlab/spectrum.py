"""Enumeration of the cyclic-quotient mld spectrum.

A weight class is the orbit of a residue tuple under coordinate permutations
and multiplication by units mod r; both operations leave the mld unchanged.
`scan` emits one record per class, in a deterministic order, for every class
whose mld lands in a configured interval.

Enumeration strategy per r: every orbit contains a representative whose first
coordinate equals g, the minimal gcd(a_i, r) over the coordinates (scale the
minimizing coordinate by a suitable unit), and whose remaining coordinates
have gcd at least g.  So representatives are generated per divisor g of r and
deduplicated afterwards through the canonical form.  Isolated scans (all
gcds 1) only need the g = 1 slab with unit entries.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .quotient import CyclicQuotient, _ld_numerator, mld, mld_argmin_batch


@dataclass(frozen=True)
class SpectrumRecord:
    r: int
    weights: tuple[int, ...]  # canonical form
    mld: Fraction
    argmin_k: int


@dataclass(frozen=True)
class ScanConfig:
    """Parameters of a spectrum scan.

    The interval defaults to half-open [lo, hi); the include flags cover the
    other variants needed by windowed queries.  ``hi=None`` means unbounded.
    """

    dim: int = 3
    r_max: int = 100
    lo: Fraction = Fraction(0)
    hi: Fraction | None = None
    include_lo: bool = True
    include_hi: bool = False
    isolated_only: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if self.r_max < 2:
            raise ValueError("r_max must be at least 2")
        object.__setattr__(self, "lo", Fraction(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", Fraction(self.hi))
            if not self.lo < self.hi:
                raise ValueError("interval is empty")


def canonical_weights(r: int, weights) -> tuple[int, ...]:
    """Lexicographically smallest sorted unit multiple of the weight tuple.

    Presentations related by permuting coordinates or by changing the group
    generator (multiplying every weight by a unit mod r) canonicalize to the
    same tuple.  Idempotent.
    """
    ws = tuple(w % r for w in weights)
    if r == 1:
        return ws
    best = None
    for u in range(1, r):
        if math.gcd(u, r) != 1:
            continue
        cand = tuple(sorted(u * w % r for w in ws))
        if best is None or cand < best:
            best = cand
    return best


def family_example(k: int, m: int) -> tuple[CyclicQuotient, Fraction]:
    """The accumulation family 1/(6k+m)(2k, 3k, m) with mld (5k+m)/(6k+m).

    The stated mld is verified against the exhaustive formula before
    returning.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not 1 <= m <= 5:
        raise ValueError("m must lie in [1, 5]")
    X = CyclicQuotient(6 * k + m, (2 * k, 3 * k, m))
    expected = Fraction(5 * k + m, 6 * k + m)
    got = mld(X)
    assert got == expected, (X, got, expected)
    return X, expected


def _units(r: int) -> list[int]:
    return [u for u in range(1, r) if math.gcd(u, r) == 1]


def _free_tuples(values: list[int], count: int) -> np.ndarray:
    """Sorted tuples of length ``count`` over ``values`` as an (N, count) array."""
    vals = np.asarray(values, dtype=np.int64)
    if count == 0:
        return np.zeros((1, 0), dtype=np.int64)
    if count == 1:
        return vals.reshape(-1, 1)
    if count == 2:
        i, j = np.triu_indices(len(vals))
        return np.column_stack([vals[i], vals[j]])
    combos = list(itertools.combinations_with_replacement(values, count))
    return np.asarray(combos, dtype=np.int64).reshape(len(combos), count)


def _representatives(r: int, dim: int, isolated_only: bool) -> np.ndarray:
    """Weight tuples meeting every class at least once (with redundancy)."""
    if r == 1:
        return np.zeros((1, dim), dtype=np.int64)
    blocks = []
    if isolated_only:
        units = _units(r)
        free = _free_tuples(units, dim - 1)
        pinned = np.full((free.shape[0], 1), 1, dtype=np.int64)
        blocks.append(np.hstack([pinned, free]))
    else:
        gcds = np.gcd(np.arange(r, dtype=np.int64), r)
        gcds[0] = r  # gcd(0, r) = r
        for g in sorted(d for d in range(1, r + 1) if r % d == 0):
            values = np.nonzero(gcds >= g)[0].tolist()
            free = _free_tuples(values, dim - 1)
            pinned = np.full((free.shape[0], 1), g % r, dtype=np.int64)
            blocks.append(np.hstack([pinned, free]))
    return np.vstack(blocks)


def _value_in_interval(numer: int, r: int, cfg: ScanConfig) -> bool:
    value = Fraction(int(numer), r)
    if value < cfg.lo or (value == cfg.lo and not cfg.include_lo):
        return False
    if cfg.hi is not None:
        if value > cfg.hi or (value == cfg.hi and not cfg.include_hi):
            return False
    return True


def _interval_mask(numer: np.ndarray, r: int, cfg: ScanConfig) -> np.ndarray:
    # numer/r versus lo: numer*lo.den >= lo.num*r, exact in int64
    lo = cfg.lo
    if cfg.include_lo:
        mask = numer * lo.denominator >= lo.numerator * r
    else:
        mask = numer * lo.denominator > lo.numerator * r
    if cfg.hi is not None:
        hi = cfg.hi
        if cfg.include_hi:
            mask &= numer * hi.denominator <= hi.numerator * r
        else:
            mask &= numer * hi.denominator < hi.numerator * r
    return mask


def _scan_r(r: int, cfg: ScanConfig) -> list[SpectrumRecord]:
    reps = _representatives(r, cfg.dim, cfg.isolated_only)
    numer, _ = mld_argmin_batch(r, reps)
    keep = _interval_mask(numer, r, cfg)
    records: dict[tuple[int, ...], SpectrumRecord] = {}
    for row, num in zip(reps[keep], numer[keep]):
        cw = canonical_weights(r, tuple(int(w) for w in row))
        if cw in records:
            continue
        value = Fraction(int(num), r)
        if r == 1:
            records[cw] = SpectrumRecord(r, cw, value, 0)
            continue
        target = int(num)
        argk = None
        for k in range(1, r):
            if _ld_numerator(r, cw, k) == target:
                argk = k
                break
        assert argk is not None, (r, cw, target)  # unit transforms preserve the minimum
        records[cw] = SpectrumRecord(r, cw, value, argk)
    return [records[cw] for cw in sorted(records)]


def _scan_r_task(args):
    return _scan_r(*args)


def scan(cfg: ScanConfig):
    """Iterate SpectrumRecords for r in [1, r_max], mld inside the interval.

    Order is deterministic: r ascending, canonical weights lexicographic.
    With cfg.jobs > 1 the per-r work is spread over a process pool; the
    merged output is identical to the sequential one.
    """
    rs = range(1, cfg.r_max + 1)
    if cfg.jobs <= 1:
        for r in rs:
            yield from _scan_r(r, cfg)
        return
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        chunk = max(1, len(rs) // (cfg.jobs * 8))
        for recs in pool.map(_scan_r_task, [(r, cfg) for r in rs], chunksize=chunk):
            yield from recs


def distinct_values(cfg: ScanConfig) -> list[Fraction]:
    """Sorted, deduplicated mld values of scan(cfg)."""
    return sorted({rec.mld for rec in scan(cfg)})


def accumulation_report(cfg: ScanConfig, target: Fraction, windows) -> list[tuple[Fraction, int]]:
    """Count distinct mld values inside (target, target + w] for each window w.

    The right end is included so that a window of radius w catches a value
    sitting exactly at target + w.  Counts are monotone non-decreasing in
    r_max for a fixed window.
    """
    target = Fraction(target)
    if not 0 < target < cfg.dim:
        raise ValueError("target must lie in (0, dim)")
    windows = [Fraction(w) for w in windows]
    if not windows or any(w <= 0 for w in windows):
        raise ValueError("windows must be positive")
    wide = ScanConfig(dim=cfg.dim, r_max=cfg.r_max, lo=target, hi=target + max(windows),
                      include_lo=False, include_hi=True,
                      isolated_only=cfg.isolated_only, jobs=cfg.jobs)
    values = distinct_values(wide)
    return [(w, sum(1 for v in values if v <= target + w)) for w in windows]


def format_rat(q: Fraction) -> str:
    """Exact wire format: 'p/q', or bare 'p' for integers."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def record_to_json(rec: SpectrumRecord) -> str:
    return json.dumps({"r": rec.r, "weights": list(rec.weights),
                       "mld": format_rat(rec.mld), "k": rec.argmin_k},
                      separators=(",", ":"))


CSV_HEADER = ("r", "weights", "mld_num", "mld_den", "k")


def records_to_csv(records) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow([rec.r, " ".join(str(w) for w in rec.weights),
                         rec.mld.numerator, rec.mld.denominator, rec.argmin_k])
    return out.getvalue()
