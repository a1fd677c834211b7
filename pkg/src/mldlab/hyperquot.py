"""Weight calculus on power-series supports for hyperquotient singularities.

A power series is represented by its support alone (the set of exponent
vectors with nonzero coefficient); every quantity computed here depends only
on the support and on the diagonal cyclic action (r; a_1..a_4) with character
e.  Weights are rational vectors in the lattice generated by (a_1..a_4)/r and
the unit vectors; the interesting ones live in the box [0,1]^4.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .qarith import fracsum_identity_failures

SUPPORT_CAP = 10**4


@dataclass(frozen=True)
class MonomialSupport:
    """Finite set of nonzero exponent vectors in Z^4_{>=0}."""

    exponents: frozenset[tuple[int, int, int, int]]

    def __post_init__(self):
        exps = frozenset(tuple(int(x) for x in a) for a in self.exponents)
        if not exps:
            raise ValueError("support must be nonempty")
        if len(exps) > SUPPORT_CAP:
            raise ValueError(f"support exceeds the {SUPPORT_CAP}-monomial cap")
        for a in exps:
            if len(a) != 4:
                raise ValueError("exponent vectors live in Z^4")
            if any(x < 0 for x in a):
                raise ValueError(f"negative exponent in {a}")
            if not any(a):
                raise ValueError("the zero exponent vector is not allowed")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, *exponents):
        return cls(frozenset(exponents))

    def sorted(self):
        return sorted(self.exponents)


@dataclass(frozen=True)
class HyperquotientDatum:
    """Cyclic action data (r; a_1..a_4; e) together with an equation support."""

    r: int
    a: tuple[int, int, int, int]
    e: int
    support: MonomialSupport

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("r must be at least 2")
        if len(self.a) != 4:
            raise ValueError("exactly four weights required")
        object.__setattr__(self, "a", tuple(x % self.r for x in self.a))
        object.__setattr__(self, "e", self.e % self.r)


@dataclass(frozen=True)
class LatticeWeight:
    """A rational weight vector in [0,1]^4 with its generating class index."""

    coords: tuple[Fraction, Fraction, Fraction, Fraction]
    class_index: int
    primitive: bool

    def primed(self) -> tuple[Fraction, ...]:
        """The involution image (1,1,1,1) - coords."""
        return tuple(1 - c for c in self.coords)


def _coords(w):
    return w.coords if isinstance(w, LatticeWeight) else tuple(Fraction(c) for c in w)


def support_weight(w, S: MonomialSupport) -> Fraction:
    """min over the support of the weighted degree sum_i w_i * alpha_i."""
    ws = _coords(w)
    return min(sum(c * x for c, x in zip(ws, a)) for a in S.exponents)


def semi_invariant_check(d: HyperquotientDatum):
    """None when every support vector satisfies sum_i alpha_i*a_i = e mod r;
    otherwise the smallest violating exponent vector."""
    for alpha in d.support.sorted():
        if (sum(x * a for x, a in zip(alpha, d.a)) - d.e) % d.r != 0:
            return alpha
    return None


def _is_primitive(numers: tuple[int, ...], r: int, alpha_patterns: frozenset) -> bool:
    # w is primitive iff w/l escapes the lattice for every integer l >= 2;
    # w/l lies in [0,1)^4, so membership means matching some class pattern.
    g = 0
    for x in numers:
        g = math.gcd(g, x)
    for l in range(2, g + 1):
        if g % l == 0 and tuple(x // l for x in numers) in alpha_patterns:
            return False
    return True


def enumerate_N0(r: int, a) -> list[LatticeWeight]:
    """All lattice weights in [0,1]^4 off the corner set {0,1}^4.

    For each class j in [1, r-1] the base vector has coordinates {j*a_i/r};
    zero coordinates may also be lifted to 1.  Duplicates arising from
    different classes are emitted once (smallest class index wins).
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    a = tuple(x % r for x in a)
    if len(a) != 4:
        raise ValueError("exactly four weights required")
    alpha_patterns = frozenset(tuple(j * x % r for x in a) for j in range(r))
    found: dict[tuple[int, ...], LatticeWeight] = {}
    for j in range(1, r):
        base = tuple(j * x % r for x in a)
        zero_positions = [i for i, x in enumerate(base) if x == 0]
        for lift in itertools.product((0, r), repeat=len(zero_positions)):
            numers = list(base)
            for pos, val in zip(zero_positions, lift):
                numers[pos] = val
            numers = tuple(numers)
            if all(x in (0, r) for x in numers):
                continue  # a corner of {0,1}^4
            if numers in found:
                continue
            coords = tuple(Fraction(x, r) for x in numers)
            found[numers] = LatticeWeight(coords, j,
                                          _is_primitive(numers, r, alpha_patterns))
    return [found[key] for key in sorted(found)]


def gap_value(w, d: HyperquotientDatum) -> Fraction:
    """The discrepancy gap w(x1 x2 x3 x4) - w(f) = sum_i w_i - support_weight(w, f)."""
    violator = semi_invariant_check(d)
    if violator is not None:
        raise ValueError(f"support is not semi-invariant: {violator}")
    ws = _coords(w)
    return sum(ws) - support_weight(ws, d.support)


@dataclass(frozen=True)
class PsiPartition:
    psi1: tuple[LatticeWeight, ...]
    psi2: tuple[LatticeWeight, ...]
    rest: tuple[LatticeWeight, ...]


def psi_classify(d: HyperquotientDatum, eps) -> PsiPartition:
    """Split the box weights by gap: psi1 holds the primitive ones with gap in
    [5/6 + eps, 1); psi2 their involution images; rest everything else."""
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 6):
        raise ValueError("eps must lie in (0, 1/6)")
    n0 = enumerate_N0(d.r, d.a)
    lo = Fraction(5, 6) + eps
    psi1 = [w for w in n0 if w.primitive and lo <= gap_value(w, d) < 1]
    in_psi1 = {w.coords for w in psi1}
    by_coords = {w.coords: w for w in n0}
    psi2 = []
    seen = set()
    for w in psi1:
        mate = by_coords.get(w.primed())
        if mate is not None and mate.coords not in seen and mate.coords not in in_psi1:
            seen.add(mate.coords)
            psi2.append(mate)
    covered = in_psi1 | seen
    rest = [w for w in n0 if w.coords not in covered]
    return PsiPartition(tuple(psi1), tuple(psi2), tuple(rest))


def identity5_check(r: int, a, e: int) -> list[int]:
    """Failing class indices of sum_i {j*a_i/r} = {j*e/r} + j/r + 1; [] means ok."""
    return fracsum_identity_failures(r, a, e)


_PARAMETERLESS = ("2a", "2b")


def _pattern(tag: str, r: int, x: int | None):
    """The residue 5-tuple of one classification pattern, or None if the side
    conditions (parity of r, divisibility) rule the pattern out."""
    if tag == "1a":
        return (x, r - x, 1, 0, 0)
    if tag == "1b":
        return (1, x, r - x, x + 1, x + 1) if math.gcd(x + 1, r) > 1 else None
    if tag == "1c":
        return (x, 1, r - x, x + 1, x + 1) if math.gcd(x + 1, r) == 1 else None
    if tag == "1d":
        return (x, r - x - 1, r - x, x + 1, r - 1) if math.gcd(x + 1, r) == 1 else None
    if tag == "2a":
        return (0, r // 2, r // 2, 0, 0) if r % 2 == 0 else None
    if tag == "2b":
        return (1, (r + 2) // 2, (r - 2) // 2, 2, 2) if r % 4 == 0 else None
    if tag == "3a":
        return (0, x, r - x, 1, 0)
    if tag == "3b":
        return (x, r - x, 1, 2 * x, 2 * x) if r % 2 == 0 else None
    if tag == "3c":
        return (1, x, r - x, 2, 2) if r % 2 == 0 else None
    if tag == "3d":
        return ((r - 1) // 2, (r + 1) // 2, x, r - x, r - 1) if r % 2 == 1 else None
    if tag == "3e":
        return (x, r - x, 2 * x, 1, 2 * x) if r % 2 == 1 else None
    if tag == "3f":
        return (1, x, r - x, 2, 2) if r % 2 == 1 else None
    raise ValueError(f"unknown pattern tag {tag}")


TYPE_TAGS = ("1a", "1b", "1c", "1d", "2a", "2b",
             "3a", "3b", "3c", "3d", "3e", "3f")


def classify_type(r: int, a, e: int, all_matches: bool = False):
    """Match (a_1..a_4, e) mod r against the classification patterns.

    Patterns are tried in listed order; parametrized ones search the unit
    parameter.  Returns the first (tag, parameter) pair, or ("none", None);
    with all_matches every match is returned.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    target = tuple(x % r for x in a) + (e % r,)
    units = [u for u in range(1, r) if math.gcd(u, r) == 1]
    matches = []
    for tag in TYPE_TAGS:
        params = (None,) if tag in _PARAMETERLESS else units
        for x in params:
            pat = _pattern(tag, r, x)
            if pat is None:
                continue
            if tuple(v % r for v in pat) == target:
                matches.append((tag, x))
                if not all_matches:
                    return matches[0]
                break  # first parameter per tag is enough
    if all_matches:
        return matches
    return ("none", None)


def two_monomials_verify(S: MonomialSupport, axis: int, w1, w2) -> bool:
    """Whether, for both weights, the pure axis power attaining the support
    weight has the same exponent.

    Preconditions (violations raise ValueError, meaning not-applicable): for
    each weight the support weight is positive and attained by a pure power
    of the given axis.  Under them the exponents must agree; False would be
    an implementation bug rather than a counterexample.
    """
    if not 1 <= axis <= 4:
        raise ValueError("axis must lie in [1, 4]")
    idx = axis - 1
    exponents = []
    for w in (w1, w2):
        ws = _coords(w)
        fw = support_weight(ws, S)
        if fw <= 0:
            raise ValueError("support weight must be positive")
        attaining = [alpha[idx] for alpha in S.exponents
                     if all(alpha[i] == 0 for i in range(4) if i != idx)
                     and ws[idx] * alpha[idx] == fw]
        if not attaining:
            raise ValueError("no pure power of the axis attains the support weight")
        exponents.append(attaining[0])  # unique: positive weight forces one exponent
    return exponents[0] == exponents[1]
