"""Grid enumeration of dyadic approximations to all real roots.

Given an exact coefficient vector c and a precision r, every real root of c
is within 2^-r of some emitted candidate (completeness holds for ANY
threshold gamma > 0; the 6*d^2 output-length bound additionally needs gamma
at or below the off-root floor, see errbounds.small_value_threshold).

Procedure: with beta the Cauchy bound and B = 2^ceil(log2 beta) the dyadic
outer bound, sweep the uniform grid of spacing 2^-r over [-B, B] (2^r'
cells, r' = r + 1 + ceil(log2 beta)). For a cell [z, z + 2^-r] compute
L = max_sign_change at z and R = min_sign_change at z + 2^-r over the Sturm
chain values; the cell fires iff L - R >= 1, emitting its midpoint — a
dyadic rational (2m+1)/2^(r+1). Adjacent firing cells are not merged.

Why a fired cell never misses and never lies (for the completeness half):
with sigma the zeros-deleted variation count, sigma(z) - sigma(z + 2^-r)
equals the number of distinct roots in (z, z + 2^-r], L >= sigma(z) and
R <= sigma(z + 2^-r) hold for every gamma > 0, so any cell whose half-open
interval holds a root fires. A root exactly on a grid point makes both
neighbors fire.

The literal sweep is Theta(2^r') evaluations — hopeless at r = 32 — so the
implementation descends recursively over cell ranges and prunes any range on
which every chain element is certified (by exact interval Horner arithmetic,
integer-scaled) to keep magnitude >= gamma: no chain element can vanish or
go small there, all signs are constant, L = R everywhere inside, and no cell
fires. The pruned result is bit-identical to the full sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .approxsign import max_changes_of_classes, min_changes_of_classes
from .errors import (
    DegreeTooLow,
    DegreeUnresolved,
    IdenticalPolynomials,
    ThresholdNonPositive,
)
from .polyalg import Polynomial, _as_fraction
from .sturm import cauchy_bound, sturm_chain


@dataclass(frozen=True)
class PrecisionParams:
    """Target precision r (roots located to within 2^-r) and sign threshold."""

    r: int
    gamma: Fraction

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("precision r must be >= 1")
        g = _as_fraction(self.gamma)
        if g <= 0:
            raise ThresholdNonPositive(f"gamma must be > 0, got {g}")
        object.__setattr__(self, "gamma", g)


@dataclass(frozen=True)
class RootCandidateList:
    """Sorted dyadic candidates plus the grid metadata that produced them.

    candidates are strictly increasing Fractions of the form m/2^k;
    interval_width is the grid spacing 2^-r; length_bound is 6*d^2.
    beta/grid_bound/r_prime are None only on the degenerate constant-
    difference path of intersect().
    """

    candidates: tuple
    interval_width: Fraction
    length_bound: int
    beta: Fraction | None = None
    grid_bound: int | None = None
    r_prime: int | None = None


def ceil_log2(x) -> int:
    """Smallest integer e with 2^e >= x, for rational x > 0."""
    x = _as_fraction(x)
    if x <= 0:
        raise ValueError("ceil_log2 needs x > 0")
    n, d = x.numerator, x.denominator
    e = n.bit_length() - d.bit_length() - 1
    while (1 << e) * d < n if e >= 0 else n * (1 << -e) > d:
        e += 1
    return e


class _ScaledChain:
    """Sturm chain with integer-rescaled coefficients for one grid.

    A grid point is m / 2^r. For chain element P of degree k with
    coefficients C_j / den (C_j integers over a common denominator), the
    integer V(m) = sum_j C_j * 2^(r(k-j)) * m^j satisfies
    P(m / 2^r) = V(m) / (den * 2^(rk)), so sign and |P| >= gamma tests are
    pure integer comparisons: |P| < gamma  iff  |V| * g_den < g_num * den * 2^(rk).
    """

    def __init__(self, chain, r: int, gamma: Fraction):
        self.r = r
        s = 1 << r
        g_num, g_den = gamma.numerator, gamma.denominator
        self.g_den = g_den
        self.polys = []  # (horner coeffs high->low as ints, rhs int)
        for p in chain:
            dens = math.lcm(*(c.denominator for c in p.coeffs))
            ints = [int(c * dens) for c in p.coeffs]
            k = len(ints) - 1
            horner = [ints[k - j] * s**j for j in range(k + 1)]
            rhs = g_num * dens * s**k
            self.polys.append((horner, rhs))
        self._classify_cache: dict[int, tuple] = {}

    def classify(self, m: int) -> tuple:
        """Entry classes ((sign, small), ...) of the chain at grid point m/2^r."""
        cached = self._classify_cache.get(m)
        if cached is not None:
            return cached
        g_den = self.g_den
        out = []
        for horner, rhs in self.polys:
            v = horner[0]
            for h in horner[1:]:
                v = v * m + h
            sign = 1 if v > 0 else (-1 if v < 0 else 0)
            out.append((sign, abs(v) * g_den < rhs))
        result = tuple(out)
        self._classify_cache[m] = result
        return result

    def certified_off(self, idx: int, m0: int, m1: int) -> bool:
        """True if |chain[idx]| >= gamma provably holds on [m0/2^r, m1/2^r].

        Two exact integer enclosures of V over the real range, either of
        which may clear the threshold. First a plain interval Horner pass —
        cheap, and tight far away from the roots. Where that loses sign
        information to the dependency problem (its slop scales with the raw
        coefficient size, while the true value shrinks like distance^mult
        near a root), fall back to the centered form: Taylor-shift V to the
        range midpoint by synthetic division and bound the tail terms with
        the triangle inequality. The shifted coefficients decay with the
        same distance^(mult-j) the value does, so ranges only a few widths
        away from a root still certify and the descent stays near-linear in
        the recursion depth instead of exploding around high-multiplicity
        roots.
        """
        horner, rhs = self.polys[idx]
        lo = hi = horner[0]
        for h in horner[1:]:
            p1, p2 = lo * m0, lo * m1
            p3, p4 = hi * m0, hi * m1
            lo = min(p1, p2, p3, p4) + h
            hi = max(p1, p2, p3, p4) + h
        g_den = self.g_den
        if lo * g_den >= rhs or hi * g_den <= -rhs:
            return True
        k = len(horner) - 1
        if k < 2:
            return False  # the plain interval is already exact for these
        mid = (m0 + m1) // 2
        hw = max(mid - m0, m1 - mid)
        b = list(horner)
        for i in range(k):
            for j in range(1, k - i + 1):
                b[j] += b[j - 1] * mid
        # b[k - j] is now the j-th Taylor coefficient of V about mid, so for
        # |m - mid| <= hw:  |V(m) - b[k]| <= sum_j |b[k-j]| * hw^j.
        tail = 0
        pw = 1
        for j in range(1, k + 1):
            pw *= hw
            tail += abs(b[k - j]) * pw
        return (abs(b[k]) - tail) * g_den >= rhs


def root_enum(c: Polynomial, params: PrecisionParams) -> RootCandidateList:
    """Enumerate dyadic candidates within 2^-r of every real root of c.

    Raises DegreeTooLow below degree 1, ThresholdNonPositive for gamma <= 0,
    and DegreeUnresolved when |leading| <= 2*gamma (an approximately-known
    vector whose top coefficient cannot be trusted to be nonzero would make
    the Euclidean divisions meaningless).
    """
    if c.is_zero() or c.degree < 1:
        raise DegreeTooLow("root enumeration needs degree >= 1")
    gamma = _as_fraction(params.gamma)
    if gamma <= 0:
        raise ThresholdNonPositive(f"gamma must be > 0, got {gamma}")
    if abs(c.leading) <= 2 * gamma:
        raise DegreeUnresolved(
            f"|leading coefficient| = {abs(c.leading)} <= 2*gamma = {2 * gamma}"
        )
    r = params.r
    d = c.degree
    beta = cauchy_bound(c)
    e = max(0, ceil_log2(beta))
    chain = sturm_chain(c)
    scaled = _ScaledChain(chain, r, gamma)
    half = 1 << (e + r)  # grid numerators run over [-half, half]
    width = Fraction(1, 1 << r)
    candidates: list[Fraction] = []
    two_r1 = 1 << (r + 1)

    def descend(i0: int, i1: int, undecided: tuple) -> None:
        m0, m1 = i0 - half, i1 - half
        still = tuple(
            idx for idx in undecided if not scaled.certified_off(idx, m0, m1)
        )
        if not still:
            return
        if i1 - i0 == 1:
            left = scaled.classify(m0)
            right = scaled.classify(m1)
            if max_changes_of_classes(left) - min_changes_of_classes(right) >= 1:
                candidates.append(Fraction(2 * m0 + 1, two_r1))
            return
        mid = (i0 + i1) // 2
        descend(i0, mid, still)
        descend(mid, i1, still)

    descend(0, 2 * half, tuple(range(len(chain))))
    return RootCandidateList(
        candidates=tuple(candidates),
        interval_width=width,
        length_bound=6 * d * d,
        beta=beta,
        grid_bound=1 << e,
        r_prime=r + 1 + e,
    )


def intersect(a: Polynomial, b: Polynomial, params: PrecisionParams) -> RootCandidateList:
    """Candidates for {x : a(x) = b(x)}, i.e. the real roots of a - b.

    Raises IdenticalPolynomials when the difference vanishes identically; a
    nonzero constant difference means no intersections and yields an empty
    list (a valid answer, not a failure).
    """
    diff = a - b
    if diff.is_zero():
        raise IdenticalPolynomials("the two coefficient vectors are identical")
    if diff.degree == 0:
        return RootCandidateList(
            candidates=(),
            interval_width=Fraction(1, 1 << params.r),
            length_bound=0,
        )
    return root_enum(diff, params)
