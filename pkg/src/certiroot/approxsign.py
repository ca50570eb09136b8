"""Conservative sign-change counting under a trust threshold.

An evaluation vector theta is only trusted entrywise up to gamma > 0: an
entry with |theta_i| >= gamma certainly has the sign it shows, while an
entry with |theta_i| < gamma (including exact zeros) could really be
negative, zero, or positive. Call the real vectors that agree with every
trusted sign the *completions* of theta.

`max_sign_change` returns the exact maximum number of sign alternations any
completion can exhibit; `min_sign_change` returns a lower bound on the
minimum. Root counting stays safe with any bracket [min, max] that contains
the true variation count, so the maximum is computed exactly (tight upper
bounds mean fewer spurious root cells) while the minimum trades a little
slack for a rule that is linear, local, and provably never exceeds any
completion's count.

Both counters agree with the plain zeros-deleted variation count when every
entry is trusted, and they bracket it for every gamma:

    min_sign_change(theta, g) <= variations(theta) <= max_sign_change(theta, g)

which is exactly what interval-endpoint root counting needs.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ThresholdNonPositive

# An entry class is (sign, small): sign in {-1, 0, +1} is the exact sign of
# the stored value, small means |value| < gamma (the sign is untrusted).
# Exact zeros are always small since gamma > 0.


def entry_classes(theta: Sequence, gamma) -> list[tuple[int, bool]]:
    """Classify each entry of theta as (exact sign, |entry| < gamma)."""
    if len(theta) == 0:
        raise ValueError("empty evaluation vector")
    if gamma <= 0:
        raise ThresholdNonPositive(f"gamma must be > 0, got {gamma}")
    out = []
    for v in theta:
        sign = 1 if v > 0 else (-1 if v < 0 else 0)
        out.append((sign, -gamma < v < gamma))
    return out


def max_changes_of_classes(classes: Sequence[tuple[int, bool]]) -> int:
    """Exact maximum variation count over all completions.

    Trusted entries pin their sign; a run of k free entries between trusted
    signs s1, s2 contributes k+1 alternations when the parity works out
    (s1 == s2 needs an even total, s1 != s2 an odd one) and k otherwise.
    Leading/trailing free runs alternate freely: k entries give k changes.
    With no trusted entry at all, n entries give n-1.
    """
    trusted = [(i, sign) for i, (sign, small) in enumerate(classes) if not small]
    n = len(classes)
    if not trusted:
        return n - 1
    total = trusted[0][0] + (n - 1 - trusted[-1][0])
    for (i, s1), (j, s2) in zip(trusted, trusted[1:]):
        k = j - i - 1
        best = k + 1
        want_odd = s1 != s2
        if (best % 2 == 1) != want_odd:
            best -= 1
        total += best
    return total


def min_changes_of_classes(classes: Sequence[tuple[int, bool]]) -> int:
    """Lower bound on the minimum variation count over all completions.

    Start from the zeros-deleted variation count of the stored values, then
    give back 1 for a *nonzero* small entry at either end and 2 for each
    nonzero small interior entry, clamping at 0. Exact zeros are already
    absent from the base count and cost nothing extra.

    Soundness: the true minimum equals the variation count of the trusted
    subsequence; deleting one entry from a sign sequence lowers its count by
    at most 2 (interior) or 1 (at an end), so peeling off the nonzero small
    entries one at a time never overshoots the subtraction budget.
    """
    signs = [sign for sign, _ in classes if sign != 0]
    count = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    last = len(classes) - 1
    for i, (sign, small) in enumerate(classes):
        if small and sign != 0:
            count -= 1 if (i == 0 or i == last) else 2
    return max(count, 0)


def max_sign_change(theta: Sequence, gamma) -> int:
    """Largest sign-alternation count achievable within gamma of theta.

    >>> from fractions import Fraction
    >>> max_sign_change((1, Fraction(1, 1000), -1), Fraction(1, 100))
    1
    >>> max_sign_change((1, Fraction(1, 1000), 1), Fraction(1, 100))
    2
    """
    return max_changes_of_classes(entry_classes(theta, gamma))


def min_sign_change(theta: Sequence, gamma) -> int:
    """Lower bound on the sign-alternation count within gamma of theta.

    >>> from fractions import Fraction
    >>> min_sign_change((1, -Fraction(1, 1000), 1), Fraction(1, 100))
    0
    """
    return min_changes_of_classes(entry_classes(theta, gamma))
