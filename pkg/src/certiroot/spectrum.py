"""Bit interleaving of a source sequence with coefficient bit streams.

A constructed point x is a bit string assembled stage by stage. Stage j
covers the 1-based positions (h_{j-1}, h_j] with h_0 = 0. Inside stage j,
positions p <= floor(s * h_j) carry y[p] (the source, indexed by global
position); the remaining positions consume the round-robin pattern over
the d coefficient expansions,

    a_1[0] a_2[0] ... a_d[0] a_1[1] a_2[1] ...

which restarts from bit 0 of every source at each stage boundary, so every
stage embeds a prefix of each coefficient stream on its own. The constant
coefficient a_0 is never an input and so never appears. extract_blocks is
the exact inverse on the consumed bits.

Admissible schedules grow fast: h_1 = 2 and h_j >= 2^(h_{j-1}) afterwards;
default_schedule produces the minimal such growth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import LengthMismatch, ScheduleOverflow, SourceExhausted
from .polyalg import _as_fraction


class BitSource:
    """1-based indexable finite binary sequence.

    Accepts a string of '0'/'1' or any iterable of 0/1 ints. bit(i) raises
    SourceExhausted past the end, so a too-short source is an error rather
    than silent padding. Accesses are recorded in `queried` (highest index
    asked for), which the test oracles use to prove which sources were
    touched.
    """

    def __init__(self, bits):
        if isinstance(bits, str):
            if bits and set(bits) - {"0", "1"}:
                raise ValueError("bit string may contain only '0' and '1'")
            self._bits = bits
        else:
            vals = list(bits)
            if any(b not in (0, 1) for b in vals):
                raise ValueError("bits must be 0 or 1")
            self._bits = "".join(str(b) for b in vals)
        self.queried = 0

    def __len__(self) -> int:
        return len(self._bits)

    def bit(self, i: int) -> int:
        """The i-th bit, 1-based."""
        if i < 1:
            raise IndexError("bit indices are 1-based")
        if i > len(self._bits):
            raise SourceExhausted(f"bit {i} of a {len(self._bits)}-bit source")
        if i > self.queried:
            self.queried = i
        return 1 if self._bits[i - 1] == "1" else 0


@dataclass(frozen=True)
class StageSchedule:
    """Stage boundaries h_1 < h_2 < ... plus the source share s in [0, 1]."""

    stages: tuple
    s: Fraction

    def __post_init__(self):
        stages = tuple(int(h) for h in self.stages)
        if not stages:
            raise ValueError("schedule needs at least one stage")
        if stages[0] != 2:
            raise ValueError("the first stage boundary must be 2")
        for prev, nxt in zip(stages, stages[1:]):
            if nxt < 2**prev:
                raise ValueError(f"stage boundary {nxt} < 2^{prev}")
        s = _as_fraction(self.s)
        if not 0 <= s <= 1:
            raise ValueError("s must lie in [0, 1]")
        object.__setattr__(self, "stages", stages)
        object.__setattr__(self, "s", s)

    @property
    def total_length(self) -> int:
        return self.stages[-1]

    def source_cut(self, j: int) -> int:
        """floor(s * h_j): last position of stage j that carries a y bit."""
        return math.floor(self.s * self.stages[j])


def default_schedule(j_max: int, s=Fraction(1, 2), max_bits: int = 2**20) -> StageSchedule:
    """Minimal admissible growth: h_1 = 2, h_j = 2^(h_{j-1}).

    Raises ScheduleOverflow once a boundary would exceed max_bits (the
    configured bit budget — the next boundary after 65536 already needs
    2^65536 bits).
    """
    if j_max < 1:
        raise ValueError("j_max must be >= 1")
    stages = [2]
    for _ in range(j_max - 1):
        nxt = 2 ** stages[-1]
        if nxt > max_bits:
            raise ScheduleOverflow(f"2^{stages[-1]} exceeds the {max_bits}-bit budget")
        stages.append(nxt)
    return StageSchedule(tuple(stages), _as_fraction(s))


def _segments(sched: StageSchedule, n: int):
    """Yield (position, take_from_y, stage_index) for positions 1..n."""
    prev = 0
    for j, h in enumerate(sched.stages):
        cut = sched.source_cut(j)
        for pos in range(prev + 1, h + 1):
            if pos > n:
                return
            yield pos, pos <= cut, j
        prev = h


def interleave(y: BitSource, coeff_bits, sched: StageSchedule, n: int) -> str:
    """Assemble the first n positions of the constructed point.

    Positions up to floor(s*h_j) inside stage j copy y at the same (global,
    1-based) position. The rest of the stage carries the pattern
    a_1[0] a_2[0] ... a_d[0] a_1[1] ..., restarting from bit 0 of every
    source at each stage boundary, so each stage embeds a prefix of every
    coefficient stream on its own.

    coeff_bits lists the d sources a_1..a_d (a_0 is deliberately not an
    input). n must not exceed the last stage boundary (LengthMismatch).
    Raises SourceExhausted when any source runs out.
    """
    d = len(coeff_bits)
    if d < 1:
        raise ValueError("need at least one coefficient source")
    if n < 0 or n > sched.total_length:
        raise LengthMismatch(f"n = {n} outside [0, {sched.total_length}]")
    out = []
    k = 0  # round-robin counter, stage-local
    stage = -1
    for pos, from_y, j in _segments(sched, n):
        if j != stage:
            stage, k = j, 0
        if from_y:
            out.append(y.bit(pos))
        else:
            out.append(coeff_bits[k % d].bit(k // d + 1))
            k += 1
    return "".join(str(b) for b in out)


def extract_blocks(x: str, sched: StageSchedule, d: int):
    """Invert interleave: recover the y segments and coefficient prefixes.

    Returns (y_fragments, coeff_fragments): y_fragments is a list of
    (start_position, bits) pairs, one per maximal run of source positions
    inside x; coeff_fragments is a list of d strings, the longest prefix of
    each a_i recoverable from x. Stages repeat coefficient prefixes, so a
    bit seen in an earlier stage is simply confirmed by later ones (the
    precondition — x came from interleave — makes them agree). Raises
    LengthMismatch when x is longer than the schedule covers.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    n = len(x)
    if n > sched.total_length:
        raise LengthMismatch(f"{n} bits exceed the schedule's {sched.total_length}")
    if set(x) - {"0", "1"}:
        raise ValueError("bit string may contain only '0' and '1'")
    y_fragments: list[tuple[int, str]] = []
    coeffs: list[list[str]] = [[] for _ in range(d)]
    current_start = None
    current: list[str] = []
    k = 0
    stage = -1
    for pos, from_y, j in _segments(sched, n):
        if j != stage:
            stage, k = j, 0
        bit = x[pos - 1]
        if from_y:
            if current_start is None:
                current_start = pos
            current.append(bit)
        else:
            if current_start is not None:
                y_fragments.append((current_start, "".join(current)))
                current_start, current = None, []
            i, idx = k % d, k // d
            if idx == len(coeffs[i]):
                coeffs[i].append(bit)
            k += 1
    if current_start is not None:
        y_fragments.append((current_start, "".join(current)))
    return y_fragments, ["".join(c) for c in coeffs]
