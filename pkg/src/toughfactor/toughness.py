"""Exact toughness and the t-tough predicate.

Values are ``fractions.Fraction`` (always in lowest terms) or the ``INFINITE``
sentinel used for complete graphs. Comparisons inside the searches are done by
integer cross-multiplication; no floats are involved.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Union

from .errors import BudgetExceeded, InputError
from .graph import Graph, count_components_mask, from_mask, to_mask

DEFAULT_MAX_N = 20
_DEADLINE_STRIDE = 2048


@functools.total_ordering
class _Infinite:
    """Toughness of a complete graph; greater than every finite value."""

    _instance: Optional["_Infinite"] = None

    def __new__(cls) -> "_Infinite":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("INFINITE")

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()
Rational = Union[Fraction, _Infinite]


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"``, an integer, or ``"inf"``."""
    text = text.strip()
    if text.lower() in ("inf", "infinite", "infinity"):
        return INFINITE
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact rational: {text!r}") from None
    if "." in text or "e" in text.lower():
        raise InputError(f"give rationals as p/q, not decimals: {text!r}")
    return value


def format_rational(value: Rational) -> str:
    return str(value)


@dataclass(frozen=True)
class ToughnessResult:
    value: Rational
    witness: Optional[frozenset[int]]


def cut_ratio(g: Graph, cut: Iterable[int]) -> Optional[Fraction]:
    """``|U| / omega(G - U)`` if removing ``U`` leaves at least two components, else ``None``."""
    mask = to_mask(cut)
    if mask >> g.n:
        raise InputError("cut contains vertices outside the graph")
    w = count_components_mask(g.rows, g.full_mask & ~mask)
    if w < 2:
        return None
    return Fraction(mask.bit_count(), w)


def _check_budget(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise BudgetExceeded(f"exact toughness search limited to n <= {max_n}, graph has n = {g.n}")


def toughness_exact(g: Graph, max_n: int = DEFAULT_MAX_N, deadline: Optional[float] = None) -> ToughnessResult:
    """Minimum of ``|U|/omega(G-U)`` over all cuts, with the (size, lex)-smallest minimiser.

    ``deadline`` is a ``time.monotonic()`` value after which ``BudgetExceeded`` is raised.
    """
    if g.n < 1:
        raise InputError("toughness is undefined for the null graph")
    if g.is_complete():
        return ToughnessResult(INFINITE, None)
    _check_budget(g, max_n)
    n, rows, full = g.n, g.rows, g.full_mask
    if count_components_mask(rows, full, stop_at=2) >= 2:
        return ToughnessResult(Fraction(0), frozenset())

    # Incumbent from the neighbourhood of a minimum-degree vertex (a valid cut
    # since G is not complete); only used for pruning, so ties are still found.
    v = min(range(n), key=lambda x: rows[x].bit_count())
    bound_num = rows[v].bit_count()
    bound_den = count_components_mask(rows, full & ~rows[v])

    best: Optional[tuple[int, int, tuple[int, ...]]] = None
    bit = [1 << i for i in range(n)]
    steps = 0
    for k in range(1, n - 1):
        # k/(n-k) lower-bounds every ratio at this size and grows with k.
        if k * bound_den > bound_num * (n - k):
            break
        for combo in combinations(range(n), k):
            steps += 1
            if deadline is not None and steps % _DEADLINE_STRIDE == 0 and time.monotonic() > deadline:
                raise BudgetExceeded("toughness search ran past its time budget")
            mask = 0
            for x in combo:
                mask |= bit[x]
            w = count_components_mask(rows, full & ~mask)
            if w < 2:
                continue
            if best is None or k * best[1] < best[0] * w:
                best = (k, w, combo)
                if k * bound_den < bound_num * w:
                    bound_num, bound_den = k, w
    assert best is not None
    return ToughnessResult(Fraction(best[0], best[1]), frozenset(best[2]))


def find_toughness_violation(
    g: Graph, t: Rational, max_n: int = DEFAULT_MAX_N, deadline: Optional[float] = None
) -> Optional[frozenset[int]]:
    """The (size, lex)-smallest ``U`` with ``t * omega(G-U) > |U|`` and ``omega >= 2``, or ``None``."""
    if t is INFINITE:
        raise InputError("t must be finite")
    t = Fraction(t)
    if t < 0:
        raise InputError("t must be non-negative")
    if g.is_complete() or t == 0:
        return None
    _check_budget(g, max_n)
    n, rows, full = g.n, g.rows, g.full_mask
    p, q = t.numerator, t.denominator
    bit = [1 << i for i in range(n)]
    steps = 0
    for k in range(0, n - 1):
        # omega(G-U) <= n-k, so no U of this size or larger can violate.
        if p * (n - k) <= k * q:
            break
        need = max(2, k * q // p + 1)
        for combo in combinations(range(n), k):
            steps += 1
            if deadline is not None and steps % _DEADLINE_STRIDE == 0 and time.monotonic() > deadline:
                raise BudgetExceeded("toughness search ran past its time budget")
            mask = 0
            for x in combo:
                mask |= bit[x]
            if count_components_mask(rows, full & ~mask, stop_at=need) >= need:
                return frozenset(combo)
    return None


def is_t_tough(
    g: Graph, t: Rational, max_n: int = DEFAULT_MAX_N, deadline: Optional[float] = None
) -> tuple[bool, Optional[frozenset[int]]]:
    """``(True, None)`` if G is t-tough, else ``(False, U)`` with a violating cut ``U``."""
    if t is INFINITE:
        return (True, None) if g.is_complete() else (False, _any_cut(g))
    witness = find_toughness_violation(g, t, max_n=max_n, deadline=deadline)
    return witness is None, witness


def _any_cut(g: Graph) -> frozenset[int]:
    v = min(range(g.n), key=g.degree)
    return from_mask(g.rows[v])
