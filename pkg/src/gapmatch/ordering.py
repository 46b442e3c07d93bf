"""Pattern ordering to reduce the number of (word, gap) pairs the column
matcher visits per text position.

Two cost functions are provided. :func:`pmdbs_cost` bins the concatenated
per-pattern gap lists into groups of ``b`` and sums the distinct values per
bin. :func:`realized_cost` does the same on the matcher's actual bit layout,
where every keyword (including each pattern's last one, which has no gap)
takes one slot; this is the ``sum_j |G_j|`` that the matcher pays. Finding
the best order is NP-hard, so :func:`greedy_order` is a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence

from gapmatch.bitcolumn import WORD_BITS
from gapmatch.pattern import PatternSet

EXHAUSTIVE_LIMIT = 6


def b_mapping(lists: Sequence[Sequence[int]], b: int) -> list[list[int]]:
    flat = [x for lst in lists for x in lst]
    return [flat[i:i + b] for i in range(0, len(flat), b)]


def _check_perm(ps: PatternSet, perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(len(ps))):
        raise ValueError("not a permutation of the pattern indices")


def pmdbs_cost(ps: PatternSet, perm: Sequence[int], b: int) -> int:
    _check_perm(ps, perm)
    bins = b_mapping([ps[k].jbar for k in perm], b)
    return sum(len(set(bin_)) for bin_ in bins)


def _slots(ps: PatternSet, perm: Sequence[int]) -> list[int | None]:
    out: list[int | None] = []
    for k in perm:
        out.extend(ps[k].jbar)
        out.append(None)
    return out


def realized_cost(ps: PatternSet, perm: Sequence[int], w: int = WORD_BITS) -> int:
    _check_perm(ps, perm)
    return _cost_of_slots(_slots(ps, perm), w)


def greedy_order(ps: PatternSet, b: int = WORD_BITS) -> list[int]:
    """Nearest-neighbour chaining on shared gap values.

    Starts from the pattern with the most gaps, then repeatedly appends the
    unplaced pattern sharing the most distinct gaps with the last bin of the
    current layout (ties: smaller cost increase, then lower index).
    """
    n = len(ps)
    if n <= 1:
        return list(range(n))
    gapsets = [set(p.jbar) for p in ps]
    first = max(range(n), key=lambda k: (ps[k].klen - 1, -k))
    order = [first]
    slots: list[int | None] = list(ps[first].jbar) + [None]
    left = set(range(n)) - {first}
    while left:
        tail_start = ((len(slots) - 1) // b) * b
        tail = {g for g in slots[tail_start:] if g is not None}
        # bins before the tail are unaffected by appending
        tail_slots = slots[tail_start:]
        base = _cost_of_slots(tail_slots, b)

        def key(k: int) -> tuple[int, int, int]:
            shared = len(gapsets[k] & tail)
            grown = _cost_of_slots(tail_slots + list(ps[k].jbar) + [None], b) - base
            return (-shared, grown, k)

        best = min(left, key=key)
        order.append(best)
        slots.extend(ps[best].jbar)
        slots.append(None)
        left.remove(best)
    return order


def _cost_of_slots(slots: list[int | None], b: int) -> int:
    return sum(
        len({g for g in slots[i:i + b] if g is not None}) for i in range(0, len(slots), b)
    )


def exhaustive_order(ps: PatternSet, b: int = WORD_BITS,
                     cost: Callable[[PatternSet, Sequence[int], int], int] = realized_cost,
                     ) -> tuple[list[int], int]:
    """Lowest-cost permutation by trying them all (first one found on ties)."""
    if len(ps) > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive search is limited to {EXHAUSTIVE_LIMIT} patterns")
    best, best_cost = None, None
    for perm in permutations(range(len(ps))):
        c = cost(ps, perm, b)
        if best_cost is None or c < best_cost:
            best, best_cost = list(perm), c
    return best or [], best_cost or 0


@dataclass(frozen=True)
class OrderReport:
    input_cost: int
    order: list[int]
    greedy_cost: int
    optimum: int | None = None

    @property
    def greedy_is_optimal(self) -> bool | None:
        return None if self.optimum is None else self.greedy_cost == self.optimum


def order_report(ps: PatternSet, b: int = WORD_BITS) -> OrderReport:
    order = greedy_order(ps, b)
    optimum = exhaustive_order(ps, b)[1] if len(ps) <= EXHAUSTIVE_LIMIT else None
    return OrderReport(
        input_cost=realized_cost(ps, range(len(ps)), b),
        order=order,
        greedy_cost=realized_cost(ps, order, b),
        optimum=optimum,
    )
