"""Weighted pairwise misranking loss over query groups.

A pair of items with grades a < b is misranked when the higher-graded
item scores strictly below the lower-graded one; each such pair costs the
grade gap (b - a).  Score ties never count: the indicator is strict, so
tied pairs contribute zero rather than half credit.

The normalizer Z is the raw number of cross-grade pairs,
sum over a < b of |S_a| * |S_b|, deliberately without the (b - a)
weights.  The normalized loss can therefore exceed 1; its true ceiling is
(L - 1).  This asymmetry is kept on purpose rather than "fixed".

Two counters are provided: a naive double loop over all item pairs, kept
permanently as the test oracle, and a histogram sweep that produces
identical integers in O(|S|*L + |S| log |S|).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import QueryGroup, RankedSequence, RatedItem
from .errors import ThresholdOutOfRangeError


@dataclass(frozen=True, slots=True)
class PairwiseLossValue:
    """Unnormalized and normalized loss plus the pair-count normalizer Z.

    ``degenerate`` marks groups where every item shares one grade, so
    Z = 0 and the normalized loss is reported as 0.0.
    """

    unnormalized: int
    normalizer_z: int
    normalized: float
    degenerate: bool


@dataclass(frozen=True, slots=True)
class ThresholdLossVector:
    """Unweighted bipartite losses, one per binarization threshold k in {0..L-2}.

    The entries sum to the unnormalized weighted loss of the original group.
    """

    per_threshold: tuple[int, ...]

    def total(self) -> int:
        return sum(self.per_threshold)


def _normalizer(group: QueryGroup) -> int:
    counts = group.grade_counts()
    total = len(group)
    return (total * total - sum(c * c for c in counts)) // 2


def _as_loss_value(unnormalized: int, group: QueryGroup) -> PairwiseLossValue:
    z = _normalizer(group)
    return PairwiseLossValue(
        unnormalized=unnormalized,
        normalizer_z=z,
        normalized=unnormalized / z if z else 0.0,
        degenerate=z == 0,
    )


def pairwise_loss_naive(group: QueryGroup) -> PairwiseLossValue:
    """Count misranked pairs by direct enumeration of all item pairs.

    Quadratic in |S|; retained as the oracle the fast counter is checked
    against.
    """
    pairs = [(item.grade, item.score) for item in group.items]
    loss = 0
    for (grade_a, score_a), (grade_b, score_b) in itertools.combinations(pairs, 2):
        if grade_a < grade_b:
            if score_b < score_a:
                loss += grade_b - grade_a
        elif grade_b < grade_a:
            if score_a < score_b:
                loss += grade_a - grade_b
    return _as_loss_value(loss, group)


def pairwise_loss_fast(group: QueryGroup) -> PairwiseLossValue:
    """Count misranked pairs with a grade-histogram sweep.

    Items are swept in descending score order; equal-score items form an
    atomic batch that only enters the histogram once the whole batch has
    been scored against it, so ties never count.  For a swept item of
    grade g, every already-seen (strictly higher-scored) item of grade
    g' < g is a misranked pair costing g - g'.  Output is identical to
    pairwise_loss_naive on every input.
    """
    ordered = sorted(group.items, key=lambda item: item.score, reverse=True)
    hist = [0] * group.num_grades
    loss = 0
    n = len(ordered)
    i = 0
    while i < n:
        j = i
        score = ordered[i].score
        while j < n and ordered[j].score == score:
            j += 1
        batch = ordered[i:j]
        for item in batch:
            g = item.grade
            for lower in range(g):
                count = hist[lower]
                if count:
                    loss += count * (g - lower)
        for item in batch:
            hist[item.grade] += 1
        i = j
    return _as_loss_value(loss, group)


def binarize(group: QueryGroup, k: int) -> QueryGroup:
    """Collapse the group to binary grades at threshold k: grade 1 iff grade > k.

    Items and scores are untouched; the resulting alphabet is {0, 1}.
    """
    if not 0 <= k <= group.num_grades - 2:
        raise ThresholdOutOfRangeError(
            f"threshold {k} outside {{0..{group.num_grades - 2}}}"
        )
    items = tuple(
        RatedItem(1 if item.grade > k else 0, item.score) for item in group.items
    )
    return QueryGroup(group.query_id, items, 2)


def binarize_sequence(seq: RankedSequence, k: int) -> RankedSequence:
    """Collapse an already-ranked grade sequence to binary at threshold k."""
    return RankedSequence(tuple(1 if g > k else 0 for g in seq.grades))


def threshold_decomposition(group: QueryGroup) -> ThresholdLossVector:
    """Split the weighted loss into L-1 unweighted bipartite losses.

    Entry k is the loss of the group binarized at threshold k; a pair with
    grade gap (b - a) is misranked at exactly (b - a) thresholds, so the
    entries sum to the unnormalized weighted loss.
    """
    entries = tuple(
        pairwise_loss_fast(binarize(group, k)).unnormalized
        for k in range(group.num_grades - 1)
    )
    return ThresholdLossVector(per_threshold=entries)
