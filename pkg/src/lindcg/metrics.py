"""DCG/NDCG kernels in two gain/discount families, plus the DCG-error quantity.

The linear family uses gain r_i and discount (|S| - i) at 1-based rank i,
so the bottom rank earns nothing and every value is an exact integer.
The classical family uses gain (2**r_i - 1) and discount 1/log2(i + 1) in
ordinary floating point.  Only the final NDCG ratios are floats; linear
quantities stay integers end to end so downstream identity checks can use
equality instead of tolerances.

NDCG of a group whose ideal DCG is zero is reported as 1.0 and flagged as
degenerate: every ranking of such a group is vacuously ideal, and
aggregation over many queries must not abort on one of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import QueryGroup, RankedSequence, ideal_sequence, rank_by_score
from .errors import GradeTooLargeError
from .pairwise import pairwise_loss_fast

# 2**grade must stay exactly representable in a double.
MAX_CLASSIC_GRADE = 30


def dcg_linear(seq: RankedSequence) -> int:
    """Linear-discount DCG: sum of r_i * (|S| - i) over 1-based ranks i.

    Exact integer; the last position always contributes zero.
    """
    n = len(seq.grades)
    return sum(g * (n - i) for i, g in enumerate(seq.grades, start=1))


def ideal_dcg_linear(group: QueryGroup) -> int:
    """Linear DCG of the group's grades sorted in non-increasing order."""
    return dcg_linear(ideal_sequence(group))


def bipartite_ideal_dcg(m: int, n: int) -> int:
    """Closed form for the ideal linear DCG of m positives and n negatives:
    m*n + m*(m - 1)/2."""
    return m * n + m * (m - 1) // 2


def ndcg_linear(group: QueryGroup) -> float:
    """Linear DCG of the score-induced ranking divided by the ideal value.

    Returns exactly 1.0 when the ideal DCG is zero (degenerate group).
    """
    ideal = ideal_dcg_linear(group)
    if ideal == 0:
        return 1.0
    return dcg_linear(rank_by_score(group)) / ideal


def dcg_classic(seq: RankedSequence) -> float:
    """Classical DCG: sum of (2**r_i - 1) / log2(i + 1) over 1-based ranks i."""
    for g in seq.grades:
        if g > MAX_CLASSIC_GRADE:
            raise GradeTooLargeError(
                f"grade {g} exceeds the exponential-gain cap of {MAX_CLASSIC_GRADE}"
            )
    return sum((2**g - 1) / math.log2(i + 1) for i, g in enumerate(seq.grades, start=1))


def ideal_dcg_classic(group: QueryGroup) -> float:
    """Classical DCG of the group's grades sorted in non-increasing order."""
    return dcg_classic(ideal_sequence(group))


def ndcg_classic(group: QueryGroup) -> float:
    """Classical NDCG with the same degenerate-group convention as ndcg_linear."""
    ideal = ideal_dcg_classic(group)
    if ideal == 0.0:
        return 1.0
    return dcg_classic(rank_by_score(group)) / ideal


def dcg_error_linear(group: QueryGroup) -> int:
    """Shortfall of the score-induced ranking from ideal: ideal DCG - observed DCG.

    Always a non-negative integer.
    """
    return ideal_dcg_linear(group) - dcg_linear(rank_by_score(group))


@dataclass(frozen=True, slots=True)
class MetricReport:
    """Every metric computed for one query group.

    ``degenerate_linear`` / ``degenerate_classic`` mark groups whose ideal
    DCG is zero in the respective family; their NDCG is reported as 1.0 by
    convention.  ``normalized_pairwise_loss`` divides by the raw
    cross-grade pair count and may exceed 1 (see the pairwise module).
    """

    query_id: str
    num_items: int
    dcg_linear: int
    ideal_dcg_linear: int
    ndcg_linear: float
    dcg_classic: float
    ideal_dcg_classic: float
    ndcg_classic: float
    dcg_error_linear: int
    pairwise_loss: int
    normalizer_z: int
    normalized_pairwise_loss: float
    degenerate_linear: bool
    degenerate_classic: bool


def compute_report(group: QueryGroup) -> MetricReport:
    """Evaluate both DCG families and the pairwise loss for one group."""
    observed = rank_by_score(group)
    ideal = ideal_sequence(group)

    lin = dcg_linear(observed)
    lin_ideal = dcg_linear(ideal)
    cls = dcg_classic(observed)
    cls_ideal = dcg_classic(ideal)
    loss = pairwise_loss_fast(group)

    return MetricReport(
        query_id=group.query_id,
        num_items=len(group),
        dcg_linear=lin,
        ideal_dcg_linear=lin_ideal,
        ndcg_linear=lin / lin_ideal if lin_ideal else 1.0,
        dcg_classic=cls,
        ideal_dcg_classic=cls_ideal,
        ndcg_classic=cls / cls_ideal if cls_ideal else 1.0,
        dcg_error_linear=lin_ideal - lin,
        pairwise_loss=loss.unnormalized,
        normalizer_z=loss.normalizer_z,
        normalized_pairwise_loss=loss.normalized,
        degenerate_linear=lin_ideal == 0,
        degenerate_classic=cls_ideal == 0.0,
    )
