"""Domain types and canonical orderings for query-grouped rating/score data.

Grades are non-negative integers drawn from an alphabet {0, ..., L-1};
scores are finite floats produced by whatever model is under evaluation.
All types validate their invariants at construction and are immutable
afterwards, and every operation is a pure function, so values can be
shared freely across concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyGroupError, InvalidGradeError, InvalidScoreError


@dataclass(frozen=True, slots=True)
class RatedItem:
    """One rated instance: an integer relevance grade plus a model score."""

    grade: int
    score: float

    def __post_init__(self) -> None:
        if not isinstance(self.grade, int) or self.grade < 0:
            raise InvalidGradeError(f"grade must be a non-negative integer, got {self.grade!r}")
        if not math.isfinite(self.score):
            raise InvalidScoreError(f"score must be finite, got {self.score!r}")


@dataclass(frozen=True, slots=True)
class QueryGroup:
    """All rated items retrieved for one query, plus the grade-alphabet size L."""

    query_id: str
    items: tuple[RatedItem, ...]
    num_grades: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items:
            raise EmptyGroupError(f"query {self.query_id!r} has no items")
        if self.num_grades < 2:
            raise InvalidGradeError(
                f"num_grades must be at least 2, got {self.num_grades}"
            )
        for item in self.items:
            if item.grade >= self.num_grades:
                raise InvalidGradeError(
                    f"query {self.query_id!r}: grade {item.grade} outside "
                    f"alphabet {{0..{self.num_grades - 1}}}"
                )

    @classmethod
    def build(
        cls,
        query_id: str,
        grades: Sequence[int],
        scores: Sequence[float],
        num_grades: int | None = None,
    ) -> QueryGroup:
        """Assemble a group from parallel grade and score sequences.

        When ``num_grades`` is omitted the alphabet is inferred as
        max(grade) + 1, floored at 2 so all-zero groups stay valid.
        """
        if len(grades) != len(scores):
            raise ValueError(
                f"{len(grades)} grades vs {len(scores)} scores for query {query_id!r}"
            )
        if num_grades is None:
            num_grades = max(2, max(grades, default=0) + 1)
        items = tuple(RatedItem(g, float(s)) for g, s in zip(grades, scores))
        return cls(query_id, items, num_grades)

    def grade_counts(self) -> tuple[int, ...]:
        """Per-grade item counts, indexed by grade value."""
        counts = [0] * self.num_grades
        for item in self.items:
            counts[item.grade] += 1
        return tuple(counts)

    def has_score_ties(self) -> bool:
        """True when any two items share exactly the same score."""
        return len({item.score for item in self.items}) < len(self.items)

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True, slots=True)
class RankedSequence:
    """Grades read off a ranking, best-scored position first."""

    grades: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "grades", tuple(self.grades))
        if not self.grades:
            raise EmptyGroupError("ranked sequence has no items")
        for g in self.grades:
            if not isinstance(g, int) or g < 0:
                raise InvalidGradeError(f"grade must be a non-negative integer, got {g!r}")

    def grade_counts(self, num_grades: int | None = None) -> tuple[int, ...]:
        """Per-grade counts; the alphabet defaults to max(grade) + 1."""
        if num_grades is None:
            num_grades = max(self.grades) + 1
        counts = [0] * num_grades
        for g in self.grades:
            counts[g] += 1
        return tuple(counts)

    def __len__(self) -> int:
        return len(self.grades)


def rank_by_score(group: QueryGroup) -> RankedSequence:
    """Order the group's grades by descending model score.

    Equal scores keep their input order (stable tie-break), so repeated
    evaluation of the same group always yields the same sequence.
    """
    ranked = sorted(group.items, key=lambda item: item.score, reverse=True)
    return RankedSequence(tuple(item.grade for item in ranked))


def ideal_sequence(group: QueryGroup) -> RankedSequence:
    """Grades in non-increasing order: the arrangement maximizing linear DCG."""
    return RankedSequence(tuple(sorted((item.grade for item in group.items), reverse=True)))


def sequence_from_grades(grades: Iterable[int]) -> RankedSequence:
    """Wrap an already-ranked grade list as a RankedSequence."""
    return RankedSequence(tuple(grades))
