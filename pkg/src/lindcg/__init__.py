"""Linear-discount and classical NDCG, weighted pairwise ranking loss, and
exact identity checks between the DCG error and the pairwise loss."""

from .core import (
    QueryGroup,
    RankedSequence,
    RatedItem,
    ideal_sequence,
    rank_by_score,
    sequence_from_grades,
)
from .equivalence import (
    ExchangeSequence,
    VerificationRecord,
    brute_force_oracle,
    build_exchange_sequence,
    exchange_decrements,
    verify_bipartite_identity,
    verify_multipartite_identity,
)
from .errors import (
    EmptyFileError,
    EmptyGroupError,
    GradeTooLargeError,
    InvalidGradeError,
    InvalidScoreError,
    LindcgError,
    NonBipartiteError,
    ParseError,
    ScoreCountMismatchError,
    ThresholdOutOfRangeError,
    TooLargeError,
)
from .io import DatasetFile, DatasetRecord, parse_svmlight, parse_tsv
from .metrics import (
    MetricReport,
    bipartite_ideal_dcg,
    compute_report,
    dcg_classic,
    dcg_error_linear,
    dcg_linear,
    ideal_dcg_classic,
    ideal_dcg_linear,
    ndcg_classic,
    ndcg_linear,
)
from .pairwise import (
    PairwiseLossValue,
    ThresholdLossVector,
    binarize,
    binarize_sequence,
    pairwise_loss_fast,
    pairwise_loss_naive,
    threshold_decomposition,
)
from .report import (
    AggregateReport,
    VerificationSummary,
    build_aggregate_report,
    render_csv,
    render_json,
    render_text,
    to_json_dict,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport",
    "DatasetFile",
    "DatasetRecord",
    "EmptyFileError",
    "EmptyGroupError",
    "ExchangeSequence",
    "GradeTooLargeError",
    "InvalidGradeError",
    "InvalidScoreError",
    "LindcgError",
    "MetricReport",
    "NonBipartiteError",
    "PairwiseLossValue",
    "ParseError",
    "QueryGroup",
    "RankedSequence",
    "RatedItem",
    "ScoreCountMismatchError",
    "ThresholdLossVector",
    "ThresholdOutOfRangeError",
    "TooLargeError",
    "VerificationRecord",
    "VerificationSummary",
    "binarize",
    "binarize_sequence",
    "bipartite_ideal_dcg",
    "brute_force_oracle",
    "build_aggregate_report",
    "build_exchange_sequence",
    "compute_report",
    "dcg_classic",
    "dcg_error_linear",
    "dcg_linear",
    "exchange_decrements",
    "ideal_dcg_classic",
    "ideal_dcg_linear",
    "ideal_sequence",
    "ndcg_classic",
    "ndcg_linear",
    "pairwise_loss_fast",
    "pairwise_loss_naive",
    "parse_svmlight",
    "parse_tsv",
    "rank_by_score",
    "render_csv",
    "render_json",
    "render_text",
    "sequence_from_grades",
    "threshold_decomposition",
    "to_json_dict",
    "verify_bipartite_identity",
    "verify_multipartite_identity",
]
