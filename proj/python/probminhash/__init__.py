"""Fast locality-sensitive sketches for the probability Jaccard similarity."""

from ._core import (
    EmptyInputError,
    InvalidParamsError,
    RandomnessFailure,
    Sketcher,
    algorithms,
    bbit_reduce,
    estimate_similarity,
    estimate_similarity_bbit,
    fixture,
    improvement_factor,
    jaccard,
    jaccard_n,
    jaccard_p,
    jaccard_w,
    sketch,
    sketch_unweighted,
)

__all__ = [
    "EmptyInputError",
    "InvalidParamsError",
    "RandomnessFailure",
    "Sketcher",
    "algorithms",
    "bbit_reduce",
    "estimate_similarity",
    "estimate_similarity_bbit",
    "fixture",
    "improvement_factor",
    "jaccard",
    "jaccard_n",
    "jaccard_p",
    "jaccard_w",
    "sketch",
    "sketch_unweighted",
]
