"""Graphlet significance-profile embeddings for directed networks.

Turns directed static and temporal edge lists into fixed-length feature
vectors by counting 3-node triads / windowed 3-edge temporal motifs,
comparing the counts to null models, and L2-normalizing the damped ratios.
A small kNN / logistic-regression harness evaluates the vectors under
stratified cross-validation, and the ``srpvec`` CLI chains all stages.
"""

from ._kernels import BACKEND
from .classify import (
    ClassifierConfig,
    CVReport,
    Dataset,
    cross_entropy,
    cross_validate,
    knn_predict,
    logreg_fit,
    logreg_predict,
)
from .embedding import (
    DEFAULT_EPSILON,
    EmbeddingVector,
    concat,
    delta,
    srp,
    static_embedding,
    temporal_embedding,
)
from .errors import ConfigError, DomainError, EdgeListParseError, SrpvecError
from .graphs import (
    DirectedGraph,
    TemporalGraph,
    parse_static_edgelist,
    parse_temporal_edgelist,
    static_projection,
)
from .nullmodels import (
    NullExpectation,
    ne_expected_triads,
    ne_expected_triads_exact_m,
    ne_simulated_triads,
    shuffle_expected_motifs,
    shuffled_timestamps,
)
from .temporal import (
    MOTIF_LABELS,
    MotifCode,
    TemporalMotifCensus,
    classify_triple,
    temporal_motif_census,
    temporal_motif_oracle,
)
from .triads import (
    CENSUS_ORDER,
    TRIAD_CLASSES,
    TriadCensus,
    TriadClass,
    classify_labeled_triad,
    triad_census,
    triad_census_oracle,
)

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active census kernel backend."""
    return BACKEND
