"""Informative-tweet classification toolkit.

Normalization of noisy tweet text, TF-IDF and handcrafted PROB
features, linear models over fused feature blocks, seeded sweeps, and
error analysis. The public API re-exports the pieces most callers
need; the submodules stay importable for the rest.
"""

from .errors import (
    ContractViolation,
    DatasetFormatError,
    EmbeddingLoadError,
    EvaluationError,
    FitError,
    TrainingError,
    TweetsiftError,
)
from .normalize import (
    CoronaMode,
    Label,
    NormalizationConfig,
    TokenStream,
    Tweet,
    normalize,
    segment_hashtag,
    standardize_corona,
    strip_emoji,
    tfidf_preprocess,
    tokenize,
)
from .features import (
    ProbFeature,
    SparseVector,
    TfidfModel,
    fit_tfidf,
    load_tfidf,
    power_transform,
    prob_numeric,
    save_tfidf,
    transform_tfidf,
)
from .embeddings import (
    EmbeddingRecord,
    hash_embed,
    load_embeddings,
    write_embeddings,
)
from .models import (
    DEFAULT_SEEDS,
    FeatureBundle,
    FeatureConfig,
    Hyperparams,
    LinearModel,
    LossKind,
    RunRow,
    assemble_features,
    concat_features,
    load_model,
    loss_for,
    predict,
    save_model,
    sweep,
    train,
)
from .evaluate import (
    ConfusionMatrix,
    EvalReport,
    HistogramReport,
    IntersectionReport,
    evaluate,
    feature_distribution_report,
    intersect_errors,
    write_histogram_csv,
)
from .dataio import (
    read_dataset,
    read_predictions,
    write_dataset,
    write_predictions,
)

__version__ = "0.1.0"

__all__ = [
    "ContractViolation",
    "DatasetFormatError",
    "EmbeddingLoadError",
    "EvaluationError",
    "FitError",
    "TrainingError",
    "TweetsiftError",
    "CoronaMode",
    "Label",
    "NormalizationConfig",
    "TokenStream",
    "Tweet",
    "normalize",
    "segment_hashtag",
    "standardize_corona",
    "strip_emoji",
    "tfidf_preprocess",
    "tokenize",
    "ProbFeature",
    "SparseVector",
    "TfidfModel",
    "fit_tfidf",
    "load_tfidf",
    "power_transform",
    "prob_numeric",
    "save_tfidf",
    "transform_tfidf",
    "EmbeddingRecord",
    "hash_embed",
    "load_embeddings",
    "write_embeddings",
    "DEFAULT_SEEDS",
    "FeatureBundle",
    "FeatureConfig",
    "Hyperparams",
    "LinearModel",
    "LossKind",
    "RunRow",
    "assemble_features",
    "concat_features",
    "load_model",
    "loss_for",
    "predict",
    "save_model",
    "sweep",
    "train",
    "ConfusionMatrix",
    "EvalReport",
    "HistogramReport",
    "IntersectionReport",
    "evaluate",
    "feature_distribution_report",
    "intersect_errors",
    "write_histogram_csv",
    "read_dataset",
    "read_predictions",
    "write_dataset",
    "write_predictions",
    "__version__",
]
