# -*- coding: utf-8 -*-
"""Food substitutes from meal logs via distributional similarity.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging

from ._metadata import (
    __author__,
    __author_email__,
    __copyright__,
    __description__,
    __download_url__,
    __license__,
    __title__,
    __url__,
    __version__,
)
from .corpus import (
    DiscardStats,
    PairCounts,
    ProcessedMeal,
    Vocabulary,
    build_pair_counts,
    corpus_statistics,
    load_meals,
    preprocess_corpus,
    surface_forms,
)
from .evaluation import (
    JudgedList,
    average_precision,
    cohen_kappa,
    compare_methods,
    evaluate_rankings,
    load_judgements,
    mean_average_precision,
    ndcg,
    precision_at_k,
    rater_agreement,
    subcategory_cooccurrence,
)
from .exceptions import (
    AmbiguousSynonymError,
    ArtifactFormatError,
    ConfigError,
    CorpusTooSmallError,
    DegenerateSynthWarning,
    JudgementParseError,
    MealParseError,
    MissingArtifactError,
    ParseError,
    PreconditionError,
    TaxonomyParseError,
    UnknownFoodError,
    UnmatchableEntryError,
    ValidationError,
    foodsubsException,
    foodsubsWarning,
)
from .models.immutable import Judgement, MealRecord, immutable_data_factory
from .pipeline import FoodSubstitutesPipeline, run_pipeline
from .pipeline.runconfig import RunConfig
from .ppmi import PpmiMatrix, build_ppmi_matrix, cosine_similarity
from .ranker import RankedList, rank_all, sample_queries, top_k_substitutes
from .svd import SvdModel, dot_similarity, truncated_svd
from .synth import (
    SynthSpec,
    generate_corpus,
    planted_recovery_score,
    simulate_judgements,
)
from .taxonomy import (
    FoodKey,
    SalientFeature,
    Taxonomy,
    canonical_food_key,
    extract_salient_features,
    load_taxonomy,
    tokenize,
)


# Initialize Package Logging
logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())
