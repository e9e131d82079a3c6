# -*- coding: utf-8 -*-
"""Run configuration: defaults, then a JSON config file, then the command line.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import io
import json
import os
from collections import OrderedDict, namedtuple

from foodsubs.config import (
    DEFAULT_KEEP_DUPLICATES,
    DEFAULT_LOG_BASE,
    DEFAULT_MIN_COL_COUNT,
    DEFAULT_MIN_ROW_COUNT,
    DEFAULT_NDCG_GAIN,
    DEFAULT_OVERSAMPLING,
    DEFAULT_POWER_ITERS,
    DEFAULT_QUERY_COUNT,
    DEFAULT_QUERY_PREFIXES,
    DEFAULT_QUERY_SEED,
    DEFAULT_SKIP_MALFORMED,
    DEFAULT_SVD_ALGORITHM,
    DEFAULT_SVD_RANK,
    DEFAULT_SVD_SEED,
    DEFAULT_SVD_SIMILARITY,
    DEFAULT_SYNTH_AFFINITY,
    DEFAULT_SYNTH_CLUSTERS,
    DEFAULT_SYNTH_FOODS_PER_CLUSTER,
    DEFAULT_SYNTH_MEAL_SIZE_RANGE,
    DEFAULT_SYNTH_MEALS,
    DEFAULT_SYNTH_PARTNERS,
    DEFAULT_SYNTH_SEED,
    DEFAULT_SYNTH_ZIPF_EXPONENT,
    DEFAULT_TAUS,
    DEFAULT_TOP_K,
    METHODS,
    NDCG_GAINS,
    SVD_ALGORITHMS,
    SVD_SIMILARITIES,
)
from foodsubs.exceptions import ConfigError, PreconditionError
from foodsubs.synth import SynthSpec


# kind: path | int | float | bool | str | choice | str_list | float_list |
# int_list | log_base
Field = namedtuple("Field", ["name", "default", "kind", "options", "help"])


FIELDS = (
    Field("taxonomy_path", None, "path", None,
          "taxonomy TSV (category, subcategory, entity, synonyms)"),
    Field("meals_path", None, "path", None, "meal log (meals.jsonl)"),
    Field("output_dir", "foodsubs-run", "path", None,
          "directory receiving every artifact"),
    Field("judgements_path", None, "path", None,
          "graded judgements (judgements.csv)"),
    Field("clusters_path", None, "path", None,
          "planted clusters (clusters.tsv) for simulated judgements"),
    Field("min_row_count", DEFAULT_MIN_ROW_COUNT, "int", 1,
          "minimum #(f) for a food row"),
    Field("min_col_count", DEFAULT_MIN_COL_COUNT, "int", 1,
          "minimum #(c) for a context column"),
    Field("keep_duplicates", DEFAULT_KEEP_DUPLICATES, "bool", None,
          "keep repeated foods within a meal"),
    Field("skip_malformed", DEFAULT_SKIP_MALFORMED, "bool", None,
          "skip malformed meal lines instead of failing"),
    Field("log_base", DEFAULT_LOG_BASE, "log_base", None,
          "logarithm base of the matrix weights ('e' or a number > 1)"),
    Field("svd_k", DEFAULT_SVD_RANK, "int", 1, "SVD rank k"),
    Field("svd_seed", DEFAULT_SVD_SEED, "int", None, "SVD random seed"),
    Field("oversampling", DEFAULT_OVERSAMPLING, "int", 0,
          "randomized SVD oversampling"),
    Field("power_iters", DEFAULT_POWER_ITERS, "int", 0,
          "randomized SVD power iterations"),
    Field("svd_algorithm", DEFAULT_SVD_ALGORITHM, "choice", SVD_ALGORITHMS,
          "SVD solver"),
    Field("svd_similarity", DEFAULT_SVD_SIMILARITY, "choice",
          SVD_SIMILARITIES, "similarity over SVD embeddings"),
    Field("top_k", DEFAULT_TOP_K, "int", 1, "substitutes per query"),
    Field("min_score", None, "float", None,
          "drop candidates scoring at or below this value"),
    Field("methods", list(METHODS), "str_list", METHODS,
          "ranking methods"),
    Field("query_prefixes", list(DEFAULT_QUERY_PREFIXES), "str_list", None,
          "feature prefixes evaluation queries are sampled from"),
    Field("query_count", DEFAULT_QUERY_COUNT, "int", 1,
          "number of evaluation queries"),
    Field("query_seed", DEFAULT_QUERY_SEED, "int", None,
          "query sampling seed"),
    Field("taus", list(DEFAULT_TAUS), "float_list", None,
          "relevance thresholds on the average rating"),
    Field("ndcg_gain", DEFAULT_NDCG_GAIN, "choice", NDCG_GAINS,
          "NDCG gain function"),
    Field("heatmap_prefixes", list(DEFAULT_QUERY_PREFIXES), "str_list", None,
          "query feature prefixes of the pairs in the heatmap"),
    Field("simulate_judgements", False, "bool", None,
          "rate ranked pairs from clusters instead of reading judgements"),
    Field("judgement_raters", 3, "int", 1, "raters per simulated pair"),
    Field("judgement_seed", 0, "int", None, "simulated judgement seed"),
    Field("synth_clusters", DEFAULT_SYNTH_CLUSTERS, "int", 1,
          "synthetic clusters"),
    Field("synth_foods_per_cluster", DEFAULT_SYNTH_FOODS_PER_CLUSTER, "int",
          1, "synthetic foods per cluster"),
    Field("synth_meals", DEFAULT_SYNTH_MEALS, "int", 1, "synthetic meals"),
    Field("synth_meal_size_range", list(DEFAULT_SYNTH_MEAL_SIZE_RANGE),
          "int_list", 2, "smallest and largest synthetic meal"),
    Field("synth_affinity", DEFAULT_SYNTH_AFFINITY, "float", None,
          "probability a meal slot comes from the anchor's partners"),
    Field("synth_partners", DEFAULT_SYNTH_PARTNERS, "int", 0,
          "partner clusters per synthetic cluster"),
    Field("synth_zipf_exponent", DEFAULT_SYNTH_ZIPF_EXPONENT, "float", None,
          "skew of the synthetic cluster distribution"),
    Field("synth_seed", DEFAULT_SYNTH_SEED, "int", None, "synthetic seed"),
)

FIELDS_BY_NAME = OrderedDict((field.name, field) for field in FIELDS)


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _field_problems(field, value):
    """The problems with one field's value (list of str)."""
    name = field.name
    kind = field.kind
    if value is None:
        if field.default is None:
            return []
        return ["{}: a value is required".format(name)]

    if kind == "path" and not isinstance(value, str):
        return ["{}: expected a path string".format(name)]
    if kind == "bool" and not isinstance(value, bool):
        return ["{}: expected true or false".format(name)]
    if kind == "int":
        if not _is_int(value):
            return ["{}: expected an integer".format(name)]
        if field.options is not None and value < field.options:
            return ["{}: must be >= {}".format(name, field.options)]
    if kind == "float" and not _is_number(value):
        return ["{}: expected a number".format(name)]
    if kind == "choice" and value not in field.options:
        return ["{}: must be one of {}".format(name, ", ".join(field.options))]
    if kind == "log_base":
        if value != "e":
            try:
                valid = float(value) > 1
            except (TypeError, ValueError):
                valid = False
            if not valid:
                return ["{}: must be 'e' or a number > 1".format(name)]
    if kind.endswith("_list"):
        if not isinstance(value, (list, tuple)) or not value:
            return ["{}: expected a non-empty list".format(name)]
        check = {"str_list": lambda v: isinstance(v, str),
                 "float_list": _is_number,
                 "int_list": _is_int}[kind]
        if not all(check(item) for item in value):
            return ["{}: unexpected list item type".format(name)]
        if kind == "str_list" and field.options is not None:
            unknown = [v for v in value if v not in field.options]
            if unknown:
                return ["{}: unknown values {}; choose from {}".format(
                    name, ", ".join(unknown), ", ".join(field.options))]
        if kind == "int_list" and field.options is not None and \
                len(value) != field.options:
            return ["{}: expected {} values".format(name, field.options)]
    return []


class RunConfig(object):
    """The settings of a pipeline run, one attribute per field."""

    def __init__(self, **values):
        """Create a configuration from defaults and keyword overrides.

        Raises:
            ConfigError: If a keyword is not a configuration field.

        """
        unknown = sorted(set(values) - set(FIELDS_BY_NAME))
        if unknown:
            raise ConfigError(
                "unknown setting {!r}".format(name) for name in unknown
            )
        for field in FIELDS:
            default = field.default
            if isinstance(default, list):
                default = list(default)
            setattr(self, field.name, values.get(field.name, default))

    @classmethod
    def from_file(cls, path, **overrides):
        """Load a JSON config file, then apply overrides.

        Relative paths in the file are resolved against the file's
        directory; overrides with the value None are ignored.

        Raises:
            OSError: If the file cannot be read.
            ConfigError: If the file is not a JSON object of known fields.

        """
        with io.open(path, encoding="utf-8") as f:
            try:
                data = json.load(f, object_pairs_hook=OrderedDict)
            except ValueError as e:
                raise ConfigError(["{}: invalid JSON ({})".format(path, e)])
        if not isinstance(data, dict):
            raise ConfigError(["{}: expected a JSON object".format(path)])

        base = os.path.dirname(os.path.abspath(path))
        for name, value in data.items():
            field = FIELDS_BY_NAME.get(name)
            if field is not None and field.kind == "path" and \
                    isinstance(value, str) and not os.path.isabs(value):
                data[name] = os.path.normpath(os.path.join(base, value))
        data.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(**data)

    @classmethod
    def from_sources(cls, config_path=None, **overrides):
        """Defaults, then the config file (if any), then overrides."""
        if config_path:
            return cls.from_file(config_path, **overrides)
        return cls(**{k: v for k, v in overrides.items() if v is not None})

    def problems(self):
        """Every validation problem of the configuration (list of str)."""
        problems = []
        for field in FIELDS:
            problems.extend(_field_problems(field, getattr(self, field.name)))
        if problems:
            return problems

        if self.svd_seed < 0 or self.query_seed < 0 or \
                self.judgement_seed < 0 or self.synth_seed < 0:
            problems.append("seeds must be non-negative")
        if any(tau < 1 or tau > 7 for tau in self.taus):
            problems.append("taus: thresholds must lie in [1, 7]")
        if not 0.0 <= self.synth_affinity <= 1.0:
            problems.append("synth_affinity: must lie in [0, 1]")
        smallest, largest = self.synth_meal_size_range
        if not 1 <= smallest <= largest:
            problems.append(
                "synth_meal_size_range: expected 1 <= min <= max"
            )
        elif largest > self.synth_clusters:
            problems.append(
                "synth_meal_size_range: meals larger than synth_clusters"
            )
        if self.synth_partners >= self.synth_clusters:
            problems.append("synth_partners: must be < synth_clusters")
        if self.synth_zipf_exponent < 0:
            problems.append("synth_zipf_exponent: must be >= 0")
        if self.simulate_judgements and self.judgements_path:
            problems.append(
                "judgements_path and simulate_judgements are exclusive"
            )
        return problems

    def validate(self):
        """Raise one ConfigError listing every problem, if there are any."""
        problems = self.problems()
        if problems:
            raise ConfigError(problems)
        return self

    def require(self, *names):
        """Raise ConfigError unless every named field has a value."""
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ConfigError(
                "{}: required by this stage".format(name) for name in missing
            )

    def synth_spec(self):
        """The SynthSpec described by the synth_* fields."""
        try:
            return SynthSpec(
                n_clusters=self.synth_clusters,
                foods_per_cluster=self.synth_foods_per_cluster,
                n_meals=self.synth_meals,
                meal_size_range=tuple(self.synth_meal_size_range),
                within_cluster_context_affinity=self.synth_affinity,
                seed=self.synth_seed,
                partners_per_cluster=self.synth_partners,
                zipf_exponent=self.synth_zipf_exponent,
            )
        except PreconditionError as e:
            raise ConfigError([str(e)])

    def to_dict(self):
        """Every field and its value, in field order."""
        return OrderedDict(
            (field.name, getattr(self, field.name)) for field in FIELDS
        )

    def __eq__(self, other):
        return isinstance(other, RunConfig) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "RunConfig({})".format(", ".join(
            "{}={!r}".format(k, v) for k, v in self.to_dict().items()
        ))
