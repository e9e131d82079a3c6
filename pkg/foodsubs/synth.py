# -*- coding: utf-8 -*-
"""Synthetic meal corpora with planted substitute clusters.

Foods of one cluster are interchangeable: a meal is assembled from a menu
template of distinct clusters and takes one food from each, so same-cluster
foods share their contexts but never appear together in a meal.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import datetime
import json
import logging
import warnings
from collections import OrderedDict, namedtuple

import numpy as np

from .config import (
    DEFAULT_SYNTH_AFFINITY,
    DEFAULT_SYNTH_CLUSTERS,
    DEFAULT_SYNTH_FOODS_PER_CLUSTER,
    DEFAULT_SYNTH_MEAL_SIZE_RANGE,
    DEFAULT_SYNTH_MEALS,
    DEFAULT_SYNTH_PARTNERS,
    DEFAULT_SYNTH_SEED,
    DEFAULT_SYNTH_ZIPF_EXPONENT,
    MAX_RATING,
    MIN_RATING,
    SYNTH_CATEGORY,
)
from .exceptions import (
    DegenerateSynthWarning,
    PreconditionError,
    UnknownFoodError,
)
from .models.immutable import immutable_data_factory
from .taxonomy import FoodKey
from .utils import check_range, check_type


logger = logging.getLogger(__name__)


MEAL_NAMES = ("Breakfast", "Lunch", "Dinner", "Snacks")

FIRST_DAY = datetime.date(2014, 9, 1)

DAYS = 180

MEALS_PER_USER = 20

# Same-cluster pairs are rated in SAME_CLUSTER_RATINGS, others below it.
SAME_CLUSTER_RATINGS = (5, MAX_RATING)

CROSS_CLUSTER_RATINGS = (MIN_RATING, 4)


RecoveryScore = namedtuple("RecoveryScore", ["top1_rate", "top10_hit_rate"])

SynthCorpus = namedtuple(
    "SynthCorpus", ["meals_jsonl", "taxonomy_tsv", "cluster_map"]
)


class SynthSpec(object):
    """Parameters of a synthetic corpus."""

    def __init__(self, n_clusters=DEFAULT_SYNTH_CLUSTERS,
                 foods_per_cluster=DEFAULT_SYNTH_FOODS_PER_CLUSTER,
                 n_meals=DEFAULT_SYNTH_MEALS,
                 meal_size_range=DEFAULT_SYNTH_MEAL_SIZE_RANGE,
                 within_cluster_context_affinity=DEFAULT_SYNTH_AFFINITY,
                 seed=DEFAULT_SYNTH_SEED,
                 partners_per_cluster=DEFAULT_SYNTH_PARTNERS,
                 zipf_exponent=DEFAULT_SYNTH_ZIPF_EXPONENT):
        """Create and validate a corpus spec.

        Args:
            n_clusters(int): Number of substitute clusters.
            foods_per_cluster(int): Foods in every cluster.
            n_meals(int): Number of meals to generate.
            meal_size_range(tuple): Inclusive (min, max) foods per meal.
            within_cluster_context_affinity(float): Probability that a
                further meal slot is filled from the anchor cluster's
                partners rather than from the global cluster distribution.
            seed(int): The generation seed.
            partners_per_cluster(int): Partner clusters per cluster.
            zipf_exponent(float): Skew of the cluster distribution.

        Raises:
            PreconditionError: If the SynthSpec is infeasible.

        """
        for name, value in (("n_clusters", n_clusters),
                            ("foods_per_cluster", foods_per_cluster),
                            ("n_meals", n_meals),
                            ("seed", seed),
                            ("partners_per_cluster", partners_per_cluster)):
            check_type(value, int)
        check_range("n_clusters", n_clusters, 1)
        check_range("foods_per_cluster", foods_per_cluster, 1)
        check_range("n_meals", n_meals, 1)
        smallest, largest = (int(size) for size in meal_size_range)
        check_range("meal size", smallest, 1, largest)
        if largest > n_clusters:
            raise PreconditionError(
                "meals of up to {} foods need at least {} clusters; "
                "received {}".format(largest, largest, n_clusters)
            )
        check_range("within_cluster_context_affinity",
                    within_cluster_context_affinity, 0.0, 1.0)
        check_range("partners_per_cluster", partners_per_cluster, 0,
                    n_clusters - 1)
        check_range("zipf_exponent", zipf_exponent, 0.0)

        self.n_clusters = n_clusters
        self.foods_per_cluster = foods_per_cluster
        self.n_meals = n_meals
        self.meal_size_range = (smallest, largest)
        self.within_cluster_context_affinity = \
            float(within_cluster_context_affinity)
        self.seed = seed
        self.partners_per_cluster = partners_per_cluster
        self.zipf_exponent = float(zipf_exponent)

    @property
    def n_foods(self):
        return self.n_clusters * self.foods_per_cluster

    def to_dict(self):
        return OrderedDict([
            ("n_clusters", self.n_clusters),
            ("foods_per_cluster", self.foods_per_cluster),
            ("n_meals", self.n_meals),
            ("meal_size_range", list(self.meal_size_range)),
            ("within_cluster_context_affinity",
             self.within_cluster_context_affinity),
            ("seed", self.seed),
            ("partners_per_cluster", self.partners_per_cluster),
            ("zipf_exponent", self.zipf_exponent),
        ])

    def __repr__(self):
        return "SynthSpec({})".format(", ".join(
            "{}={!r}".format(k, v) for k, v in self.to_dict().items()
        ))


def _width(n):
    return max(2, len(str(n - 1)))


def cluster_label(spec, cluster):
    return "cluster{:0{}d}".format(cluster, _width(spec.n_clusters))


def food_entity(spec, cluster, food):
    """The entity name of a synthetic food, e.g. "c03f07"."""
    return "c{:0{}d}f{:0{}d}".format(
        cluster, _width(spec.n_clusters), food, _width(spec.foods_per_cluster)
    )


def food_key(spec, cluster, food):
    """The FoodKey string of a synthetic food."""
    return ":".join((SYNTH_CATEGORY, cluster_label(spec, cluster),
                     food_entity(spec, cluster, food)))


def random_baseline(spec):
    """Expected top-1 rate of a ranking that ignores the data."""
    if spec.n_foods < 2:
        return 0.0
    return (spec.foods_per_cluster - 1) / (spec.n_foods - 1)


def _menu_templates(spec, rng):
    """Yield the cluster list of every meal."""
    n = spec.n_clusters
    weights = 1.0 / np.arange(1, n + 1, dtype=np.float64) ** \
        spec.zipf_exponent
    partners = [
        rng.choice(np.delete(np.arange(n), c), size=spec.partners_per_cluster,
                   replace=False).tolist()
        for c in range(n)
    ]
    smallest, largest = spec.meal_size_range

    for _ in range(spec.n_meals):
        size = int(rng.integers(smallest, largest + 1))
        anchor = int(rng.choice(n, p=weights / weights.sum()))
        chosen = [anchor]
        while len(chosen) < size:
            free_partners = [p for p in partners[anchor] if p not in chosen]
            if free_partners and \
                    rng.random() < spec.within_cluster_context_affinity:
                chosen.append(free_partners[int(rng.integers(
                    len(free_partners)))])
            else:
                free = weights.copy()
                free[chosen] = 0.0
                chosen.append(int(rng.choice(n, p=free / free.sum())))
        yield chosen


def generate_corpus(spec):
    """Generate a synthetic corpus.

    Args:
        spec(SynthSpec): The corpus parameters.

    Returns:
        SynthCorpus: meals.jsonl text, a matching taxonomy TSV text and the
        food key -> cluster id map. Byte-identical for equal specs.

    Warns:
        DegenerateSynthWarning: If clusters have a single food, so planted
            recovery is undefined.

    """
    check_type(spec, SynthSpec)
    if spec.foods_per_cluster == 1:
        warnings.warn(
            "Every cluster has a single food; planted recovery is undefined",
            DegenerateSynthWarning,
        )
    rng = np.random.default_rng(spec.seed)
    n_users = max(1, spec.n_meals // MEALS_PER_USER)

    lines = []
    for clusters in _menu_templates(spec, rng):
        foods = rng.integers(spec.foods_per_cluster, size=len(clusters))
        user = int(rng.integers(n_users))
        day = FIRST_DAY + datetime.timedelta(days=int(rng.integers(DAYS)))
        meal_name = MEAL_NAMES[int(rng.integers(len(MEAL_NAMES)))]
        entries = [
            "{}, 1 serving".format(food_entity(spec, c, int(f)))
            for c, f in zip(clusters, foods)
        ]
        lines.append(json.dumps(OrderedDict([
            ("user_id", "u{:05d}".format(user)),
            ("date", day.isoformat()),
            ("meal_name", meal_name),
            ("entries", entries),
        ])))

    cluster_map = OrderedDict()
    taxonomy_rows = ["# category\tsubcategory\tentity\tsynonyms"]
    for c in range(spec.n_clusters):
        for f in range(spec.foods_per_cluster):
            cluster_map[food_key(spec, c, f)] = c
            taxonomy_rows.append("\t".join((
                SYNTH_CATEGORY, cluster_label(spec, c),
                food_entity(spec, c, f), "",
            )))

    logger.info("Generated %d synthetic meals over %d foods in %d clusters",
                spec.n_meals, spec.n_foods, spec.n_clusters)
    return SynthCorpus(
        "\n".join(lines) + "\n",
        "\n".join(taxonomy_rows) + "\n",
        cluster_map,
    )


def _cluster_of(cluster_map, key):
    try:
        return cluster_map[str(key)]
    except KeyError:
        raise UnknownFoodError(str(key))


def planted_recovery_score(rankings, cluster_map):
    """How often rankings put a same-cluster food first, or in the top 10.

    Args:
        rankings(list): RankedList objects.
        cluster_map(dict): Food key string -> cluster id.

    Returns:
        RecoveryScore: (top1_rate, top10_hit_rate).

    Raises:
        PreconditionError: If there are no rankings.
        UnknownFoodError: If a query or candidate has no cluster.

    """
    rankings = list(rankings)
    if not rankings:
        raise PreconditionError("no rankings to score")
    top1 = 0
    top10 = 0
    for ranked in rankings:
        cluster = _cluster_of(cluster_map, ranked.query)
        same = [_cluster_of(cluster_map, candidate) == cluster
                for candidate in ranked.candidates]
        top1 += bool(same[:1] and same[0])
        top10 += any(same[:10])
    return RecoveryScore(top1 / len(rankings), top10 / len(rankings))


def subcategory_clusters(keys):
    """Cluster real foods by their first "category:subcategory" label.

    Lets simulated judgements run on corpora without planted clusters.
    """
    return {
        str(key): FoodKey.parse(str(key)).subcategory_labels()[0]
        for key in keys
    }


def simulate_judgements(rankings, cluster_map, n_raters=3,
                        seed=DEFAULT_SYNTH_SEED):
    """Rate every ranked pair as crowd workers would for planted clusters.

    Same-cluster pairs draw each rating uniformly from 5..7, cross-cluster
    pairs from 1..4.

    Returns:
        list: Judgement objects, one per distinct (query, candidate, method),
        with raters r1..r<n_raters>.

    """
    check_range("n_raters", n_raters, 1)
    rng = np.random.default_rng(seed)
    raters = ["r{}".format(i) for i in range(1, n_raters + 1)]
    judgements = []
    seen = set()
    for ranked in rankings:
        cluster = _cluster_of(cluster_map, ranked.query)
        for candidate in ranked.candidates:
            triple = (ranked.query.key, candidate.key, ranked.method)
            if triple in seen:
                continue
            seen.add(triple)
            if _cluster_of(cluster_map, candidate) == cluster:
                low, high = SAME_CLUSTER_RATINGS
            else:
                low, high = CROSS_CLUSTER_RATINGS
            ratings = rng.integers(low, high + 1, size=n_raters).tolist()
            judgements.append(immutable_data_factory("judgement", {
                "query_key": triple[0],
                "candidate_key": triple[1],
                "method": triple[2],
                "ratings": ratings,
                "raters": raters,
            }))
    return judgements
