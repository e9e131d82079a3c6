# -*- coding: utf-8 -*-
"""Judgement ingestion and ranking quality metrics.

Relevance is graded on a 7-point scale (1: strongly disagree that the
candidate substitutes for the query, 7: strongly agree). Precision and MAP
binarize the average rating with a strict threshold τ; NDCG uses the graded
average rating directly and never reads τ.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import csv
import io
import itertools
import logging
from collections import OrderedDict, namedtuple

import numpy as np
from sklearn.metrics import cohen_kappa_score

from .config import (
    DEFAULT_NDCG_GAIN,
    MAX_RATING,
    METHODS,
    MIN_RATING,
    NDCG_GAINS,
)
from .exceptions import JudgementParseError, PreconditionError
from .models.immutable import immutable_data_factory
from .taxonomy import FoodKey
from .utils import check_type, utf8_lines


logger = logging.getLogger(__name__)


JUDGEMENT_KEY_COLUMNS = ("query_key", "candidate_key", "method")

REPORT_METRICS = ("prec@1", "prec@10", "MAP", "NDCG")


MetricsRow = namedtuple(
    "MetricsRow", ["method", "tau", "prec_at_1", "prec_at_10", "map", "ndcg"]
)

ComparisonRow = namedtuple(
    "ComparisonRow",
    ["tau", "metric", "baseline", "method", "baseline_value", "method_value",
     "relative_change"],
)

AgreementRow = namedtuple(
    "AgreementRow", ["tau", "rater_a", "rater_b", "n", "kappa"]
)

CooccurrenceMatrix = namedtuple("CooccurrenceMatrix", ["labels", "values"])


# Judgements
def parse_judgements(lines, path=None):
    """Parse judgements CSV lines.

    The header is ``query_key,candidate_key,method,r1,r2,...``; every column
    after ``method`` holds one rater's rating and blank cells are skipped.

    Args:
        lines(iterable): The text lines of the file.
        path(str): The file path, for error messages.

    Returns:
        list: Judgement objects in file order.

    Raises:
        JudgementParseError: On a malformed header or row, a rating outside
            1..7, a row without ratings or a repeated (query, candidate,
            method).

    """
    reader = csv.reader(lines)
    try:
        header = [column.strip() for column in next(reader)]
    except StopIteration:
        raise JudgementParseError(path, 1, "empty judgements file")
    if tuple(header[:3]) != JUDGEMENT_KEY_COLUMNS or len(header) < 4:
        raise JudgementParseError(
            path, 1,
            "header must be query_key,candidate_key,method followed by at "
            "least one rating column",
        )
    raters = header[3:]

    judgements = []
    seen = set()
    for row in reader:
        line_number = reader.line_num
        if not any(cell.strip() for cell in row):
            continue
        if len(row) < 3 or len(row) > len(header):
            raise JudgementParseError(
                path, line_number,
                "expected 3 key columns and at most {} ratings".format(
                    len(raters)
                ),
                line=",".join(row),
            )
        query, candidate, method = (cell.strip() for cell in row[:3])
        method = method.upper()
        if method not in METHODS:
            raise JudgementParseError(
                path, line_number, "unknown method {!r}".format(method),
            )
        for key in (query, candidate):
            try:
                FoodKey.parse(key)
            except (ValueError, TypeError) as e:
                raise JudgementParseError(path, line_number, str(e))

        ratings = []
        row_raters = []
        for rater, cell in zip(raters, row[3:]):
            cell = cell.strip()
            if not cell:
                continue
            try:
                rating = int(cell)
            except ValueError:
                raise JudgementParseError(
                    path, line_number,
                    "rating {!r} is not an integer".format(cell),
                )
            if not MIN_RATING <= rating <= MAX_RATING:
                raise JudgementParseError(
                    path, line_number,
                    "rating {} outside {}..{}".format(
                        rating, MIN_RATING, MAX_RATING
                    ),
                )
            ratings.append(rating)
            row_raters.append(rater)
        if not ratings:
            raise JudgementParseError(path, line_number, "no ratings")

        triple = (query, candidate, method)
        if triple in seen:
            raise JudgementParseError(
                path, line_number,
                "duplicate judgement for {} / {} / {}".format(*triple),
            )
        seen.add(triple)
        judgements.append(immutable_data_factory("judgement", {
            "query_key": query,
            "candidate_key": candidate,
            "method": method,
            "ratings": ratings,
            "raters": row_raters,
        }))
    return judgements


def load_judgements(path):
    """Load a judgements.csv file; see parse_judgements."""
    with io.open(path, "rb") as f:
        judgements = parse_judgements(
            utf8_lines(f, path, JudgementParseError), path=path
        )
    logger.info("Loaded %d judgements from %s", len(judgements), path)
    return judgements


def index_judgements(judgements):
    """Map (query, candidate, method) and (query, candidate) to judgements.

    The pair-only entries point at the judgement of the first method in
    method order, for lists whose own method was not judged separately.
    """
    index = {}
    for judgement in sorted(judgements,
                            key=lambda j: METHODS.index(j.method)):
        pair = (judgement.query, judgement.candidate)
        index[pair + (judgement.method,)] = judgement
        index.setdefault(pair, judgement)
    return index


# Judged lists
class JudgedList(object):
    """A ranked list whose candidates all carry an average rating."""

    def __init__(self, query, candidates, avg_ratings, method=None):
        """Create a judged list.

        Args:
            query(str): The query key.
            candidates(list): Candidate keys in system rank order.
            avg_ratings(list): Average ratings aligned with candidates.
            method(str): The method that produced the ranking.

        """
        if len(candidates) != len(avg_ratings):
            raise PreconditionError(
                "every ranked candidate needs exactly one average rating"
            )
        self.query = str(query)
        self.method = method
        self.candidates = [str(c) for c in candidates]
        self.avg_ratings = [float(r) for r in avg_ratings]

    @classmethod
    def from_ranked_list(cls, ranked, judgement_index):
        """Attach judgements to a RankedList.

        Raises:
            PreconditionError: If a ranked pair has no judgement.

        """
        ratings = []
        for candidate in ranked.candidates:
            pair = (ranked.query.key, candidate.key)
            judgement = judgement_index.get(pair + (ranked.method,)) or \
                judgement_index.get(pair)
            if judgement is None:
                raise PreconditionError(
                    "no judgement for {} pair {} -> {}".format(
                        ranked.method, ranked.query.key, candidate.key
                    )
                )
            ratings.append(judgement.avg_rating)
        return cls(ranked.query.key,
                   [candidate.key for candidate in ranked.candidates],
                   ratings, method=ranked.method)

    def relevance(self, tau):
        """Binary relevance of every candidate under threshold tau."""
        return [binarize(rating, tau) for rating in self.avg_ratings]

    def __len__(self):
        return len(self.candidates)

    def __repr__(self):
        return "<JudgedList {} {} ({} items)>".format(
            self.method, self.query, len(self.candidates)
        )


# Metrics
def binarize(avg_rating, tau):
    """A judged pair is a substitute iff its average rating exceeds tau."""
    return avg_rating > tau


def precision_at_k(judged, k, tau):
    """Relevant candidates among the top k, divided by k.

    The denominator stays k for lists shorter than k; an empty list scores 0.
    """
    check_type(k, (int, np.integer))
    if k < 1:
        raise PreconditionError("k must be >= 1; received {}".format(k))
    return sum(judged.relevance(tau)[:k]) / k


def average_precision(judged, tau):
    """Mean of precision@r over the ranks r of relevant candidates.

    Normalized by the number of relevant candidates in the list itself;
    a list without relevant candidates scores 0.
    """
    hits = 0
    precisions = []
    for rank, relevant in enumerate(judged.relevance(tau), 1):
        if relevant:
            hits += 1
            precisions.append(hits / rank)
    if not precisions:
        return 0.0
    return sum(precisions) / len(precisions)


def mean_average_precision(judged_lists, tau):
    """Arithmetic mean of average_precision over all queries."""
    judged_lists = list(judged_lists)
    if not judged_lists:
        raise PreconditionError("MAP of an empty list of queries")
    return sum(average_precision(j, tau) for j in judged_lists) / \
        len(judged_lists)


def _gains(ratings, gain):
    ratings = np.asarray(ratings, dtype=np.float64)
    if gain == "linear":
        return ratings
    return np.exp2(ratings) - 1.0


def _dcg(gains):
    discounts = np.log2(np.arange(2, len(gains) + 2, dtype=np.float64))
    return float(np.sum(gains / discounts))


def ndcg(judged, gain=DEFAULT_NDCG_GAIN):
    """Normalized discounted cumulative gain over the judged list.

    The ideal ordering is the same candidates sorted by average rating.

    Args:
        judged(JudgedList): The judged list.
        gain(str): "linear" (gain = rating) or "exponential"
            (gain = 2^rating - 1).

    Raises:
        PreconditionError: If the list is empty or the gain is unknown.

    """
    if gain not in NDCG_GAINS:
        raise PreconditionError("Unknown NDCG gain {!r}".format(gain))
    if not len(judged):
        raise PreconditionError("NDCG of an empty list")
    dcg = _dcg(_gains(judged.avg_ratings, gain))
    idcg = _dcg(_gains(sorted(judged.avg_ratings, reverse=True), gain))
    if idcg == 0:
        return 0.0
    return dcg / idcg


def cohen_kappa(labels_a, labels_b):
    """Unweighted Cohen's kappa between two label sequences.

    Two constant, identical sequences agree perfectly by convention (1.0).

    Raises:
        PreconditionError: If the sequences are empty or differ in length.

    """
    labels_a = list(labels_a)
    labels_b = list(labels_b)
    if len(labels_a) != len(labels_b):
        raise PreconditionError("label sequences differ in length")
    if not labels_a:
        raise PreconditionError("kappa of empty label sequences")
    if len(set(labels_a) | set(labels_b)) == 1:
        return 1.0
    return float(cohen_kappa_score(labels_a, labels_b))


def subcategory_cooccurrence(pairs):
    """Jaccard-normalized co-occurrence of subcategory labels in pairs.

    A label pair (a, b) co-occurs in a substitute pair when a labels one
    food and b the other; each substitute pair counts once per label pair.

    Args:
        pairs(list): (FoodKey, FoodKey) substitute pairs.

    Returns:
        CooccurrenceMatrix: sorted labels and a symmetric numpy matrix of
        co(a,b) / (occ(a) + occ(b) - co(a,b)).

    """
    pairs = list(pairs)
    if not pairs:
        raise PreconditionError("no pairs to count")
    occurrences = {}
    cooccurrences = {}
    for first, second in pairs:
        first_labels = first.subcategory_labels()
        second_labels = second.subcategory_labels()
        for label in set(first_labels) | set(second_labels):
            occurrences[label] = occurrences.get(label, 0) + 1
        linked = set()
        for a, b in itertools.product(first_labels, second_labels):
            linked.add((a, b))
            linked.add((b, a))
        for link in linked:
            cooccurrences[link] = cooccurrences.get(link, 0) + 1

    labels = sorted(occurrences)
    position = {label: i for i, label in enumerate(labels)}
    values = np.zeros((len(labels), len(labels)))
    for (a, b), co in cooccurrences.items():
        values[position[a], position[b]] = \
            co / (occurrences[a] + occurrences[b] - co)
    return CooccurrenceMatrix(labels, values)


# Reports
def judged_lists(rankings, judgements):
    """JudgedList for every RankedList, in ranking order."""
    index = index_judgements(judgements)
    return [JudgedList.from_ranked_list(r, index) for r in rankings]


def evaluate_rankings(rankings, judgements, taus, gain=DEFAULT_NDCG_GAIN):
    """The metrics report, one row per method and tau.

    Args:
        rankings(list): RankedList objects of one or more methods.
        judgements(list): Judgement objects covering every ranked pair.
        taus(list): Binarization thresholds.
        gain(str): The NDCG gain function.

    Returns:
        list: MetricsRow tuples ordered by method, then tau.

    """
    by_method = OrderedDict()
    for judged in judged_lists(rankings, judgements):
        by_method.setdefault(judged.method, []).append(judged)

    rows = []
    for method in sorted(by_method, key=METHODS.index):
        lists = by_method[method]
        # A query that ranked nothing scores 0 on every metric.
        mean_ndcg = float(np.mean([ndcg(j, gain) if len(j) else 0.0
                                   for j in lists]))
        for tau in taus:
            rows.append(MetricsRow(
                method, float(tau),
                float(np.mean([precision_at_k(j, 1, tau) for j in lists])),
                float(np.mean([precision_at_k(j, 10, tau) for j in lists])),
                mean_average_precision(lists, tau),
                mean_ndcg,
            ))
        logger.info("Evaluated %d %s lists", len(lists), method)
    return rows


def compare_methods(report_rows, baseline="PPMI"):
    """Relative change of every method against a baseline method.

    Returns:
        list: ComparisonRow tuples ordered by tau, metric, method; the
        relative change is None when the baseline value is 0.

    """
    values = {}
    for row in report_rows:
        for metric, value in zip(REPORT_METRICS, row[2:]):
            values[(row.method, row.tau, metric)] = value
    taus = sorted({row.tau for row in report_rows})
    methods = sorted({row.method for row in report_rows} - {baseline},
                     key=METHODS.index)

    comparison = []
    for tau in taus:
        for metric in REPORT_METRICS:
            base = values.get((baseline, tau, metric))
            if base is None:
                continue
            for method in methods:
                value = values.get((method, tau, metric))
                if value is None:
                    continue
                change = (value - base) / base if base else None
                comparison.append(ComparisonRow(
                    tau, metric, baseline, method, base, value, change,
                ))
    return comparison


def rater_agreement(judgements, tau):
    """Cohen's kappa between every pair of rating columns.

    Only rows rated by both raters of a pair are compared, after
    binarizing each single rating with tau.

    Returns:
        list: AgreementRow tuples; kappa is None when no row has both.

    """
    raters = []
    for judgement in judgements:
        for rater in judgement.raters:
            if rater not in raters:
                raters.append(rater)

    rows = []
    for rater_a, rater_b in itertools.combinations(raters, 2):
        labels_a = []
        labels_b = []
        for judgement in judgements:
            ratings = judgement.rater_ratings
            if rater_a in ratings and rater_b in ratings:
                labels_a.append(binarize(ratings[rater_a], tau))
                labels_b.append(binarize(ratings[rater_b], tau))
        kappa = cohen_kappa(labels_a, labels_b) if labels_a else None
        rows.append(AgreementRow(float(tau), rater_a, rater_b,
                                 len(labels_a), kappa))
    return rows
