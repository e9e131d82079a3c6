# -*- coding: utf-8 -*-
"""Top-k substitute ranking and evaluation query sampling.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging
from collections import OrderedDict, namedtuple
from difflib import get_close_matches

import numpy as np

from .config import (
    DEFAULT_SVD_SIMILARITY,
    DEFAULT_TOP_K,
    METHODS,
    SCORE_DECIMALS,
    UNKNOWN_QUERY_SUGGESTIONS,
)
from .corpus import Vocabulary
from .exceptions import PreconditionError, UnknownFoodError
from .ppmi import PpmiMatrix, row_similarities
from .svd import SvdModel
from .taxonomy import FoodKey
from .utils import check_type


logger = logging.getLogger(__name__)


JudgementTask = namedtuple(
    "JudgementTask",
    ["query_key", "candidate_key", "methods", "query_text", "candidate_text"],
)


class RankedList(object):
    """The top-k substitute candidates of one query under one method."""

    def __init__(self, query, method, items):
        """Create a ranked list.

        Args:
            query(FoodKey): The query food.
            method(str): "PPMI" or "SVD".
            items(list): (FoodKey, score) pairs, best first.

        Raises:
            PreconditionError: If the query is among the items or the order
                breaks the score / key tie-break rule.

        """
        check_type(query, FoodKey)
        if method not in METHODS:
            raise PreconditionError("Unknown method {!r}".format(method))
        items = tuple((candidate, float(score)) for candidate, score in items)
        for candidate, _ in items:
            check_type(candidate, FoodKey)
            if candidate == query:
                raise PreconditionError(
                    "query {} ranked as its own substitute".format(query)
                )
        for (a, score_a), (b, score_b) in zip(items, items[1:]):
            if score_a < score_b or (score_a == score_b and not a < b):
                raise PreconditionError(
                    "ranked items out of order at {} / {}".format(a, b)
                )
        self._query = query
        self._method = method
        self._items = items

    @property
    def query(self):
        return self._query

    @property
    def method(self):
        return self._method

    @property
    def items(self):
        """(FoodKey, score) pairs, best first (tuple)."""
        return self._items

    @property
    def candidates(self):
        return [candidate for candidate, _ in self._items]

    @property
    def scores(self):
        return [score for _, score in self._items]

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def __eq__(self, other):
        return isinstance(other, RankedList) and \
            (self._query, self._method, self._items) == \
            (other._query, other._method, other._items)

    def __repr__(self):
        return "<RankedList {} {} ({} items)>".format(
            self._method, self._query, len(self._items)
        )


def model_method(model):
    """The method name of a similarity model."""
    if isinstance(model, PpmiMatrix):
        return "PPMI"
    if isinstance(model, SvdModel):
        return "SVD"
    raise TypeError("Expected a PpmiMatrix or SvdModel; received "
                    "{!r}".format(type(model).__name__))


def _row_vocab(model):
    vocab = model.row_vocab
    if vocab is None:
        raise PreconditionError("the model has no row vocabulary attached")
    return vocab


def suggest_keys(vocab, key, n=UNKNOWN_QUERY_SUGGESTIONS):
    """The vocabulary keys most similar to an unknown key string."""
    return get_close_matches(str(key), vocab.keys, n=n, cutoff=0.0)


def query_id(vocab, query):
    """The row id of a query; UnknownFoodError when absent."""
    i = vocab.get(query)
    if i is None:
        raise UnknownFoodError(str(query), suggest_keys(vocab, query))
    return i


def quantize_scores(scores):
    """Round scores to SCORE_DECIMALS digits relative to their scale.

    The scale is the largest score magnitude, or 1 when that is smaller,
    so cosine scores round to fixed decimals and large dot products keep
    the same relative precision.
    """
    scores = np.asarray(scores, dtype=np.float64)
    scale = max(1.0, float(np.max(np.abs(scores)))) if scores.size else 1.0
    return np.round(scores / scale, SCORE_DECIMALS) * scale


def top_k_substitutes(model, query, k=DEFAULT_TOP_K, min_score=None,
                      similarity=DEFAULT_SVD_SIMILARITY):
    """The k foods most similar to a query food.

    PPMI models score by cosine; SVD models by dot product unless
    similarity="cosine". Scores are quantized with quantize_scores; equal
    scores are ordered by ascending candidate key, so zero-score candidates
    pad the list in key order.

    Args:
        model: A PpmiMatrix or an SvdModel with a row vocabulary.
        query(FoodKey, str): The query food.
        k(int): The list length.
        min_score(float): When set, drop candidates scoring <= min_score.
        similarity(str): SVD similarity, "dot" or "cosine".

    Returns:
        RankedList: At most k candidates, the query excluded.

    Raises:
        UnknownFoodError: If the query is not a row of the model.
        PreconditionError: If k < 1.

    """
    method = model_method(model)
    check_type(k, (int, np.integer))
    if k < 1:
        raise PreconditionError("k must be >= 1; received {}".format(k))
    vocab = _row_vocab(model)
    i = query_id(vocab, query)

    if method == "PPMI":
        scores = row_similarities(model, i)
    else:
        scores = model.row_scores(i, similarity=similarity)
    scores = quantize_scores(scores)

    keep = np.ones(len(vocab), dtype=bool)
    keep[i] = False
    if min_score is not None:
        keep &= scores > min_score
    candidates = np.flatnonzero(keep)
    order = np.lexsort((vocab.lexicographic_rank()[candidates],
                        -scores[candidates]))
    top = candidates[order[:k]]

    items = [(FoodKey.parse(vocab.key(j)), float(scores[j])) for j in top]
    return RankedList(FoodKey.parse(vocab.key(i)), method, items)


def rank_all(model, queries, k=DEFAULT_TOP_K, min_score=None,
             similarity=DEFAULT_SVD_SIMILARITY):
    """top_k_substitutes for every query, in query order."""
    rankings = [
        top_k_substitutes(model, query, k, min_score=min_score,
                          similarity=similarity)
        for query in queries
    ]
    logger.info("Ranked %d queries with %s (k=%d)", len(rankings),
                model_method(model), k)
    return rankings


def sample_queries(row_vocab, category_filters, n, seed):
    """Sample distinct evaluation queries from filtered vocabulary keys.

    Args:
        row_vocab(Vocabulary): The food rows.
        category_filters(list): Feature prefixes such as "meats:".
        n(int): The sample size.
        seed(int): The sampling seed.

    Returns:
        list: n FoodKeys having a feature with one of the prefixes.

    Raises:
        PreconditionError: If n < 1 or the filtered pool has fewer than n
            keys.

    """
    check_type(row_vocab, Vocabulary)
    check_type(n, (int, np.integer))
    if n < 1:
        raise PreconditionError("n must be >= 1; received {}".format(n))
    prefixes = tuple(category_filters)
    pool = sorted(
        key for key in row_vocab.keys
        if FoodKey.parse(key).has_prefix(prefixes)
    )
    if len(pool) < n:
        raise PreconditionError(
            "cannot sample {} queries: only {} foods match {}".format(
                n, len(pool), ", ".join(prefixes)
            )
        )
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(pool), size=n, replace=False)
    return [FoodKey.parse(pool[j]) for j in chosen]


def judgement_tasks(rankings, surface_forms=None):
    """The distinct (query, candidate) pairs to send out for judgement.

    Args:
        rankings(iterable): RankedList objects of any methods.
        surface_forms(dict): key -> (text, count), as built at ingestion.

    Returns:
        list: JudgementTask tuples in first-seen order; methods are sorted
        and "|"-joined.

    """
    surface_forms = surface_forms or {}
    pairs = OrderedDict()
    for ranked in rankings:
        for candidate, _ in ranked:
            pair = (ranked.query.key, candidate.key)
            pairs.setdefault(pair, set()).add(ranked.method)

    def text(key):
        form = surface_forms.get(key)
        return form[0] if form else ""

    return [
        JudgementTask(query, candidate, "|".join(sorted(methods)),
                      text(query), text(candidate))
        for (query, candidate), methods in pairs.items()
    ]
