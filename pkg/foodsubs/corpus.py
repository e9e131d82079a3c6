# -*- coding: utf-8 -*-
"""Meal-log ingestion and food-context pair counting.

The contexts of a food are the other foods logged in the same meal. Every
ordered pair of distinct meal positions contributes one occurrence to the
pair multiset D, from which the row (food) and column (context) vocabularies
and the marginal counts are derived.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import datetime
import io
import itertools
import json
import logging
from collections import Counter

import numpy as np

from .exceptions import (
    CorpusTooSmallError,
    MealParseError,
    PreconditionError,
    UnmatchableEntryError,
)
from .models.immutable import immutable_data_factory
from .streams import reusable
from .taxonomy import (
    FoodKey,
    Taxonomy,
    canonical_food_key,
    extract_salient_features,
)
from .utils import check_type, decode_line


logger = logging.getLogger(__name__)


MEAL_RECORD_FIELDS = ("user_id", "date", "meal_name", "entries")


# Meal logs
def parse_meal_record(line, path=None, line_number=None):
    """Parse and validate one meals.jsonl line.

    Args:
        line(str): A JSON object line.
        path(str): The file path, for error messages.
        line_number(int): The line number, for error messages.

    Returns:
        MealRecord: The validated record.

    Raises:
        MealParseError: If the line is not valid JSON or breaks the schema.

    """
    def fail(reason):
        raise MealParseError(path, line_number, reason, line=line)

    try:
        data = json.loads(line)
    except ValueError as e:
        fail("invalid JSON ({})".format(e))
    if not isinstance(data, dict):
        fail("expected a JSON object")

    for field in MEAL_RECORD_FIELDS:
        if field not in data:
            fail("missing {!r}".format(field))
    for field in ("user_id", "date", "meal_name"):
        if not isinstance(data[field], str):
            fail("{!r} must be a string".format(field))
    try:
        datetime.date.fromisoformat(data["date"])
    except ValueError:
        fail("'date' must be an ISO-8601 day (YYYY-MM-DD)")
    entries = data["entries"]
    if not isinstance(entries, list) or not entries:
        fail("'entries' must be a non-empty list")
    if not all(isinstance(entry, str) for entry in entries):
        fail("'entries' must contain only strings")

    return immutable_data_factory("meal_record", data)


@reusable
def load_meals(path, skip_malformed=False):
    """Stream the meal records of a meals.jsonl file, in file order.

    The returned ReusableStream re-reads the file on every iteration.

    Args:
        path(str): Path of the UTF-8 meals.jsonl file.
        skip_malformed(bool): Log and skip malformed lines instead of
            aborting on the first one.

    Yields:
        MealRecord: One record per non-blank line.

    Raises:
        OSError: If the file cannot be read.
        MealParseError: On a malformed line, unless skip_malformed is set.

    """
    with io.open(path, "rb") as f:
        for line_number, line in enumerate(f, 1):
            try:
                line = decode_line(line, path, line_number,
                                   MealParseError).strip()
                if not line:
                    continue
                yield parse_meal_record(line, path, line_number)
            except MealParseError as e:
                if not skip_malformed:
                    raise
                logger.warning("Skipping malformed meal line: %s", e)


# Preprocessing
class EntryNormalizer(object):
    """Memoizing map from raw entry text to its FoodKey (or None)."""

    def __init__(self, taxonomy):
        check_type(taxonomy, Taxonomy)
        self._taxonomy = taxonomy
        self._cache = {}

    @property
    def taxonomy(self):
        return self._taxonomy

    def normalize(self, text):
        """The FoodKey of an entry text, or None when nothing matches."""
        try:
            return self._cache[text]
        except KeyError:
            pass
        features = extract_salient_features(text, self._taxonomy)
        try:
            food_key = canonical_food_key(features)
        except UnmatchableEntryError:
            food_key = None
        self._cache[text] = food_key
        return food_key


class ProcessedMeal(object):
    """A meal reduced to the FoodKeys of its matched entries."""

    __slots__ = ("_foods", "_user_id", "_date", "_meal_name")

    def __init__(self, foods, user_id=None, date=None, meal_name=None):
        """Create a processed meal.

        Args:
            foods(iterable): FoodKey objects. Duplicates are kept as given;
                preprocess_corpus collapses them unless asked not to.
            user_id(str): The user who logged the meal.
            date(str): The ISO day of the meal.
            meal_name(str): The meal name.

        """
        self._foods = tuple(sorted(foods))
        self._user_id = user_id
        self._date = date
        self._meal_name = meal_name

    @property
    def foods(self):
        """The meal's FoodKeys, sorted (tuple)."""
        return self._foods

    @property
    def user_id(self):
        return self._user_id

    @property
    def date(self):
        return self._date

    @property
    def meal_name(self):
        return self._meal_name

    def to_dict(self):
        return {
            "user_id": self._user_id,
            "date": self._date,
            "meal_name": self._meal_name,
            "foods": [food.key for food in self._foods],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            (FoodKey.parse(key) for key in data["foods"]),
            user_id=data.get("user_id"),
            date=data.get("date"),
            meal_name=data.get("meal_name"),
        )

    def __eq__(self, other):
        return isinstance(other, ProcessedMeal) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "ProcessedMeal({!r})".format([f.key for f in self._foods])


class DiscardStats(object):
    """Counts of entries dropped because no taxonomy entity matched."""

    def __init__(self, meals=0, entries=0, entries_discarded=0):
        self.meals = meals
        self.entries = entries
        self.entries_discarded = entries_discarded

    @property
    def discard_rate(self):
        """Fraction of raw entries discarded (0.0 for an empty corpus)."""
        if not self.entries:
            return 0.0
        return self.entries_discarded / self.entries

    def to_dict(self):
        return {
            "meals": self.meals,
            "entries": self.entries,
            "entries_discarded": self.entries_discarded,
            "discard_rate": self.discard_rate,
        }

    def __repr__(self):
        return "DiscardStats({})".format(self.to_dict())


def preprocess_corpus(meals, taxonomy, keep_duplicates=False,
                      normalizer=None):
    """Normalize every raw entry of every meal to its FoodKey.

    Entries without any salient feature are dropped and counted. FoodKeys
    repeated within one meal are collapsed unless keep_duplicates is set.
    Meals left with fewer than two foods are kept; they produce no pairs.

    Args:
        meals(iterable): MealRecord objects.
        taxonomy(Taxonomy): The loaded taxonomy.
        keep_duplicates(bool): Keep repeated FoodKeys within a meal.
        normalizer(EntryNormalizer): Optional shared memoizing normalizer.

    Returns:
        tuple: (list of ProcessedMeal, DiscardStats).

    """
    normalizer = normalizer or EntryNormalizer(taxonomy)
    stats = DiscardStats()
    processed = []
    for meal in meals:
        foods = []
        for entry in meal.raw_entries:
            stats.entries += 1
            food_key = normalizer.normalize(entry)
            if food_key is None:
                stats.entries_discarded += 1
                continue
            foods.append(food_key)
        if not keep_duplicates:
            foods = set(foods)
        stats.meals += 1
        processed.append(ProcessedMeal(
            foods,
            user_id=meal.user_id,
            date=meal.raw("date"),
            meal_name=meal.meal_name,
        ))

    logger.info(
        "Preprocessed %d meals: %d of %d entries discarded (%.1f%%)",
        stats.meals, stats.entries_discarded, stats.entries,
        100.0 * stats.discard_rate,
    )
    return processed, stats


def surface_forms(meals, taxonomy, normalizer=None):
    """The most frequent raw entry text behind every FoodKey.

    Args:
        meals(iterable): MealRecord objects.
        taxonomy(Taxonomy): The loaded taxonomy.
        normalizer(EntryNormalizer): Optional shared memoizing normalizer.

    Returns:
        dict: FoodKey string -> (text, count); ties go to the
        lexicographically smallest text.

    """
    normalizer = normalizer or EntryNormalizer(taxonomy)
    texts = Counter()
    for meal in meals:
        for entry in meal.raw_entries:
            food_key = normalizer.normalize(entry)
            if food_key is not None:
                texts[(food_key.key, entry)] += 1

    forms = {}
    for (key, text), count in texts.items():
        best = forms.get(key)
        if best is None or count > best[1] or \
                (count == best[1] and text < best[0]):
            forms[key] = (text, count)
    return forms


def corpus_statistics(meals, processed, stats):
    """Corpus shape in the manner of a dataset summary table.

    Args:
        meals(iterable): The raw MealRecord objects.
        processed(list): The ProcessedMeal objects.
        stats(DiscardStats): The preprocessing discard counts.

    Returns:
        dict: users, meals, raw entries, unique entry texts, discards,
        unique food keys, meals with pairs and |D| before filtering.

    """
    users = set()
    texts = set()
    for meal in meals:
        users.add(meal.user_id)
        texts.update(meal.raw_entries)
    food_keys = set()
    pairs = 0
    meals_with_pairs = 0
    for meal in processed:
        food_keys.update(meal.foods)
        n = len(meal.foods)
        pairs += n * (n - 1)
        meals_with_pairs += n >= 2
    result = {
        "users": len(users),
        "meals": stats.meals,
        "raw_entries": stats.entries,
        "unique_entry_texts": len(texts),
        "entries_discarded": stats.entries_discarded,
        "discard_rate": stats.discard_rate,
        "unique_food_keys": len(food_keys),
        "meals_with_pairs": meals_with_pairs,
        "pairs": pairs,
    }
    return result


# Vocabularies and pair counts
class Vocabulary(object):
    """Food keys with contiguous integer ids and their counts in D."""

    def __init__(self, keys, counts):
        """Create a vocabulary; ids follow the given key order.

        Args:
            keys(list): Distinct key strings.
            counts(list): Occurrence totals in D, aligned with keys.

        """
        if len(keys) != len(counts):
            raise ValueError("keys and counts must have the same length")
        self._keys = tuple(keys)
        self._counts = tuple(int(c) for c in counts)
        self._index = {key: i for i, key in enumerate(self._keys)}
        if len(self._index) != len(self._keys):
            raise ValueError("vocabulary keys must be distinct")
        self._lexicographic_rank = None

    @classmethod
    def from_counts(cls, counts):
        """Assign ids by descending count, ties lexicographic by key.

        Args:
            counts(dict): key string -> count.

        """
        ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        return cls([key for key, _ in ordered],
                   [count for _, count in ordered])

    @property
    def keys(self):
        """The key strings in id order (tuple)."""
        return self._keys

    @property
    def counts(self):
        """The occurrence totals in id order (tuple of int)."""
        return self._counts

    @property
    def index(self):
        """A copy of the key -> id map."""
        return dict(self._index)

    def id(self, key):
        """The id of a key (FoodKey or str); KeyError when absent."""
        return self._index[str(key)]

    def get(self, key, default=None):
        return self._index.get(str(key), default)

    def key(self, i):
        """The key string with id i."""
        return self._keys[i]

    def count(self, key):
        return self._counts[self.id(key)]

    def lexicographic_rank(self):
        """Position of every id in ascending key order (numpy int64 array)."""
        if self._lexicographic_rank is None:
            order = sorted(range(len(self._keys)), key=self._keys.__getitem__)
            rank = np.empty(len(self._keys), dtype=np.int64)
            rank[order] = np.arange(len(self._keys))
            self._lexicographic_rank = rank
        return self._lexicographic_rank

    def __contains__(self, key):
        return str(key) in self._index

    def __len__(self):
        return len(self._keys)

    def __iter__(self):
        return iter(self._keys)

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and \
            self._keys == other._keys and self._counts == other._counts

    def __repr__(self):
        return "<Vocabulary {} keys>".format(len(self._keys))


class PairCounts(object):
    """Food-context pair counts #(f,c), marginals #(f), #(c) and |D|."""

    def __init__(self, pair_count, n_rows, n_cols):
        """Create pair counts from a (row id, col id) -> count map.

        Marginals and the total are derived from the pair map, so the
        summation invariants hold by construction.

        Args:
            pair_count(dict): (f_id, c_id) -> positive count.
            n_rows(int): |V_f|.
            n_cols(int): |V_c|.

        """
        self._pair_count = dict(pair_count)
        self._n_rows = n_rows
        self._n_cols = n_cols
        f_count = np.zeros(n_rows, dtype=np.int64)
        c_count = np.zeros(n_cols, dtype=np.int64)
        for (i, j), count in self._pair_count.items():
            if count < 0:
                raise ValueError("pair counts must be non-negative")
            f_count[i] += count
            c_count[j] += count
        self._f_count = f_count
        self._c_count = c_count
        self._total = int(f_count.sum())

    @property
    def pair_count(self):
        """A copy of the (f_id, c_id) -> #(f,c) map."""
        return dict(self._pair_count)

    @property
    def f_count(self):
        """#(f) per row id (numpy int64 array, copy)."""
        return self._f_count.copy()

    @property
    def c_count(self):
        """#(c) per column id (numpy int64 array, copy)."""
        return self._c_count.copy()

    @property
    def total(self):
        """|D|."""
        return self._total

    @property
    def shape(self):
        return (self._n_rows, self._n_cols)

    def get(self, i, j):
        return self._pair_count.get((i, j), 0)

    def to_arrays(self):
        """Row ids, column ids and counts sorted by (row, col)."""
        items = sorted(self._pair_count.items())
        rows = np.fromiter((i for (i, _), _ in items), dtype=np.int64,
                           count=len(items))
        cols = np.fromiter((j for (_, j), _ in items), dtype=np.int64,
                           count=len(items))
        counts = np.fromiter((c for _, c in items), dtype=np.int64,
                             count=len(items))
        return rows, cols, counts


def count_pairs(meals):
    """Count ordered food-context pairs by key string.

    Every ordered pair of distinct positions in a meal is one occurrence.
    Results of disjoint meal shards can be merged with ``+``.

    Args:
        meals(iterable): ProcessedMeal objects.

    Returns:
        collections.Counter: (food key, context key) -> #(f,c).

    """
    counter = Counter()
    for meal in meals:
        keys = [food.key for food in meal.foods]
        if len(keys) >= 2:
            counter.update(itertools.permutations(keys, 2))
    return counter


def build_pair_counts(meals, min_row_count, min_col_count, counts=None):
    """Build D's pair counts and the row and column vocabularies.

    Rows whose #(f) is below min_row_count and columns whose #(c) is below
    min_col_count are removed in a single pass, and the counts are then
    recomputed on the filtered pairs. Keys left without any pair are dropped.

    Args:
        meals(list): ProcessedMeal objects.
        min_row_count(int): Minimum #(f) for a food row.
        min_col_count(int): Minimum #(c) for a context column.
        counts(Counter): Precomputed count_pairs() output (e.g. merged from
            shards); computed from meals when None.

    Returns:
        tuple: (PairCounts, row Vocabulary, column Vocabulary).

    Raises:
        PreconditionError: If a threshold is below 1.
        CorpusTooSmallError: If no rows or no columns survive.

    """
    check_type(min_row_count, int)
    check_type(min_col_count, int)
    if min_row_count < 1 or min_col_count < 1:
        raise PreconditionError("count thresholds must be >= 1")

    if counts is None:
        counts = count_pairs(meals)

    f_total = Counter()
    c_total = Counter()
    for (f, c), n in counts.items():
        f_total[f] += n
        c_total[c] += n

    kept_rows = {f for f, n in f_total.items() if n >= min_row_count}
    kept_cols = {c for c, n in c_total.items() if n >= min_col_count}
    filtered = {
        (f, c): n for (f, c), n in counts.items()
        if f in kept_rows and c in kept_cols
    }

    row_totals = Counter()
    col_totals = Counter()
    for (f, c), n in filtered.items():
        row_totals[f] += n
        col_totals[c] += n
    if not row_totals or not col_totals:
        raise CorpusTooSmallError(
            "corpus too small for thresholds (min_row_count={}, "
            "min_col_count={}): {} pairs before filtering".format(
                min_row_count, min_col_count, sum(counts.values()),
            )
        )

    row_vocab = Vocabulary.from_counts(row_totals)
    col_vocab = Vocabulary.from_counts(col_totals)
    row_ids = row_vocab.index
    col_ids = col_vocab.index
    pair_counts = PairCounts(
        {(row_ids[f], col_ids[c]): n for (f, c), n in filtered.items()},
        len(row_vocab), len(col_vocab),
    )
    logger.info(
        "Built pair counts: |D|=%d, %d rows, %d columns, %d distinct pairs",
        pair_counts.total, len(row_vocab), len(col_vocab), len(filtered),
    )
    return pair_counts, row_vocab, col_vocab
