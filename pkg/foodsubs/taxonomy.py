# -*- coding: utf-8 -*-
"""Food taxonomy loading and salient-feature extraction.

Free-text food entries ("McDonald's - premium sweet chili chicken Wrap
(grilled), 1 burger (200g)") are reduced to sets of salient features
("meats:poultry:chicken", ...) by matching their tokens against a taxonomy of
categories, subcategories and entities. The sorted feature set is the food's
identity, its canonical FoodKey.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import io
import logging
import re
from collections import namedtuple
from types import MappingProxyType

from .exceptions import (
    AmbiguousSynonymError,
    TaxonomyParseError,
    UnmatchableEntryError,
)
from .utils import check_type, utf8_lines


logger = logging.getLogger(__name__)


FEATURE_SEPARATOR = ":"
KEY_SEPARATOR = "|"
SYNONYM_SEPARATOR = "|"

_TOKEN_PATTERN = re.compile(r"[^\W_]+", re.UNICODE)


TaxonomyEntry = namedtuple(
    "TaxonomyEntry", ["category", "subcategory", "entity", "synonyms"]
)


def tokenize(text):
    """Lowercase a text and split it on every non-alphanumeric character.

    Args:
        text(str): Free text.

    Returns:
        list: The non-empty tokens, in order.

    """
    check_type(text, str)
    return _TOKEN_PATTERN.findall(text.lower())


class SalientFeature(namedtuple("SalientFeature",
                                ["category", "subcategory", "entity"])):
    """A "category:subcategory:entity" concept found in a food entry."""

    __slots__ = ()

    def __new__(cls, category, subcategory, entity):
        for name, value in (("category", category),
                            ("subcategory", subcategory),
                            ("entity", entity)):
            check_type(value, str)
            if not value:
                raise ValueError(
                    "SalientFeature {} must be non-empty".format(name)
                )
        return super(SalientFeature, cls).__new__(
            cls, category, subcategory, entity
        )

    @classmethod
    def parse(cls, rendered):
        """Parse a rendered "category:subcategory:entity" string."""
        parts = rendered.split(FEATURE_SEPARATOR)
        if len(parts) != 3:
            raise ValueError(
                "Not a category:subcategory:entity feature: "
                "{!r}".format(rendered)
            )
        return cls(*parts)

    @property
    def rendered(self):
        """The feature rendered as "category:subcategory:entity"."""
        return FEATURE_SEPARATOR.join(self)

    @property
    def subcategory_label(self):
        """The "category:subcategory" label of the feature."""
        return self.category + FEATURE_SEPARATOR + self.subcategory

    def __str__(self):
        return self.rendered


class FoodKey(object):
    """Canonical identity of a food item: its sorted set of salient features.

    Two FoodKeys are equal if and only if their feature sets are equal, and
    they order by their key strings.
    """

    __slots__ = ("_features", "_key")

    def __init__(self, features):
        """Create a FoodKey from rendered feature strings.

        Args:
            features(iterable): Rendered "category:subcategory:entity"
                strings, in any order, possibly repeated.

        Raises:
            UnmatchableEntryError: If there are no features.
            ValueError: If a feature is not a valid rendered feature.

        """
        unique = sorted(set(features))
        if not unique:
            raise UnmatchableEntryError(
                "Empty salient-feature set: unmatchable entry, discard"
            )
        for feature in unique:
            SalientFeature.parse(feature)
        self._features = tuple(unique)
        self._key = KEY_SEPARATOR.join(self._features)

    @classmethod
    def parse(cls, key):
        """Parse a "|"-joined key string back into a FoodKey.

        Raises:
            ValueError: If the features are not strictly ascending.

        """
        check_type(key, str)
        features = key.split(KEY_SEPARATOR)
        food_key = cls(features)
        if list(food_key.features) != features:
            raise ValueError(
                "Food key features must be unique and ascending: "
                "{!r}".format(key)
            )
        return food_key

    @property
    def features(self):
        """The sorted, deduplicated rendered features (tuple of str)."""
        return self._features

    @property
    def key(self):
        """The "|"-joined feature string identifying this food."""
        return self._key

    def salient_features(self):
        """The features as SalientFeature objects."""
        return [SalientFeature.parse(feature) for feature in self._features]

    def subcategory_labels(self):
        """The sorted, distinct "category:subcategory" labels of the food."""
        return sorted({f.subcategory_label for f in self.salient_features()})

    def has_prefix(self, prefixes):
        """Whether any feature starts with one of the given prefixes."""
        return any(
            feature.startswith(prefix)
            for feature in self._features
            for prefix in prefixes
        )

    def __eq__(self, other):
        return isinstance(other, FoodKey) and self._key == other._key

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        return self._key

    def __repr__(self):
        return "FoodKey({!r})".format(self._key)


class Taxonomy(object):
    """An immutable food taxonomy with a synonym index.

    Categories are scanned independently during extraction, so the index is
    kept per main category as well as globally.
    """

    def __init__(self, entries):
        """Build the synonym index over taxonomy entries.

        Args:
            entries(list): TaxonomyEntry tuples; synonyms are tuples of tokens.

        Raises:
            TaxonomyParseError: If a triple is listed twice or a synonym is
                empty.
            AmbiguousSynonymError: If a synonym maps to two different triples.

        """
        self._entries = tuple(entries)
        index = {}
        by_category = {}
        seen_triples = set()

        for entry in self._entries:
            triple = (entry.category, entry.subcategory, entry.entity)
            if triple in seen_triples:
                raise TaxonomyParseError(
                    None, None,
                    "duplicate taxonomy entry {}".format(":".join(triple)),
                )
            seen_triples.add(triple)
            for synonym in entry.synonyms:
                if not synonym:
                    raise TaxonomyParseError(
                        None, None,
                        "empty synonym for {}".format(":".join(triple)),
                    )
                existing = index.get(synonym)
                if existing is not None and existing != triple:
                    raise AmbiguousSynonymError(synonym, existing, triple)
                index[synonym] = triple
                by_category.setdefault(entry.category, {})[synonym] = triple

        self._index = MappingProxyType(index)
        self._by_category = {
            category: MappingProxyType(synonyms)
            for category, synonyms in by_category.items()
        }
        self._longest = {
            category: max(len(synonym) for synonym in synonyms)
            for category, synonyms in by_category.items()
        }

    @property
    def entries(self):
        """The taxonomy entries (tuple of TaxonomyEntry)."""
        return self._entries

    @property
    def index(self):
        """Read-only map: token tuple -> (category, subcategory, entity)."""
        return self._index

    @property
    def categories(self):
        """The sorted main category names."""
        return sorted(self._by_category)

    def __len__(self):
        return len(self._entries)

    def category_matches(self, category, tokens):
        """Maximal matches of one category's synonyms over a token sequence.

        Scans left to right; at each position takes the longest synonym that
        starts there, emits it and resumes after the matched span.

        Args:
            category(str): The main category to scan.
            tokens(list): The tokenized entry text.

        Returns:
            list: SalientFeature objects in text order (may repeat).

        """
        synonyms = self._by_category.get(category)
        if not synonyms:
            return []
        longest = self._longest[category]
        matches = []
        position = 0
        while position < len(tokens):
            span = min(longest, len(tokens) - position)
            while span > 0:
                triple = synonyms.get(tuple(tokens[position:position + span]))
                if triple is not None:
                    matches.append(SalientFeature(*triple))
                    break
                span -= 1
            position += span if span else 1
        return matches


def parse_taxonomy(lines, path=None):
    """Parse taxonomy TSV lines into a Taxonomy.

    Each row is ``category<TAB>subcategory<TAB>entity<TAB>syn1|syn2|...``.
    Blank lines and lines starting with "#" are ignored. The entity name is
    always an implicit synonym of itself.

    Args:
        lines(iterable): The text lines of the file.
        path(str): The file path, for error messages.

    Returns:
        Taxonomy: The loaded taxonomy.

    Raises:
        TaxonomyParseError: If a row is malformed.
        AmbiguousSynonymError: If a synonym maps to two different triples.

    """
    entries = []
    index = {}
    for line_number, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 4:
            raise TaxonomyParseError(
                path, line_number,
                "expected 4 tab-separated columns, found {}".format(
                    len(columns)
                ),
                line=line,
            )
        category, subcategory, entity = (c.strip() for c in columns[:3])
        for name, value in (("category", category),
                            ("subcategory", subcategory),
                            ("entity", entity)):
            if not value:
                raise TaxonomyParseError(
                    path, line_number, "empty {}".format(name), line=line,
                )
            if FEATURE_SEPARATOR in value or KEY_SEPARATOR in value:
                raise TaxonomyParseError(
                    path, line_number,
                    "{} may not contain ':' or '|'".format(name), line=line,
                )

        synonyms = []
        for text in [entity] + columns[3].split(SYNONYM_SEPARATOR):
            if not text.strip():
                continue
            synonym = tuple(tokenize(text))
            if not synonym:
                raise TaxonomyParseError(
                    path, line_number,
                    "synonym {!r} has no tokens".format(text), line=line,
                )
            if synonym not in synonyms:
                synonyms.append(synonym)

        triple = (category, subcategory, entity)
        for synonym in synonyms:
            existing = index.get(synonym)
            if existing is not None and existing[0] != triple:
                raise AmbiguousSynonymError(
                    synonym, existing[0], triple, line_number=line_number,
                )
            index[synonym] = (triple, line_number)
        entries.append(TaxonomyEntry(category, subcategory, entity,
                                     tuple(synonyms)))

    try:
        return Taxonomy(entries)
    except TaxonomyParseError as e:
        raise TaxonomyParseError(path, None, e.reason)


def load_taxonomy(path):
    """Load a taxonomy TSV file.

    Args:
        path(str): Path of the UTF-8 taxonomy file.

    Returns:
        Taxonomy: The loaded taxonomy.

    Raises:
        OSError: If the file cannot be read.
        TaxonomyParseError: If a row is malformed.
        AmbiguousSynonymError: If a synonym maps to two different triples.

    """
    with io.open(path, "rb") as f:
        taxonomy = parse_taxonomy(utf8_lines(f, path, TaxonomyParseError),
                                  path=path)
    logger.info("Loaded taxonomy %s: %d entities, %d synonyms",
                path, len(taxonomy), len(taxonomy.index))
    return taxonomy


def extract_salient_features(entry_text, taxonomy):
    """Extract the set of salient features of a free-text food entry.

    Every main category is scanned independently for maximal matches, so one
    token span may yield features in two categories.

    Args:
        entry_text(str): The food entry text.
        taxonomy(Taxonomy): The loaded taxonomy.

    Returns:
        frozenset: SalientFeature objects; empty when nothing matches.

    """
    check_type(taxonomy, Taxonomy)
    tokens = tokenize(entry_text)
    features = set()
    for category in taxonomy.categories:
        features.update(taxonomy.category_matches(category, tokens))
    return frozenset(features)


def canonical_food_key(features):
    """The canonical FoodKey of a salient-feature set.

    Args:
        features(iterable): SalientFeature objects or rendered strings.

    Returns:
        FoodKey: The sorted, deduplicated key.

    Raises:
        UnmatchableEntryError: If the feature set is empty.

    """
    return FoodKey(
        f.rendered if isinstance(f, SalientFeature) else f for f in features
    )
