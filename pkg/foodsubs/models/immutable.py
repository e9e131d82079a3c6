# -*- coding: utf-8 -*-
"""foodsubs immutable data models.

Classes:
    ImmutableData: A parsed JSON record as a read-only Python object.
    MealRecord: One logged meal from a meals.jsonl corpus.
    Judgement: Rater scores for one (query, candidate, method) pair.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import json
from collections import defaultdict

from foodsubs.utils import json_dict

from .mixins.judgement import JudgementBasicPropertiesMixin
from .mixins.meal_record import MealRecordBasicPropertiesMixin


def freeze(data):
    """A hashable snapshot of JSON data.

    Lists become tuples and objects become key-sorted tuples of pairs.

    Raises:
        TypeError: If the data holds something JSON cannot express.

    """
    if isinstance(data, dict):
        return tuple(sorted((key, freeze(value))
                            for key, value in data.items()))
    if isinstance(data, (list, tuple)):
        return tuple(freeze(item) for item in data)
    if data is None or isinstance(data, (str, int, float, bool)):
        return data
    raise TypeError("Unable to freeze {} data.".format(type(data).__name__))


class ImmutableData(object):
    """A parsed JSON record as a read-only Python object.

    Top-level keys read as attributes; nested objects read as ImmutableData
    and lists as fresh copies, so no reader can change the record.
    """

    def __init__(self, json_data):
        """Init a new record from a dictionary or a JSON object string.

        Args:
            json_data(dict, str): The record.

        Raises:
            TypeError: If the input is neither a dictionary nor a string, or
                holds values JSON cannot express.
            ValueError: If the string is not a JSON object.

        """
        data = json_dict(json_data)
        object.__setattr__(self, "_frozen", freeze(data))
        object.__setattr__(self, "_json_data", dict(data))

    def __getattr__(self, item):
        if item.startswith("_") or item not in self._json_data:
            raise AttributeError("'{}' object has no attribute '{}'".format(
                self.__class__.__name__, item
            ))
        value = self._json_data[item]
        if isinstance(value, dict):
            return ImmutableData(value)
        if isinstance(value, list):
            return list(value)
        return value

    def __setattr__(self, name, value):
        raise AttributeError("{} objects are read-only".format(
            self.__class__.__name__
        ))

    def __delattr__(self, name):
        raise AttributeError("{} objects are read-only".format(
            self.__class__.__name__
        ))

    def raw(self, key, default=None):
        """A top-level value as stored, bypassing model properties."""
        if key not in self._json_data:
            return default
        return ImmutableData.__getattr__(self, key)

    def __eq__(self, other):
        return type(other) is type(self) and self._frozen == other._frozen

    def __hash__(self):
        return hash((type(self).__name__, self._frozen))

    def __str__(self):
        return "{}:\n{}".format(self.__class__.__name__,
                                json.dumps(self._json_data, indent=2,
                                           ensure_ascii=False))

    def __repr__(self):
        return "{}({!r})".format(self.__class__.__name__, self.to_json())

    def to_dict(self):
        """A shallow copy of the record's data."""
        return dict(self._json_data)

    def to_json(self, **kwargs):
        """The record as a JSON string; kwargs go to json.dumps."""
        kwargs.setdefault("ensure_ascii", False)
        return json.dumps(self._json_data, **kwargs)


class MealRecord(ImmutableData, MealRecordBasicPropertiesMixin):
    """Meal-log record data model."""


class Judgement(ImmutableData, JudgementBasicPropertiesMixin):
    """Substitute judgement data model."""


immutable_data_models = defaultdict(
    lambda: ImmutableData,
    meal_record=MealRecord,
    judgement=Judgement,
)


def immutable_data_factory(model, json_data):
    """Create the data model registered under a name.

    Args:
        model(str): meal_record or judgement; other names get a plain
            ImmutableData.
        json_data(str, dict): The record.

    Returns:
        ImmutableData: The created record.

    """
    return immutable_data_models[model](json_data)
