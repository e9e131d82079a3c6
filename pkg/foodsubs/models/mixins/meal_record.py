# -*- coding: utf-8 -*-
"""Meal record data model.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import datetime


class MealRecordBasicPropertiesMixin(object):
    """Meal record basic properties."""

    @property
    def user_id(self):
        """The identifier of the user who logged the meal."""
        return self._json_data.get("user_id")

    @property
    def date(self):
        """The diary day of the meal (datetime.date)."""
        day = self._json_data.get("date")
        if day:
            return datetime.date.fromisoformat(day)
        else:
            return None

    @property
    def meal_name(self):
        """The meal's name as logged (Breakfast, Lunch, Snacks, ...).

        Users may log several meals under the same name on one day.
        """
        return self._json_data.get("meal_name")

    @property
    def raw_entries(self):
        """The free-text food entries of the meal, in logged order."""
        return list(self._json_data.get("entries") or [])
