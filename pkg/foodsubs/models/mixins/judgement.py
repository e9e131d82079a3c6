# -*- coding: utf-8 -*-
"""Substitute judgement data model.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


class JudgementBasicPropertiesMixin(object):
    """Judgement basic properties."""

    @property
    def query(self):
        """The query food key."""
        return self._json_data.get("query_key")

    @property
    def candidate(self):
        """The candidate substitute food key."""
        return self._json_data.get("candidate_key")

    @property
    def method(self):
        """The ranking method that proposed the pair (PPMI or SVD)."""
        return self._json_data.get("method")

    @property
    def ratings(self):
        """The 7-point Likert ratings given by the workers (list of int).

        1 means strongly disagree that the candidate is a substitute; 7 means
        strongly agree.
        """
        return list(self._json_data.get("ratings") or [])

    @property
    def avg_rating(self):
        """The mean of the ratings."""
        ratings = self.ratings
        if not ratings:
            return None
        return sum(ratings) / len(ratings)

    @property
    def raters(self):
        """The rating column names, aligned with ratings (list of str)."""
        raters = self._json_data.get("raters")
        if raters is None:
            return ["r{}".format(i) for i in range(1, len(self.ratings) + 1)]
        return list(raters)

    @property
    def rater_ratings(self):
        """Rating column name -> rating, for the columns this row filled."""
        return dict(zip(self.raters, self.ratings))
