# -*- coding: utf-8 -*-
"""foodsubs data models.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

from .immutable import (
    ImmutableData,
    Judgement,
    MealRecord,
    immutable_data_factory,
)
