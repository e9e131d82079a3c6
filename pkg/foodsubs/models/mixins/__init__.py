# -*- coding: utf-8 -*-
"""foodsubs data model property mixins.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""
