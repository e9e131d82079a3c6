# -*- coding: utf-8 -*-
"""Package metadata.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

__title__ = 'foodsubs'
__description__ = (
    'Extract food substitutes from meal logs via distributional similarity'
)
__url__ = 'https://github.com/foodsubs/foodsubs'
__download_url__ = 'https://pypi.python.org/pypi/foodsubs'
__author__ = 'The foodsubs developers'
__author_email__ = 'foodsubs@users.noreply.github.com'
__copyright__ = "Copyright (c) 2026 The foodsubs developers."
__license__ = "MIT"
__version__ = '0.3.0'
