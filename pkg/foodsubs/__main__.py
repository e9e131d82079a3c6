# -*- coding: utf-8 -*-
"""Run the foodsubs command line with ``python -m foodsubs``."""


import sys

from .cli import main


sys.exit(main())
