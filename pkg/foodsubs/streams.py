# -*- coding: utf-8 -*-
"""Reusable record streams over files that are read more than once.

Classes:
    ReusableStream: A stored generator call that restarts on every iteration.

Functions:
    reusable: Decorator returning a ReusableStream instead of a generator.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import functools
import inspect
from itertools import islice


class ReusableStream(object):
    """A generator function call that can be iterated any number of times.

    Preprocessing, surface-form counting and corpus statistics each walk the
    same meal log; every pass over the stream re-runs the stored call, so the
    file is re-read instead of held in memory.
    """

    def __init__(self, generator_function, *args, **kwargs):
        """Store a call to a generator function.

        Args:
            generator_function(func): The generator function.
            *args: The arguments of the call.
            **kwargs: The keyword arguments of the call.

        Raises:
            TypeError: If generator_function is not a generator function, or
                the arguments do not fit its signature.

        """
        if not inspect.isgeneratorfunction(generator_function):
            raise TypeError("generator_function must be a generator function.")

        bound = inspect.signature(generator_function).bind(*args, **kwargs)
        bound.apply_defaults()

        self._function = generator_function
        self._arguments = bound.arguments

    @property
    def arguments(self):
        """The call's arguments, defaults included (dict copy)."""
        return dict(self._arguments)

    def __iter__(self):
        return self._function(**self._arguments)

    def __getitem__(self, item):
        """Slice the stream, or fetch one record by position.

        Args:
            item(slice, int): A slice with non-negative bounds, or a
                non-negative position.

        Returns:
            itertools.islice: For a slice.  The record itself for a position.

        Raises:
            IndexError: If a position is negative or past the end.

        """
        if isinstance(item, slice):
            return islice(iter(self), item.start, item.stop, item.step)
        if item < 0:
            raise IndexError("streams do not support negative positions")
        for record in islice(iter(self), item, item + 1):
            return record
        raise IndexError("stream position {} is past the end".format(item))

    def __repr__(self):
        return "<ReusableStream {}({})>".format(
            self._function.__name__,
            ", ".join("{}={!r}".format(k, v)
                      for k, v in self._arguments.items()),
        )


def reusable(generator_function):
    """Decorator: calls return a ReusableStream instead of a generator."""

    @functools.wraps(generator_function)
    def wrapper(*args, **kwargs):
        return ReusableStream(generator_function, *args, **kwargs)

    return wrapper
