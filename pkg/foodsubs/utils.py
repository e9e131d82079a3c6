# -*- coding: utf-8 -*-
"""Package helper functions and classes.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import hashlib
import json
import os
from collections import OrderedDict

from .config import FLOAT_FORMAT
from .exceptions import PreconditionError


def check_type(obj, acceptable_types, optional=False):
    """Object is an instance of one of the acceptable types or None.

    Args:
        obj: The object to be inspected.
        acceptable_types: A type or tuple of acceptable types.
        optional(bool): Whether or not the object may be None.

    Returns:
        bool: True if the object is an instance of one of the acceptable types.

    Raises:
        TypeError: If the object is not an instance of one of the acceptable
            types, or if the object is None and optional=False.

    """
    if not isinstance(acceptable_types, tuple):
        acceptable_types = (acceptable_types,)

    # bool is an int subclass; it only passes when asked for by name
    stray_bool = isinstance(obj, bool) and bool not in acceptable_types
    if isinstance(obj, acceptable_types) and not stray_bool:
        return True
    if optional and obj is None:
        return True

    expected = " or ".join(repr(t.__name__) for t in acceptable_types)
    raise TypeError("expected {}{}; received {!r} ({})".format(
        expected, " or None" if optional else "", obj, type(obj).__name__,
    ))


def check_range(name, value, minimum=None, maximum=None):
    """Value lies within the closed interval [minimum, maximum].

    Args:
        name(str): The parameter name, used in the error message.
        value: The value to be inspected.
        minimum: Smallest acceptable value, or None for no lower bound.
        maximum: Largest acceptable value, or None for no upper bound.

    Raises:
        PreconditionError: If the value is out of range.

    """
    if (minimum is not None and value < minimum) or \
            (maximum is not None and value > maximum):
        raise PreconditionError(
            "{name} must be in [{low}, {high}]; received {value!r}".format(
                name=name,
                low=minimum if minimum is not None else "-inf",
                high=maximum if maximum is not None else "inf",
                value=value,
            )
        )


def json_dict(json_data):
    """Given a dictionary or JSON string; return a dictionary.

    Args:
        json_data(dict, str): Input JSON object.

    Returns:
        A Python dictionary with the contents of the JSON object.

    Raises:
        TypeError: If the input object is not a dictionary or string.
        ValueError: If the string is not valid JSON or not a JSON object.

    """
    if isinstance(json_data, dict):
        return json_data
    elif isinstance(json_data, str):
        data = json.loads(json_data, object_hook=OrderedDict)
        if not isinstance(data, dict):
            raise ValueError("expected a JSON object")
        return data
    else:
        raise TypeError(
            "'json_data' must be a dictionary or valid JSON string; "
            "received: {!r}".format(json_data)
        )


def decode_line(line, path, line_number, error_class):
    """Decode one line of a file opened in binary mode as UTF-8.

    Raises:
        ParseError: An instance of error_class naming the line, if the
            bytes are not valid UTF-8.

    """
    try:
        return line.decode("utf-8")
    except UnicodeDecodeError as e:
        raise error_class(
            path, line_number,
            "invalid UTF-8 byte 0x{:02x} at offset {}".format(
                line[e.start], e.start
            ),
        )


def utf8_lines(f, path, error_class):
    """Decoded lines of a binary file object; see decode_line."""
    for line_number, line in enumerate(f, 1):
        yield decode_line(line, path, line_number, error_class)


def format_float(value):
    """Render a float as exact decimal text (17 significant digits)."""
    return FLOAT_FORMAT.format(float(value))


def file_digest(path, chunk_size=1 << 16):
    """SHA-256 hex digest of a file's bytes."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(chunk_size), b""):
            digest.update(chunk)
    return digest.hexdigest()


def ensure_directory(path):
    """Create a directory (and parents) if needed; return its path."""
    os.makedirs(path, exist_ok=True)
    return path

