# -*- coding: utf-8 -*-
"""Package exceptions.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


class foodsubsException(Exception):
    """Base class for all foodsubs package exceptions."""
    pass


class foodsubsWarning(foodsubsException, Warning):
    """Base class for all foodsubs warnings."""
    pass


class DegenerateSynthWarning(foodsubsWarning):
    """Raised when a synthetic corpus cannot support planted recovery."""
    pass


class ValidationError(foodsubsException):
    """Invalid input data, parameters or configuration.

    The command line interface exits with status 1 for these errors.
    """
    pass


class ParseError(ValidationError):
    """A line or row of an input file could not be parsed.

    Several data attributes are available for inspection.
    """

    def __init__(self, path, line_number, reason, line=None):
        # Extended exception attributes
        self.path = str(path) if path is not None else None
        """The path of the file being parsed (or None for in-memory data)."""

        self.line_number = line_number
        """The 1-based line (or row) number of the offending input."""

        self.line = line
        """The raw text of the offending line, when available."""

        self.reason = reason
        """Why the line was rejected."""

        self.error_message = "{path}{line_number}: {reason}".format(
            path=self.path or "<input>",
            line_number=":" + str(line_number) if line_number else "",
            reason=reason,
        )

        super(ParseError, self).__init__(self.error_message)

    def __repr__(self):
        return "<{exception_name} {path}:{line_number}>".format(
            exception_name=self.__class__.__name__,
            path=self.path or "<input>",
            line_number=self.line_number,
        )


class TaxonomyParseError(ParseError):
    """Raised when a taxonomy file row is malformed."""
    pass


class MealParseError(ParseError):
    """Raised when a meal-log line is not a valid meal record."""
    pass


class JudgementParseError(ParseError):
    """Raised when a judgements row is malformed or out of range."""
    pass


class ArtifactFormatError(ParseError):
    """Raised when a pipeline artifact does not follow its file format."""
    pass


class AmbiguousSynonymError(ValidationError):
    """Raised when one synonym maps to two different taxonomy triples."""

    def __init__(self, synonym, first, second, line_number=None):
        self.synonym = synonym
        """The ambiguous synonym, as a tuple of tokens."""

        self.triples = (first, second)
        """The two (category, subcategory, entity) triples claiming it."""

        self.line_number = line_number
        """The taxonomy line of the second claim, when known."""

        super(AmbiguousSynonymError, self).__init__(
            "Ambiguous synonym {synonym!r}{where}: maps to both {first} and "
            "{second}".format(
                synonym=" ".join(synonym),
                where=" (line {})".format(line_number) if line_number else "",
                first=":".join(first),
                second=":".join(second),
            )
        )


class UnmatchableEntryError(ValidationError):
    """Raised for an empty salient-feature set; the entry must be discarded."""
    pass


class CorpusTooSmallError(ValidationError):
    """Raised when count thresholds leave no rows or no columns."""
    pass


class PreconditionError(ValidationError):
    """Raised when a numeric or structural precondition does not hold."""
    pass


class UnknownFoodError(ValidationError):
    """Raised when a food key is not in the row vocabulary.

    Several data attributes are available for inspection.
    """

    def __init__(self, key, suggestions=()):
        self.key = key
        """The unknown food key."""

        self.suggestions = list(suggestions)
        """The nearest vocabulary keys by edit distance (diagnostic only)."""

        super(UnknownFoodError, self).__init__(
            "Unknown food key {key!r}{hint}".format(
                key=key,
                hint="; nearest vocabulary keys: " + ", ".join(
                    repr(s) for s in self.suggestions
                ) if self.suggestions else "",
            )
        )


class ConfigError(ValidationError):
    """Raised with every problem found while validating a run configuration.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        """The list of validation problems (str)."""

        super(ConfigError, self).__init__(
            "Invalid run configuration:\n" + "\n".join(
                "  - " + problem for problem in self.problems
            )
        )


class MissingArtifactError(foodsubsException):
    """A pipeline stage needs an artifact that has not been produced yet.

    The command line interface exits with status 2 for these errors.
    """

    def __init__(self, artifact, stage, path=None):
        self.artifact = str(artifact)
        """The name of the missing artifact."""

        self.stage = stage
        """The stage that produces the missing artifact."""

        self.path = str(path) if path is not None else None
        """Where the artifact was looked for, when known."""

        super(MissingArtifactError, self).__init__(
            "Missing artifact {artifact}; run the `{stage}` stage "
            "first".format(artifact=self.path or self.artifact, stage=stage)
        )
