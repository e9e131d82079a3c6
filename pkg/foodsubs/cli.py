# -*- coding: utf-8 -*-
"""The foodsubs command line.

Every subcommand shares one flag per RunConfig field; a JSON config file
(--config, or the FOODSUBS_CONFIG environment variable) supplies values the
command line does not.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import argparse
import json
import logging
import sys

from ._metadata import __version__
from .environment import FOODSUBS_CONFIG, FOODSUBS_LOG_LEVEL
from .exceptions import MissingArtifactError, ValidationError
from .formats import read_json
from .pipeline import PIPELINE_STAGES, FoodSubstitutesPipeline
from .pipeline.runconfig import FIELDS, RunConfig


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_VALIDATION_ERROR = 1
EXIT_IO_ERROR = 2

SUBCOMMANDS = (
    ("ingest", "normalize the meal log into canonical food keys"),
    ("build-matrix", "count pairs and build the weighted food-context matrix"),
    ("svd", "factorize the matrix with a truncated SVD"),
    ("query", "print the substitutes of one food"),
    ("rank-all", "sample queries and rank their substitutes"),
    ("evaluate", "score the rankings against graded judgements"),
    ("heatmap", "subcategory co-occurrence of ranked pairs"),
    ("synth", "generate a corpus with planted substitute clusters"),
    ("stats", "report the shape of a meal-log corpus"),
    ("run", "run pipeline stages in order and write the manifest"),
)


def _log_base(text):
    if text == "e":
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected 'e' or a number; received {!r}".format(text)
        )


def _flag(name):
    return "--" + name.replace("_", "-")


def add_config_arguments(parser):
    """One optional flag per RunConfig field, all defaulting to None."""
    group = parser.add_argument_group("run configuration")
    for field in FIELDS:
        options = {"dest": field.name, "default": None, "help": field.help}
        if field.kind == "bool":
            options["action"] = argparse.BooleanOptionalAction
        elif field.kind == "int":
            options["type"] = int
        elif field.kind == "float":
            options["type"] = float
        elif field.kind == "log_base":
            options["type"] = _log_base
        elif field.kind == "choice":
            options["choices"] = field.options
        elif field.kind == "str_list":
            options["nargs"] = "+"
            if field.name == "methods":
                options["type"] = str.upper
                options["metavar"] = "METHOD"
        elif field.kind == "float_list":
            options["nargs"] = "+"
            options["type"] = float
        elif field.kind == "int_list":
            options["nargs"] = field.options or "+"
            options["type"] = int
        group.add_argument(_flag(field.name), **options)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="foodsubs",
        description="Recommend food substitutes from meal co-occurrence.",
    )
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=FOODSUBS_CONFIG,
                        help="JSON run configuration file")
    common.add_argument("--log-level", default=FOODSUBS_LOG_LEVEL,
                        type=str.upper,
                        choices=("DEBUG", "INFO", "WARNING", "ERROR",
                                 "CRITICAL"),
                        help="logging level")
    add_config_arguments(common)

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name, help_text in SUBCOMMANDS:
        subparser = subparsers.add_parser(name, parents=[common],
                                          help=help_text,
                                          description=help_text)
        if name == "query":
            subparser.add_argument("food",
                                   help="the query's canonical food key")
        elif name == "run":
            subparser.add_argument("--stages", nargs="+",
                                   choices=PIPELINE_STAGES,
                                   help="stages to run (default: all)")
    return parser


def config_from_args(args):
    """The RunConfig of parsed arguments: file values, then flags."""
    overrides = {field.name: getattr(args, field.name) for field in FIELDS}
    return RunConfig.from_sources(args.config, **overrides)


def print_rankings(rankings, surface_forms, stream=None):
    stream = stream or sys.stdout
    for ranked in rankings:
        print("{} substitutes for {}".format(ranked.method, ranked.query),
              file=stream)
        for rank, (candidate, score) in enumerate(ranked, 1):
            text = surface_forms.get(candidate.key, ("", 0))[0]
            print("{:3d}  {:.6f}  {}  {}".format(rank, score, candidate.key,
                                                text).rstrip(),
                  file=stream)


def run_command(args):
    """Run one parsed subcommand."""
    pipeline = FoodSubstitutesPipeline(config_from_args(args))
    if args.command == "run":
        pipeline.run(args.stages)
    elif args.command == "query":
        print_rankings(pipeline.query.run(args.food),
                       pipeline.query.surface_forms())
    elif args.command == "stats":
        written = pipeline.stats.run()
        statistics = read_json(pipeline.store.path(written[0]))
        print(json.dumps(statistics, indent=2))
    elif args.command == "synth":
        pipeline.synth.run()
    else:
        pipeline.run([args.command])


def main(argv=None):
    """Entry point of the foodsubs console script.

    Returns:
        int: 0 on success, 1 on a validation error, 2 on an I/O error or a
        missing upstream artifact.

    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        run_command(args)
    except ValidationError as e:
        logger.debug("Validation failed", exc_info=True)
        print("foodsubs: error: {}".format(e), file=sys.stderr)
        return EXIT_VALIDATION_ERROR
    except (MissingArtifactError, OSError) as e:
        logger.debug("I/O failed", exc_info=True)
        print("foodsubs: error: {}".format(e), file=sys.stderr)
        return EXIT_IO_ERROR
    return EXIT_OK
