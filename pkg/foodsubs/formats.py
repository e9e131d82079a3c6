# -*- coding: utf-8 -*-
"""Readers and writers for the pipeline's artifact files.

Every writer produces byte-identical output for equal inputs: rows are
written in a fixed order and reals as exact decimals (17 significant
digits), so reruns can be compared by digest.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import csv
import io
import json
from collections import OrderedDict

import numpy as np
import scipy.sparse

from .config import METHODS
from .corpus import ProcessedMeal, Vocabulary
from .exceptions import ArtifactFormatError
from .ppmi import PpmiMatrix
from .ranker import RankedList
from .svd import SvdModel
from .taxonomy import FoodKey
from .utils import format_float


RANKINGS_HEADER = ("query_key", "method", "rank", "candidate_key", "score")
METRICS_HEADER = ("method", "tau", "prec@1", "prec@10", "MAP", "NDCG")
COMPARISON_HEADER = ("tau", "metric", "baseline", "method", "baseline_value",
                     "method_value", "relative_change")
AGREEMENT_HEADER = ("tau", "rater_a", "rater_b", "n", "kappa")
JUDGEMENT_TASKS_HEADER = ("query_key", "candidate_key", "methods",
                          "query_text", "candidate_text")


def _open_write(path):
    return io.open(path, "w", encoding="utf-8", newline="\n")


def _open_read(path):
    return io.open(path, encoding="utf-8")


def _write_rows(path, rows, header=None):
    with _open_write(path) as f:
        if header is not None:
            f.write("\t".join(header) + "\n")
        for row in rows:
            f.write("\t".join(str(cell) for cell in row) + "\n")


def _optional_float(value):
    return "" if value is None else format_float(value)


def _float(path, line_number, text):
    try:
        return float(text)
    except ValueError:
        raise ArtifactFormatError(path, line_number,
                                  "not a number: {!r}".format(text))


def _int(path, line_number, text):
    try:
        return int(text)
    except ValueError:
        raise ArtifactFormatError(path, line_number,
                                  "not an integer: {!r}".format(text))


def _split(path, line_number, line, columns, separator="\t"):
    cells = line.rstrip("\n").split(separator)
    if len(cells) != columns:
        raise ArtifactFormatError(
            path, line_number,
            "expected {} columns, found {}".format(columns, len(cells)),
            line=line,
        )
    return cells


def _clean_text(text):
    return " ".join(text.split())


# JSON documents
def write_json(path, data):
    with _open_write(path) as f:
        json.dump(data, f, indent=2, ensure_ascii=False)
        f.write("\n")


def read_json(path):
    with _open_read(path) as f:
        try:
            return json.load(f, object_pairs_hook=OrderedDict)
        except ValueError as e:
            raise ArtifactFormatError(path, None,
                                      "invalid JSON ({})".format(e))


# Processed meals
def write_processed_meals(path, meals):
    with _open_write(path) as f:
        for meal in meals:
            f.write(json.dumps(meal.to_dict(), ensure_ascii=False) + "\n")


def read_processed_meals(path):
    meals = []
    with _open_read(path) as f:
        for line_number, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                meals.append(ProcessedMeal.from_dict(json.loads(line)))
            except (ValueError, KeyError, TypeError) as e:
                raise ArtifactFormatError(path, line_number, str(e),
                                          line=line)
    return meals


# Surface forms
def write_surface_forms(path, forms):
    """key<TAB>count<TAB>text, sorted by key."""
    _write_rows(path, (
        (key, count, _clean_text(text))
        for key, (text, count) in sorted(forms.items())
    ))


def read_surface_forms(path):
    forms = {}
    with _open_read(path) as f:
        for line_number, line in enumerate(f, 1):
            key, count, text = _split(path, line_number, line, 3)
            forms[key] = (text, _int(path, line_number, count))
    return forms


# Vocabularies
def write_vocab(path, vocab):
    """id<TAB>key<TAB>count, in id order."""
    _write_rows(path, (
        (i, key, count)
        for i, (key, count) in enumerate(zip(vocab.keys, vocab.counts))
    ))


def read_vocab(path):
    keys = []
    counts = []
    with _open_read(path) as f:
        for line_number, line in enumerate(f, 1):
            i, key, count = _split(path, line_number, line, 3)
            if _int(path, line_number, i) != len(keys):
                raise ArtifactFormatError(path, line_number,
                                          "ids must be contiguous from 0")
            keys.append(key)
            counts.append(_int(path, line_number, count))
    try:
        return Vocabulary(keys, counts)
    except ValueError as e:
        raise ArtifactFormatError(path, None, str(e))


# Food-context matrix
def write_matrix(path, ppmi):
    """Header ``PPMI <rows> <cols> <nnz>``, then sorted row/col/weight."""
    with _open_write(path) as f:
        f.write("PPMI {} {} {}\n".format(ppmi.rows, ppmi.cols, ppmi.nnz))
        for i, j, weight in ppmi.triples():
            f.write("{}\t{}\t{}\n".format(i, j, format_float(weight)))


def read_matrix(path, row_vocab, col_vocab):
    with _open_read(path) as f:
        header = f.readline().split()
        if len(header) != 4 or header[0] != "PPMI":
            raise ArtifactFormatError(path, 1, "expected a PPMI header")
        rows, cols, nnz = (_int(path, 1, cell) for cell in header[1:])
        if (rows, cols) != (len(row_vocab), len(col_vocab)):
            raise ArtifactFormatError(
                path, 1, "matrix shape does not match the vocabularies"
            )
        row_ids = np.empty(nnz, dtype=np.int64)
        col_ids = np.empty(nnz, dtype=np.int64)
        weights = np.empty(nnz, dtype=np.float64)
        previous = (-1, -1)
        count = 0
        for line_number, line in enumerate(f, 2):
            if count == nnz:
                raise ArtifactFormatError(path, line_number,
                                          "more cells than the header says")
            i, j, weight = _split(path, line_number, line, 3)
            cell = (_int(path, line_number, i), _int(path, line_number, j))
            if cell <= previous or not (0 <= cell[0] < rows
                                        and 0 <= cell[1] < cols):
                raise ArtifactFormatError(
                    path, line_number, "cells must be in range and sorted"
                )
            weight = _float(path, line_number, weight)
            if not weight > 0:
                raise ArtifactFormatError(path, line_number,
                                          "weights must be positive")
            row_ids[count], col_ids[count] = cell
            weights[count] = weight
            previous = cell
            count += 1
    if count != nnz:
        raise ArtifactFormatError(path, None,
                                  "expected {} cells, found {}".format(
                                      nnz, count))
    matrix = scipy.sparse.csr_matrix((weights, (row_ids, col_ids)),
                                     shape=(rows, cols))
    return PpmiMatrix(matrix, row_vocab, col_vocab)


# SVD model
def _format_vector(values):
    return "\t".join(format_float(value) for value in values)


def write_model(path, model):
    """``SVD <rows> <k> <seed>``, singular values, embeddings, V_k."""
    with _open_write(path) as f:
        f.write("SVD {} {} {}\n".format(model.rows, model.k, model.seed))
        f.write(_format_vector(model.singular_values) + "\n")
        for row in model.row_embeddings:
            f.write(_format_vector(row) + "\n")
        f.write("COLS {}\n".format(model.cols))
        for row in model.col_factors:
            f.write(_format_vector(row) + "\n")


def read_model(path, row_vocab=None):
    with _open_read(path) as f:
        lines = f.read().splitlines()
    if not lines:
        raise ArtifactFormatError(path, 1, "empty model file")
    header = lines[0].split()
    if len(header) != 4 or header[0] != "SVD":
        raise ArtifactFormatError(path, 1, "expected an SVD header")
    rows, k, seed = (_int(path, 1, cell) for cell in header[1:])

    def vectors(first, count):
        result = np.empty((count, k))
        for offset in range(count):
            line_number = first + offset + 1
            if first + offset >= len(lines):
                raise ArtifactFormatError(path, line_number,
                                          "truncated model file")
            cells = _split(path, line_number, lines[first + offset], k)
            result[offset] = [_float(path, line_number, c) for c in cells]
        return result

    singular_values = vectors(1, 1)[0]
    embeddings = vectors(2, rows)
    cols_at = 2 + rows
    if cols_at >= len(lines) or not lines[cols_at].startswith("COLS "):
        raise ArtifactFormatError(path, cols_at + 1, "expected a COLS line")
    cols = _int(path, cols_at + 1, lines[cols_at].split()[1])
    col_factors = vectors(cols_at + 1, cols)
    if len(lines) != cols_at + 1 + cols:
        raise ArtifactFormatError(path, None, "trailing lines in model file")
    return SvdModel(singular_values, embeddings, col_factors, seed=seed,
                    row_vocab=row_vocab)


# Queries and rankings
def write_queries(path, queries):
    _write_rows(path, ((query.key,) for query in queries))


def read_queries(path):
    with _open_read(path) as f:
        keys = [line.strip() for line in f if line.strip()]
    try:
        return [FoodKey.parse(key) for key in keys]
    except ValueError as e:
        raise ArtifactFormatError(path, None, str(e))


def write_rankings(path, rankings):
    _write_rows(path, (
        (ranked.query.key, ranked.method, rank, candidate.key,
         format_float(score))
        for ranked in rankings
        for rank, (candidate, score) in enumerate(ranked, 1)
    ), header=RANKINGS_HEADER)


def read_rankings(path, queries=None, methods=None):
    """RankedList objects, one per (query, method) run.

    A run that ranked nothing (every candidate below min_score) has no rows
    in the file. When queries are given, every run of those queries comes
    back, empty ones included, ordered by method then query; otherwise the
    runs found in the file come back in file order.

    Args:
        path(str): The rankings.tsv path.
        queries(list): The sampled query FoodKeys, in query order.
        methods(list): The methods that ranked them; defaults to the
            methods found in the file.

    Raises:
        ArtifactFormatError: If the file is malformed or ranks a query
            outside the given queries.

    """
    groups = OrderedDict()
    with _open_read(path) as f:
        header = f.readline().rstrip("\n").split("\t")
        if tuple(header) != RANKINGS_HEADER:
            raise ArtifactFormatError(path, 1, "unexpected rankings header")
        for line_number, line in enumerate(f, 2):
            query, method, rank, candidate, score = \
                _split(path, line_number, line, 5)
            items = groups.setdefault((query, method), [])
            if _int(path, line_number, rank) != len(items) + 1:
                raise ArtifactFormatError(path, line_number,
                                          "ranks must be contiguous from 1")
            items.append((candidate, _float(path, line_number, score)))

    if queries is not None:
        if methods is None:
            methods = [m for m in METHODS if m in {k[1] for k in groups}]
        runs = [(query.key, method) for method in methods
                for query in queries]
        unexpected = sorted(set(groups) - set(runs))
        if unexpected:
            raise ArtifactFormatError(
                path, None,
                "{} ranking of {} is not a run of the sampled "
                "queries".format(unexpected[0][1], unexpected[0][0]),
            )
        groups = OrderedDict((run, groups.get(run, [])) for run in runs)

    try:
        return [
            RankedList(FoodKey.parse(query), method,
                       [(FoodKey.parse(c), s) for c, s in items])
            for (query, method), items in groups.items()
        ]
    except (ValueError, TypeError) as e:
        raise ArtifactFormatError(path, None, str(e))


def write_judgement_tasks(path, tasks):
    with _open_write(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(JUDGEMENT_TASKS_HEADER)
        writer.writerows(tasks)


def write_judgements(path, judgements):
    """judgements.csv with as many rating columns as the widest row."""
    width = max((len(j.ratings) for j in judgements), default=1)
    with _open_write(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["query_key", "candidate_key", "method"] +
                        ["r{}".format(i) for i in range(1, width + 1)])
        for judgement in judgements:
            writer.writerow([judgement.query, judgement.candidate,
                             judgement.method] + judgement.ratings)


# Reports
def write_metrics(path, rows, ndcg_gain):
    with _open_write(path) as f:
        f.write("# ndcg_gain={}\n".format(ndcg_gain))
        f.write("\t".join(METRICS_HEADER) + "\n")
        for row in rows:
            f.write("\t".join([row.method] + [
                format_float(value) for value in row[1:]
            ]) + "\n")


def read_metrics(path):
    """(ndcg_gain, rows as dicts keyed by the report header)."""
    with _open_read(path) as f:
        lines = f.read().splitlines()
    if len(lines) < 2 or not lines[0].startswith("# ndcg_gain="):
        raise ArtifactFormatError(path, 1, "expected an ndcg_gain line")
    gain = lines[0].split("=", 1)[1]
    rows = []
    for line_number, line in enumerate(lines[2:], 3):
        cells = _split(path, line_number, line, len(METRICS_HEADER))
        row = OrderedDict(zip(METRICS_HEADER, cells))
        for column in METRICS_HEADER[1:]:
            row[column] = _float(path, line_number, row[column])
        rows.append(row)
    return gain, rows


def write_comparison(path, rows):
    _write_rows(path, (
        (format_float(r.tau), r.metric, r.baseline, r.method,
         format_float(r.baseline_value), format_float(r.method_value),
         _optional_float(r.relative_change))
        for r in rows
    ), header=COMPARISON_HEADER)


def write_agreement(path, rows):
    _write_rows(path, (
        (format_float(r.tau), r.rater_a, r.rater_b, r.n,
         _optional_float(r.kappa))
        for r in rows
    ), header=AGREEMENT_HEADER)


def write_heatmap(path, cooccurrence):
    labels, values = cooccurrence
    with _open_write(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["label"] + list(labels))
        for label, row in zip(labels, values):
            writer.writerow([label] + [format_float(v) for v in row])


def read_heatmap(path):
    with io.open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    if not rows or rows[0][:1] != ["label"]:
        raise ArtifactFormatError(path, 1, "expected a label header")
    labels = rows[0][1:]
    values = np.array([[float(v) for v in row[1:]] for row in rows[1:]])
    return labels, values


# Synthetic clusters
def write_clusters(path, cluster_map):
    _write_rows(path, sorted(cluster_map.items()))


def read_clusters(path):
    clusters = OrderedDict()
    with _open_read(path) as f:
        for line_number, line in enumerate(f, 1):
            key, cluster = _split(path, line_number, line, 2)
            clusters[key] = _int(path, line_number, cluster)
    return clusters
