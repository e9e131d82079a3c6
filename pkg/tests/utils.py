# -*- coding: utf-8 -*-
"""Test utilities: independent oracles and file helpers.

The oracles reimplement the package's counting and metric definitions in
the most direct way possible, without sharing any code with it.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

import io
import json
import math
import re


def write_text(path, text):
    """Write UTF-8 text to a path and return the path as a string."""
    with io.open(str(path), "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    return str(path)


def write_meals(path, meals):
    """Write meals.jsonl lines for (user_id, date, meal_name, entries)."""
    return write_text(path, "".join(
        json.dumps({"user_id": u, "date": d, "meal_name": n,
                    "entries": list(e)}) + "\n"
        for u, d, n, e in meals
    ))


# Corpus oracles
def brute_force_pairs(meals):
    """Enumerate D: every ordered pair of distinct positions of a meal.

    Args:
        meals(list): Lists of food key strings.

    Returns:
        tuple: (pair -> count, food -> #(f), context -> #(c), |D|).

    """
    pairs = {}
    for foods in meals:
        for a in range(len(foods)):
            for b in range(len(foods)):
                if a != b:
                    pair = (foods[a], foods[b])
                    pairs[pair] = pairs.get(pair, 0) + 1
    f_count = {}
    c_count = {}
    for (f, c), n in pairs.items():
        f_count[f] = f_count.get(f, 0) + n
        c_count[c] = c_count.get(c, 0) + n
    return pairs, f_count, c_count, sum(pairs.values())


def taxonomy_synonyms(path):
    """Every synonym of a taxonomy TSV as a tuple of lowercase ASCII words."""
    synonyms = set()
    with io.open(path, encoding="utf-8") as f:
        for line in f:
            if not line.strip() or line.startswith("#"):
                continue
            columns = line.rstrip("\n").split("\t")
            for text in [columns[2]] + columns[3].split("|"):
                words = tuple(re.findall(r"[a-z0-9]+", text.lower()))
                if words:
                    synonyms.add(words)
    return synonyms


def entry_matches(text, synonyms):
    """Whether any synonym occurs as a contiguous run of the entry's words."""
    words = re.findall(r"[a-z0-9]+", text.lower())
    for synonym in synonyms:
        for start in range(len(words) - len(synonym) + 1):
            if tuple(words[start:start + len(synonym)]) == synonym:
                return True
    return False


def count_unmatched_entries(meals_path, taxonomy_path):
    """(raw entries, entries matching no synonym) of a meals.jsonl file."""
    synonyms = taxonomy_synonyms(taxonomy_path)
    entries = 0
    unmatched = 0
    with io.open(meals_path, encoding="utf-8") as f:
        for line in f:
            if not line.strip():
                continue
            for text in json.loads(line)["entries"]:
                entries += 1
                unmatched += not entry_matches(text, synonyms)
    return entries, unmatched


# Matrix oracle
def naive_pmi_sig(pair_c, f_c, c_c, total):
    if pair_c == 0:
        return 0.0
    pmi = math.log((pair_c / total) / ((f_c / total) * (c_c / total)))
    return max(pmi * math.sqrt(max(f_c, c_c)), 0.0)


def naive_cosine(u, v):
    dot = sum(a * b for a, b in zip(u, v))
    norm_u = math.sqrt(sum(a * a for a in u))
    norm_v = math.sqrt(sum(b * b for b in v))
    if norm_u == 0 or norm_v == 0:
        return 0.0
    return dot / (norm_u * norm_v)


# Metric oracles
def naive_precision_at_k(ratings, k, tau):
    return len([r for r in ratings[:k] if r > tau]) / float(k)


def naive_average_precision(ratings, tau):
    relevant_ranks = [i + 1 for i, r in enumerate(ratings) if r > tau]
    if not relevant_ranks:
        return 0.0
    total = 0.0
    for position, rank in enumerate(relevant_ranks, 1):
        total += position / float(rank)
    return total / len(relevant_ranks)


def naive_ndcg(ratings):
    def dcg(values):
        return sum(v / math.log(i + 1, 2) for i, v in enumerate(values, 1))

    ideal = dcg(sorted(ratings, reverse=True))
    return dcg(ratings) / ideal if ideal else 0.0
