# -*- coding: utf-8 -*-
"""foodsubs/evaluation.py Fixtures & Tests

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from foodsubs.evaluation import (
    JudgedList,
    average_precision,
    binarize,
    cohen_kappa,
    compare_methods,
    evaluate_rankings,
    index_judgements,
    load_judgements,
    mean_average_precision,
    ndcg,
    parse_judgements,
    precision_at_k,
    rater_agreement,
    subcategory_cooccurrence,
)
from foodsubs.exceptions import JudgementParseError, PreconditionError
from foodsubs.ranker import RankedList
from foodsubs.taxonomy import FoodKey
from tests.utils import (
    naive_average_precision,
    naive_ndcg,
    naive_precision_at_k,
    write_text,
)


HEADER = "query_key,candidate_key,method,r1,r2,r3"

CHICKEN = FoodKey.parse("meats:poultry:chicken")
TURKEY = FoodKey.parse("meats:poultry:turkey")
BEEF = FoodKey.parse("meats:red meat:beef")
LENTILS = FoodKey.parse("beans and legumes:beans:lentils")


# Helper Functions

def judged(*ratings):
    candidates = ["toy:food:c{}".format(i) for i in range(len(ratings))]
    return JudgedList("toy:food:q", candidates, ratings)


def judgement_lines(*rows):
    return [HEADER] + list(rows)


judged_ratings = st.lists(
    st.lists(st.integers(min_value=1, max_value=7), min_size=1, max_size=3)
    .map(lambda ratings: sum(ratings) / len(ratings)),
    min_size=1, max_size=10,
)


# Tests

@pytest.mark.parametrize("avg_rating, tau, relevant", [
    (3.0, 3, False),
    (3.34, 3, True),
    (4.0, 4, False),
    (4.0 + 1e-9, 4, True),
])
def test_binarize_is_strict(avg_rating, tau, relevant):
    assert binarize(avg_rating, tau) is relevant


def test_parse_judgements_averages_ratings():
    judgements = parse_judgements(judgement_lines(
        "toy:food:q1,toy:food:c1,PPMI,7,6,5",
        "toy:food:q1,toy:food:c2,svd,2,,",
    ))
    assert judgements[0].avg_rating == 6.0
    assert judgements[0].raters == ["r1", "r2", "r3"]
    assert judgements[1].method == "SVD"
    assert judgements[1].ratings == [2]
    assert judgements[1].rater_ratings == {"r1": 2}


@pytest.mark.parametrize("row, line_number", [
    ("toy:food:q1,toy:food:c1,PPMI,8,6,5", 2),
    ("toy:food:q1,toy:food:c1,PPMI,,,", 2),
    ("toy:food:q1,toy:food:c1,PPMI,seven", 2),
    ("toy:food:q1,toy:food:c1,LSA,4", 2),
    ("q1,toy:food:c1,PPMI,4", 2),
    ("toy:food:q1,toy:food:c1,PPMI,4,4,4,4", 2),
])
def test_parse_judgements_rejects_bad_rows(row, line_number):
    with pytest.raises(JudgementParseError) as exc_info:
        parse_judgements(judgement_lines(row))
    assert exc_info.value.line_number == line_number


def test_parse_judgements_rejects_duplicates():
    with pytest.raises(JudgementParseError) as exc_info:
        parse_judgements(judgement_lines(
            "toy:food:q1,toy:food:c1,PPMI,4",
            "",
            "toy:food:q1,toy:food:c1,PPMI,5",
        ))
    assert exc_info.value.line_number == 4


@pytest.mark.parametrize("lines", [
    [],
    ["query_key,candidate_key,method"],
    ["query,candidate,method,r1"],
])
def test_parse_judgements_rejects_bad_headers(lines):
    with pytest.raises(JudgementParseError):
        parse_judgements(lines)


def test_load_judgements(tmp_path):
    path = write_text(tmp_path / "judgements.csv", "\n".join(judgement_lines(
        "toy:food:q1,toy:food:c1,PPMI,7,6,5",
    )) + "\n")
    judgements = load_judgements(path)
    assert len(judgements) == 1
    assert judgements[0].query == "toy:food:q1"


def test_load_judgements_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "judgements.csv"
    path.write_bytes(b"query_key,candidate_key,method,r1\n"
                     b"toy:food:q1,toy:food:c\x801,PPMI,7\n")
    with pytest.raises(JudgementParseError) as exc_info:
        load_judgements(str(path))
    assert exc_info.value.line_number == 2


def test_precision_at_k():
    assert precision_at_k(judged(*[7] * 10), 10, 3) == 1.0
    assert precision_at_k(judged(*([5] * 7 + [1] * 3)), 10, 3) == 0.7
    assert precision_at_k(judged(*[6] * 8), 10, 3) == 0.8
    assert precision_at_k(judged(), 10, 3) == 0.0
    assert precision_at_k(judged(2, 7), 1, 3) == 0.0
    with pytest.raises(PreconditionError):
        precision_at_k(judged(7), 0, 3)


def test_average_precision():
    assert average_precision(judged(5, 1, 6), 3) == \
        pytest.approx(5.0 / 6.0, abs=1e-12)
    assert average_precision(judged(7, 7, 7), 3) == 1.0
    assert average_precision(judged(1, 2, 3), 3) == 0.0


def test_mean_average_precision():
    lists = [judged(7, 7), judged(1, 7)]
    assert mean_average_precision(lists, 3) == pytest.approx(0.75)
    assert mean_average_precision(lists[1:], 3) == \
        average_precision(lists[1], 3)
    with pytest.raises(PreconditionError):
        mean_average_precision([], 3)


def test_ndcg():
    assert ndcg(judged(3, 7)) == pytest.approx(
        (3 + 7 / math.log2(3)) / (7 + 3 / math.log2(3)), abs=1e-12
    )
    assert ndcg(judged(3, 7)) == pytest.approx(0.8340, abs=1e-4)
    assert ndcg(judged(7, 5, 3)) == 1.0
    assert ndcg(judged(4, 4, 4)) == 1.0
    assert ndcg(judged(3, 7), gain="exponential") == pytest.approx(
        (7 + 127 / math.log2(3)) / (127 + 7 / math.log2(3)), abs=1e-12
    )
    with pytest.raises(PreconditionError):
        ndcg(judged())
    with pytest.raises(PreconditionError):
        ndcg(judged(3), gain="quadratic")


def test_uniform_ratings_are_order_free():
    forward = JudgedList("toy:food:q", ["toy:food:a", "toy:food:b"], [5, 5])
    backward = JudgedList("toy:food:q", ["toy:food:b", "toy:food:a"], [5, 5])
    for tau in (3, 4):
        assert average_precision(forward, tau) == \
            average_precision(backward, tau)
        assert precision_at_k(forward, 1, tau) == \
            precision_at_k(backward, 1, tau)
    assert ndcg(forward) == ndcg(backward)


@given(st.lists(judged_ratings, min_size=1, max_size=20),
       st.sampled_from([3.0, 4.0]))
def test_metrics_match_naive_oracles(lists, tau):
    judged_lists = [judged(*ratings) for ratings in lists]
    for ratings, judged_list in zip(lists, judged_lists):
        for k in (1, 10):
            assert precision_at_k(judged_list, k, tau) == pytest.approx(
                naive_precision_at_k(ratings, k, tau), abs=1e-12
            )
        assert average_precision(judged_list, tau) == pytest.approx(
            naive_average_precision(ratings, tau), abs=1e-12
        )
        assert ndcg(judged_list) == pytest.approx(naive_ndcg(ratings),
                                                  abs=1e-12)
        assert 0.0 <= ndcg(judged_list) <= 1.0 + 1e-12
    expected = sum(naive_average_precision(r, tau) for r in lists) / \
        len(lists)
    assert mean_average_precision(judged_lists, tau) == \
        pytest.approx(expected, abs=1e-12)


def test_cohen_kappa():
    assert cohen_kappa("yynn", "yynn") == 1.0
    assert cohen_kappa("yyyy", "yynn") == pytest.approx(0.0, abs=1e-12)
    assert cohen_kappa([True] * 3, [True] * 3) == 1.0
    with pytest.raises(PreconditionError):
        cohen_kappa([], [])
    with pytest.raises(PreconditionError):
        cohen_kappa("yy", "y")


def test_subcategory_cooccurrence_jaccard():
    pairs = [(CHICKEN, BEEF), (CHICKEN, BEEF), (CHICKEN, LENTILS),
             (CHICKEN, LENTILS), (BEEF, LENTILS)]
    result = subcategory_cooccurrence(pairs)
    assert result.labels == ["beans and legumes:beans", "meats:poultry",
                             "meats:red meat"]
    poultry, red_meat = 1, 2
    assert result.values[poultry, red_meat] == pytest.approx(0.4)
    assert result.values[red_meat, poultry] == pytest.approx(0.4)
    assert result.values[poultry, poultry] == 0.0
    np.testing.assert_allclose(result.values, result.values.T)


def test_subcategory_cooccurrence_with_itself():
    result = subcategory_cooccurrence([(CHICKEN, TURKEY)])
    assert result.labels == ["meats:poultry"]
    assert result.values[0, 0] == 1.0
    with pytest.raises(PreconditionError):
        subcategory_cooccurrence([])


def test_subcategory_cooccurrence_counts_a_pair_once():
    mixed = FoodKey.parse("meats:poultry:chicken|meats:red meat:beef")
    result = subcategory_cooccurrence([(mixed, BEEF)])
    assert result.labels == ["meats:poultry", "meats:red meat"]
    np.testing.assert_allclose(result.values, [[0.0, 1.0], [1.0, 1.0]])


def test_judged_list_falls_back_across_methods():
    judgements = parse_judgements(judgement_lines(
        "meats:poultry:chicken,meats:poultry:turkey,PPMI,7,6,5",
        "meats:poultry:chicken,meats:red meat:beef,SVD,1,2,3",
    ))
    index = index_judgements(judgements)
    ranked = RankedList(CHICKEN, "SVD", [(TURKEY, 0.9), (BEEF, 0.2)])
    judged_list = JudgedList.from_ranked_list(ranked, index)
    assert judged_list.avg_ratings == [6.0, 2.0]
    missing = RankedList(CHICKEN, "PPMI", [(LENTILS, 0.1)])
    with pytest.raises(PreconditionError):
        JudgedList.from_ranked_list(missing, index)


def test_evaluate_rankings_and_compare_methods():
    judgements = parse_judgements(judgement_lines(
        "meats:poultry:chicken,meats:poultry:turkey,PPMI,7,6,5",
        "meats:poultry:chicken,meats:red meat:beef,PPMI,4,4,4",
        "meats:poultry:chicken,meats:red meat:beef,SVD,5,5,5",
    ))
    rankings = [
        RankedList(CHICKEN, "SVD", [(BEEF, 0.8), (TURKEY, 0.5)]),
        RankedList(CHICKEN, "PPMI", [(TURKEY, 0.9), (BEEF, 0.3)]),
    ]
    rows = evaluate_rankings(rankings, judgements, [3.0, 4.0])
    assert [(r.method, r.tau) for r in rows] == [
        ("PPMI", 3.0), ("PPMI", 4.0), ("SVD", 3.0), ("SVD", 4.0),
    ]
    ppmi_3, ppmi_4, svd_3, svd_4 = rows
    assert ppmi_3.prec_at_1 == 1.0
    assert ppmi_3.prec_at_10 == pytest.approx(0.2)
    assert ppmi_4.map == 1.0
    assert ppmi_4.prec_at_10 == pytest.approx(0.1)
    assert svd_4.map == pytest.approx(1.0)
    assert ppmi_3.ndcg == ppmi_4.ndcg == 1.0
    assert svd_3.ndcg == svd_4.ndcg
    assert svd_3.ndcg == pytest.approx(
        (5 + 6 / math.log2(3)) / (6 + 5 / math.log2(3))
    )

    comparison = compare_methods(rows)
    ndcg_3 = [c for c in comparison if c.tau == 3.0 and c.metric == "NDCG"]
    assert len(ndcg_3) == 1
    assert ndcg_3[0].method == "SVD"
    assert ndcg_3[0].relative_change == pytest.approx(svd_3.ndcg - 1.0)
    assert len(comparison) == 8


def test_queries_that_ranked_nothing_score_zero():
    judgements = parse_judgements(judgement_lines(
        "meats:poultry:chicken,meats:poultry:turkey,PPMI,7,6,5",
    ))
    rankings = [
        RankedList(CHICKEN, "PPMI", [(TURKEY, 0.9)]),
        RankedList(BEEF, "PPMI", []),
    ]
    row, = evaluate_rankings(rankings, judgements, [4.0])
    assert row.prec_at_1 == 0.5
    assert row.prec_at_10 == pytest.approx(0.05)
    assert row.map == 0.5
    assert row.ndcg == 0.5


def test_rater_agreement():
    judgements = parse_judgements(judgement_lines(
        "toy:food:q,toy:food:a,PPMI,7,7,",
        "toy:food:q,toy:food:b,PPMI,6,6,6",
        "toy:food:q,toy:food:c,PPMI,1,5,2",
        "toy:food:q,toy:food:d,PPMI,2,7,",
    ))
    rows = rater_agreement(judgements, 3)
    assert [(r.rater_a, r.rater_b, r.n) for r in rows] == [
        ("r1", "r2", 4), ("r1", "r3", 2), ("r2", "r3", 2),
    ]
    assert rows[0].kappa == pytest.approx(0.0, abs=1e-12)
    assert rows[1].kappa == 1.0
    assert rows[2].kappa == pytest.approx(0.0, abs=1e-12)
