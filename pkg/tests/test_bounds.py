import csv
import io
import math

import pytest

from localbox.bounds import (
    CSV_HEADER,
    all_graphs_log2,
    counting_log2,
    counting_upper,
    lower_bound_table,
    regular_graphs_log2,
    table_csv,
)


@pytest.mark.parametrize("n, d, expected", [(2, 2, 40), (4, 2, 104), (8, 2, 256)])
def test_counting_values(n, d, expected):
    assert counting_log2(n, d) == pytest.approx(expected)
    assert counting_upper(n, d).value == pytest.approx(expected)


def test_counting_beats_all_graphs_eventually():
    # for fixed d the counting bound is o(n^2)
    assert counting_log2(4096, 2) < all_graphs_log2(4096)


def test_all_graphs():
    assert all_graphs_log2(10) == 45


def test_regular_count_positive_for_sparse():
    assert regular_graphs_log2(1000, 4) > 0


def test_table_csv_parses():
    reports = lower_bound_table(n=1024, epsilon=0.1, delta=8, np_=4, m=100, g=5)
    text = table_csv(reports)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_HEADER
    assert len(rows) == len(reports) + 1
    for row in rows[1:]:
        assert len(row) == len(CSV_HEADER)
        if row[3] == "numeric":
            assert math.isfinite(float(row[2]))
        else:
            assert row[2] == ""


def test_table_only_reports_given_parameters():
    assert lower_bound_table() == []
    assert [r.name for r in lower_bound_table(m=50)] == ["edges"]


def test_table_rejects_bad_epsilon():
    with pytest.raises(ValueError):
        lower_bound_table(epsilon=1.5)
