import logging

import pytest

from rbdom import (
    ParseError,
    UnsupportedFormatError,
    build_graph,
    parse_edge_list,
    parse_matrix_market,
    write_edge_list,
    write_report_csv,
)
from rbdom.io import round_half_up
from rbdom.pipeline import AggregateStats, RunReport

from conftest import path_graph, random_graph


def test_parse_edge_list_p3():
    g = parse_edge_list("3 2\n0 1\n1 2")
    assert g == path_graph(3)


def test_parse_edge_list_duplicate_warning(caplog):
    with caplog.at_level(logging.WARNING, logger="rbdom.io"):
        g = parse_edge_list("2 2\n0 1\n0 1")
    assert g.m == 1
    assert "1 duplicate" in caplog.text


def test_parse_edge_list_out_of_range_names_line():
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("2 1\n0 5")


def test_parse_edge_list_malformed():
    with pytest.raises(ParseError, match="line 1"):
        parse_edge_list("3\n0 1")
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("2 1\nx y")
    with pytest.raises(ParseError):
        parse_edge_list("2 2\n0 1")
    with pytest.raises(ParseError):
        parse_edge_list("# only a comment")


def test_parse_edge_list_comments_and_blanks():
    g = parse_edge_list("# comment\n\n3 2\n# more\n0 1\n\n1 2\n")
    assert g == path_graph(3)


def test_edge_list_round_trip(rng):
    for _ in range(20):
        g = random_graph(rng, n_max=30)
        assert parse_edge_list(write_edge_list(g)) == g


def test_edge_list_round_trip_degenerate_graphs():
    for g in (build_graph(0, []), build_graph(4, [])):
        assert parse_edge_list(write_edge_list(g)) == g


MTX_P3 = """%%MatrixMarket matrix coordinate pattern symmetric
% adjacency of a path
3 3 2
2 1
3 2
"""


def test_parse_mtx_p3():
    assert parse_matrix_market(MTX_P3) == path_graph(3)


def test_parse_mtx_rejects_general():
    text = MTX_P3.replace("symmetric", "general")
    with pytest.raises(UnsupportedFormatError, match="symmetric"):
        parse_matrix_market(text)


def test_parse_mtx_rejects_nonsquare():
    text = "%%MatrixMarket matrix coordinate pattern symmetric\n3 4 1\n2 1\n"
    with pytest.raises(ValueError, match="square"):
        parse_matrix_market(text)


def test_parse_mtx_ignores_diagonal_and_values():
    text = (
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "3 3 3\n"
        "1 1 7.5\n"
        "2 1 1.0\n"
        "3 2 -2.0\n"
    )
    assert parse_matrix_market(text) == path_graph(3)


def test_parse_mtx_density_warning(caplog):
    # 3 entries > 20 * ... no; craft a dense tiny matrix: limit 0.5 per row
    with caplog.at_level(logging.WARNING, logger="rbdom.io"):
        parse_matrix_market(MTX_P3, density_limit=0.5)
    assert "sparse regime" in caplog.text
    with pytest.raises(ValueError, match="sparse regime"):
        parse_matrix_market(MTX_P3, density_limit=0.5, strict_density=True)


def test_round_half_up():
    assert round_half_up(8.2474) == 8.25
    assert round_half_up(10.1307) == 10.13
    assert round_half_up(2.345) == 2.35
    assert round_half_up(2.0) == 2.0


def test_write_report_csv_rows(tmp_path):
    rows = [
        RunReport("1", 1643, 9857, 194, 254, 238, (254 - 238) * 100 / 194),
        RunReport("8", 3951, 11838, 471, 862, 969, None),
        RunReport("x", 10, 5, None, 4, 4, None),
    ]
    out = tmp_path / "report.csv"
    write_report_csv(rows, out)
    lines = out.read_text().splitlines()
    assert lines[0] == "id,n,m,ex,aa,la,imprv"
    assert lines[1] == "1,1643,9857,194,254,238,8.25"
    assert lines[2] == "8,3951,11838,471,862,969,--"
    assert lines[3] == "x,10,5,--,4,4,--"


def test_write_report_csv_unproven_marker_and_aggregates(tmp_path):
    rows = [RunReport("a", 5, 4, 3, 4, 3, 100 / 3, ex_proven=False)]
    agg = AggregateStats("demo", 1, 100.0, 100 / 3)
    out = tmp_path / "report.csv"
    write_report_csv(rows, out, aggregates=[agg])
    lines = out.read_text().splitlines()
    assert lines[1] == "a,5,4,~3,4,3,33.33"
    assert lines[2] == "# demo,1,100.00,33.33"


def test_write_report_csv_empty(tmp_path):
    out = tmp_path / "empty.csv"
    write_report_csv([], out)
    assert out.read_text() == "id,n,m,ex,aa,la,imprv\n"
