import pytest
from hypothesis import given, settings

from cliquekernel.generator import GenSpec, generate
from cliquekernel.graph import Graph, complete_graph
from cliquekernel.io import GraphFormatError, load_dimacs, load_graph, load_matrix, save_matrix

from conftest import graphs


def test_k2_file_is_bit_exact(tmp_file):
    save_matrix(complete_graph(2), tmp_file)
    assert tmp_file.read_bytes() == b"0\n1\n1\n0\n"


def test_round_trip_generated(tmp_file):
    g = generate(GenSpec(70, 900, 3))
    save_matrix(g, tmp_file)
    assert load_matrix(tmp_file) == g


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_round_trip_property(tmp_path_factory, g):
    path = tmp_path_factory.mktemp("rt") / "g.txt"
    save_matrix(g, path)
    assert load_matrix(path).to_dense().tolist() == g.to_dense().tolist()


def test_inactive_vertices_serialize_as_zero_rows(tmp_file):
    g = complete_graph(3).remove_vertex(1)
    save_matrix(g, tmp_file)
    h = load_matrix(tmp_file)
    assert h.n == 3 and list(h.edges()) == [(0, 2)]


def test_three_values_not_square(tmp_file):
    tmp_file.write_text("0\n1\n0\n")
    with pytest.raises(GraphFormatError, match="not a square matrix"):
        load_matrix(tmp_file)


def test_non_binary_token_names_line(tmp_file):
    tmp_file.write_text("0\n1\n2\n0\n")
    with pytest.raises(GraphFormatError) as err:
        load_matrix(tmp_file)
    assert err.value.line == 3


def test_asymmetric_rejected(tmp_file):
    tmp_file.write_text("0\n1\n0\n0\n")
    with pytest.raises(GraphFormatError, match="asymmetric") as err:
        load_matrix(tmp_file)
    assert err.value.line == 2


def test_loose_whitespace_accepted(tmp_file):
    tmp_file.write_text("0\r\n1 \n1\n\n0")
    assert list(load_matrix(tmp_file).edges()) == [(0, 1)]


def test_dimension_mismatch(tmp_file):
    save_matrix(complete_graph(4), tmp_file)
    with pytest.raises(GraphFormatError, match="dimension mismatch"):
        load_matrix(tmp_file, n=5)


def test_dimacs(tmp_path):
    path = tmp_path / "g.col"
    path.write_text("c tiny\np edge 4 3\ne 1 2\ne 2 3\ne 3 1\n")
    g = load_dimacs(path)
    assert g.n == 4 and sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert load_graph(path) == g


def test_dimacs_errors(tmp_path):
    path = tmp_path / "g.clq"
    path.write_text("p edge 3 1\ne 1 4\n")
    with pytest.raises(GraphFormatError) as err:
        load_graph(path)
    assert err.value.line == 2


def test_missing_file(tmp_path):
    with pytest.raises(GraphFormatError, match="cannot read"):
        load_graph(tmp_path / "nope.txt")
