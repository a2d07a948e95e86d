"""Tests for the network file parser and printer."""

from __future__ import annotations

import random

import pytest

from boolfix.errors import (
    BoolFixError,
    DuplicateDefinitionError,
    ErrorCode,
    NetworkSyntaxError,
    UndefinedIdentifierError,
)
from boolfix.graph.digraph import derive
from boolfix.netfile import format_network, load_network, parse_network, tokenize
from boolfix.netgen import random_network
from boolfix.network.network import State, eval_local
from conftest import EIGHT_NODE


def _same_semantics(left, right) -> bool:
    if left.names != right.names:
        return False
    return all(
        a.support == b.support and a.table.tolist() == b.table.tolist()
        for a, b in zip(left.components, right.components)
    )


class TestParse:
    """Successful parses."""

    def test_eight_node_definition_order(self):
        """Test that definition order fixes indices."""
        net = parse_network(EIGHT_NODE)
        assert net.names == tuple(f"x{i}" for i in range(1, 9))
        assert net.index("x3") == 2

    def test_comments_and_blank_lines(self):
        """Test that comments and blank lines are ignored."""
        net = parse_network("# header\n\nx = 1  # stays on\ny = x\n")
        assert net.names == ("x", "y")

    def test_single_constant(self):
        """Test `x = 0`."""
        net = parse_network("x = 0\n")
        assert net.n == 1
        assert eval_local(net, 0, State.zeros(1)) == 0

    @pytest.mark.parametrize(
        "expr, expected",
        [
            ("1 | 0 & 0", 1),
            ("!0 & 0", 0),
            ("!(0 & 0)", 1),
            ("(1 | 0) & 0", 0),
        ],
    )
    def test_precedence(self, expr, expected):
        """Test that ! binds tighter than & which binds tighter than |."""
        net = parse_network(f"x = {expr}\n")
        assert eval_local(net, 0, State.zeros(1)) == expected

    def test_tokenize_columns(self):
        """Test token columns are 1-based."""
        tokens = tokenize("ab = !c", 3)
        assert [(t.type, t.column) for t in tokens] == [
            ("ID", 1),
            ("=", 4),
            ("!", 6),
            ("ID", 7),
            ("EOL", 8),
        ]

    def test_load_network_reads_file(self, write_net):
        """Test reading from disk."""
        net = load_network(write_net(EIGHT_NODE))
        assert net.n == 8


class TestParseErrors:
    """Each error kind is distinct and carries its position."""

    def test_undefined_identifier(self):
        """Test `a = b & !a` names the undefined `b`."""
        with pytest.raises(UndefinedIdentifierError) as exc_info:
            parse_network("a = b & !a\n")
        assert exc_info.value.name == "b"
        assert "'b'" in exc_info.value.message
        assert exc_info.value.code == ErrorCode.UNDEFINED_IDENTIFIER

    def test_duplicate_definition(self):
        """Test a repeated name reports both lines."""
        with pytest.raises(DuplicateDefinitionError) as exc_info:
            parse_network("a = 1\nb = a\na = 0\n")
        assert exc_info.value.details == {"name": "a", "line": 3, "first_line": 1}

    def test_dangling_operator(self):
        """Test a missing operand at end of line."""
        with pytest.raises(NetworkSyntaxError) as exc_info:
            parse_network("x1 = x1 &\n")
        assert (exc_info.value.line, exc_info.value.column) == (1, 10)
        assert "end of line" in exc_info.value.message

    def test_unclosed_parenthesis(self):
        """Test an unclosed group."""
        with pytest.raises(NetworkSyntaxError, match="expected '\\)'"):
            parse_network("x1 = 1\nx2 = (x1 | x2\n")

    def test_missing_equals(self):
        """Test a definition without `=`."""
        with pytest.raises(NetworkSyntaxError) as exc_info:
            parse_network("x1 x1\n")
        assert exc_info.value.column == 4

    def test_unexpected_character(self):
        """Test an unknown operator character."""
        with pytest.raises(NetworkSyntaxError) as exc_info:
            parse_network("x1 = x1 $ x1\n")
        assert exc_info.value.column == 9
        assert "'$'" in exc_info.value.message

    def test_trailing_tokens(self):
        """Test two operands without an operator."""
        with pytest.raises(NetworkSyntaxError):
            parse_network("x1 = x1 x1\n")

    def test_empty_document(self):
        """Test that a document with only comments is no input."""
        with pytest.raises(BoolFixError) as exc_info:
            parse_network("# nothing here\n\n")
        assert exc_info.value.code == ErrorCode.NO_INPUT
        assert exc_info.value.exit_code == 1

    def test_invalid_utf8(self, tmp_path):
        """Test that undecodable bytes become a syntax error at their position."""
        path = tmp_path / "binary.bn"
        path.write_bytes(b"x1 = x2\nx2 = \xff\xfe\n")
        with pytest.raises(NetworkSyntaxError) as exc_info:
            load_network(path)
        assert (exc_info.value.line, exc_info.value.column) == (2, 6)
        assert "0xff" in exc_info.value.message
        assert exc_info.value.exit_code == 1


class TestRoundTrip:
    """Printing then parsing preserves every local function."""

    def test_eight_node(self):
        """Test the eight-node network and its derived graph."""
        net = parse_network(EIGHT_NODE)
        again = parse_network(format_network(net))
        assert _same_semantics(net, again)
        assert derive(net).arcs == derive(again).arcs

    def test_random_networks(self):
        """Test arbitrary non-monotone networks."""
        rng = random.Random(3)
        for _ in range(50):
            net = random_network(rng.randint(1, 8), 4, rng)
            assert _same_semantics(net, parse_network(format_network(net)))

    def test_format_aligns_names(self):
        """Test the printed layout."""
        net = parse_network("a = 1\nlong = !a\n")
        assert format_network(net) == "a    = 1\nlong = !a\n"
