"""
Unit tests for target assignments and witness-word search.
"""

import json

import pytest

# Import the modules under test
from verbal_images.constants import EXIT_USAGE
from verbal_images.core.word_search import (
    Constraint, TargetAssignment, exhaustive_shortest, find_word,
)
from verbal_images.core.words import evaluate, format_word, parse_word
from verbal_images.exceptions import CapacityError, FormatError, UnsupportedInputError


@pytest.fixture
def pairs(s3):
    """Two generating pairs of Sym(3)"""
    return [
        (s3.parse_element("(1 2)"), s3.parse_element("(2 3)")),
        (s3.parse_element("(1 2 3)"), s3.parse_element("(1 2)")),
    ]


def target_from_word(G, text, tuples):
    w = parse_word(text)
    constraints = [Constraint(t, evaluate(w, t, G), text) for t in tuples]
    return TargetAssignment(G.group_id, 2, constraints)


class TestTargetAssignment:
    """Test target documents and consistency checks"""

    def test_conflicting_targets(self, s3, pairs):
        """Test one tuple cannot map to two values"""
        with pytest.raises(FormatError):
            TargetAssignment(s3.group_id, 2, [Constraint(pairs[0], 1), Constraint(pairs[0], 2)])

    def test_null_conflict(self, s3, pairs):
        """Test a null constraint conflicting with a value constraint"""
        with pytest.raises(FormatError):
            TargetAssignment(s3.group_id, 2, [Constraint(pairs[0], 1)], [Constraint(pairs[0], 0)])

    def test_wrong_arity(self, s3):
        """Test tuples must have k entries"""
        with pytest.raises(FormatError):
            TargetAssignment(s3.group_id, 2, [Constraint((1,), 1)])

    def test_from_document_list(self, s3):
        """Test a JSON list with literals and nulls"""
        doc = json.dumps([
            {"tuple": ["(1 2)", "(2 3)"], "target": "(1 2)"},
            {"nulls": [["(1 2 3)", "(1 2 3)"]]},
        ])
        t = TargetAssignment.from_document(s3, doc)
        assert len(t.constraints) == 1
        assert len(t.nulls) == 1
        assert t.constraints[0].target == s3.parse_element("(1 2)")

    def test_from_document_object(self, s3):
        """Test the object form"""
        doc = json.dumps({"constraints": [{"tuple": [1, 2], "target": 1}], "nulls": []})
        t = TargetAssignment.from_document(s3, doc)
        assert t.constraints[0].values == (1, 2)
        assert t.nulls == []

    @pytest.mark.parametrize("doc", ["not json", "3", '[{"tuple": [1, 2]}]', '[[1, 2]]'])
    def test_malformed_documents(self, s3, doc):
        """Test malformed target documents"""
        with pytest.raises(FormatError):
            TargetAssignment.from_document(s3, doc)

    def test_restricted(self, s3, pairs):
        """Test dropping null constraints"""
        nulls = [Constraint(p, 0, 'null') for p in pairs]
        t = TargetAssignment(s3.group_id, 2, [], nulls)
        assert len(t.restricted(1).nulls) == 1
        assert len(t.nulls) == 2

    def test_to_dict(self, s3, pairs):
        """Test constraints are reported as literals"""
        t = target_from_word(s3, "x", pairs[:1])
        data = t.to_dict(s3)
        assert data['constraints'][0]['tuple'] == ['(1 2)', '(2 3)']
        assert data['constraints'][0]['target'] == '(1 2)'


class TestFindWord:
    """Test the search strategies"""

    def test_single_generator(self, s3, pairs):
        """Test (a, b) -> a gives x"""
        t = target_from_word(s3, "x", pairs[:1])
        result = find_word(t, s3, budget=4)
        assert result.found
        assert format_word(result.word) == "x"

    def test_bfs_is_shortest(self, s3, pairs):
        """Test BFS agrees with exhaustive enumeration"""
        t = target_from_word(s3, "x y^-1 x y", pairs)
        result = find_word(t, s3, budget=6)
        assert result.found
        assert t.satisfied_by(result.word, s3)
        assert len(result.word) == exhaustive_shortest(t, s3, 6)

    def test_bidirectional(self, s3, pairs):
        """Test meet-in-the-middle finds a verified witness"""
        t = target_from_word(s3, "x y^-1 x y", pairs)
        result = find_word(t, s3, budget=8, strategy='bidirectional')
        assert result.found
        assert t.satisfied_by(result.word, s3)

    def test_random_walk(self, s3, pairs):
        """Test random walks are seeded and verified"""
        t = target_from_word(s3, "x y", pairs)
        result = find_word(t, s3, budget=6, strategy='random-walk', seed=11)
        assert result.found
        assert t.satisfied_by(result.word, s3)
        assert result.to_dict()['seed'] == 11

    def test_nulls(self, s3, pairs):
        """Test null constraints force w to vanish on a tuple"""
        a, b = pairs[0]
        squared = Constraint(pairs[1], evaluate(parse_word("x^2"), pairs[1], s3))
        t = TargetAssignment(s3.group_id, 2, [squared], [Constraint((a, b), 0, 'null')])
        result = find_word(t, s3, budget=8)
        assert result.found
        assert evaluate(result.word, (a, b), s3) == 0

    def test_empty_target(self, s3):
        """Test no constraints gives the empty word"""
        result = find_word(TargetAssignment(s3.group_id, 2), s3, budget=3)
        assert result.found
        assert result.word.is_empty()

    def test_zero_budget(self, s3, pairs):
        """Test an unreachable target within the budget"""
        t = target_from_word(s3, "x", pairs[:1])
        result = find_word(t, s3, budget=0)
        assert not result.found
        assert result.to_dict()['message'] == "no witness within budget"

    def test_state_cap(self, s3, pairs):
        """Test the state cap raises rather than truncating"""
        t = target_from_word(s3, "x y x", pairs[:1])
        with pytest.raises(CapacityError):
            find_word(t, s3, budget=5, state_cap=1)

    def test_other_group(self, s3, s4, pairs):
        """Test targets of another group are refused"""
        t = target_from_word(s3, "x", pairs[:1])
        with pytest.raises(FormatError):
            find_word(t, s4, budget=2)

    def test_bad_arguments(self, s3, pairs):
        """Test strategy and budget validation"""
        t = target_from_word(s3, "x", pairs[:1])
        with pytest.raises(UnsupportedInputError) as exc:
            find_word(t, s3, budget=2, strategy='astar')
        assert exc.value.exit_code == EXIT_USAGE
        with pytest.raises(UnsupportedInputError):
            find_word(t, s3, budget=-1)

    def test_exhaustive_none(self, s3, pairs):
        """Test enumeration gives up past its length"""
        t = target_from_word(s3, "x y x y", pairs[:1])
        assert exhaustive_shortest(t, s3, 1) is None
