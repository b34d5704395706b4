"""
Unit tests for subsets and the subset description language.
"""

import numpy as np
import pytest

# Import the modules under test
from verbal_images.core.subsets import (
    SubsetResolver, SubsetSpec, class_of, even_set, identity_set, two_power_set, whole_set,
)
from verbal_images.exceptions import FormatError, GroupValidationError


class TestSubsetSpec:
    """Test the SubsetSpec value type"""

    def test_from_indices_sorts_and_dedups(self, s4):
        """Test members are sorted and unique"""
        A = SubsetSpec.from_indices(s4, [5, 0, 5, 3])
        assert A.members.tolist() == [0, 3, 5]
        assert A.size == 3
        assert A.contains_identity

    def test_out_of_range(self, s4):
        """Test indices outside the group"""
        with pytest.raises(FormatError):
            SubsetSpec.from_indices(s4, [24])
        with pytest.raises(FormatError):
            SubsetSpec.from_indices(s4, [-1])

    def test_empty(self, s4):
        """Test the empty subset"""
        A = SubsetSpec.from_indices(s4, [])
        assert A.size == 0
        assert not A.contains_identity

    def test_set_operations(self, s4):
        """Test union, difference and containment"""
        A = SubsetSpec.from_indices(s4, [0, 1, 2])
        B = SubsetSpec.from_indices(s4, [2, 3])
        assert A.union(B).members.tolist() == [0, 1, 2, 3]
        assert A.difference(B).members.tolist() == [0, 1]
        assert B.difference(A).issubset(B)
        assert A.nonidentity().tolist() == [1, 2]

    def test_different_groups(self, s4, s5):
        """Test subsets of different groups do not mix"""
        with pytest.raises(FormatError):
            identity_set(s4).union(identity_set(s5))
        assert not identity_set(s4).same_members(identity_set(s5))

    def test_to_dict(self, s4):
        """Test the report carries literals for small sets"""
        data = identity_set(s4).to_dict(s4)
        assert data['size'] == 1
        assert data['literals'] == ['()']
        assert data['aut_invariant'] is None


class TestNamedSets:
    """Test the named subsets"""

    @pytest.mark.parametrize("fixture,size", [("s4", 16), ("s5", 56), ("a5", 16)])
    def test_two_power_sizes(self, request, fixture, size):
        """Test the number of 2-elements, identity included"""
        assert two_power_set(request.getfixturevalue(fixture)).size == size

    def test_even(self, s5):
        """Test even permutations form Alt(5)"""
        assert even_set(s5).size == 60

    def test_even_needs_permutations(self, sl25):
        """Test 'even' is refused for matrix groups"""
        with pytest.raises(FormatError):
            even_set(sl25)

    def test_whole_and_identity(self, s5):
        """Test the trivial named sets"""
        assert whole_set(s5).size == 120
        assert identity_set(s5).members.tolist() == [0]

    def test_class_of(self, s5):
        """Test the class of a transposition"""
        A = class_of(s5, s5.parse_element("(1 2)"))
        assert A.size == 10
        assert not A.contains_identity


class TestResolver:
    """Test parsing subset documents"""

    def test_lines_and_semicolons_agree(self, s5):
        """Test newline and ';' separators"""
        resolver = SubsetResolver(s5)
        a = resolver.parse("identity\nclass-of: (1 2)")
        b = resolver.parse("identity; class-of: (1 2)")
        assert a.same_members(b)
        assert a.size == 11

    def test_comments(self, s4):
        """Test '#' comments and blank lines"""
        A = SubsetResolver(s4).parse("# header\n\nidentity  # e\n(1 2)\n")
        assert A.size == 2

    def test_json_list(self, s4):
        """Test JSON documents with indices, literals and unions"""
        A = SubsetResolver(s4).parse('[0, "(1 2)", {"union": ["(1 3)", "(1 4)"]}]')
        assert A.size == 4
        assert A.contains_identity

    def test_inline_union(self, s5):
        """Test union: [ ... ] with nested commas"""
        A = SubsetResolver(s5).parse("union: [(1 2), class-of: (1 2 3), (1 2)(3 4)]")
        assert A.size == 1 + 20 + 1

    def test_named(self, s5):
        """Test named items"""
        resolver = SubsetResolver(s5)
        assert resolver.parse("two-power").same_members(two_power_set(s5))
        assert resolver.parse("all").size == 120
        assert resolver.parse("even").size == 60

    def test_aut_orbit(self, a5, a5_aut):
        """Test aut-orbit-of fuses the two 5-cycle classes of Alt(5)"""
        resolver = SubsetResolver(a5, a5_aut.element_labels)
        assert resolver.parse("aut-orbit-of: (1 2 3 4 5)").size == 24
        assert resolver.parse("class-of: (1 2 3 4 5)").size == 12

    def test_aut_orbit_without_aut(self, a5):
        """Test aut-orbit-of needs the automorphism group"""
        with pytest.raises(FormatError):
            SubsetResolver(a5).parse("aut-orbit-of: (1 2 3)")

    def test_matrix_literal(self, sl25):
        """Test matrix literals are not mistaken for JSON lists"""
        A = SubsetResolver(sl25).parse("[[4,0],[0,4]]; identity")
        assert A.size == 2

    @pytest.mark.parametrize("text", ["", "   \n# only a comment", "frobnicate: 3",
                                      "union: (1 2)", "x"])
    def test_malformed(self, s5, text):
        """Test malformed documents"""
        with pytest.raises(FormatError):
            SubsetResolver(s5).parse(text)

    def test_point_out_of_range(self, s5):
        """Test a cycle moving a point beyond the degree"""
        with pytest.raises(GroupValidationError):
            SubsetResolver(s5).parse("(1 2 9)")

    def test_element_masks_are_boolean(self, s4):
        """Test the parsed subset lists each member once"""
        A = SubsetResolver(s4).parse("(1 2); (1 2); 1")
        assert np.unique(A.members).size == A.size
