"""
Unit tests for group construction and element arithmetic.
Tests builtins, permutation/matrix/Cayley input and the matrix-to-permutation map.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Import the modules under test
from verbal_images.core.finite_field import get_field, prime_power
from verbal_images.core.groups import (
    GroupKind, alternating_group, cyclic_group, format_cycles, from_cayley_table, from_matrices,
    from_permutations, matrix_to_perm, parse_cycles, sl_order, special_linear_group,
    symmetric_group,
)
from verbal_images.exceptions import (
    CapacityError, FormatError, GroupValidationError,
)

NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


class TestBuiltins:
    """Test the builtin families"""

    @pytest.mark.parametrize("factory,arg,order", [
        (symmetric_group, 4, 24),
        (symmetric_group, 1, 1),
        (alternating_group, 5, 60),
        (alternating_group, 6, 360),
        (cyclic_group, 7, 7),
    ])
    def test_orders(self, factory, arg, order):
        """Test builtin group orders"""
        assert factory(arg).order == order

    def test_sl25_order(self, sl25):
        """Test SL(2,5) enumeration against q(q^2-1)"""
        assert sl25.order == 120 == sl_order(2, 5)
        assert sl25.kind is GroupKind.MATRIX
        assert sl25.degree == 24

    def test_sl_order_formula(self):
        """Test |SL(n,q)| for a few parameters"""
        assert sl_order(2, 2) == 6
        assert sl_order(3, 2) == 168
        assert sl_order(2, 4) == 60

    def test_identity_is_index_zero(self, s4):
        """Test index 0 is the identity and BFS order starts there"""
        assert np.array_equal(s4.elements[0], np.arange(4))
        assert s4.element_order(0) == 1
        assert s4.literal(0) == '()'

    def test_group_id_is_stable(self):
        """Test equal constructions share a content id"""
        assert symmetric_group(4).group_id == symmetric_group(4).group_id
        assert symmetric_group(4).group_id != alternating_group(4).group_id

    def test_full_symmetric_flag(self, s4, a5):
        """Test is_full_symmetric"""
        assert s4.is_full_symmetric
        assert not a5.is_full_symmetric


class TestArithmetic:
    """Test element arithmetic on indices"""

    def test_left_to_right_composition(self, s3):
        """Test (1 2)*(2 3) applies (1 2) first"""
        a = s3.parse_element("(1 2)")
        b = s3.parse_element("(2 3)")
        assert s3.mul(a, b) == s3.parse_element("(1 3 2)")
        assert s3.mul(b, a) == s3.parse_element("(1 2 3)")

    def test_inverse_and_power(self, s5):
        """Test inverses, powers and negative powers"""
        g = s5.parse_element("(1 2 3 4 5)")
        assert s5.mul(g, s5.inv(g)) == 0
        assert s5.power(g, 5) == 0
        assert s5.power(g, -1) == s5.inv(g)
        assert s5.power(g, 0) == 0

    def test_commutator_of_commuting_elements(self, s4):
        """Test [a,b] = e when a and b commute"""
        a = s4.parse_element("(1 2)")
        b = s4.parse_element("(3 4)")
        assert s4.commutator(a, b) == 0

    def test_element_orders(self, s5):
        """Test element orders match cycle types"""
        assert s5.element_order(s5.parse_element("(1 2)(3 4 5)")) == 6
        assert sorted(set(s5.element_orders.tolist())) == [1, 2, 3, 4, 5, 6]

    def test_table_and_row_arithmetic_agree(self):
        """Test products without a multiplication table"""
        with_table = symmetric_group(4)
        without = symmetric_group(4, max_table_order=0)
        assert without.mul_table is None
        rng = np.random.default_rng(7)
        for a, b in rng.integers(24, size=(50, 2)):
            assert with_table.mul(int(a), int(b)) == without.mul(int(a), int(b))
        assert np.array_equal(with_table.element_orders, without.element_orders)
        assert np.array_equal(with_table.inverses, without.inverses)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 119), st.integers(0, 119), st.integers(0, 119))
    def test_associativity(self, a, b, c):
        """Test (ab)c = a(bc) in Sym(5)"""
        G = symmetric_group(5)
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))

    def test_cycle_type(self, s6):
        """Test cycle types include fixed points"""
        assert s6.cycle_type(s6.parse_element("(1 2 3)(4 5)")) == (3, 2, 1)


class TestLiterals:
    """Test cycle and matrix literals"""

    def test_cycle_round_trip(self, s5):
        """Test format_cycles inverts parse_cycles"""
        row = parse_cycles("(1 3 5)(2 4)", 5)
        assert format_cycles(row) == "(1 3 5)(2 4)"

    def test_cycle_product(self):
        """Test cycles in one literal multiply left to right"""
        assert np.array_equal(parse_cycles("(1 2)(2 3)", 3), parse_cycles("(1 3 2)", 3))

    @pytest.mark.parametrize("text,error", [
        ("(1 1)", GroupValidationError),
        ("(1 7)", GroupValidationError),
        ("1 2", FormatError),
        ("(1 a)", FormatError),
    ])
    def test_invalid_cycles(self, text, error):
        """Test malformed cycle literals"""
        with pytest.raises(error):
            parse_cycles(text, 5)

    def test_parse_element_forms(self, s4):
        """Test index, identity and cycle literals"""
        assert s4.parse_element("e") == 0
        assert s4.parse_element("3") == 3
        with pytest.raises(FormatError):
            s4.parse_element("24")

    def test_parse_element_outside_group(self, a5):
        """Test an odd permutation is rejected by Alt(5)"""
        with pytest.raises(FormatError):
            a5.parse_element("(1 2)")

    def test_matrix_literals(self, sl25):
        """Test matrix elements are recovered from the action"""
        g = sl25.parse_element("[[1,1],[0,1]]")
        assert sl25.literal(g) == "[[1,1],[0,1]]"
        assert sl25.element_order(g) == 5
        assert np.array_equal(sl25.matrix_of(0), np.eye(2, dtype=np.int64))


class TestConstruction:
    """Test permutation, matrix and Cayley-table input"""

    def test_closure_from_permutations(self):
        """Test <(1 2 3 4 5), (1 2 3)> has order 60"""
        G = from_permutations("g", 5, [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)])
        assert G.order == 60

    def test_non_bijection_rejected(self):
        """Test a generator that is not a permutation"""
        with pytest.raises(GroupValidationError):
            from_permutations("bad", 3, [np.array([0, 0, 1])])

    def test_capacity(self):
        """Test the order cap is enforced before enumeration"""
        with pytest.raises(CapacityError) as exc:
            symmetric_group(6, max_order=100)
        assert exc.value.needed == 720
        assert exc.value.cap == 100

    def test_matrix_group(self):
        """Test SL(2,3) from two transvections"""
        G = from_matrices("sl23", 2, 3, [np.array([[1, 1], [0, 1]]), np.array([[1, 0], [1, 1]])])
        assert G.order == 24

    def test_singular_matrix_rejected(self):
        """Test matrices must be invertible"""
        with pytest.raises(GroupValidationError):
            from_matrices("bad", 2, 3, [np.array([[1, 1], [1, 1]])])

    def test_special_flag(self):
        """Test determinant check for special groups"""
        with pytest.raises(GroupValidationError):
            from_matrices("gl", 2, 3, [np.array([[2, 0], [0, 1]])], special=True)

    def test_identity_only_matrix_group(self):
        """Test the trivial matrix group"""
        G = from_matrices("one", 2, 3, [np.eye(2, dtype=np.int64)])
        assert G.order == 1
        assert G.degree == 8

    def test_cayley_group(self):
        """Test a valid Cayley table"""
        G = cyclic_group(6)
        assert G.kind is GroupKind.CAYLEY
        assert G.element_order(1) == 6

    def test_non_associative_table(self):
        """Test a loop that is not a group"""
        with pytest.raises(GroupValidationError):
            from_cayley_table("loop", np.array(NON_ASSOCIATIVE_LOOP))

    def test_non_associative_table_sampled(self):
        """Test sampled associativity above the full-check threshold"""
        with pytest.raises(GroupValidationError):
            from_cayley_table("loop", np.array(NON_ASSOCIATIVE_LOOP), full_check_max=0,
                              samples=2000)

    def test_identity_must_be_zero(self):
        """Test index 0 must be the identity"""
        table = np.array([[1, 0], [0, 1]])
        with pytest.raises(GroupValidationError):
            from_cayley_table("shifted", table)


class TestFields:
    """Test GF(q) tables"""

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 27])
    def test_field_axioms(self, q):
        """Test inverses and distributivity"""
        get_field(q).verify()

    def test_prime_power(self):
        """Test prime power decomposition"""
        assert prime_power(8) == (2, 3)
        assert prime_power(7) == (7, 1)
        with pytest.raises(FormatError):
            prime_power(12)

    def test_describe(self):
        """Test field parameters are echoed"""
        data = get_field(9).describe()
        assert data['p'] == 3 and data['r'] == 2
        assert data['polynomial'].startswith('x^2')


class TestMatrixToPerm:
    """Test the verified permutation image of a matrix group"""

    def test_sl25(self, sl25):
        """Test SL(2,5) becomes a permutation group of degree 24"""
        perm, iso = matrix_to_perm(sl25, samples=100)
        assert perm.kind is GroupKind.PERMUTATION
        assert perm.degree == 24
        assert perm.order == 120
        assert iso.size == 120

    def test_sl22(self):
        """Test SL(2,2) acts on 3 points"""
        perm, _ = matrix_to_perm(special_linear_group(2, 2), samples=10)
        assert (perm.degree, perm.order) == (3, 6)

    def test_trivial_group(self):
        """Test the identity-only matrix group keeps all q^n - 1 points"""
        perm, iso = matrix_to_perm(from_matrices("one", 2, 3, [np.eye(2, dtype=np.int64)]))
        assert (perm.degree, perm.order) == (8, 1)
        assert iso.tolist() == [0]

    def test_index_map_preserves_products(self, sl25):
        """Test the index map is a homomorphism on random products"""
        perm, iso = matrix_to_perm(sl25, samples=0)
        rng = np.random.default_rng(3)
        for a, b in rng.integers(sl25.order, size=(100, 2)):
            assert perm.mul(int(iso[a]), int(iso[b])) == iso[sl25.mul(int(a), int(b))]
            assert perm.element_order(int(iso[a])) == sl25.element_order(int(a))

    def test_not_a_matrix_group(self, s4):
        """Test permutation input is refused"""
        with pytest.raises(TypeError):
            matrix_to_perm(s4)


def test_factorial_orders():
    """Test Sym(n) orders for small n"""
    for n in range(1, 6):
        assert symmetric_group(n).order == math.factorial(n)
