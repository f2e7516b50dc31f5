#  MIT License
#
#  Copyright (c) 2019 Anthony Harrison
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to deal
#  in the Software without restriction, including without limitation the rights
#  to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
#  copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in all
#  copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
#  OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
#  SOFTWARE.
"""Unit testing for irreducibility criteria, oracles and polynomials."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

import qaffine.core as core
import qaffine.linalg as la
import qaffine.modules as mod
import qaffine.numbers as num
import qaffine.structure as st

# pylint: disable=no-self-use

Q2 = core.QContext(2)


def spec(ell0, *factors):
    """Shorthand for a ModuleSpec with string parameters."""
    return mod.ModuleSpec(ell0, tuple((ell, core.parse_scalar(a))
                                      for ell, a in factors))


def oracle_grid():
    """Products with l_i <= 2, a_i = q^k, |k| <= 4, ell0 <= 1 and dimension
    at most 18, one per multiset of factors."""
    params = [(ell, Q2.power(k)) for ell in (1, 2) for k in range(-4, 5)]
    for ell0 in (0, 1):
        for count in range(5):
            for factors in combinations_with_replacement(params, count):
                module_spec = mod.ModuleSpec(ell0, factors)
                if module_spec.dim <= 18:
                    yield module_spec


class TestQString:
    """Tests for q-strings."""

    def test_singleton(self):
        """Ensure that S(1, a) = {a}."""
        assert st.q_string(1, 5, Q2).elements == (5,)

    def test_pair(self):
        """Ensure that S(2, a) = {a q^-1, a q}."""
        assert st.q_string(2, 3, Q2).elements == (Fraction(3, 2), 6)

    def test_triple(self):
        """Ensure that S(3, 1) = {1/4, 1, 4} at q = 2."""
        assert st.q_string(3, 1, Q2).elements == (Fraction(1, 4), 1, 4)

    def test_invalid(self):
        """Ensure that empty strings and zero centers are refused."""
        with pytest.raises(core.InvalidParameterError):
            st.q_string(0, 1, Q2)
        with pytest.raises(core.InvalidParameterError):
            st.q_string(1, 0, Q2)

    @pytest.mark.parametrize('elements, expected', [
        ({5}, (1, 5)),
        ({1, 4}, (2, 2)),
        ({1, 16}, None),
        ({16, 1, 4}, (3, 4)),
        ({Fraction(-1, 2), -2}, (2, -1)),
        ({1, 3}, None),
    ])
    def test_recognize(self, elements, expected):
        """Ensure that q-strings are recognized with length and center."""
        assert st.is_q_string(elements, Q2) == expected

    def test_recognize_round_trip(self):
        """Ensure that every q-string is recognized as itself."""
        for length in range(1, 5):
            for center in (1, Fraction(-1, 3), 6):
                string = st.q_string(length, center, Q2)
                assert st.is_q_string(string.elements, Q2) == \
                    (length, center)

    @pytest.mark.parametrize('first, second, expected', [
        ((1, 1), (1, 16), True),
        ((1, 1), (1, 4), False),
        ((3, 7), (1, 7), True),
        ((2, 1), (2, 4), False),
        ((2, 1), (2, 64), True),
    ])
    def test_general_position(self, first, second, expected):
        """Ensure that general position means a non-string union or
        inclusion."""
        assert st.general_position(st.q_string(*first, Q2),
                                   st.q_string(*second, Q2), Q2) == expected


class TestCriterion:
    """Tests for the spec-level irreducibility criteria."""

    def test_vacuous(self):
        """Ensure that a lone V(l) is irreducible."""
        assert st.irreducible_by_criterion(spec(3), Q2)

    def test_reducible(self):
        """Ensure that touching q-strings give a reducible product."""
        assert not st.irreducible_by_criterion(spec(0, (1, '1'), (1, '4')),
                                               Q2)

    def test_irreducible(self):
        """Ensure that separated q-strings give an irreducible product."""
        assert st.irreducible_by_criterion(spec(0, (1, '1'), (1, '16')), Q2)

    def test_td_membership(self):
        """Ensure that -s^-2 in a q-string makes the pullback
        reducible."""
        assert not st.irreducible_as_td_module(spec(0, (1, '-1')), 1, Q2)
        assert st.irreducible_as_td_module(spec(0, (1, '1')), 1, Q2)

    def test_td_general_position(self):
        """Ensure that the pullback needs general position too."""
        assert not st.irreducible_as_td_module(spec(0, (1, '1'), (1, '4')),
                                               2, Q2)

    def test_td_zero_s(self):
        """Ensure that s = 0 is refused."""
        with pytest.raises(core.InvalidParameterError):
            st.irreducible_as_td_module(spec(1), 0, Q2)


class TestOracle:
    """Tests for the Burnside oracles."""

    def test_trivial(self):
        """Ensure that the trivial module is irreducible."""
        assert st.irreducible_by_oracle(mod.build(spec(0), Q2))

    def test_reducible(self):
        """Ensure that V(1,1) (x) V(1,4) is reducible."""
        rep = mod.build(spec(0, (1, '1'), (1, '4')), Q2)
        assert not st.irreducible_by_oracle(rep)

    def test_irreducible(self):
        """Ensure that V(1,1) (x) V(1,16) is irreducible."""
        rep = mod.build(spec(0, (1, '1'), (1, '16')), Q2)
        assert st.irreducible_by_oracle(rep)

    def test_cap(self):
        """Ensure that the oracle refuses instead of guessing above the
        cap."""
        rep = mod.build(spec(0, (1, '1'), (1, '16')), Q2)
        with pytest.raises(st.OracleCapExceededError):
            st.irreducible_by_oracle(rep, cap=3)

    @pytest.mark.parametrize('module_spec', [
        spec(0, (1, '1'), (1, a))
        for a in ('1/8', '1/4', '1/2', '1', '2', '4', '8')
    ] + [
        spec(1, (1, '4')),
        spec(0, (2, '1'), (1, '8')),
        spec(0, (2, '1'), (1, '2')),
        spec(0, (2, '1'), (1, '1/2')),
    ])
    def test_agrees_with_criterion(self, module_spec):
        """Ensure that the oracle and the q-string criterion agree."""
        rep = mod.build(module_spec, Q2)
        assert st.irreducible_by_oracle(rep) == \
            st.irreducible_by_criterion(module_spec, Q2)

    @pytest.mark.slow
    def test_grid_agrees_with_criterion(self):
        """Ensure that the oracle and the criterion agree on every product
        with l_i <= 2, a_i = q^k for |k| <= 4, ell0 <= 1 and dimension
        at most 18."""
        specs = list(oracle_grid())
        disagreements = [str(module_spec) for module_spec in specs
                         if st.irreducible_by_oracle(mod.build(module_spec,
                                                               Q2))
                         != st.irreducible_by_criterion(module_spec, Q2)]
        assert len(specs) == 2015 and not disagreements

    def test_td_reducible(self):
        """Ensure that V(1,-1) is reducible under the embedding with
        s = 1."""
        rep = mod.evaluation_module(1, -1, Q2)
        assert not st.irreducible_as_td_module_by_oracle(rep, 1, Q2)

    @pytest.mark.parametrize('s', [1, 2, Fraction(1, 3)])
    def test_td_agrees_with_criterion(self, s):
        """Ensure that the embedding oracle agrees with the criterion."""
        module_spec = spec(0, (1, '1'), (1, '16'))
        rep = mod.build(module_spec, Q2)
        assert st.irreducible_as_td_module_by_oracle(rep, s, Q2) == \
            st.irreducible_as_td_module(module_spec, s, Q2) is True


class TestDrinfeldPolynomial:
    """Tests for Drinfel'd polynomials."""

    def test_with_untwisted_factor(self):
        """Ensure that V(1) (x) V(2,1) gives l(l+1/2)(l+2)."""
        poly = st.drinfeld_polynomial(spec(1, (2, '1')), Q2)
        assert poly == num.Polynomial(0, 1, Fraction(5, 2), 1) and \
            poly.format() == 'λ³+(5/2)λ²+λ'

    def test_trivial(self):
        """Ensure that the trivial module has polynomial 1."""
        assert st.drinfeld_polynomial(spec(0), Q2) == 1

    def test_single_factor(self):
        """Ensure that V(1,a) gives l + a."""
        assert st.drinfeld_polynomial(spec(0, (1, '7')), Q2) == \
            num.Polynomial(7, 1)

    def test_degree_is_diameter(self):
        """Ensure that the degree equals the diameter."""
        module_spec = spec(1, (1, '1'), (2, '1/3'))
        assert st.drinfeld_polynomial(module_spec, Q2).degree == \
            module_spec.diameter == \
            mod.weight_decomposition(mod.build(module_spec, Q2), Q2).d


class TestExceptionalPolynomials:
    """Tests for the exceptional polynomials."""

    def test_two_dimensions(self):
        """Ensure that V(a) in two dimensions gives q(a + t)."""
        polys = st.exceptional_polynomials(mod.evaluation_module(1, 3, Q2),
                                           Q2)
        assert polys == [num.Polynomial(6, 2)]

    def test_tensor_product(self):
        """Ensure that V(1,1) (x) V(1,16) has roots -1 and -16."""
        rep = mod.build(spec(0, (1, '1'), (1, '16')), Q2)
        first, second = st.exceptional_polynomials(rep, Q2)
        assert first.degree == 2 and first(-1) == 0 and first(-16) == 0 \
            and second == 1

    def test_degrees(self):
        """Ensure that p_i has degree (d-2i) dim U_i."""
        rep = mod.build(spec(1, (1, '1'), (1, '16')), Q2)
        layers = mod.weight_decomposition(rep, Q2)
        polys = st.exceptional_polynomials(rep, Q2)
        assert [p.degree for p in polys] == \
            [(layers.d - 2 * i) * layers.layer(i).dim
             for i in range(layers.d // 2 + 1)]

    @pytest.mark.parametrize('twist', [
        lambda rep: mod.twist_k0(rep, 3), mod.twist_sign,
    ])
    def test_requires_type_one_one(self, twist):
        """Ensure that twisted modules are refused until normalized."""
        rep = mod.build(spec(0, (1, '1'), (1, '16')), Q2)
        twisted = twist(rep)
        with pytest.raises(mod.TypeNormalizationError):
            st.exceptional_polynomials(twisted, Q2)
        normalized, _, _ = mod.normalize_type(twisted, Q2)
        assert st.exceptional_polynomials(normalized, Q2) == \
            st.exceptional_polynomials(rep, Q2)

    def test_exceptional_parameter(self):
        """Ensure that exceptional parameters match the td criterion."""
        assert st.is_exceptional_parameter(mod.evaluation_module(1, -1, Q2),
                                           1, Q2)
        assert not st.is_exceptional_parameter(
            mod.evaluation_module(1, 1, Q2), 1, Q2)


class TestWitness:
    """Tests for invariant subspace witnesses."""

    def test_reducible(self):
        """Ensure that V(1,1) (x) V(1,4) has a proper invariant
        subspace."""
        rep = mod.build(spec(0, (1, '1'), (1, '4')), Q2)
        witness = st.invariant_subspace_witness(rep)
        assert witness is not None and 0 < witness.dim < rep.dim and \
            la.subspace_closure(witness, rep.operators()) == witness

    def test_irreducible(self):
        """Ensure that no witness exists for an irreducible product."""
        rep = mod.build(spec(0, (1, '1'), (1, '16')), Q2)
        assert st.invariant_subspace_witness(rep) is None

    def test_generates_lowest_weight(self):
        """Ensure that every basis vector of V(1,1) (x) V(1) generates the
        lowest weight vector of the top component."""
        rep = mod.tensor_product([(1, 1), (1, 0)], Q2)
        lowest = (0, 0, 0, 1)
        assert all(st.generates_lowest_weight(
            rep, la.Subspace.standard_vector(4, i), lowest)
                   for i in range(4))

    @pytest.mark.parametrize('l, m', [(1, 1), (2, 1), (1, 2), (2, 2),
                                      (3, 2)])
    @pytest.mark.parametrize('a', ['1', '1/3'])
    def test_generates_lowest_weight_grid(self, l, m, a):
        """Ensure that every basis vector of V(l,a) (x) V(m) generates its
        lowest weight vector."""
        rep = mod.tensor_product([(l, a), (m, 0)], Q2)
        lowest = la.Subspace.standard_vector(rep.dim, rep.dim - 1)
        assert all(st.generates_lowest_weight(
            rep, la.Subspace.standard_vector(rep.dim, i), lowest)
                   for i in range(rep.dim))
