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
"""Unit testing for generators, relations, coproduct and embedding."""

from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest

import qaffine.algebra as alg
import qaffine.core as core
import qaffine.linalg as la
import qaffine.modules as mod

# pylint: disable=no-self-use

Q2 = core.QContext(2)
Q3_2 = core.QContext.from_value('3/2')

E12 = la.Matrix.unit(2, 0, 1)
E21 = la.Matrix.unit(2, 1, 0)

PARAMETERS = ('1', '1/3', '0', '-1')


def small_products(count, limit=27):
    """Ordered (l, a) factor lists of the given length with total
    dimension at most limit; a cycles through PARAMETERS."""
    result = []
    for ells in product(range(1, limit), repeat=count):
        dim = 1
        for ell in ells:
            dim *= ell + 1
        if dim <= limit:
            result.append([(ell, PARAMETERS[(i + len(result)) % 4])
                           for i, ell in enumerate(ells)])
    return result


def small_specs(limit=12):
    """Specs with ell0 <= 2 and at most two factors, l_i <= 3 and
    a_i in {1, -1/2}, of dimension at most limit."""
    params = [(ell, Fraction(a)) for ell in (1, 2, 3)
              for a in (1, Fraction(-1, 2))]
    result = []
    for ell0 in (0, 1, 2):
        for count in (0, 1, 2):
            for factors in combinations_with_replacement(params, count):
                spec = mod.ModuleSpec(ell0, factors)
                if spec.dim <= limit:
                    result.append(spec)
    return result


class TestBrackets:
    """Tests for commutators."""

    def test_bracket_self(self):
        """Ensure that [A, A] = 0."""
        matrix = la.Matrix([[1, 2], [3, 4]])
        assert alg.bracket(matrix, matrix).is_zero

    def test_qbracket_identity(self):
        """Ensure that [I, I]_q = (q - q^-1) I."""
        identity = la.Matrix.identity(2)
        assert alg.qbracket(identity, identity, Q2) == \
            identity * Fraction(3, 2)

    def test_qbracket_units(self):
        """Ensure that [E12, E21]_q = q E11 - q^-1 E22."""
        assert alg.qbracket(E12, E21, Q2) == \
            la.Matrix.diagonal([2, Fraction(-1, 2)])

    def test_qbracket_inverse(self):
        """Ensure that the q^-1 bracket swaps the weights."""
        assert alg.qbracket(E12, E21, Q2, -1) == \
            la.Matrix.diagonal([Fraction(1, 2), -2])

    def test_dimension_mismatch(self):
        """Ensure that brackets of different sizes are refused."""
        with pytest.raises(la.DimensionMismatchError):
            alg.bracket(E12, la.Matrix.identity(3))

    def test_delta(self):
        """Ensure that delta = -(q-q^-1)(q^2-q^-2)(q^3-q^-3)q^4."""
        q = Fraction(2)
        expected = -(q - 1 / q) * (q ** 2 - q ** -2) * (q ** 3 - q ** -3) \
            * q ** 4
        assert alg.td_delta(Q2) == expected


class TestRepresentation:
    """Tests for the Representation class."""

    def test_json(self):
        """Ensure that a representation survives a JSON trip."""
        rep = mod.evaluation_module(2, '1/3', Q2)
        data = rep.to_json(Q2)
        assert data['q'] == '2' and alg.Representation.from_json(data) == rep

    def test_missing_generator(self):
        """Ensure that a missing generator is refused."""
        action = mod.evaluation_module(1, 1, Q2).action
        del action['k1inv']
        with pytest.raises(alg.MalformedRepresentationError):
            alg.Representation(2, action)

    def test_wrong_size(self):
        """Ensure that matrices of the wrong size are refused."""
        with pytest.raises(alg.MalformedRepresentationError):
            mod.evaluation_module(1, 1, Q2).replace(
                e0p=la.Matrix.identity(3))

    def test_bad_json(self):
        """Ensure that ragged JSON matrices are refused."""
        data = mod.evaluation_module(1, 1, Q2).to_json()
        data['action']['e0p'] = [['1', '0'], ['0']]
        with pytest.raises(alg.MalformedRepresentationError):
            alg.Representation.from_json(data)


class TestUprimeRelations:
    """Tests for the relation checker."""

    @pytest.mark.parametrize('ctx', [Q2, Q3_2])
    def test_evaluation_modules(self, ctx):
        """Ensure that every evaluation module with l <= 5 passes."""
        for ell in range(6):
            for a in ('0', '1', '-1', '1/3'):
                rep = mod.evaluation_module(ell, a, ctx)
                assert alg.check_uprime_relations(rep, ctx, loop=True).passed

    def test_broken_e1p(self):
        """Ensure that replacing e1p by zero breaks [e1p, e1m]."""
        rep = mod.evaluation_module(1, 1, Q2)
        broken = rep.replace(e1p=la.Matrix.zeros(2))
        report = alg.check_uprime_relations(broken, Q2)
        name = '[e1p,e1m]=(k1-k1inv)/(q-q^-1)'
        assert not report.passed and not report[name].passed and \
            report[name].witness == (0, 0)

    def test_trivial(self):
        """Ensure that the trivial module passes."""
        report = alg.check_uprime_relations(alg.Representation.trivial(), Q2,
                                            loop=True)
        assert report.passed and len(report) == 16

    def test_loop_quotient(self):
        """Ensure that k0 k1 = 1 is only required with loop=True."""
        rep = mod.twist_k0(mod.evaluation_module(1, 1, Q2), 3)
        assert alg.check_uprime_relations(rep, Q2).passed and \
            not alg.check_uprime_relations(rep, Q2, loop=True).passed

    def test_report_json(self):
        """Ensure that reports serialize relation, pass and witness."""
        rep = mod.evaluation_module(1, 1, Q2)
        entry = alg.check_uprime_relations(rep, Q2).to_json()[0]
        assert entry == {'relation': 'k0k1=k1k0', 'pass': True,
                         'witness': None}


class TestUqsl2Relations:
    """Tests for the U_q(sl2) checker."""

    def test_restriction(self):
        """Ensure that e1p, e1m, k1, k1inv satisfy the U_q(sl2)
        relations."""
        rep = mod.evaluation_module(3, '1/3', Q2)
        assert alg.check_uqsl2_relations(rep['e1p'], rep['e1m'], rep['k1'],
                                         rep['k1inv'], Q2).passed

    @pytest.mark.parametrize('n', [0, 1, 2, 4])
    def test_standard_module(self, n):
        """Ensure that the standard modules satisfy the relations."""
        assert alg.check_uqsl2_relations(*alg.uqsl2_module(n, Q2),
                                         Q2).passed

    def test_zero(self):
        """Ensure that zero raising and lowering with K = I passes."""
        zero, identity = la.Matrix.zeros(3), la.Matrix.identity(3)
        assert alg.check_uqsl2_relations(zero, zero, identity, identity,
                                         Q2).passed


class TestCoproduct:
    """Tests for tensor products through the coproduct."""

    def test_trivial_factor(self):
        """Ensure that tensoring with the trivial module changes
        nothing."""
        rep = mod.evaluation_module(2, 1, Q2)
        trivial = alg.Representation.trivial()
        assert alg.coproduct_tensor(trivial, rep, Q2) == rep and \
            alg.coproduct_tensor(rep, trivial, Q2) == rep

    @pytest.mark.parametrize('factors', small_products(2) + small_products(3))
    def test_relations(self, factors):
        """Ensure that tensor products of dimension at most 27 pass every
        relation."""
        rep = mod.tensor_product(factors, Q2)
        assert alg.check_uprime_relations(rep, Q2, loop=True).passed

    def test_k0_weights(self):
        """Ensure that weights of k0 multiply."""
        rep = alg.coproduct_tensor(mod.evaluation_module(1, 1, Q2),
                                   mod.evaluation_module(1, 4, Q2), Q2)
        assert rep['k0'] == la.Matrix.diagonal([Fraction(1, 4), 1, 1, 4])

    @pytest.mark.parametrize('factors', small_products(3))
    def test_coassociative(self, factors):
        """Ensure that both nestings of a triple product agree
        entrywise."""
        first, second, third = (mod.evaluation_module(ell, a, Q2)
                                for ell, a in factors)
        left = alg.coproduct_tensor(
            alg.coproduct_tensor(first, second, Q2), third, Q2)
        right = alg.coproduct_tensor(
            first, alg.coproduct_tensor(second, third, Q2), Q2)
        assert left == right


class TestEmbedding:
    """Tests for the TD-algebra embedding."""

    def test_x_on_two_dimensions(self):
        """Ensure that x(1) on V(1,1) is -q^-1(q-q^-1)^2 (e0p + e1m k1)."""
        triple = alg.phi_s_image(mod.evaluation_module(1, 1, Q2), 1, 1, 0,
                                 Q2)
        assert triple.x == la.Matrix([[0, 0], [Fraction(-9, 2), 0]])

    def test_x_without_eps(self):
        """Ensure that the e1m term drops when eps = 0."""
        triple = alg.phi_s_image(mod.evaluation_module(1, 1, Q2), 1, 0, 0,
                                 Q2)
        assert triple.x == la.Matrix([[0, 0], [Fraction(-9, 4), 0]])

    def test_k_scaling(self):
        """Ensure that k(s) = s k0."""
        triple = alg.phi_s_image(mod.evaluation_module(2, 1, Q2), 3, 1, 0,
                                 Q2)
        assert triple.k == la.Matrix.diagonal([Fraction(3, 4), 3, 12])

    def test_zero_s(self):
        """Ensure that s = 0 is refused."""
        with pytest.raises(core.InvalidParameterError):
            alg.phi_s_image(mod.evaluation_module(1, 1, Q2), 0, 1, 0, Q2)

    def test_eps_star(self):
        """Ensure that eps_star = 1 is refused since e0m is missing."""
        with pytest.raises(alg.UnsupportedEmbeddingError):
            alg.phi_s_image(mod.evaluation_module(1, 1, Q2), 1, 1, 1, Q2)

    @pytest.mark.parametrize('s', [1, 2, Fraction(1, 3)])
    @pytest.mark.parametrize('eps', [0, 1])
    def test_td_relations(self, s, eps):
        """Ensure that the image satisfies the TD relations."""
        reps = [mod.evaluation_module(2, 1, Q2),
                mod.evaluation_module(3, '-1/3', Q2),
                mod.build(mod.ModuleSpec(1, ((1, Fraction(4)),)), Q2)]
        for rep in reps:
            triple = alg.phi_s_image(rep, s, eps, 0, Q2)
            assert alg.check_td_relations(triple, Q2).passed

    @pytest.mark.slow
    @pytest.mark.parametrize('spec', small_specs(), ids=str)
    def test_td_relations_grid(self, spec):
        """Ensure that every small built module of dimension at most 12
        maps into the TD algebra for each s and eps."""
        rep = mod.build(spec, Q2)
        for s in (1, 2, Fraction(1, 3)):
            for eps in (0, 1):
                triple = alg.phi_s_image(rep, s, eps, 0, Q2)
                assert alg.check_td_relations(triple, Q2).passed, (s, eps)

    def test_trivial_triple(self):
        """Ensure that x = y = 0, k = I passes."""
        zero, identity = la.Matrix.zeros(2), la.Matrix.identity(2)
        triple = alg.TDTriple(zero, zero, identity, identity)
        assert alg.check_td_relations(triple, Q2).passed

    def test_wrong_scale_fails(self):
        """Ensure that doubling x breaks the cubic relation."""
        triple = alg.phi_s_image(mod.evaluation_module(2, 1, Q2), 1, 1, 0,
                                 Q2)
        doubled = alg.TDTriple(triple.x * 2, triple.y, triple.k, triple.kinv)
        report = alg.check_td_relations(doubled, Q2)
        assert not report['serre(x,y)=delta(eps* x^2 k^2-eps k^-2 x^2)'] \
            .passed
