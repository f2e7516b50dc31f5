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
"""Irreducibility criteria, oracles and polynomial invariants.

The q-string criterion decides irreducibility of a tensor product from its
spec alone. The oracles decide the same question from the matrices, by
checking whether the action generates the full matrix algebra.
"""

__all__ = ['DEFAULT_ORACLE_CAP', 'OracleCapExceededError', 'QString',
           'q_string', 'is_q_string', 'general_position',
           'irreducible_by_criterion', 'irreducible_as_td_module',
           'irreducible_by_oracle', 'irreducible_as_td_module_by_oracle',
           'drinfeld_polynomial', 'exceptional_polynomials',
           'is_exceptional_parameter', 'invariant_subspace_witness',
           'generates_lowest_weight']

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from typing_extensions import Final

import qaffine.algebra as alg
import qaffine.core as core
import qaffine.linalg as la
import qaffine.modules as mod
import qaffine.numbers as num
import qaffine.tools as tools

LOGGER = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP: Final = 36


class OracleCapExceededError(core.QAffineError):
    """Error raised instead of running an oracle above its dimension cap."""


@dataclass(frozen=True)
class QString:
    # noinspection PyUnresolvedReferences
    """The set S(length, center) = {center q^(2i-length+1) : 0 <= i < length}.

    :param length: number of elements
    :param center: geometric center of the progression
    :param elements: the elements by increasing exponent of q
    """

    length: int
    center: Fraction
    elements: Tuple[Fraction, ...]

    def __contains__(self, value: Any) -> bool:
        return value in self.elements

    def issubset(self, other: 'QString') -> bool:
        """True if every element is also in other."""
        return set(self.elements) <= set(other.elements)

    def to_json(self) -> List[str]:
        """Elements as scalar strings."""
        return [core.scalar_str(value) for value in self.elements]


def q_string(length: int, center: Any, ctx: core.QContext) -> QString:
    """The q-string S(length, center)."""
    if length < 1:
        raise core.InvalidParameterError(f'q-string length must be positive,'
                                         f' got {length}')
    center = core.nonzero_scalar(center, 'q-string center')
    elements = tuple(center * ctx.power(2 * i - length + 1)
                     for i in range(length))
    return QString(length, center, elements)


def is_q_string(elements: Iterable[Any],
                ctx: core.QContext) -> Optional[Tuple[int, Fraction]]:
    """Recognize a set as a q-string.

    :return: (length, center) with S(length, center) equal to the set, or
        None when there is no such q-string
    """
    values = sorted({core.nonzero_scalar(value) for value in elements})
    if not values:
        raise core.InvalidParameterError('Expected a nonempty set')

    reference = values[0]
    exponents = []
    for value in values:
        exponent = ctx.exponent_of(value / reference)
        if exponent is None:
            return None
        exponents.append(exponent)
    exponents.sort()

    if any(b - a != 2 for a, b in tools.pairwise(exponents)):
        result = None
    else:
        length = len(exponents)
        result = length, reference * ctx.power(exponents[0] + length - 1)
    return result


def general_position(first: QString, second: QString,
                     ctx: core.QContext) -> bool:
    """True if the union is not a q-string or one string contains the
    other."""
    union = set(first.elements) | set(second.elements)
    return (is_q_string(union, ctx) is None
            or first.issubset(second) or second.issubset(first))


def _factor_strings(spec: mod.ModuleSpec,
                    ctx: core.QContext) -> List[QString]:
    return [q_string(ell, a, ctx) for ell, a in spec.factors]


def irreducible_by_criterion(spec: mod.ModuleSpec,
                             ctx: core.QContext) -> bool:
    """Decide irreducibility from the q-strings of the factors."""
    strings = _factor_strings(spec, ctx)
    return all(general_position(first, second, ctx)
               for first, second in combinations(strings, 2))


def irreducible_as_td_module(spec: mod.ModuleSpec, s: Any,
                             ctx: core.QContext) -> bool:
    """Decide irreducibility of the pullback along the embedding with
    parameter s."""
    s = core.nonzero_scalar(s, 's')
    forbidden = -1 / (s * s)
    return (all(forbidden not in string
                for string in _factor_strings(spec, ctx))
            and irreducible_by_criterion(spec, ctx))


def _burnside(operators: Sequence[la.Matrix], dim: int, cap: int) -> bool:
    if dim > cap:
        raise OracleCapExceededError(f'Dimension {dim} exceeds the oracle '
                                     f'cap {cap}')
    result = la.generates_matrix_algebra(operators, dim)
    LOGGER.debug('Burnside test in dimension %d: %s', dim, result)
    return result


def irreducible_by_oracle(rep: alg.Representation,
                          cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Burnside test on the seven generator matrices.

    :raises OracleCapExceededError: if rep.dim > cap
    """
    return _burnside(rep.operators(), rep.dim, cap)


def irreducible_as_td_module_by_oracle(rep: alg.Representation, s: Any,
                                       ctx: core.QContext,
                                       cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Burnside test on x(s), y(s), k(s) and k(s)^-1."""
    triple = alg.phi_s_image(rep, s, 1, 0, ctx)
    return _burnside(triple.operators(), rep.dim, cap)


def drinfeld_polynomial(spec: mod.ModuleSpec,
                        ctx: core.QContext) -> num.Polynomial:
    """lambda^ell0 times (lambda + zeta) over every q-string element zeta."""
    roots = [zeta for string in _factor_strings(spec, ctx)
             for zeta in string.elements]
    return num.poly_from_roots(roots, spec.ell0)


def _identified_power(rep: alg.Representation, space: la.Subspace,
                      steps: int, t: Fraction,
                      twisted: la.Matrix) -> la.Matrix:
    """e1p^steps (e0p + t e1m k1)^steps on U_i, in U_i coordinates."""
    columns = []
    for vector in space.basis:
        for _ in range(steps):
            vector = tuple(a + t * b for a, b in
                           zip(rep['e0p'].apply(vector),
                               twisted.apply(vector)))
        for _ in range(steps):
            vector = rep['e1p'].apply(vector)
        columns.append(space.coordinates(vector))
    return la.Matrix.from_columns(columns, space.dim)


def exceptional_polynomials(rep: alg.Representation,
                            ctx: core.QContext) -> List[num.Polynomial]:
    """The polynomials p_i(t), 0 <= i <= d/2, of a type (1,1) module.

    p_i(t) is the determinant of (e0p + t e1m k1)^(d-2i) from U_i to
    U_(d-i), with U_(d-i) identified with U_i through e1p^(d-2i). Its
    degree is (d-2i) dim U_i.

    :raises TypeNormalizationError: unless the module has type (1,1); use
        :func:`qaffine.modules.normalize_type` first
    """
    if (rep['k0'] @ rep['k1']).scalar_value() != 1:
        raise mod.TypeNormalizationError('k0 k1 must act as the identity')
    layers = mod.weight_decomposition(rep, ctx)
    if layers.s0 != 1:
        raise mod.TypeNormalizationError(f'Expected s0 = 1, got {layers.s0}')
    twisted = rep['e1m'] @ rep['k1']
    result = []
    for i in range(layers.d // 2 + 1):
        steps = layers.d - 2 * i
        space = layers.layer(i)
        degree = steps * space.dim
        if degree == 0:
            result.append(num.Polynomial(1))
            continue
        samples = [(t, la.determinant(_identified_power(
            rep, space, steps, Fraction(t), twisted)))
                   for t in range(degree + 1)]
        result.append(num.poly_interpolate(samples))
    LOGGER.debug('exceptional polynomial degrees %s',
                 [p.degree for p in result])
    return result


def is_exceptional_parameter(rep: alg.Representation, s: Any,
                             ctx: core.QContext) -> bool:
    """True if some exceptional polynomial vanishes at t = s^-2."""
    s = core.nonzero_scalar(s, 's')
    t = 1 / (s * s)
    return any(p(t) == 0 for p in exceptional_polynomials(rep, ctx))


def invariant_subspace_witness(
        rep: alg.Representation) -> Optional[la.Subspace]:
    """Search for a proper nonzero invariant subspace.

    Candidates are the closures of the e1m-lowest and e1p-highest weight
    vectors, then of the standard basis vectors.

    :return: the first proper invariant subspace found, or None
    """
    operators = rep.operators()
    seeds = list(la.kernel(rep['e1m']).basis)
    seeds.extend(la.kernel(rep['e1p']).basis)
    seeds.extend(la.Subspace.standard_vector(rep.dim, i)
                 for i in range(rep.dim))
    for seed in seeds:
        closure = la.subspace_closure(la.Subspace(rep.dim, seed), operators)
        if 0 < closure.dim < rep.dim:
            LOGGER.debug('found an invariant subspace of dimension %d',
                         closure.dim)
            return closure
    return None


def generates_lowest_weight(rep: alg.Representation, vector: Sequence[Any],
                            lowest: Sequence[Any]) -> bool:
    """True if the submodule generated by vector contains lowest."""
    closure = la.subspace_closure(la.Subspace(rep.dim, vector),
                                  rep.operators())
    return closure.contains(lowest)
