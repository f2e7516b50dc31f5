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
"""Evaluation modules, their tensor products and weight layers."""

__all__ = ['InvalidSpecError', 'WeightDecompositionError',
           'TypeNormalizationError', 'ModuleSpec', 'WeightDecomposition',
           'evaluation_module', 'tensor_product', 'build',
           'weight_decomposition', 'twist_k0', 'twist_sign',
           'normalize_type']

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Tuple

import qaffine.algebra as alg
import qaffine.core as core
import qaffine.linalg as la
import qaffine.numbers as num

LOGGER = logging.getLogger(__name__)

Factor = Tuple[int, Fraction]


class InvalidSpecError(core.QAffineError, ValueError):
    """Error raised for a malformed module spec."""


class WeightDecompositionError(core.QAffineError):
    """Error raised when k0 does not split the module into a q^2-chain of
    weight spaces."""


class TypeNormalizationError(core.QAffineError):
    """Error raised when a module cannot be twisted into type (1,1)."""


@dataclass(frozen=True)
class ModuleSpec:
    # noinspection PyUnresolvedReferences
    """The tensor product V(ell0) (x) V(l_1, a_1) (x) ... (x) V(l_n, a_n).

    :param ell0: highest weight of the untwisted factor, possibly 0
    :param factors: (l_i, a_i) pairs with l_i >= 1 and a_i != 0
    """

    ell0: int = 0
    factors: Tuple[Factor, ...] = ()

    @classmethod
    def from_json(cls, data: Any) -> 'ModuleSpec':
        """Parse {"ell0": k, "factors": [[l, "a"], ...]}."""
        if not isinstance(data, dict):
            raise InvalidSpecError('A module spec must be a JSON object')
        unknown = set(data) - {'ell0', 'factors'}
        if unknown:
            raise InvalidSpecError(f'Unknown spec keys: {sorted(unknown)}')
        factors = data.get('factors', [])
        if not isinstance(factors, list) or \
                any(not isinstance(f, list) or len(f) != 2 for f in factors):
            raise InvalidSpecError('"factors" must be a list of [l, a] pairs')
        try:
            parsed = tuple((f[0], core.parse_scalar(f[1])) for f in factors)
        except core.InvalidParameterError as error:
            raise InvalidSpecError(str(error)) from None
        return cls(data.get('ell0', 0), parsed)

    @property
    def dim(self) -> int:
        """Dimension of the built module."""
        result = self.ell0 + 1
        for ell, _ in self.factors:
            result *= ell + 1
        return result

    @property
    def diameter(self) -> int:
        """Number of weight layers minus one."""
        return self.ell0 + sum(ell for ell, _ in self.factors)

    def __post_init__(self) -> None:
        if not _is_int(self.ell0) or self.ell0 < 0:
            raise InvalidSpecError(f'ell0 must be a nonnegative integer, got '
                                   f'{self.ell0!r}')
        factors = []
        for factor in self.factors:
            try:
                ell, a = factor
                a = core.parse_scalar(a)
            except (TypeError, ValueError):
                raise InvalidSpecError(f'Bad factor {factor!r}') from None
            if not _is_int(ell) or ell < 1:
                raise InvalidSpecError(f'Factor highest weights must be '
                                       f'positive integers, got {ell!r}')
            if a == 0:
                raise InvalidSpecError('Factor parameters must be nonzero; '
                                       'use ell0 for the untwisted factor')
            factors.append((ell, a))
        object.__setattr__(self, 'factors', tuple(factors))

    def __str__(self) -> str:
        parts = [f'V({self.ell0})']
        parts.extend(f'V({ell},{core.scalar_str(a)})'
                     for ell, a in self.factors)
        return '⊗'.join(parts)

    def canonical(self) -> 'ModuleSpec':
        """The same spec with factors sorted; equal for isomorphic
        irreducible products."""
        return type(self)(self.ell0, tuple(sorted(self.factors)))

    def tensor_factors(self) -> List[Factor]:
        """All factors including (ell0, 0), in build order."""
        return [(self.ell0, Fraction(0))] + list(self.factors)

    def to_json(self) -> Dict[str, Any]:
        """JSON form with scalars as strings."""
        return {'ell0': self.ell0,
                'factors': [[ell, core.scalar_str(a)]
                            for ell, a in self.factors]}


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class WeightDecomposition:
    # noinspection PyUnresolvedReferences
    """Eigenspaces U_i of k0 with eigenvalue s0 q^(2i-d).

    :param d: diameter
    :param s0: central eigenvalue scale
    :param layers: (eigenvalue, eigenspace) for i = 0 .. d
    """

    d: int
    s0: Fraction
    layers: Tuple[Tuple[Fraction, la.Subspace], ...]

    @property
    def dims(self) -> Tuple[int, ...]:
        """Dimension of every layer."""
        return tuple(space.dim for _, space in self.layers)

    def layer(self, i: int) -> la.Subspace:
        """U_i; the zero subspace outside 0 .. d."""
        if 0 <= i <= self.d:
            result = self.layers[i][1]
        else:
            result = la.Subspace.zero(self.layers[0][1].ambient_dim)
        return result

    def to_json(self) -> Dict[str, Any]:
        """Diameter, s0 and the layer eigenvalues and dimensions."""
        return {'d': self.d, 's0': core.scalar_str(self.s0),
                'layers': [{'eigenvalue': core.scalar_str(theta),
                            'dim': space.dim}
                           for theta, space in self.layers]}


def evaluation_module(ell: int, a: Any,
                      ctx: core.QContext) -> alg.Representation:
    """The evaluation module V(ell, a) on the basis v_0 ... v_ell.

    :param ell: highest weight; 0 gives the trivial module
    :param a: evaluation parameter, 0 for the untwisted V(ell)
    """
    if not _is_int(ell) or ell < 0:
        raise core.InvalidParameterError(f'ell must be a nonnegative '
                                         f'integer, got {ell!r}')
    a = core.parse_scalar(a)
    if ell == 0:
        return alg.Representation.trivial()

    size = ell + 1
    e0p = [[Fraction(0)] * size for _ in range(size)]
    e1p = [[Fraction(0)] * size for _ in range(size)]
    e1m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        if i < ell:
            e0p[i + 1][i] = a * ctx.q * num.q_int(i + 1, ctx)
            e1m[i + 1][i] = num.q_int(i + 1, ctx)
        if i > 0:
            e1p[i - 1][i] = num.q_int(ell - i + 1, ctx)

    def weights(sign: int) -> la.Matrix:
        return la.Matrix.diagonal([ctx.power(sign * (2 * i - ell))
                                   for i in range(size)])

    return alg.Representation(size, {
        'e0p': la.Matrix(e0p), 'e1p': la.Matrix(e1p),
        'e1m': la.Matrix(e1m), 'k0': weights(1), 'k0inv': weights(-1),
        'k1': weights(-1), 'k1inv': weights(1),
    })


def tensor_product(factors: Iterable[Tuple[int, Any]],
                   ctx: core.QContext) -> alg.Representation:
    """Left-nested tensor product of evaluation modules.

    :param factors: ordered (ell, a) pairs, a = 0 allowed anywhere
    """
    result = None
    for ell, a in factors:
        module = evaluation_module(ell, a, ctx)
        result = module if result is None else \
            alg.coproduct_tensor(result, module, ctx)
    return alg.Representation.trivial() if result is None else result


def build(spec: ModuleSpec, ctx: core.QContext) -> alg.Representation:
    """The module described by a spec."""
    LOGGER.debug('building %s (dimension %d) at q=%s', spec, spec.dim, ctx)
    return tensor_product(spec.tensor_factors(), ctx)


def weight_decomposition(rep: alg.Representation,
                         ctx: core.QContext) -> WeightDecomposition:
    """Split a module into the k0-eigenspaces U_0 ... U_d.

    k0 must act diagonally in the working basis, which holds for every
    module this package builds.
    """
    k0 = rep['k0']
    if not k0.is_diagonal():
        raise WeightDecompositionError('k0 is not diagonal in the working '
                                       'basis')
    values = sorted({k0[i, i] for i in range(rep.dim)})
    reference = values[0]
    exponents = []
    for value in values:
        exponent = ctx.exponent_of(value / reference)
        if exponent is None:
            raise WeightDecompositionError(
                f'Eigenvalue {value} is not {reference} times a power of q'
            )
        exponents.append(exponent)
    low, high = min(exponents), max(exponents)
    if any((e - low) % 2 for e in exponents):
        raise WeightDecompositionError('Eigenvalues are not a single '
                                       'q^2-chain')

    d = (high - low) // 2
    s0 = reference * ctx.power((low + high) // 2)
    layers = tuple((s0 * ctx.power(2 * i - d),
                    la.eigenspace(k0, s0 * ctx.power(2 * i - d)))
                   for i in range(d + 1))
    result = WeightDecomposition(d, s0, layers)

    if sum(result.dims) != rep.dim:
        raise WeightDecompositionError('Weight spaces do not span the module')
    for name, shift in (('e0p', 1), ('e1m', 1), ('e1p', -1)):
        for i in range(d + 1):
            target = result.layer(i + shift)
            for vector in result.layer(i).basis:
                if not target.contains(rep[name].apply(vector)):
                    raise WeightDecompositionError(
                        f'{name} does not map U_{i} into U_{i + shift}'
                    )
    LOGGER.debug('weight layers %s with s0=%s', result.dims, s0)
    return result


def twist_k0(rep: alg.Representation, s: Any) -> alg.Representation:
    """Apply the automorphism k0 -> s k0."""
    s = core.nonzero_scalar(s, 's')
    return rep.replace(k0=rep['k0'] * s, k0inv=rep['k0inv'] * (1 / s))


def twist_sign(rep: alg.Representation) -> alg.Representation:
    """Apply the automorphism k_i -> -k_i, e1p -> -e1p."""
    return rep.replace(**{name: -rep[name]
                          for name in ('k0', 'k0inv', 'k1', 'k1inv', 'e1p')})


def normalize_type(rep: alg.Representation, ctx: core.QContext) \
        -> Tuple[alg.Representation, Fraction, int]:
    """Twist a module into type (1,1).

    :return: the twisted module, the k0 scale s that was removed and the
        sign (+1, or -1 if the sign automorphism was applied)
    """
    s = (rep['k0'] @ rep['k1']).scalar_value()
    if s is None:
        raise TypeNormalizationError('k0 k1 does not act as a scalar')

    result = twist_k0(rep, 1 / s)
    s0 = weight_decomposition(result, ctx).s0
    if s0 == -1:
        result, sign = twist_sign(result), -1
    elif s0 == 1:
        sign = 1
    else:
        raise TypeNormalizationError(f'k0 k1 = 1 but s0 = {s0}')
    return result, s, sign

