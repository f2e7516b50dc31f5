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
"""Clebsch-Gordan decompositions and the intertwiner swapping
V(l,a) (x) V(m) and V(m) (x) V(l,a).

Both sides split into components V~(n), n = l+m-2nu, each spanned by a
lowest weight vector and its images under e1p. The intertwiner is the sum
over nu of alpha_nu times the map matching the two raised bases of V~(n).
"""

__all__ = ['DecompositionError', 'CGComponent', 'CGDecomposition',
           'Intertwiner', 'cg_lowest_weight', 'cg_lowest_weight_primed',
           'cg_decompose', 'check_lemma5', 'check_lemma6',
           'check_primed_ladder', 'coefficient_alpha', 'build_Rn',
           'build_intertwiner', 'check_intertwining', 'verify_intertwiner',
           'intertwiner_space', 'find_isomorphism']

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from typing_extensions import Literal

import qaffine.algebra as alg
import qaffine.core as core
import qaffine.linalg as la
import qaffine.modules as mod
import qaffine.numbers as num

LOGGER = logging.getLogger(__name__)

Side = Literal['source', 'target']


class DecompositionError(core.QAffineError):
    """Error raised when the components do not span the tensor product."""


@dataclass(frozen=True)
class CGComponent:
    # noinspection PyUnresolvedReferences
    """One component V~(n) of a Clebsch-Gordan decomposition.

    :param n: highest weight of the component
    :param nu: index with n = l + m - 2 nu
    :param lowest: the lowest weight vector
    :param basis: lowest, e1p lowest, ..., e1p^n lowest
    """

    n: int
    nu: int
    lowest: la.Vector
    basis: Tuple[la.Vector, ...]


@dataclass(frozen=True)
class CGDecomposition:
    # noinspection PyUnresolvedReferences
    """All components of V(l,a) (x) V(m) or of V(m) (x) V(l,a).

    :param l: highest weight of the evaluation factor
    :param m: highest weight of the untwisted factor
    :param a: evaluation parameter
    :param side: 'source' for V(l,a) (x) V(m), 'target' for the swap
    :param components: one component per nu, by increasing nu
    """

    l: int
    m: int
    a: Fraction
    side: str
    components: Tuple[CGComponent, ...]

    @property
    def nu_max(self) -> int:
        """min(l, m)."""
        return min(self.l, self.m)

    @property
    def dims(self) -> Tuple[int, ...]:
        """Component dimensions n + 1."""
        return tuple(len(c.basis) for c in self.components)

    def change_of_basis(self) -> la.Matrix:
        """Columns are the component bases, component by component."""
        return la.Matrix.from_columns(
            [v for c in self.components for v in c.basis]
        )


def _check_parameters(l: int, m: int, a: Any) -> Fraction:
    if l < 1 or m < 1:
        raise core.InvalidParameterError(f'l and m must be positive, got '
                                         f'{l} and {m}')
    return core.nonzero_scalar(a, 'a')


def _check_nu(l: int, m: int, nu: int) -> None:
    if not 0 <= nu <= min(l, m):
        raise core.InvalidParameterError(f'nu must lie in [0, {min(l, m)}], '
                                         f'got {nu}')


def source_factors(l: int, m: int, a: Fraction) -> Tuple[mod.Factor, ...]:
    """Factors of V(l,a) (x) V(m)."""
    return (l, a), (m, Fraction(0))


def target_factors(l: int, m: int, a: Fraction) -> Tuple[mod.Factor, ...]:
    """Factors of V(m) (x) V(l,a)."""
    return (m, Fraction(0)), (l, a)


@lru_cache(maxsize=None)
def _module(factors: Tuple[mod.Factor, ...],
            ctx: core.QContext) -> alg.Representation:
    return mod.tensor_product(factors, ctx)


def _lowest(first: int, second: int, nu: int,
            ctx: core.QContext) -> la.Vector:
    """Lowest weight vector of V~(first+second-2nu) in V(first) (x)
    V(second)."""
    vector = [Fraction(0)] * ((first + 1) * (second + 1))
    for j in range(nu + 1):
        coefficient = (ctx.power(j * (second - j + 1))
                       * num.q_fact(first - nu + j, ctx)
                       * num.q_fact(second - j, ctx))
        index = (first - nu + j) * (second + 1) + second - j
        vector[index] = -coefficient if j % 2 else coefficient
    return tuple(vector)


def cg_lowest_weight(l: int, m: int, a: Any, nu: int,
                     ctx: core.QContext) -> la.Vector:
    """The lowest weight vector x~_n of V(l,a) (x) V(m), n = l+m-2nu."""
    _check_parameters(l, m, a)
    _check_nu(l, m, nu)
    return _lowest(l, m, nu, ctx)


def cg_lowest_weight_primed(l: int, m: int, a: Any, nu: int,
                            ctx: core.QContext) -> la.Vector:
    """The lowest weight vector x~'_n of V(m) (x) V(l,a), n = l+m-2nu."""
    _check_parameters(l, m, a)
    _check_nu(l, m, nu)
    return _lowest(m, l, nu, ctx)


def cg_decompose(l: int, m: int, a: Any, side: Side,
                 ctx: core.QContext) -> CGDecomposition:
    """Split one side into components by raising lowest weight vectors."""
    a = _check_parameters(l, m, a)
    if side == 'source':
        rep = _module(source_factors(l, m, a), ctx)
        lowest = cg_lowest_weight
    elif side == 'target':
        rep = _module(target_factors(l, m, a), ctx)
        lowest = cg_lowest_weight_primed
    else:
        raise core.InvalidParameterError(f"side must be 'source' or "
                                         f"'target', got {side!r}")

    components = []
    for nu in range(min(l, m) + 1):
        n = l + m - 2 * nu
        vector = lowest(l, m, a, nu, ctx)
        basis = [vector]
        for _ in range(n):
            vector = rep['e1p'].apply(vector)
            basis.append(vector)
        if not any(basis[-1]) or any(rep['e1p'].apply(basis[-1])):
            raise DecompositionError(f'Raising x~_{n} does not give a '
                                     f'{n + 1}-dimensional string')
        components.append(CGComponent(n, nu, basis[0], tuple(basis)))

    result = CGDecomposition(l, m, a, side, tuple(components))
    if la.rank(result.change_of_basis()) != rep.dim:
        raise DecompositionError(f'Components {result.dims} do not span the '
                                 f'{rep.dim}-dimensional {side} side')
    return result


def _column(vector: Sequence[Any]) -> la.Matrix:
    return la.Matrix.from_columns([vector])


def _ladder_report(l: int, m: int, a: Fraction, ctx: core.QContext,
                   operator: la.Matrix, lowest: Any,
                   factor: Any) -> alg.RelationReport:
    """Check operator x_n == factor(n) x_(n+2) down the whole ladder."""
    checks = [alg.compare(f'x_{l + m}->0',
                          _column(operator.apply(lowest(l, m, a, 0, ctx))),
                          _column([0] * operator.rows))]
    for nu in range(1, min(l, m) + 1):
        n = l + m - 2 * nu
        left = operator.apply(lowest(l, m, a, nu, ctx))
        right = [factor(n) * v for v in lowest(l, m, a, nu - 1, ctx)]
        checks.append(alg.compare(f'x_{n}->x_{n + 2}', _column(left),
                                  _column(right)))
    return alg.RelationReport(tuple(checks))


def check_lemma5(l: int, m: int, a: Any,
                 ctx: core.QContext) -> alg.RelationReport:
    """e0p x~_n = a q x~_(n+2) on V(l,a) (x) V(m); the top vector is
    killed."""
    a = _check_parameters(l, m, a)
    rep = _module(source_factors(l, m, a), ctx)
    return _ladder_report(l, m, a, ctx, rep['e0p'], cg_lowest_weight,
                          lambda n: a * ctx.q)


def check_lemma6(l: int, m: int, a: Any,
                 ctx: core.QContext) -> alg.RelationReport:
    """e0p x~'_n = -a q^(n+3) x~'_(n+2) on V(m) (x) V(l,a); the top vector
    is killed."""
    a = _check_parameters(l, m, a)
    rep = _module(target_factors(l, m, a), ctx)
    return _ladder_report(l, m, a, ctx, rep['e0p'], cg_lowest_weight_primed,
                          lambda n: -a * ctx.q * ctx.power(n + 2))


def check_primed_ladder(l: int, m: int, a: Any,
                        ctx: core.QContext) -> alg.RelationReport:
    """(e1m (x) 1) x~'_n = x~'_(n+2) on V(m) (x) V(l,a)."""
    a = _check_parameters(l, m, a)
    lowering = mod.evaluation_module(m, 0, ctx)['e1m'].kron(
        la.Matrix.identity(l + 1))
    return _ladder_report(l, m, a, ctx, lowering, cg_lowest_weight_primed,
                          lambda n: 1)


def coefficient_alpha(l: int, m: int, nu: int,
                      ctx: core.QContext) -> Fraction:
    """alpha_nu = (-1)^nu q^(-nu(l+m-nu+1)), so alpha_0 = 1."""
    _check_nu(l, m, nu)
    value = ctx.power(-nu * (l + m - nu + 1))
    return -value if nu % 2 else value


@lru_cache(maxsize=None)
def _decompositions(l: int, m: int, a: Fraction, ctx: core.QContext) \
        -> Tuple[CGDecomposition, CGDecomposition, la.Matrix]:
    source = cg_decompose(l, m, a, 'source', ctx)
    target = cg_decompose(l, m, a, 'target', ctx)
    return source, target, la.mat_inverse(source.change_of_basis())


def build_Rn(l: int, m: int, a: Any, nu: int,
             ctx: core.QContext) -> la.Matrix:
    """The map sending the raised basis of V~(n) on the source side to the
    raised basis of V~(n) on the target side and killing every other
    component."""
    # pylint: disable=invalid-name
    a = _check_parameters(l, m, a)
    _check_nu(l, m, nu)
    source, target, inverse = _decompositions(l, m, a, ctx)
    dim = (l + 1) * (m + 1)
    columns: List[Sequence[Any]] = []
    for component, image in zip(source.components, target.components):
        if component.nu == nu:
            columns.extend(image.basis)
        else:
            columns.extend([[0] * dim] * len(component.basis))
    return la.Matrix.from_columns(columns) @ inverse


@dataclass(frozen=True)
class Intertwiner:
    # noinspection PyUnresolvedReferences
    """A map from V(l,a) (x) V(m) to V(m) (x) V(l,a).

    :param l: highest weight of the evaluation factor
    :param m: highest weight of the untwisted factor
    :param a: evaluation parameter
    :param R: the matrix of the map
    :param alphas: the coefficients of the component maps
    """

    # pylint: disable=invalid-name
    l: int
    m: int
    a: Fraction
    R: la.Matrix
    alphas: Tuple[Fraction, ...]

    @property
    def source(self) -> Tuple[mod.Factor, ...]:
        """Factors of the domain."""
        return source_factors(self.l, self.m, self.a)

    @property
    def target(self) -> Tuple[mod.Factor, ...]:
        """Factors of the codomain."""
        return target_factors(self.l, self.m, self.a)

    def to_json(self) -> Dict[str, Any]:
        """{"l", "m", "a", "alphas", "R"}."""
        return {'l': self.l, 'm': self.m, 'a': core.scalar_str(self.a),
                'alphas': [core.scalar_str(v) for v in self.alphas],
                'R': self.R.to_json()}


def build_intertwiner(l: int, m: int, a: Any,
                      ctx: core.QContext) -> Intertwiner:
    """R = sum over nu of alpha_nu R_(l+m-2nu)."""
    a = _check_parameters(l, m, a)
    alphas = tuple(coefficient_alpha(l, m, nu, ctx)
                   for nu in range(min(l, m) + 1))
    matrix = la.Matrix.zeros((l + 1) * (m + 1))
    for nu, alpha in enumerate(alphas):
        matrix = matrix + build_Rn(l, m, a, nu, ctx) * alpha
    LOGGER.debug('built the %dx%d intertwiner for l=%d, m=%d, a=%s',
                 matrix.rows, matrix.cols, l, m, a)
    return Intertwiner(l, m, a, matrix, alphas)


def check_intertwining(matrix: la.Matrix, source: alg.Representation,
                       target: alg.Representation) -> alg.RelationReport:
    """Check matrix source(xi) = target(xi) matrix for every generator and
    that the matrix is nonzero."""
    checks = [alg.compare(f'R {name}={name} R', matrix @ source[name],
                          target[name] @ matrix)
              for name in alg.GENERATORS]
    checks.append(alg.RelationCheck('R!=0', not matrix.is_zero))
    return alg.RelationReport(tuple(checks))


def verify_intertwiner(intertwiner: Intertwiner,
                       ctx: core.QContext) -> alg.RelationReport:
    """Check that R commutes with the action of every generator."""
    return check_intertwining(intertwiner.R,
                              _module(intertwiner.source, ctx),
                              _module(intertwiner.target, ctx))


def intertwiner_space(source: alg.Representation,
                      target: alg.Representation) -> la.Subspace:
    """All X with X source(xi) = target(xi) X, as row-major flattened
    matrices."""
    if source.dim != target.dim:
        raise la.DimensionMismatchError(
            f'Dimensions differ: {source.dim} and {target.dim}'
        )
    n = source.dim
    rows = []
    for name in alg.GENERATORS:
        columns = [[(k, v) for k, v in enumerate(column) if v != 0]
                   for column in source[name].transpose()]
        lines = [[(k, v) for k, v in enumerate(line) if v != 0]
                 for line in target[name]]
        for i in range(n):
            for j in range(n):
                row: Dict[int, Fraction] = {}
                for k, value in columns[j]:
                    row[i * n + k] = row.get(i * n + k, Fraction(0)) + value
                for k, value in lines[i]:
                    row[k * n + j] = row.get(k * n + j, Fraction(0)) - value
                row = {index: v for index, v in row.items() if v != 0}
                if row:
                    rows.append(row)
    result = la.kernel_of_rows(rows, n * n)
    LOGGER.debug('intertwiner space of dimension %d from %d equations',
                 result.dim, len(rows))
    return result


def _combine(basis: Sequence[la.Vector],
             weights: Sequence[int]) -> la.Vector:
    return tuple(sum((w * v[i] for w, v in zip(weights, basis)),
                     Fraction(0))
                 for i in range(len(basis[0])))


def find_isomorphism(source: alg.Representation,
                     target: alg.Representation,
                     attempts: int = 32,
                     seed: int = 0) -> Optional[la.Matrix]:
    """An invertible intertwiner from source to target, or None.

    The basis of the intertwiner space is tried first, then random integer
    combinations with coefficients in [-8n, 8n]. If the space holds an
    invertible map, each random combination is singular with probability
    at most 1/16, so None is wrong with probability below 16^-attempts.
    The seed makes the search reproducible.
    """
    if source.dim != target.dim:
        return None
    space = intertwiner_space(source, target)
    n = source.dim
    for vector in space.basis:
        candidate = la.Matrix.from_flat(n, n, vector)
        if la.determinant(candidate) != 0:
            return candidate

    if space.dim > 1:
        rng = random.Random(seed)
        bound = 8 * n
        for _ in range(attempts):
            weights = [rng.randint(-bound, bound) for _ in space.basis]
            candidate = la.Matrix.from_flat(n, n,
                                            _combine(space.basis, weights))
            if la.determinant(candidate) != 0:
                return candidate
    LOGGER.debug('no invertible intertwiner in a space of dimension %d',
                 space.dim)
    return None
