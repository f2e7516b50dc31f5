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
"""Generators, defining relations, coproduct and the TD-algebra embedding.

A representation is stored as one matrix per generator of the loop-like
algebra generated by e0p, e1p, e1m and the k's; e0m is deliberately not a
generator. All relation checks compare exact matrices and report failures
as data.
"""

__all__ = ['GENERATORS', 'MalformedRepresentationError',
           'UnsupportedEmbeddingError', 'Representation', 'RelationCheck',
           'RelationReport', 'TDTriple', 'bracket', 'qbracket', 'serre',
           'td_delta', 'check_uprime_relations', 'check_uqsl2_relations',
           'uqsl2_module', 'coproduct_tensor', 'phi_s_image',
           'check_td_relations', 'compare']

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple, \
    Union

import qaffine.core as core
import qaffine.linalg as la
import qaffine.numbers as num

LOGGER = logging.getLogger(__name__)

GENERATORS = ('e0p', 'e1p', 'e1m', 'k0', 'k0inv', 'k1', 'k1inv')


class MalformedRepresentationError(core.QAffineError):
    """Error raised when a representation is missing generators or has
    matrices of the wrong size."""


class UnsupportedEmbeddingError(core.QAffineError):
    """Error raised when the embedding needs e0m, which is not available."""


class Representation:
    """A finite-dimensional module given by its generator matrices.

    :param dim: dimension of the module
    :param action: a dim x dim matrix for every name in GENERATORS
    """

    @classmethod
    def trivial(cls) -> 'Representation':
        """The one-dimensional module with all e's zero and all k's one."""
        return cls(1, {name: la.Matrix([[1 if name.startswith('k') else 0]])
                       for name in GENERATORS})

    @classmethod
    def from_json(cls, data: Any) -> 'Representation':
        """Parse {"dim": n, "action": {...}}; a "q" entry is ignored here."""
        if not isinstance(data, dict):
            raise MalformedRepresentationError('A representation must be a '
                                               'JSON object')
        try:
            dim = data['dim']
            action = data['action']
        except KeyError as error:
            raise MalformedRepresentationError(
                f'Missing key {error} in representation'
            ) from None
        if not isinstance(dim, int) or isinstance(dim, bool) or \
                not isinstance(action, dict):
            raise MalformedRepresentationError('"dim" must be an integer and '
                                               '"action" an object')
        try:
            matrices = {name: la.Matrix.from_json(value)
                        for name, value in action.items()}
        except la.DimensionMismatchError as error:
            raise MalformedRepresentationError(str(error)) from None
        return cls(dim, matrices)

    @property
    def dim(self) -> int:
        """Dimension of the module."""
        return self._dim

    @property
    def action(self) -> Dict[str, la.Matrix]:
        """A copy of the generator-to-matrix map."""
        return dict(self._action)

    def __init__(self, dim: int, action: Mapping[str, la.Matrix]) -> None:
        if dim < 1:
            raise MalformedRepresentationError(f'Dimension must be positive, '
                                               f'got {dim}')
        missing = [name for name in GENERATORS if name not in action]
        unknown = [name for name in action if name not in GENERATORS]
        if missing or unknown:
            raise MalformedRepresentationError(
                f'Bad generator set: missing {missing}, unknown {unknown}'
            )
        for name in GENERATORS:
            if action[name].shape != (dim, dim):
                raise MalformedRepresentationError(
                    f'{name} has shape {action[name].shape}, expected '
                    f'({dim}, {dim})'
                )
        self._dim = dim
        self._action = {name: action[name] for name in GENERATORS}

    def __repr__(self) -> str:
        return type(self).__name__ + f'({self._dim}, {self._action!r})'

    def __eq__(self, other: Any) -> Union[bool, 'NotImplemented']:
        if isinstance(other, Representation):
            # pylint: disable=protected-access
            result = (self._dim == other._dim
                      and self._action == other._action)
        else:
            result = NotImplemented
        return result

    def __hash__(self) -> int:
        return hash((self._dim,) + tuple(self._action.values()))

    def __getitem__(self, name: str) -> la.Matrix:
        return self._action[name]

    def replace(self, **matrices: la.Matrix) -> 'Representation':
        """A copy with some generator matrices replaced."""
        action = dict(self._action)
        action.update(matrices)
        return type(self)(self._dim, action)

    def operators(self) -> List[la.Matrix]:
        """All generator matrices in GENERATORS order."""
        return [self._action[name] for name in GENERATORS]

    def to_json(self, ctx: Optional[core.QContext] = None) -> Dict[str, Any]:
        """JSON form; q is included when a context is given."""
        result: Dict[str, Any] = {
            'dim': self._dim,
            'action': {name: matrix.to_json()
                       for name, matrix in self._action.items()},
        }
        if ctx is not None:
            result['q'] = core.scalar_str(ctx.q)
        return result


@dataclass(frozen=True)
class RelationCheck:
    # noinspection PyUnresolvedReferences
    """Outcome of checking one relation.

    :param name: stable name of the relation
    :param passed: True if both sides agree
    :param witness: first (row, col) where the sides differ
    """

    name: str
    passed: bool
    witness: Optional[Tuple[int, int]] = None

    def to_json(self) -> Dict[str, Any]:
        """{"relation": ..., "pass": ..., "witness": ...}."""
        return {'relation': self.name, 'pass': self.passed,
                'witness': None if self.witness is None
                else list(self.witness)}


@dataclass(frozen=True)
class RelationReport:
    # noinspection PyUnresolvedReferences
    """An ordered collection of relation checks.

    :param checks: the individual checks
    """

    checks: Tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        """True if every relation holds."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> Tuple[RelationCheck, ...]:
        """Checks that did not pass."""
        return tuple(check for check in self.checks if not check.passed)

    def __iter__(self) -> Iterator[RelationCheck]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __getitem__(self, name: str) -> RelationCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __add__(self, other: Any) -> Union['RelationReport',
                                           'NotImplemented']:
        if isinstance(other, RelationReport):
            result = RelationReport(self.checks + other.checks)
        else:
            result = NotImplemented
        return result

    def to_json(self) -> List[Dict[str, Any]]:
        """List of per-relation objects."""
        return [check.to_json() for check in self.checks]


@dataclass(frozen=True)
class TDTriple:
    # noinspection PyUnresolvedReferences
    """Images of the TD-algebra generators x, y, k and k^-1.

    :param x: image of x
    :param y: image of y
    :param k: image of k
    :param kinv: image of k^-1
    :param s: embedding parameter
    :param eps: the epsilon of the relations, 0 or 1
    :param eps_star: the dual epsilon, 0 or 1
    """

    x: la.Matrix
    y: la.Matrix
    k: la.Matrix
    kinv: la.Matrix
    s: Fraction = Fraction(1)
    eps: int = 1
    eps_star: int = 0

    def __post_init__(self) -> None:
        if self.eps not in (0, 1) or self.eps_star not in (0, 1):
            raise core.InvalidParameterError(
                f'eps and eps_star must be 0 or 1, got {self.eps} and '
                f'{self.eps_star}'
            )

    def operators(self) -> List[la.Matrix]:
        """x, y, k and k^-1."""
        return [self.x, self.y, self.k, self.kinv]

    def to_json(self) -> Dict[str, Any]:
        """JSON form of the four matrices and the parameters."""
        return {'x': self.x.to_json(), 'y': self.y.to_json(),
                'k': self.k.to_json(), 'kinv': self.kinv.to_json(),
                's': core.scalar_str(self.s), 'eps': self.eps,
                'eps_star': self.eps_star}


def bracket(a: la.Matrix, b: la.Matrix) -> la.Matrix:
    """Commutator ab - ba."""
    return a @ b - b @ a


def qbracket(a: la.Matrix, b: la.Matrix, ctx: core.QContext,
             power: int = 1) -> la.Matrix:
    """q-commutator q^power ab - q^-power ba.

    :param power: use -1 for the q^-1 bracket
    """
    return (a @ b) * ctx.power(power) - (b @ a) * ctx.power(-power)


def serre(a: la.Matrix, b: la.Matrix, ctx: core.QContext) -> la.Matrix:
    """The cubic bracket [a, [a, [a, b]_q]_{q^-1}]."""
    return bracket(a, qbracket(a, qbracket(a, b, ctx), ctx, -1))


def td_delta(ctx: core.QContext) -> Fraction:
    """The structure constant of the cubic TD relations."""
    result = -ctx.power(4)
    for t in range(1, 4):
        result *= ctx.power(t) - ctx.power(-t)
    return result


def compare(name: str, left: la.Matrix, right: la.Matrix) -> RelationCheck:
    """Check left == right, recording the first differing entry."""
    witness = left.first_difference(right)
    return RelationCheck(name, witness is None, witness)


def check_uprime_relations(rep: Representation, ctx: core.QContext,
                           loop: bool = False) -> RelationReport:
    """Check the defining relations of U'_q on a representation.

    :param loop: also require k0 k1 = 1
    """
    e0p, e1p, e1m = rep['e0p'], rep['e1p'], rep['e1m']
    k0, k0inv, k1, k1inv = rep['k0'], rep['k0inv'], rep['k1'], rep['k1inv']
    identity = la.Matrix.identity(rep.dim)
    q2, qm2 = ctx.power(2), ctx.power(-2)

    checks = [
        compare('k0k1=k1k0', k0 @ k1, k1 @ k0),
        compare('k0 k0inv=1', k0 @ k0inv, identity),
        compare('k0inv k0=1', k0inv @ k0, identity),
        compare('k1 k1inv=1', k1 @ k1inv, identity),
        compare('k1inv k1=1', k1inv @ k1, identity),
        compare('k0 e0p k0inv=q^2 e0p', k0 @ e0p @ k0inv, e0p * q2),
        compare('k0 e1p k0inv=q^-2 e1p', k0 @ e1p @ k0inv, e1p * qm2),
        compare('k0 e1m k0inv=q^2 e1m', k0 @ e1m @ k0inv, e1m * q2),
        compare('k1 e0p k1inv=q^-2 e0p', k1 @ e0p @ k1inv, e0p * qm2),
        compare('k1 e1p k1inv=q^2 e1p', k1 @ e1p @ k1inv, e1p * q2),
        compare('k1 e1m k1inv=q^-2 e1m', k1 @ e1m @ k1inv, e1m * qm2),
        compare('[e1p,e1m]=(k1-k1inv)/(q-q^-1)', bracket(e1p, e1m),
                 (k1 - k1inv) * (1 / (ctx.q - 1 / ctx.q))),
        compare('[e0p,e1m]=0', bracket(e0p, e1m), identity * 0),
        compare('serre(e0p,e1p)=0', serre(e0p, e1p, ctx), identity * 0),
        compare('serre(e1p,e0p)=0', serre(e1p, e0p, ctx), identity * 0),
    ]
    if loop:
        checks.append(compare('k0k1=1', k0 @ k1, identity))

    result = RelationReport(tuple(checks))
    LOGGER.debug('checked %d relations on a %d-dimensional module: %s',
                 len(result), rep.dim, 'pass' if result.passed else 'fail')
    return result


def check_uqsl2_relations(x_plus: la.Matrix, x_minus: la.Matrix,
                          k: la.Matrix, kinv: la.Matrix,
                          ctx: core.QContext) -> RelationReport:
    """Check the relations of U_q(sl2) on four matrices."""
    identity = la.Matrix.identity(k.rows)
    checks = (
        compare('K Kinv=1', k @ kinv, identity),
        compare('Kinv K=1', kinv @ k, identity),
        compare('K X+ Kinv=q^2 X+', k @ x_plus @ kinv,
                 x_plus * ctx.power(2)),
        compare('K X- Kinv=q^-2 X-', k @ x_minus @ kinv,
                 x_minus * ctx.power(-2)),
        compare('[X+,X-]=(K-Kinv)/(q-q^-1)', bracket(x_plus, x_minus),
                 (k - kinv) * (1 / (ctx.q - 1 / ctx.q))),
    )
    return RelationReport(checks)


def uqsl2_module(n: int, ctx: core.QContext) \
        -> Tuple[la.Matrix, la.Matrix, la.Matrix, la.Matrix]:
    """The (n+1)-dimensional irreducible U_q(sl2) module of type 1.

    :return: X+, X-, K and K^-1 on the basis x_0 ... x_n
    """
    if n < 0:
        raise core.InvalidParameterError(f'n must be nonnegative, got {n}')
    size = n + 1
    x_plus = [[0] * size for _ in range(size)]
    x_minus = [[0] * size for _ in range(size)]
    for i in range(size):
        if i > 0:
            x_plus[i - 1][i] = num.q_int(n - i + 1, ctx)
        if i < n:
            x_minus[i + 1][i] = num.q_int(i + 1, ctx)
    k = la.Matrix.diagonal([ctx.power(n - 2 * i) for i in range(size)])
    kinv = la.Matrix.diagonal([ctx.power(2 * i - n) for i in range(size)])
    return la.Matrix(x_plus), la.Matrix(x_minus), k, kinv


def coproduct_tensor(a: Representation, b: Representation,
                     ctx: core.QContext) -> Representation:
    """The tensor product module a (x) b through the coproduct.

    Basis vector (i, j) of the product sits at index i * b.dim + j.
    """
    one_a = la.Matrix.identity(a.dim)
    one_b = la.Matrix.identity(b.dim)
    action = {
        'e0p': a['k0'].kron(b['e0p']) + a['e0p'].kron(one_b),
        'e1p': a['k1'].kron(b['e1p']) + a['e1p'].kron(one_b),
        'e1m': one_a.kron(b['e1m']) + a['e1m'].kron(b['k1inv']),
    }
    for name in ('k0', 'k0inv', 'k1', 'k1inv'):
        action[name] = a[name].kron(b[name])
    LOGGER.debug('tensor product of dimensions %d and %d at q=%s',
                 a.dim, b.dim, ctx)
    return Representation(a.dim * b.dim, action)


def phi_s_image(rep: Representation, s: Any, eps: int, eps_star: int,
                ctx: core.QContext) -> TDTriple:
    """Pull a representation back along the embedding with parameter s.

    :param s: nonzero embedding parameter
    :param eps: 1 for the q-Onsager-like case, 0 to drop the e1m term
    :param eps_star: must be 0; the dual term needs e0m
    """
    s = core.nonzero_scalar(s, 's')
    if eps_star == 1:
        raise UnsupportedEmbeddingError('eps_star = 1 needs e0m, which '
                                        'this algebra does not contain')
    if eps not in (0, 1) or eps_star != 0:
        raise core.InvalidParameterError(f'Unsupported (eps, eps_star) = '
                                         f'({eps}, {eps_star})')

    q = ctx.q
    scale = -(q - 1 / q) ** 2 / q
    x = rep['e0p'] * s
    if eps:
        x = x + rep['e1m'] @ rep['k1'] * (1 / s)
    return TDTriple(x=x * scale, y=rep['e1p'] * (1 / s), k=rep['k0'] * s,
                    kinv=rep['k0inv'] * (1 / s), s=s, eps=eps,
                    eps_star=eps_star)


def check_td_relations(triple: TDTriple,
                       ctx: core.QContext) -> RelationReport:
    """Check the TD-algebra relations on the images of x, y, k and k^-1."""
    x, y, k, kinv = triple.x, triple.y, triple.k, triple.kinv
    identity = la.Matrix.identity(k.rows)
    delta = td_delta(ctx)
    k2, km2 = k @ k, kinv @ kinv

    x_side = (x @ x @ k2) * triple.eps_star - (km2 @ x @ x) * triple.eps
    y_side = (y @ y @ km2) * triple.eps - (k2 @ y @ y) * triple.eps_star
    checks = (
        compare('k kinv=1', k @ kinv, identity),
        compare('kinv k=1', kinv @ k, identity),
        compare('k x kinv=q^2 x', k @ x @ kinv, x * ctx.power(2)),
        compare('k y kinv=q^-2 y', k @ y @ kinv, y * ctx.power(-2)),
        compare('serre(x,y)=delta(eps* x^2 k^2-eps k^-2 x^2)',
                 serre(x, y, ctx), x_side * delta),
        compare('serre(y,x)=delta(eps y^2 k^-2-eps* k^2 y^2)',
                 serre(y, x, ctx), y_side * delta),
    )
    return RelationReport(checks)
