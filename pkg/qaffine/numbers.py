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
"""q-integers, q-factorials and exact univariate polynomials."""

__all__ = ['q_int', 'q_fact', 'Polynomial', 'RepeatedAbscissaError',
           'poly_from_roots', 'poly_interpolate']

from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from typing import Any, Iterable, List, Sequence, Tuple, Union

import qaffine.core as core

_SUPERSCRIPTS = str.maketrans('0123456789', '⁰¹²³⁴⁵⁶⁷⁸⁹')


@lru_cache(maxsize=None)
def q_int(t: int, ctx: core.QContext) -> core.Scalar:
    """The q-integer [t] = (q**t - q**-t) / (q - q**-1)."""
    return ((ctx.power(t) - ctx.power(-t))
            / (ctx.power(1) - ctx.power(-1)))


@lru_cache(maxsize=None)
def q_fact(t: int, ctx: core.QContext) -> core.Scalar:
    """The q-factorial [t]! = [t][t-1]...[1], with [0]! = 1."""
    if t < 0:
        raise core.InvalidParameterError(
            f'Cannot take the q-factorial of a negative number: {t}'
        )

    result = Fraction(1)
    for i in range(1, t + 1):
        result *= q_int(i, ctx)
    return result


class RepeatedAbscissaError(core.QAffineError):
    """Error raised when interpolating through two points with equal x."""


def _trim(coefficients: Iterable[Any]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class Polynomial:
    """An exact univariate polynomial over the rationals.

    :param coefficients: coefficients, lowest degree first; trailing zeros
        are dropped so that the zero polynomial has no coefficients
    """

    @classmethod
    def constant(cls, value: Any) -> 'Polynomial':
        """The constant polynomial with the given value."""
        return cls(value)

    @classmethod
    def monomial(cls, degree: int, coefficient: Any = 1) -> 'Polynomial':
        """The polynomial coefficient * x**degree."""
        return cls(*([0] * degree), coefficient)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients, lowest degree first."""
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        """Coefficient of the highest power, zero for the zero polynomial."""
        if self._coefficients:
            result = self._coefficients[-1]
        else:
            result = Fraction(0)
        return result

    def __init__(self, *coefficients: Any) -> None:
        self._coefficients = _trim(coefficients)

    def __call__(self, x: Any) -> Fraction:
        result = Fraction(0)
        for coefficient in reversed(self._coefficients):
            result = result * x + coefficient
        return result

    def __repr__(self) -> str:
        args = ', '.join(repr(c) for c in self._coefficients)
        return type(self).__name__ + f'({args})'

    def __str__(self) -> str:
        return self.format()

    def __eq__(self, other: Any) -> Union[bool, 'NotImplemented']:
        if isinstance(other, Polynomial):
            # pylint: disable=protected-access
            result = self._coefficients == other._coefficients
        elif isinstance(other, (int, Fraction)):
            result = self == Polynomial(other)
        else:
            result = NotImplemented
        return result

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._coefficients))

    def __add__(self, other: Any) -> Union['Polynomial', 'NotImplemented']:
        if isinstance(other, Polynomial):
            # pylint: disable=protected-access
            result = type(self)(*(a + b for a, b in zip_longest(
                self._coefficients, other._coefficients, fillvalue=0)))
        elif isinstance(other, (int, Fraction)):
            result = self + Polynomial(other)
        else:
            result = NotImplemented
        return result

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return type(self)(*(-c for c in self._coefficients))

    def __sub__(self, other: Any) -> Union['Polynomial', 'NotImplemented']:
        if isinstance(other, (Polynomial, int, Fraction)):
            result = self + (-other)
        else:
            result = NotImplemented
        return result

    def __mul__(self, other: Any) -> Union['Polynomial', 'NotImplemented']:
        if isinstance(other, Polynomial):
            # pylint: disable=protected-access
            if not self._coefficients or not other._coefficients:
                return type(self)()
            product = [Fraction(0)] * (len(self._coefficients)
                                       + len(other._coefficients) - 1)
            for i, a in enumerate(self._coefficients):
                if a == 0:
                    continue
                for j, b in enumerate(other._coefficients):
                    product[i + j] += a * b
            result = type(self)(*product)
        elif isinstance(other, (int, Fraction)):
            result = type(self)(*(c * other for c in self._coefficients))
        else:
            result = NotImplemented
        return result

    __rmul__ = __mul__

    def to_json(self) -> List[str]:
        """Coefficient strings, lowest degree first."""
        return [core.scalar_str(c) for c in self._coefficients]

    def format(self, variable: str = 'λ') -> str:
        """Human readable form, highest degree first, e.g. λ³+(5/2)λ²+λ."""
        terms = []
        for power in range(self.degree, -1, -1):
            coefficient = self._coefficients[power]
            if coefficient == 0:
                continue

            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            if power == 0:
                body = _format_magnitude(magnitude)
            else:
                body = variable
                if power > 1:
                    body += str(power).translate(_SUPERSCRIPTS)
                if magnitude != 1:
                    body = _format_magnitude(magnitude) + body
            terms.append((sign, body))

        if not terms:
            return '0'

        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        return text + ''.join(sign + body for sign, body in terms[1:])


def _format_magnitude(value: Fraction) -> str:
    if value.denominator == 1:
        result = str(value.numerator)
    else:
        result = f'({value})'
    return result


def poly_from_roots(roots: Sequence[Any],
                    zero_multiplicity: int = 0) -> Polynomial:
    """Expand x**zero_multiplicity * prod(x + zeta for zeta in roots).

    Note the sign convention: each listed value zeta contributes the factor
    (x + zeta), so the actual roots are the negatives of the listed values.
    """
    if zero_multiplicity < 0:
        raise core.InvalidParameterError(
            f'Multiplicity must be nonnegative, got {zero_multiplicity}'
        )

    result = Polynomial.monomial(zero_multiplicity)
    for zeta in roots:
        result = result * Polynomial(zeta, 1)
    return result


def poly_interpolate(points: Sequence[Tuple[Any, Any]]) -> Polynomial:
    """Lagrange interpolation through the given (x, y) points.

    :return: the unique polynomial of degree less than len(points) whose
        graph passes through every point
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise RepeatedAbscissaError(
            f'Interpolation points must have distinct abscissae: '
            f'{[str(x) for x in xs]}'
        )

    result = Polynomial()
    for i, (x_i, y_i) in enumerate(points):
        y_i = Fraction(y_i)
        if y_i == 0:
            continue
        basis = Polynomial(1)
        denominator = Fraction(1)
        for j, x_j in enumerate(xs):
            if j != i:
                basis = basis * Polynomial(-x_j, 1)
                denominator *= Fraction(x_i) - x_j
        result = result + basis * (y_i / denominator)
    return result
