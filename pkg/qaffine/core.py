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
"""Low-level, core functionality for qaffine: errors, scalars and q."""

__all__ = ['QAffineError', 'InvalidParameterError', 'Scalar', 'QContext',
           'parse_scalar', 'scalar_str', 'nonzero_scalar']

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Union

Scalar = Fraction

_ScalarLike = Union[Fraction, int, str]


class QAffineError(Exception):
    """Error for package-specific issues."""


class InvalidParameterError(QAffineError, ValueError):
    """Error raised when a parameter is outside of its allowed range."""


def parse_scalar(value: Any) -> Scalar:
    """Convert a value into an exact rational scalar.

    :param value: an integer, a fraction or a string such as "3", "-5/2"
        or "1.25"
    """
    if isinstance(value, bool):
        raise InvalidParameterError(f'Cannot use a boolean as a scalar: '
                                    f'{value}')
    if isinstance(value, (int, Fraction)):
        result = Fraction(value)
    elif isinstance(value, str):
        try:
            result = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidParameterError(
                f"Invalid scalar string, got '{value}', expected something "
                f"like '3' or '-5/2'"
            ) from None
    else:
        raise InvalidParameterError(f'Unable to convert {type(value)} to a '
                                    f'scalar')
    return result


def scalar_str(value: Scalar) -> str:
    """Canonical string form of a scalar: "p/q", or "p" for integers."""
    return str(Fraction(value))


def nonzero_scalar(value: Any, name: str = 'scalar') -> Scalar:
    """Parse a scalar and reject zero.

    :param value: anything accepted by :func:`parse_scalar`
    :param name: used in the error message
    """
    result = parse_scalar(value)
    if result == 0:
        raise InvalidParameterError(f'{name} must be nonzero')
    return result


@dataclass(frozen=True)
class QContext:
    # noinspection PyUnresolvedReferences
    """The deformation parameter q shared by every computation.

    A rational q with q not in {0, 1, -1} and |q| != 1 is never a root of
    unity, so every q-integer [t] with t != 0 is nonzero.

    :param q: the deformation parameter
    """

    q: Scalar

    @classmethod
    def from_value(cls, value: _ScalarLike) -> 'QContext':
        """Construct a context from anything :func:`parse_scalar` accepts."""
        return cls(parse_scalar(value))

    def __post_init__(self) -> None:
        q = parse_scalar(self.q)
        if q == 0:
            raise InvalidParameterError('q must be nonzero')
        if abs(q) == 1:
            raise InvalidParameterError(f'|q| must differ from 1, got {q}')
        object.__setattr__(self, 'q', q)

    def __str__(self) -> str:
        return scalar_str(self.q)

    def power(self, exponent: int) -> Scalar:
        """Return q raised to an integer power."""
        return _power(self.q, exponent)

    def exponent_of(self, ratio: Scalar) -> Optional[int]:
        """Find the integer k with q**k == ratio, if there is one.

        The search is finite because |q**k| is strictly monotone in k.
        """
        ratio = Fraction(ratio)
        if ratio == 0:
            return None

        base = self.q if abs(self.q) > 1 else 1 / self.q
        flip = abs(ratio) < 1
        target = 1 / ratio if flip else ratio

        exponent = 0
        current = Fraction(1)
        while abs(current) < abs(target):
            current *= base
            exponent += 1

        if current == target:
            if abs(self.q) < 1:
                exponent = -exponent
            result: Optional[int] = -exponent if flip else exponent
        else:
            result = None
        return result


@lru_cache(maxsize=None)
def _power(q: Scalar, exponent: int) -> Scalar:
    return q ** exponent
