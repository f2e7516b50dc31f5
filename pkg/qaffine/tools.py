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
"""Generic tools used in project."""

__all__ = ['pairwise', 'canonical_json']

import json
from itertools import tee
from typing import Any, Iterable, Iterator, Tuple, TypeVar

T = TypeVar('T')


def pairwise(iterable: Iterable[T]) -> Iterator[Tuple[T, T]]:
    """Iterate by consecutive pairs."""
    a, b = tee(iterable)
    next(b, None)
    return zip(a, b)


def canonical_json(data: Any) -> str:
    """Serialize with sorted keys and compact separators.

    Identical data always gives byte-identical text.
    """
    return json.dumps(data, sort_keys=True, separators=(',', ':'),
                      ensure_ascii=False)
