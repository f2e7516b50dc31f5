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

# pylint: disable=W,C,R

from fractions import Fraction


def _short(value):
    if isinstance(value, Fraction):
        return str(value)
    to_json = getattr(value, 'to_json', None)
    if callable(to_json):
        return f'{type(value).__name__}{to_json()!r}'
    return repr(value)


# noinspection PyUnusedLocal
def pytest_assertrepr_compare(config, op, left, right):
    if op in ('==', '!='):
        return [f'{_short(left)} {op} {_short(right)}']


def pytest_configure(config):
    config.addinivalue_line('markers',
                            'slow: exhaustive parameter grids; deselect with '
                            '-m "not slow"')
