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
"""Command line front end.

Every command prints one canonical JSON document (sorted keys, scalars as
"p/q" strings) to stdout or to the file given with --out.

Exit codes: 0 success, 1 a relation or verification failed, 2 malformed
input, 3 the irreducibility oracle disagrees with the criterion.
"""

__all__ = ['LOG_FORMAT', 'Settings', 'cli', 'main']

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click

import qaffine.algebra as alg
import qaffine.core as core
import qaffine.intertwiner as itw
import qaffine.modules as mod
import qaffine.structure as st
import qaffine.tools as tools

LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'
LOGGER = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_DISAGREEMENT = 3


class ScalarType(click.ParamType):
    """Exact rational given as "3", "-5/2" or "1.25"."""

    name = 'scalar'

    def __init__(self, nonzero: bool = False) -> None:
        self.nonzero = nonzero

    def convert(self, value, param, ctx):
        try:
            result = core.parse_scalar(value)
        except core.InvalidParameterError as error:
            self.fail(str(error), param, ctx)
        if self.nonzero and result == 0:
            self.fail('must be nonzero', param, ctx)
        return result


SCALAR = ScalarType()
NONZERO_SCALAR = ScalarType(nonzero=True)


@dataclass(frozen=True)
class Settings:
    # noinspection PyUnresolvedReferences
    """Options shared by every command.

    :param ctx: the deformation parameter
    :param oracle_cap: largest dimension the Burnside oracle accepts
    :param out: output file, stdout when None
    """

    ctx: core.QContext
    oracle_cap: int = st.DEFAULT_ORACLE_CAP
    out: Optional[Path] = None

    def emit(self, data: Any) -> None:
        """Write a report."""
        text = tools.canonical_json(data)
        if self.out is None:
            click.echo(text)
        else:
            self.out.write_text(text + '\n', encoding='utf-8')
            LOGGER.info('wrote %s', self.out)


def _context(q: Optional[Any], fallback: Any = 2) -> core.QContext:
    try:
        return core.QContext.from_value(fallback if q is None else q)
    except core.InvalidParameterError as error:
        raise click.BadParameter(str(error), param_hint="'--q'") from None


def _parse_spec(ctx, param, value) -> Optional[mod.ModuleSpec]:
    # pylint: disable=unused-argument
    if value is None:
        return None
    try:
        return mod.ModuleSpec.from_json(json.loads(value))
    except json.JSONDecodeError as error:
        raise click.BadParameter(f'not JSON: {error}') from None
    except core.QAffineError as error:
        raise click.BadParameter(str(error)) from None


def _read_rep(path: Path) -> Dict[str, Any]:
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
        alg.Representation.from_json(data)
    except json.JSONDecodeError as error:
        raise click.BadParameter(f'not JSON: {error}',
                                 param_hint="'--rep'") from None
    except core.QAffineError as error:
        raise click.BadParameter(str(error), param_hint="'--rep'") from None
    return data


def _module_input(q: Optional[Any], spec: Optional[mod.ModuleSpec],
                  rep_path: Optional[Path]) \
        -> Tuple[alg.Representation, core.QContext]:
    """Resolve --spec or --rep into a representation and its q.

    An explicit --q wins, then the "q" entry of a --rep file, then 2.
    """
    if (spec is None) == (rep_path is None):
        raise click.UsageError('Give exactly one of --spec and --rep')
    if spec is not None:
        settings_ctx = _context(q)
        return mod.build(spec, settings_ctx), settings_ctx
    data = _read_rep(rep_path)  # type: ignore
    settings_ctx = _context(q, data.get('q', 2))
    return alg.Representation.from_json(data), settings_ctx


def _oracle(rep: alg.Representation, settings: Settings) -> Any:
    try:
        return st.irreducible_by_oracle(rep, settings.oracle_cap)
    except st.OracleCapExceededError as error:
        LOGGER.warning('%s', error)
        return 'skipped(cap)'


def _finish(code: int) -> None:
    if code:
        click.get_current_context().exit(code)


q_option = click.option('--q', type=SCALAR, default=None,
                        help='Deformation parameter (default 2).')
spec_option = click.option('--spec', callback=_parse_spec,
                           help='Module spec as JSON, e.g. '
                                '\'{"ell0":0,"factors":[[1,"1"]]}\'.')
rep_option = click.option('--rep', 'rep_path',
                          type=click.Path(exists=True, dir_okay=False,
                                          path_type=Path),
                          help='Representation JSON file.')
out_option = click.option('--out', type=click.Path(dir_okay=False,
                                                   path_type=Path),
                          help='Write the report here instead of stdout.')
cap_option = click.option('--oracle-cap', type=click.IntRange(min=1),
                          default=st.DEFAULT_ORACLE_CAP, show_default=True,
                          help='Largest dimension for the Burnside oracle.')


@click.group()
@click.option('--verbose', is_flag=True, help='Log at DEBUG level.')
def cli(verbose: bool) -> None:
    """Exact computations with evaluation modules of quantum affine sl2."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format=LOG_FORMAT)


@cli.command()
@q_option
@spec_option
@out_option
def build(q, spec, out) -> None:
    """Build the module of a spec and print its matrices."""
    if spec is None:
        raise click.UsageError('--spec is required')
    settings = Settings(_context(q), out=out)
    settings.emit(mod.build(spec, settings.ctx).to_json(settings.ctx))


@cli.command('check-relations')
@q_option
@spec_option
@rep_option
@click.option('--loop', is_flag=True, help='Also require k0 k1 = 1.')
@out_option
def check_relations(q, spec, rep_path, loop, out) -> None:
    """Check the defining relations; exit 1 if any fails."""
    rep, ctx = _module_input(q, spec, rep_path)
    report = alg.check_uprime_relations(rep, ctx, loop=loop)
    Settings(ctx, out=out).emit({'pass': report.passed,
                                 'relations': report.to_json()})
    _finish(0 if report.passed else EXIT_FAILED)


@cli.command()
@q_option
@spec_option
@click.option('--s', 's', type=NONZERO_SCALAR, default=None,
              help='Also decide irreducibility through the embedding with '
                   'this parameter.')
@cap_option
@out_option
def irreducible(q, spec, s, oracle_cap, out) -> None:
    """Compare the q-string criterion with the Burnside oracle; exit 3 on
    disagreement."""
    if spec is None:
        raise click.UsageError('--spec is required')
    settings = Settings(_context(q), oracle_cap, out)
    report = _irreducibility(spec, s, settings)
    settings.emit(report)
    _finish(EXIT_DISAGREEMENT if _disagrees(report) else 0)


def _irreducibility(spec: mod.ModuleSpec, s: Optional[Any],
                    settings: Settings) -> Dict[str, Any]:
    rep = mod.build(spec, settings.ctx)
    report = {'spec': spec.to_json(),
              'criterion': st.irreducible_by_criterion(spec, settings.ctx),
              'oracle': _oracle(rep, settings)}
    if s is not None:
        report['td_criterion'] = st.irreducible_as_td_module(spec, s,
                                                             settings.ctx)
        try:
            report['td_oracle'] = st.irreducible_as_td_module_by_oracle(
                rep, s, settings.ctx, settings.oracle_cap)
        except st.OracleCapExceededError:
            report['td_oracle'] = 'skipped(cap)'
    return report


def _disagrees(report: Dict[str, Any]) -> bool:
    pairs = (('criterion', 'oracle'), ('td_criterion', 'td_oracle'))
    return any(isinstance(report.get(oracle), bool)
               and report[oracle] != report[criterion]
               for criterion, oracle in pairs)


@cli.command()
@q_option
@spec_option
@out_option
def drinfeld(q, spec, out) -> None:
    """Print the Drinfel'd polynomial of a spec."""
    if spec is None:
        raise click.UsageError('--spec is required')
    settings = Settings(_context(q), out=out)
    polynomial = st.drinfeld_polynomial(spec, settings.ctx)
    settings.emit({'drinfeld': polynomial.to_json(),
                   'display': polynomial.format()})


@cli.command('td-embed')
@q_option
@spec_option
@rep_option
@click.option('--s', 's', type=NONZERO_SCALAR, default='1',
              show_default=True, help='Embedding parameter.')
@click.option('--eps', type=click.IntRange(0, 1), default=1,
              show_default=True, help='Include the e1m k1 term of x.')
@out_option
def td_embed(q, spec, rep_path, s, eps, out) -> None:
    """Certify the TD-algebra relations of the embedding; exit 1 on
    failure."""
    rep, ctx = _module_input(q, spec, rep_path)
    try:
        triple = alg.phi_s_image(rep, s, eps, 0, ctx)
    except core.InvalidParameterError as error:
        raise click.BadParameter(str(error), param_hint="'--s'") from None
    report = alg.check_td_relations(triple, ctx)
    Settings(ctx, out=out).emit({'pass': report.passed,
                                 'relations': report.to_json(),
                                 'triple': triple.to_json()})
    _finish(0 if report.passed else EXIT_FAILED)


def _intertwine_report(l: int, m: int, a: Any,
                       ctx: core.QContext) -> Dict[str, Any]:
    # pylint: disable=invalid-name
    try:
        intertwiner = itw.build_intertwiner(l, m, a, ctx)
    except core.InvalidParameterError as error:
        raise click.BadParameter(str(error)) from None
    report = itw.verify_intertwiner(intertwiner, ctx)
    result = intertwiner.to_json()
    result['verification'] = report.to_json()
    result['pass'] = report.passed
    return result


@cli.command()
@q_option
@click.option('--l', 'l', type=click.IntRange(min=1), required=True,
              help='Highest weight of V(l,a).')
@click.option('--m', 'm', type=click.IntRange(min=1), required=True,
              help='Highest weight of V(m).')
@click.option('--a', 'a', type=NONZERO_SCALAR, required=True,
              help='Evaluation parameter of V(l,a).')
@out_option
def intertwine(q, l, m, a, out) -> None:
    """Build and verify the intertwiner V(l,a)⊗V(m) -> V(m)⊗V(l,a)."""
    # pylint: disable=invalid-name
    settings = Settings(_context(q), out=out)
    report = _intertwine_report(l, m, a, settings.ctx)
    settings.emit(report)
    _finish(0 if report['pass'] else EXIT_FAILED)


@cli.command('full-report')
@q_option
@spec_option
@click.option('--s', 's', type=NONZERO_SCALAR, default='1',
              show_default=True, help='Embedding parameter.')
@cap_option
@out_option
def full_report(q, spec, s, oracle_cap, out) -> None:
    """Run every check on one spec."""
    if spec is None:
        raise click.UsageError('--spec is required')
    settings = Settings(_context(q), oracle_cap, out)
    ctx = settings.ctx
    rep = mod.build(spec, ctx)

    relations = alg.check_uprime_relations(rep, ctx, loop=True)
    td = alg.check_td_relations(alg.phi_s_image(rep, s, 1, 0, ctx), ctx)
    irreducibility = _irreducibility(spec, s, settings)
    report: Dict[str, Any] = {
        'spec': spec.to_json(),
        'dim': rep.dim,
        'relations': relations.to_json(),
        'weights': mod.weight_decomposition(rep, ctx).to_json(),
        'irreducibility': irreducibility,
        'drinfeld': st.drinfeld_polynomial(spec, ctx).to_json(),
        'exceptional': [p.to_json()
                        for p in st.exceptional_polynomials(rep, ctx)],
        'td': td.to_json(),
    }
    if spec.ell0 and len(spec.factors) == 1:
        (ell, a), = spec.factors
        report['intertwiner'] = _intertwine_report(ell, spec.ell0, a, ctx)
    passed = relations.passed and td.passed and \
        report.get('intertwiner', {}).get('pass', True)
    report['pass'] = passed
    settings.emit(report)

    if _disagrees(irreducibility):
        _finish(EXIT_DISAGREEMENT)
    _finish(0 if passed else EXIT_FAILED)


def main() -> None:
    """Console entry point."""
    cli(prog_name='qaffine')  # pylint: disable=no-value-for-parameter
