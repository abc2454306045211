# Copyright © 2015-2018 STRG.AT GmbH, Vienna, Austria
#
# This file is part of the The SCORE Framework.
#
# The SCORE Framework and all its parts are free software: you can redistribute
# them and/or modify them under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation which is in the
# file named COPYING.LESSER.txt.
#
# The SCORE Framework and all its parts are distributed without any WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
# PARTICULAR PURPOSE. For more details see the GNU Lesser General Public
# License.
#
# If you have not received a copy of the GNU Lesser General Public License see
# http://www.gnu.org/licenses/.
#
# The License-Agreement realised between you as Licensee and STRG.AT GmbH as
# Licenser including the issue of its valid conclusion and its pre- and
# post-contractual effects is governed by the laws of Austria. Any disputes
# concerning this License-Agreement including the issue of its valid conclusion
# and its pre- and post-contractual effects are exclusively decided by the
# competent court, in whose district STRG.AT GmbH has its registered seat, at
# the discretion of STRG.AT GmbH also the competent court, in whose district the
# Licensee has his registered seat, an establishment or assets.

import click
import logging
import logging.config
import os
import score.ainf as ainf
import score.init
from ._exceptions import (
    AinfError, SchemaError, InvalidCategory, InvalidSpace, MissingUnit,
    SideMismatch)
from .constants import Constants
from .fileformat import dumps
from .fixtures import FIXTURES, fixture_file


log = logging.getLogger(__name__)

_SUCCESS = (Constants.VERDICT_PASS, Constants.VERDICT_GENERATED)


class InputError(click.ClickException):
    exit_code = Constants.EXIT_INPUT_ERROR


def init_logging(logconf):
    if logconf is None:
        return
    conf = score.init.config.parse_config_file(logconf)
    logging.config.fileConfig(conf, disable_existing_loggers=False)


def _parse_degrees(ctx, param, value):
    try:
        return ainf.parse_degrees(value)
    except ValueError as e:
        raise click.BadParameter(str(e))


def _workers():
    value = os.environ.get(Constants.THREADS_ENV, '1')
    try:
        return max(int(value), 1)
    except ValueError:
        raise InputError('%s must be an integer, got %r' %
                         (Constants.THREADS_ENV, value))


_COMMON_OPTIONS = (
    click.option('-l', '--logconf',
                 type=click.Path(file_okay=True, dir_okay=False)),
    click.option('--json', 'as_json', is_flag=True,
                 help='Print the report as JSON.'),
    click.option('--max-length', default=3, type=click.IntRange(min=0),
                 help='Truncation bound N.'),
    click.option('--degrees', callback=_parse_degrees,
                 help='Degree range a..b.'),
    click.option('--ring', type=click.Choice(Constants.RINGS),
                 help='Override the ring of the input.'),
    click.option('--timing', is_flag=True,
                 help='Include the wall-clock time in the report.'),
)


def common_options(func):
    for option in reversed(_COMMON_OPTIONS):
        func = option(func)
    return func


def configure(logconf, max_length, degrees, ring, timing):
    init_logging(logconf)
    return ainf.init({
        'max_length': max_length,
        'degrees': degrees,
        'ring': ring,
        'timing': timing,
        'workers': _workers(),
    })


def emit(report, as_json):
    click.echo(report.to_json() if as_json else report.to_text())
    if report.verdict not in _SUCCESS:
        raise SystemExit(Constants.EXIT_FAILURE)


def run(conf, command, path, as_json, **kwargs):
    try:
        document = conf.load(path)
        report = getattr(conf, command)(document, **kwargs)
    except (SchemaError, InvalidCategory, SideMismatch, MissingUnit) as e:
        raise InputError(str(e))
    except OSError as e:
        raise InputError('Cannot access %s: %s' % (e.filename or path, e))
    except AinfError as e:
        log.debug('%s failed', command, exc_info=True)
        raise click.ClickException('%s: %s' % (type(e).__name__, e))
    except Exception as e:
        log.exception(e)
        raise
    emit(report, as_json)


@click.group()
def main():
    """
    Exact checks for finite A∞-categories: A∞ relations, Hochschild
    homology, split-generation and the Cardy relation.
    """


@main.command('validate')
@common_options
@click.argument('path', type=click.Path(dir_okay=False))
def validate(path, logconf, as_json, max_length, degrees, ring, timing):
    """
    Check the structure maps (and units, coproduct and closed sector, if
    present) of a category file.
    """
    conf = configure(logconf, max_length, degrees, ring, timing)
    run(conf, 'validate', path, as_json)


@main.command('hh')
@common_options
@click.argument('path', type=click.Path(dir_okay=False))
def hh(path, logconf, as_json, max_length, degrees, ring, timing):
    """
    Hochschild homology of the length truncated cyclic bar complex.
    """
    conf = configure(logconf, max_length, degrees, ring, timing)
    run(conf, 'hochschild', path, as_json)


@main.command('generate')
@common_options
@click.option('--certificate', 'certificate_path',
              type=click.Path(dir_okay=False, writable=True),
              help='Also write the certificate to this file.')
@click.argument('path', type=click.Path(dir_okay=False))
def generate(path, certificate_path, logconf, as_json, max_length, degrees,
             ring, timing):
    """
    Decide whether the file's "subcategory" split-generates its "object"
    at the given truncation bound.
    """
    conf = configure(logconf, max_length, degrees, ring, timing)
    run(conf, 'generate', path, as_json, certificate_path=certificate_path)


@main.command('replay')
@common_options
@click.argument('path', type=click.Path(dir_okay=False))
@click.argument('certificate', type=click.Path(dir_okay=False))
def replay(path, certificate, logconf, as_json, max_length, degrees, ring,
           timing):
    """
    Re-check a certificate written by "generate --certificate" against the
    category file PATH.
    """
    conf = configure(logconf, max_length, degrees, ring, timing)
    run(conf, 'replay', path, as_json, certificate_path=certificate)


@main.command('cardy')
@common_options
@click.argument('path', type=click.Path(dir_okay=False))
def cardy(path, logconf, as_json, max_length, degrees, ring, timing):
    """
    Check the Cardy relation for the coproduct and closed sector of a file.
    """
    conf = configure(logconf, max_length, degrees, ring, timing)
    run(conf, 'cardy', path, as_json)


@main.command('strata')
@common_options
@click.option('--strip-breaking', is_flag=True,
              help='Also list strata where a strip breaks off.')
@click.argument('space')
def strata(space, strip_breaking, logconf, as_json, max_length, degrees,
           ring, timing):
    # NOTE: the \b in the following string causes click to print a paragraph
    # verbatim, i.e. without rewrapping its content.
    """
    List the codimension one strata of a moduli space.

    SPACE is one of:

    \b
    - R_d          discs with d inputs
    - R_{r|1|s}    strips with r left and s right inputs
    - R_d^1        discs with a marked interior point
    - R^1          the plane
    - C_d^-        annuli
    - P_d          one-parameter families of discs
    """
    conf = configure(logconf, max_length, degrees, ring, timing)
    try:
        report = conf.strata(space, strip_breaking)
    except InvalidSpace as e:
        raise InputError(str(e))
    emit(report, as_json)


@main.command('fixture')
@click.option('-l', '--logconf',
              type=click.Path(file_okay=True, dir_okay=False))
@click.option('--ring', type=click.Choice(Constants.RINGS),
              default=Constants.RING_Z)
@click.option('--n', 'n', default=0, type=int,
              help='Degree of the coproduct (coproduct-pair).')
@click.option('--eps-degree', default=1, type=int,
              help='Degree of ε (dual-numbers).')
@click.option('--size', default=2, type=click.IntRange(min=1),
              help='Number of objects (path).')
@click.option('--max-length', default=3, type=click.IntRange(min=0),
              help='Words tabulated for the open-closed map.')
@click.argument('name', type=click.Choice(sorted(FIXTURES)))
@click.argument('output', type=click.File(mode='w'), default='-')
def fixture(name, output, logconf, ring, n, eps_degree, size, max_length):
    """
    Write a shipped fixture as a category file (to stdout by default).
    """
    init_logging(logconf)
    document = fixture_file(name, ring=ring, n=n, eps_degree=eps_degree,
                            size=size, max_length=max_length)
    output.write(dumps(document))


if __name__ == '__main__':
    main()
