"""
Dispatch of ``nck`` commands to the geometry, moduli and net builder apps.
"""
import logging
import sys
from dataclasses import dataclass

import numpy as np

from apps.core.exceptions import ToolkitError, VerificationFailed
from apps.core.formats import csv_text, dumps_json, format_number, write_text
from apps.function_space.files import read_family, render_family
from apps.geometry.files import read_point_set
from apps.geometry.jung import diameter, jung_report
from apps.geometry.meb import chebyshev_ball
from apps.geometry.serializers import BallSerializer, JungReportSerializer
from apps.geometry.types import PointSet
from apps.moduli.modulus import mu_uec_estimate, plateau_delta
from apps.moduli.serializers import BracketSerializer, ModulusProfileSerializer, render_profile_csv
from apps.net_builder.bracket import theorem_bracket
from apps.net_builder.construction import build_net
from apps.net_builder.serializers import NetSerializer

from .config import RunConfig
from .generators import gen_family

logger = logging.getLogger(__name__)

EXIT_OK = 0

JUNG_TRIAL_HEADER = ['trial', 'size', 'diameter', 'radius', 'lower', 'upper', 'margin', 'pass']


@dataclass(frozen=True)
class RunOutcome:
    """Exit code, a one-line summary, and whether the artifact already went to stdout."""

    exit_code: int
    message: str
    wrote_stdout: bool = False


def _csv_cell(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format_number(value)
    return value


def _record_csv(record: dict) -> str:
    return csv_text([[_csv_cell(value) for value in record.values()]], header=list(record))


def _emit(config: RunConfig, text: str, stdout) -> bool:
    """Write an artifact to ``--output`` or stdout; True when stdout was used."""
    if config.output is not None:
        write_text(config.output, text)
        logger.info(f'Wrote {config.output}')
        return False
    stdout.write(text)
    return True


def _render_record(config: RunConfig, record: dict) -> str:
    if config.output_format == 'csv':
        return _record_csv(record)
    return dumps_json(record)


def _run_gen(config, stdout):
    config.require('kind', 'mesh', 'k_max')
    fam = gen_family(config.kind, config.k_max, config.mesh, config.dim)
    used = _emit(config, render_family(fam, config.output_format), stdout)
    return RunOutcome(
        EXIT_OK, f'{config.kind}: {len(fam)} members on {len(fam.grid)} knots', used
    )


def _run_diam(config, stdout):
    config.require('input')
    ps = read_point_set(config.input, config.input_format)
    value = diameter(ps)
    record = {'dim': ps.dim, 'points': len(ps), 'diameter': value}
    used = _emit(config, _render_record(config, record), stdout)
    return RunOutcome(EXIT_OK, f'diameter {format_number(value)}', used)


def _run_meb(config, stdout):
    config.require('input')
    ps = read_point_set(config.input, config.input_format)
    ball = chebyshev_ball(ps, tol=config.resolved_tol, seed=config.seed)
    record = dict(BallSerializer(ball).data)
    if config.output_format == 'csv':
        text = csv_text(
            [[format_number(v) for v in ball.center] + [format_number(ball.radius)]],
            header=[f'c{j + 1}' for j in range(ball.dim)] + ['radius'],
        )
    else:
        text = dumps_json(record)
    used = _emit(config, text, stdout)
    return RunOutcome(EXIT_OK, f'radius {format_number(ball.radius)}', used)


def _jung_record(report) -> dict:
    return dict(JungReportSerializer(report).data)


def _render_trials(config: RunConfig, records: list) -> str:
    if config.output_format == 'csv':
        rows = [[_csv_cell(record[name]) for name in JUNG_TRIAL_HEADER] for record in records]
        return csv_text(rows, header=JUNG_TRIAL_HEADER)
    return dumps_json(records)


def _run_jung(config, stdout):
    tol = config.resolved_tol
    if config.input is not None:
        ps = read_point_set(config.input, config.input_format)
        report = jung_report(ps, tol=tol, seed=config.seed)
        used = _emit(config, _render_record(config, _jung_record(report)), stdout)
        if not report.passed:
            raise VerificationFailed(
                f'Jung bound violated: radius {report.radius!r} outside '
                f'[{report.lower!r}, {report.upper!r}]',
            )
        return RunOutcome(EXIT_OK, f'Jung bound holds with margin {report.margin!r}', used)

    config.require('dim', 'trials')
    rng = np.random.default_rng(config.seed)
    records = []
    worst = None
    passed = 0
    for trial in range(config.trials):
        size = int(rng.integers(2, config.dim + 5))
        points = rng.uniform(-1.0, 1.0, size=(size, config.dim))
        report = jung_report(PointSet(config.dim, points), tol=tol, seed=config.seed)
        passed += report.passed
        if not report.passed:
            logger.error(
                f'Trial {trial} failed: radius {report.radius!r} outside '
                f'[{report.lower!r}, {report.upper!r}]'
            )
        if worst is None or report.margin < worst:
            worst = report.margin
        records.append({
            'trial': trial,
            'size': size,
            'diameter': report.diameter,
            'radius': report.radius,
            'lower': report.lower,
            'upper': report.upper,
            'margin': report.margin,
            'pass': bool(report.passed),
        })

    summary = f'{passed}/{config.trials} pass'
    if config.output is not None:
        _emit(config, _render_trials(config, records), stdout)
    logger.info(f'Jung trials in dimension {config.dim}: {summary}, worst margin {worst!r}')
    if passed < config.trials:
        raise VerificationFailed(summary)
    return RunOutcome(EXIT_OK, summary)


def _run_profile(config, stdout):
    config.require('input')
    fam = read_family(config.input, config.input_format)
    estimate = mu_uec_estimate(fam)
    if config.output_format == 'csv':
        text = render_profile_csv(estimate.profile)
    else:
        record = dict(ModulusProfileSerializer(estimate.profile).data)
        record['estimate'] = estimate.value
        record['plateau_delta'] = plateau_delta(estimate.profile, config.resolved_tol)
        text = dumps_json(record)
    used = _emit(config, text, stdout)
    return RunOutcome(
        EXIT_OK, f'omega at mesh {fam.grid.mesh!r} is {format_number(estimate.value)}', used
    )


def _run_net(config, stdout):
    config.require('input', 'delta', 'alpha', 'epsilon')
    fam = read_family(config.input, config.input_format)
    result = build_net(
        fam, delta=config.delta, alpha=config.alpha, epsilon=config.epsilon,
        seed=config.seed, tol=config.tol,
    )
    if config.output_format == 'csv':
        text = render_family(result.net, 'csv')
    else:
        text = dumps_json(NetSerializer(result).data)
    used = _emit(config, text, stdout)
    failed = [c.member_id for c in result.certificates if not c.passed]
    if failed:
        raise VerificationFailed(f'{len(failed)} certificates failed, first {failed[0]}')
    return RunOutcome(EXIT_OK, f'net of {len(result.net)} elements for {len(fam)} members', used)


def _run_bracket(config, stdout):
    config.require('input', 'epsilon')
    if config.alpha is not None:
        logger.warning('bracket measures alpha from the family; --alpha is ignored')
    fam = read_family(config.input, config.input_format)
    bracket = theorem_bracket(
        fam, config.epsilon, seed=config.seed, delta=config.delta, tol=config.tol
    )
    record = dict(BracketSerializer(bracket).data)
    if config.output_format == 'csv':
        record.pop('transfer')
        record['transfer_pass'] = bracket.transfer.passed
        text = _record_csv(record)
    else:
        text = dumps_json(record)
    used = _emit(config, text, stdout)
    if not bracket.passed:
        raise VerificationFailed(
            f'bracket failed: achieved {bracket.achieved!r} > upper {bracket.upper!r} '
            f'+ epsilon {bracket.epsilon!r}, transfer pass={bracket.transfer.passed}',
        )
    return RunOutcome(
        EXIT_OK,
        f'lower {format_number(bracket.lower)}, upper {format_number(bracket.upper)}, '
        f'achieved {format_number(bracket.achieved)}',
        used,
    )


COMMANDS = {
    'gen': _run_gen,
    'diam': _run_diam,
    'meb': _run_meb,
    'jung': _run_jung,
    'profile': _run_profile,
    'net': _run_net,
    'bracket': _run_bracket,
}


def run(config: RunConfig, stdout=None) -> RunOutcome:
    """Run one command; toolkit errors become nonzero outcomes."""
    stdout = stdout or sys.stdout
    try:
        return COMMANDS[config.command](config, stdout)
    except ToolkitError as e:
        logger.error(f'{config.command} failed: {e}')
        return RunOutcome(e.exit_code, str(e))
