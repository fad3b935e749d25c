"""
Run configuration for the ``nck`` command.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from apps.core.conf import default_seed, resolve_tol
from apps.core.exceptions import DomainError
from apps.core.formats import guess_format, parse_real

COMMAND_CHOICES = ['meb', 'diam', 'jung', 'profile', 'net', 'bracket', 'gen']
KIND_CHOICES = ['ramp', 'sine_sweep', 'simplex_osc']
FORMAT_CHOICES = ['json', 'csv']


def _integer(raw, name):
    if raw is None:
        return None
    try:
        return int(str(raw).strip())
    except ValueError:
        raise DomainError(f'--{name}: cannot parse {raw!r} as an integer')


def _real(raw, name):
    return None if raw is None else parse_real(raw, f'--{name}')


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[Path] = None
    output: Optional[Path] = None
    dim: Optional[int] = None
    delta: Optional[float] = None
    alpha: Optional[float] = None
    epsilon: Optional[float] = None
    trials: Optional[int] = None
    seed: int = 0
    format: Optional[str] = None
    kind: Optional[str] = None
    mesh: Optional[float] = None
    k_max: Optional[int] = None
    tol: Optional[float] = None

    def __post_init__(self):
        if self.command not in COMMAND_CHOICES:
            raise DomainError(
                f'unknown command {self.command!r}; choose from {", ".join(COMMAND_CHOICES)}'
            )
        if self.format is not None and self.format not in FORMAT_CHOICES:
            raise DomainError(f'--format must be json or csv, got {self.format!r}')
        if self.kind is not None and self.kind not in KIND_CHOICES:
            raise DomainError(
                f'--kind must be one of {", ".join(KIND_CHOICES)}, got {self.kind!r}'
            )
        for name in ('delta', 'epsilon', 'mesh', 'tol'):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise DomainError(f'--{name} must be positive, got {value!r}')
        if self.alpha is not None and not self.alpha >= 0:
            raise DomainError(f'--alpha must be nonnegative, got {self.alpha!r}')
        for name in ('dim', 'trials', 'k_max'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise DomainError(f'--{name.replace("_", "-")} must be at least 1, got {value}')

    @classmethod
    def from_options(cls, options: dict) -> 'RunConfig':
        """Build a config from raw command-line strings."""
        seed = _integer(options.get('seed'), 'seed')
        return cls(
            command=options.get('command') or '',
            input=Path(options['input']) if options.get('input') else None,
            output=Path(options['output']) if options.get('output') else None,
            dim=_integer(options.get('dim'), 'dim'),
            delta=_real(options.get('delta'), 'delta'),
            alpha=_real(options.get('alpha'), 'alpha'),
            epsilon=_real(options.get('epsilon'), 'epsilon'),
            trials=_integer(options.get('trials'), 'trials'),
            seed=default_seed() if seed is None else seed,
            format=options.get('format'),
            kind=options.get('kind'),
            mesh=_real(options.get('mesh'), 'mesh'),
            k_max=_integer(options.get('k_max'), 'k-max'),
            tol=_real(options.get('tol'), 'tol'),
        )

    def require(self, *names):
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ', '.join(f'--{name.replace("_", "-")}' for name in missing)
            raise DomainError(f'{self.command} needs {flags}')

    @property
    def resolved_tol(self) -> float:
        return resolve_tol(self.tol)

    @property
    def input_format(self) -> str:
        return guess_format(self.input, self.format)

    @property
    def output_format(self) -> str:
        return guess_format(self.output, self.format)
