import os
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from icontract import invariant

from shared.utility import Utility

DEFAULT_ALPHAS = (0.0, 0.25, 0.5, 0.75)
DEFAULT_TOLERANCE = 1e-9
TOLERANCE_ENV = "DALPHA_TOL"


class Command(Enum):
    ANALYZE = "analyze"
    GENERATE = "generate"
    SWEEP = "sweep"
    VERIFY_THEOREM = "verify-theorem"

    @property
    def needs_alpha_below_one(self) -> bool:
        """Bound commands reject alpha = 1; plain spectral analysis accepts it."""
        return self is not Command.ANALYZE


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@invariant(lambda self: len(self.alphas) > 0, "at least one alpha value is required", error=ValueError)
@invariant(
    lambda self: all(0.0 <= a <= 1.0 for a in self.alphas)
    and (not self.command.needs_alpha_below_one or all(a < 1.0 for a in self.alphas)),
    "alpha values must lie in [0, 1), or [0, 1] for analyze",
    error=ValueError,
)
@invariant(lambda self: self.tolerance > 0, "tolerance must be positive", error=ValueError)
@invariant(lambda self: self.jobs >= 1, "jobs must be at least 1", error=ValueError)
@dataclass(frozen=True)
class CliConfig:
    """
    Settings for one command-line run.

    Attributes:
        command (Command): Sub-command to run.
        alphas (tuple[float, ...]): alpha grid.
        tolerance (float): Relative tolerance for bound checks.
        graph6 (str | None): Inline graph6 input (for dvdr generation, the regular base).
        file (str | None): Path of a graph6 file; "-" reads stdin.
        output_format (OutputFormat): text, json or csv.
        jobs (int): Worker processes for sweeps.
        family (str | None): Family label for generate.
        n (int | None): Order for generate and verify-theorem.
        family_only (bool): verify-theorem without an enumeration file.
        parts (tuple[int, ...] | None): Part sizes for the multipartite family.
        count (int): Samples for the random family.
        seed (int): Seed for the random family.
        edge_probability (float): Edge density for the random family.
    """
    command: Command
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    tolerance: float = DEFAULT_TOLERANCE
    graph6: str | None = None
    file: str | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    jobs: int = 1
    family: str | None = None
    n: int | None = None
    family_only: bool = False
    parts: tuple[int, ...] | None = None
    count: int = 1
    seed: int = 0
    edge_probability: float = 0.3

    @staticmethod
    def default_tolerance(environ: Mapping[str, str] | None = None) -> float:
        """DALPHA_TOL from the environment, else 1e-9."""
        environ = os.environ if environ is None else environ
        raw = environ.get(TOLERANCE_ENV)
        if raw is None or not raw.strip():
            return DEFAULT_TOLERANCE
        try:
            return float(raw)
        except ValueError:
            raise ValueError(f"{TOLERANCE_ENV}={raw!r} is not a number")

    @classmethod
    def from_args(cls, args, environ: Mapping[str, str] | None = None) -> "CliConfig":
        """
        Builds a config from parsed command-line arguments.

        --tol wins over DALPHA_TOL, which wins over the built-in default.

        Raises:
            ValueError: For malformed alpha lists, parts or tolerances.
        """
        command = Command(args.command)
        alpha_text = getattr(args, "alpha", None)
        alphas = (
            DEFAULT_ALPHAS
            if alpha_text is None
            else tuple(Utility.parse_alpha_list(alpha_text, allow_one=not command.needs_alpha_below_one))
        )
        tolerance = args.tol if getattr(args, "tol", None) is not None else cls.default_tolerance(environ)
        jobs = getattr(args, "jobs", None)
        parts = getattr(args, "parts", None)
        return cls(
            command=command,
            alphas=alphas,
            tolerance=tolerance,
            graph6=getattr(args, "graph6", None),
            file=getattr(args, "file", None),
            output_format=OutputFormat(getattr(args, "format", "text")),
            jobs=(os.cpu_count() or 1) if jobs is None else jobs,
            family=getattr(args, "family", None),
            n=getattr(args, "n", None),
            family_only=getattr(args, "family_only", False),
            parts=None if parts is None else Utility.parse_parts(parts),
            count=getattr(args, "count", 1),
            seed=getattr(args, "seed", 0),
            edge_probability=getattr(args, "p", 0.3),
        )
