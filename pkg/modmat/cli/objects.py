import os
from typing import Any, Dict, List, Optional, Sequence

from ..errors import ConfigError
from ..objects import VerificationReport

COMMANDS = ("verify", "psi", "qseries", "cusp", "chain", "matroid", "numeric-oracle")
FORMATS = ("json", "csv")
# the ψ-matrix and the cusp configurations are only defined from level 10 on
MIN_LEVEL = {"verify": 10, "psi": 10, "cusp": 10, "qseries": 3, "numeric-oracle": 3}
DEFAULT_QPREC = {"numeric-oracle": 30}


class RunConfig:
    """One invocation: the subcommand, its levels and precisions, and where the report goes.

    Subcommand-specific options (``checks``, ``a``, ``s``, ``t``...) stay in ``kwargs``.
    """

    def __init__(
        self,
        command: str,
        *,
        levels: Sequence[int] = (),
        qprec: Optional[int] = None,
        zprec: int = 6,
        output: Optional[str] = None,
        fmt: str = "json",
        threads: int = 1,
        max_level: int = 30,
        log_level: str = "WARNING",
        **kwargs,
    ) -> None:
        self.command = command
        self.levels: List[int] = list(levels)
        self.qprec = DEFAULT_QPREC.get(command, 25) if qprec is None else qprec
        self.zprec = zprec
        self.output = output
        self.fmt = fmt
        self.threads = threads
        self.max_level = max_level
        self.log_level = log_level
        self.kwargs = kwargs
        self.validate()

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown subcommand {self.command!r}.")
        if self.fmt not in FORMATS:
            raise ConfigError(f"Unknown output format {self.fmt!r}.")
        if self.qprec < 5:
            raise ConfigError(f"qprec must be at least 5, got {self.qprec}.")
        if self.zprec < 2:
            raise ConfigError(f"zprec must be at least 2, got {self.zprec}.")
        if self.threads < 1:
            raise ConfigError(f"threads must be positive, got {self.threads}.")
        minimum = MIN_LEVEL.get(self.command, 3)
        for n in self.levels:
            if not minimum <= n <= self.max_level:
                raise ConfigError(
                    f"Level {n} is outside {minimum}..{self.max_level} for {self.command}."
                )

    @property
    def workers(self) -> int:
        """Requested threads, capped by MODMAT_THREADS when it is set."""
        cap = os.environ.get("MODMAT_THREADS")
        if cap is None:
            return self.threads
        try:
            cap = int(cap)
        except ValueError as error:
            raise ConfigError(f"MODMAT_THREADS must be an integer, got {cap!r}.") from error
        return max(1, min(self.threads, cap))

    def __repr__(self):
        return (
            f"<RunConfig command={self.command} levels={self.levels} qprec={self.qprec} "
            f"fmt={self.fmt}>"
        )


class Outcome:
    """What a subcommand produced: the JSON payload, its check reports and its table rows."""

    def __init__(
        self,
        command: str,
        payload: Dict[str, Any],
        reports: Sequence[VerificationReport] = (),
        rows: Optional[List[Dict[str, Any]]] = None,
    ) -> None:
        self.command = command
        self.payload = payload
        self.reports = list(reports)
        self.rows = rows if rows is not None else [r.row() for r in self.reports]

    @property
    def passed(self) -> bool:
        return all(self.reports)

    def to_json(self) -> Dict[str, Any]:
        data = {"command": self.command, **self.payload}
        if self.reports:
            data["reports"] = [r.to_json() for r in self.reports]
        data["passed"] = self.passed
        return data

    def __repr__(self):
        return f"<Outcome command={self.command} reports={len(self.reports)} passed={self.passed}>"
