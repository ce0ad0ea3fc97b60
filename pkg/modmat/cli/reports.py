import json
import os
import tempfile

import pandas
from tabulate import tabulate

from .objects import Outcome


def render_json(outcome: Outcome) -> str:
    return json.dumps(outcome.to_json(), sort_keys=True, indent=2) + "\n"


def render_csv(outcome: Outcome) -> str:
    df = pandas.DataFrame(outcome.rows)
    return df.to_csv(index=False)


def render(outcome: Outcome, fmt: str) -> str:
    return render_csv(outcome) if fmt == "csv" else render_json(outcome)


def summary(outcome: Outcome) -> str:
    """Console table of the check rows."""
    if not outcome.reports:
        return f"{outcome.command}: nothing to check"
    rows = [r.row() for r in outcome.reports]
    failed = sum(1 for r in outcome.reports if not r)
    table = tabulate(rows, headers="keys")
    return f"{table}\n\n{len(rows) - failed} passed, {failed} failed"


def write_atomic(path: str, text: str) -> None:
    """Write through a temporary file in the same directory, then rename over the target."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    handle = tempfile.NamedTemporaryFile(
        "w", dir=directory, prefix=".modmat-", suffix=".tmp", delete=False, encoding="utf-8"
    )
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, path)
    except BaseException:
        if os.path.exists(handle.name):
            os.unlink(handle.name)
        raise
