import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..chain import ChainParams, chain_extend, cubic_through
from ..cusps import (
    CONIC_MONOMIALS,
    boroczky_config,
    boroczky_conic,
    ceva_config,
    ceva_reduction,
    cusp_config,
    cusp_limit_config,
    fourm_config,
)
from ..errors import ConfigError, ModmatError
from ..matroid import (
    check_realization,
    encode_value,
    small_family,
    special_family,
    special_matroids,
    tn_matroid,
)
from ..objects import VerificationReport
from ..psi import psi_matrix
from ..qmod import laurent_data, numeric_oracle, wp_value
from . import suites
from .converters import PSI_CHECKS, parse_args
from .objects import Outcome, RunConfig
from .reports import render, summary, write_atomic

log = logging.getLogger("modmat.cli")

Job = Tuple[str, int]


def _expand_checks(requested: Sequence[str], allowed: Sequence[str]) -> List[str]:
    checks: List[str] = []
    for name in requested:
        for check in allowed if name == "all" else [name]:
            if check not in allowed:
                raise ConfigError(f"Unknown check {check!r}; choose from {', '.join(allowed)}.")
            if check not in checks:
                checks.append(check)
    return checks


def run_jobs(jobs: Sequence[Job], config: RunConfig) -> List[VerificationReport]:
    """Run (check, level) jobs, in parallel when allowed; results keep submission order."""
    workers = min(config.workers, len(jobs))
    if workers <= 1:
        results = [suites.run_job(name, n, config.qprec, config.zprec) for name, n in jobs]
    else:
        log.debug(f"Running {len(jobs)} jobs on {workers} workers.")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(suites.run_job, name, n, config.qprec, config.zprec)
                for name, n in jobs
            ]
            results = [future.result() for future in futures]
    return [report for batch in results for report in batch]


def _suite_outcome(config: RunConfig, allowed: Sequence[str]) -> Outcome:
    checks = _expand_checks(config.kwargs.get("checks") or ["all"], allowed)
    jobs = [(name, n) for n in config.levels for name in checks]
    reports = run_jobs(jobs, config)
    payload = {
        "levels": config.levels,
        "qprec": config.qprec,
        "zprec": config.zprec,
        "checks": checks,
    }
    return Outcome(config.command, payload, reports)


def verify_command(config: RunConfig) -> Outcome:
    return _suite_outcome(config, list(suites.SUITES))


def psi_command(config: RunConfig) -> Outcome:
    outcome = _suite_outcome(config, PSI_CHECKS)
    if config.kwargs.get("matrix"):
        outcome.payload["matrix"] = psi_matrix(config.levels[0], config.qprec).to_json()
    return outcome


def qseries_command(config: RunConfig) -> Outcome:
    n, a = config.levels[0], config.kwargs.get("a", 1)
    data = laurent_data(n, a, config.qprec)
    wp, wp_prime = wp_value(n, a, config.qprec)
    payload = data.to_json()
    payload.update(wp=wp.to_strings(), wp_prime=wp_prime.to_strings())
    rows = []
    for m in range(config.qprec):
        row: Dict[str, object] = {"q": m}
        for name, series in (
            ("sigma", data.sigma),
            ("tau", data.tau),
            ("upsilon", data.upsilon),
            ("wp", wp),
        ):
            row[name] = " ".join(series[m].to_strings())
        rows.append(row)
    return Outcome(config.command, payload, rows=rows)


_BOUNDARY: Dict[str, Callable] = {
    "boroczky": boroczky_config,
    "ceva": ceva_config,
    "fourm": fourm_config,
}


def cusp_command(config: RunConfig) -> Outcome:
    n, a = config.levels[0], config.kwargs.get("a", 1)
    kind = config.kwargs.get("kind", "torsion")
    payload: Dict[str, object] = {"n": n, "a": a, "kind": kind}
    if kind == "torsion":
        configuration = cusp_config(n, a)
    elif kind == "limit":
        payload["c"] = config.kwargs.get("c", 0)
        configuration = cusp_limit_config(n, payload["c"], a)
    else:
        configuration = _BOUNDARY[kind](n, a)
    realization = check_realization(configuration, tn_matroid(n))
    if kind in ("torsion", "limit"):
        status = realization.is_realization if kind == "torsion" else realization.nonbases_vanish
    else:
        status = realization.nonbases_vanish and bool(realization.degenerate_bases)
    if kind == "boroczky":
        conic = boroczky_conic(n, a)
        payload["conic"] = {
            "".join(map(str, m)): conic[m].to_strings() for m in CONIC_MONOMIALS if m in conic
        }
    if kind == "ceva":
        reduction = ceva_reduction(n, a)
        payload["reduction"] = {
            "transform": [[encode_value(x) for x in row] for row in reduction.transform.rows],
            "bijection": {str(k): list(v) for k, v in reduction.bijection.items()},
        }
    payload["configuration"] = configuration.to_json()
    report = VerificationReport(n, f"cusp:{kind}", status, details=realization.to_json())
    return Outcome(config.command, payload, [report])


def chain_command(config: RunConfig) -> Outcome:
    s, t = config.kwargs["s"], config.kwargs["t"]
    kmin, kmax = config.kwargs.get("window", (-4, 5))
    params = ChainParams(s, t)
    window = chain_extend(params, kmin, kmax)
    cubic = cubic_through(params)
    residuals = {k: cubic.evaluate(window[k]) for k in window.labels()}
    failed = [k for k, value in residuals.items() if value]
    payload = {
        "s": str(s),
        "t": str(t),
        "window": [window.kmin, window.kmax],
        "points": {str(k): [encode_value(x) for x in window[k]] for k in window.labels()},
        "cubic": cubic.to_json(encode_value),
        "residuals": {str(k): encode_value(v) for k, v in residuals.items()},
    }
    report = VerificationReport(None, "chain:cubic", not failed, details={"failed": failed})
    rows = [
        {"k": k, "point": " : ".join(str(x) for x in window[k]), "residual": str(residuals[k])}
        for k in window.labels()
    ]
    return Outcome(config.command, payload, [report], rows=rows)


def matroid_command(config: RunConfig) -> Outcome:
    t = config.kwargs.get("t", 0)
    special = config.kwargs.get("special")
    if special:
        configuration = special_family(special, t)
        matroid = special_matroids(special)
    else:
        n = config.levels[0]
        configuration = small_family(n, t)
        matroid = tn_matroid(n)
    realization = check_realization(configuration, matroid)
    name = matroid.kwargs.get("name", "matroid")
    payload = {"matroid": name, "t": str(t), "configuration": configuration.to_json()}
    if matroid.atom_labels:
        payload["atom_labels"] = list(matroid.atom_labels)
    level = None if special else config.levels[0]
    report = VerificationReport(
        level, f"matroid:{name}", realization.is_realization, details=realization.to_json()
    )
    return Outcome(config.command, payload, [report])


def oracle_command(config: RunConfig) -> Outcome:
    tau = config.kwargs.get("tau", 1.1j)
    tolerance = config.kwargs.get("tolerance", 1e-9)
    reports = [
        numeric_oracle(n, tau, config.qprec, tolerance=tolerance) for n in config.levels
    ]
    return Outcome(config.command, {"approximate": True}, reports)


COMMANDS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "verify": verify_command,
    "psi": psi_command,
    "qseries": qseries_command,
    "cusp": cusp_command,
    "chain": chain_command,
    "matroid": matroid_command,
    "numeric-oracle": oracle_command,
}


def run(config: RunConfig) -> int:
    """Run one configuration, write its report and return the exit code."""
    log.info(f"Starting {config.command} for levels {config.levels or '-'}.")
    try:
        outcome = COMMANDS[config.command](config)
    except ConfigError as error:
        log.error(error.message)
        return 2
    except ModmatError as error:
        log.error(f"Invalid input for {config.command}: {error.message}")
        return 2
    text = render(outcome, config.fmt)
    if config.output:
        write_atomic(config.output, text)
        print(summary(outcome))
    else:
        sys.stdout.write(text)
        print(summary(outcome), file=sys.stderr)
    log.info(f"Finished {config.command}: {'pass' if outcome.passed else 'FAIL'}.")
    return 0 if outcome.passed else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(argv)
    except ConfigError as error:
        print(f"modmat: {error.message}", file=sys.stderr)
        return 2
    logging.basicConfig(
        level=config.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    return run(config)
