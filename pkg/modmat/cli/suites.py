import logging
from math import gcd
from typing import Callable, Dict, List

from ..cusps import boroczky_config, ceva_config, ceva_reduction, cusp_config, fourm_config
from ..errors import NoSolutionAtPrecision
from ..matroid import check_realization, tn_matroid
from ..objects import VerificationReport
from ..psi import (
    alt_check,
    closed_form_check,
    collinearity_check,
    cubic_vanishing_check,
    cusp_constant_check,
    prop_all_solve,
    psi_matrix,
)
from ..qmod import identity_suite, numeric_oracle

log = logging.getLogger("modmat.cli")

Suite = Callable[[int, int, int], List[VerificationReport]]


def _psi_suite(check) -> Suite:
    def suite(n: int, qprec: int, zprec: int) -> List[VerificationReport]:
        return [check(psi_matrix(n, qprec))]

    suite.__name__ = f"{check.__name__}_suite"
    return suite


collinearity_suite = _psi_suite(collinearity_check)
cubic_suite = _psi_suite(cubic_vanishing_check)
closed_form_suite = _psi_suite(closed_form_check)
alt_suite = _psi_suite(alt_check)


def cusp_suite(n: int, qprec: int, zprec: int) -> List[VerificationReport]:
    return [cusp_constant_check(n)]


def cusp_config_suite(n: int, qprec: int, zprec: int) -> List[VerificationReport]:
    """cusp_config(n, a) realizes T_n for every unit a."""
    matroid = tn_matroid(n)
    reports = []
    for a in range(1, n):
        if gcd(a, n) != 1:
            continue
        realization = check_realization(cusp_config(n, a), matroid)
        reports.append(
            VerificationReport(
                n, f"cusp_config:{a}", realization.is_realization, details=realization.to_json()
            )
        )
    return reports


def _degenerate(n: int, name: str, config) -> VerificationReport:
    # a boundary point: every non-basis vanishes and so does at least one basis
    realization = check_realization(config, tn_matroid(n))
    status = realization.nonbases_vanish and bool(realization.degenerate_bases)
    return VerificationReport(n, f"boundary:{name}", status, details=realization.to_json())


def boundary_suite(n: int, qprec: int, zprec: int) -> List[VerificationReport]:
    reports = []
    if n % 2 == 0:
        reports.append(_degenerate(n, "boroczky", boroczky_config(n, 1)))
    if n % 3 == 0:
        reports.append(_degenerate(n, "ceva", ceva_config(n, 1)))
        reduction = ceva_reduction(n, 1)
        reports.append(
            VerificationReport(
                n,
                "boundary:ceva_reduction",
                len(reduction.bijection) == n,
                details={"frames_tried": reduction.kwargs.get("tried")},
            )
        )
    if n % 4 == 0:
        reports.append(_degenerate(n, "fourm", fourm_config(n, 1)))
    return reports


def identities_suite(n: int, qprec: int, zprec: int) -> List[VerificationReport]:
    return identity_suite(n, qprec, zprec)


def span_suite(n: int, qprec: int, zprec: int) -> List[VerificationReport]:
    """Every σ_i is a constant combination of the a_k and b_k over the common denominator."""
    reports = []
    for i in range(1, n):
        try:
            solution = prop_all_solve(n, i, qprec)
        except NoSolutionAtPrecision as error:
            reports.append(
                VerificationReport(
                    n, f"span:{i}", False, qprec=qprec, details={"error": error.message}
                )
            )
            continue
        reports.append(
            VerificationReport(n, f"span:{i}", True, qprec=qprec, details=solution.to_json())
        )
    return reports


def numeric_suite(n: int, qprec: int, zprec: int) -> List[VerificationReport]:
    return [numeric_oracle(n, qprec=max(qprec, 30))]


SUITES: Dict[str, Suite] = {
    "collinearity": collinearity_suite,
    "cubic": cubic_suite,
    "closed_form": closed_form_suite,
    "alt": alt_suite,
    "cusp": cusp_suite,
    "cusp_config": cusp_config_suite,
    "boundary": boundary_suite,
    "identities": identities_suite,
    "span": span_suite,
    "numeric": numeric_suite,
}


def run_job(name: str, n: int, qprec: int, zprec: int) -> List[VerificationReport]:
    """One (check, level) job; any exception becomes a failed report naming its type."""
    try:
        return SUITES[name](n, qprec, zprec)
    except Exception as error:
        log.exception(f"Check {name} raised at level {n}")
        details = {"error": getattr(error, "message", str(error)), "type": type(error).__name__}
        return [VerificationReport(n, name, False, qprec=qprec, details=details)]
