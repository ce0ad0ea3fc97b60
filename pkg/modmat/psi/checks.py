import logging
from itertools import combinations
from math import gcd
from typing import List, Tuple

from ..chain import ChainParams, cubic_through
from ..cusps import cusp_config, galois_transport
from ..errors import IndexConstraintViolated
from ..exactnum import QSeries, det3
from ..matroid import tn_matroid
from ..objects import VerificationReport
from ..qmod import residual_order
from .objects import PsiMatrix
from .psi import ak_bk_alt, psi_matrix, recover_st

log = logging.getLogger("modmat.psi")


def _label(triple) -> str:
    return ",".join(map(str, triple))


def collinearity_check(m: PsiMatrix, basis_sample: int = 20) -> VerificationReport:
    """Every non-basis determinant vanishes; a sample of bases spread over the labels does not."""
    matroid = tn_matroid(m.n)
    failed = []
    orders = []
    for triple in sorted(matroid.nonbases):
        value = det3([m[k] for k in triple])
        order = value.leading_order()
        if order is not None:
            failed.append(_label(triple))
            orders.append(order)
    bases = [t for t in combinations(range(m.n), 3) if t not in matroid.nonbases]
    if len(bases) > basis_sample:
        last = len(bases) - 1
        bases = [bases[i * last // max(1, basis_sample - 1)] for i in range(basis_sample)]
    leading = {}
    vanishing = []
    for triple in bases:
        order = det3([m[k] for k in triple]).leading_order()
        leading[_label(triple)] = order
        if order is None:
            vanishing.append(_label(triple))
    log.debug(
        f"ψ_{m.n}: {len(failed)} of {len(matroid.nonbases)} non-bases fail, "
        f"{len(vanishing)} of {len(leading)} sampled bases vanish."
    )
    return VerificationReport(
        m.n,
        "collinearity",
        not failed and not vanishing,
        qprec=m.qprec,
        residual_order=min(orders) if orders else None,
        details={
            "nonbases": len(matroid.nonbases),
            "failed_nonbases": failed,
            "bases_checked": len(leading),
            "vanishing_bases": vanishing,
            "basis_leading_orders": leading,
        },
    )


def _params(m: PsiMatrix) -> ChainParams:
    s, t = recover_st(m)
    return ChainParams(s, t, validate=False)


def cubic_vanishing_check(m: PsiMatrix) -> VerificationReport:
    """The chain cubic at (s(τ), t(τ)) vanishes on every row."""
    cubic = cubic_through(_params(m))
    residuals = []
    failed = []
    for k, row in enumerate(m.rows):
        value = cubic.evaluate(row)
        if isinstance(value, QSeries):
            residuals.append(value)
            if value:
                failed.append(k)
    return VerificationReport(
        m.n,
        "cubic",
        not failed,
        qprec=m.qprec,
        residual_order=residual_order(residuals),
        details={"failed_rows": failed},
    )


def closed_form_residuals(m: PsiMatrix) -> List[Tuple[str, QSeries]]:
    """Rows 4, 5, n-2 and n-4 against the chain closed forms, cross-multiplied."""
    s, t = recover_st(m)
    n = m.n
    shared = (s - 1) * (1 + s - t)
    p4, p5, p_minus2, p_minus4 = m[4], m[5], m[n - 2], m[n - 4]
    return [
        ("p4 second", p4[1] * (t - 1) - s * t),
        ("p4 third", p4[2] * (t - 1) - s),
        ("p5 second", p5[1] * shared - s * (t - 1)),
        ("p5 third", p5[2] * shared - s * s),
        ("p-2 second", p_minus2[1]),
        ("p-2 third", p_minus2[2] * (s - 1) - s),
        ("p-4 third", p_minus4[2] - 1),
    ]


def closed_form_check(m: PsiMatrix) -> VerificationReport:
    residuals = closed_form_residuals(m)
    failed = [name for name, value in residuals if value]
    return VerificationReport(
        m.n,
        "closed_form",
        not failed,
        qprec=m.qprec,
        residual_order=residual_order(value for _, value in residuals),
        details={"failed": failed},
    )


def alt_check(m: PsiMatrix) -> VerificationReport:
    """The shifted formulas for a_k, b_k agree with the matrix at every admissible k."""
    failed = []
    residuals = []
    checked = []
    skipped = []
    for k in range(3, m.n - 3):
        try:
            a_alt, b_alt = ak_bk_alt(m.n, k, m.qprec)
        except IndexConstraintViolated:
            skipped.append(k)
            continue
        for name, alt, entry in (("a", a_alt, m.a(k)), ("b", b_alt, m.b(k))):
            residual = alt - entry
            residuals.append(residual)
            if residual:
                failed.append(f"{name}{k}")
        checked.append(k)
    return VerificationReport(
        m.n,
        "alt",
        not failed,
        qprec=m.qprec,
        residual_order=residual_order(residuals),
        details={"checked": checked, "skipped": skipped, "failed": failed},
    )


def cusp_constant_check(n: int) -> VerificationReport:
    """The q^0 rows of ψ_n are the cusp configuration, for ζ and all its Galois conjugates."""
    constant = psi_matrix(n, 1).constant_config()
    mismatched = {}
    units = [d for d in range(1, n) if gcd(d, n) == 1]
    for d in units:
        expected = cusp_config(n, d)
        observed = constant if d == 1 else galois_transport(constant, d)
        rows = [k for k in range(n) if observed[k] != expected[k]]
        if rows:
            mismatched[str(d)] = rows
    return VerificationReport(
        n,
        "cusp",
        not mismatched,
        qprec=1,
        details={"units": units, "mismatched_rows": mismatched},
    )
