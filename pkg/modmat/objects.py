from typing import Any, Dict, Optional


class VerificationReport:
    """Outcome of one check at one level.

    ``qprec`` is the q-order the check was carried to and ``residual_order`` the first q-power
    where a residual survived, or None when everything vanished to that order.
    """

    def __init__(
        self,
        level: Optional[int],
        check: str,
        status: bool,
        *,
        qprec: Optional[int] = None,
        residual_order: Optional[int] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.level = level
        self.check = check
        self.status = bool(status)
        self.qprec = qprec
        self.residual_order = residual_order
        self.details = details or {}

    def __bool__(self):
        return self.status

    def to_json(self) -> Dict[str, Any]:
        return {
            "level": self.level,
            "qprec": self.qprec,
            "check": self.check,
            "status": self.status,
            "residual_order": self.residual_order,
            "details": self.details,
        }

    def row(self) -> Dict[str, Any]:
        """A flat record for the tabular outputs."""
        return {
            "level": self.level,
            "check": self.check,
            "status": "pass" if self.status else "FAIL",
            "qprec": self.qprec,
            "residual_order": self.residual_order,
        }

    def __repr__(self):
        return (
            f"<VerificationReport level={self.level} check={self.check} "
            f"status={self.status} residual_order={self.residual_order}>"
        )
