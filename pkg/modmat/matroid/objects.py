from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ConfigError, LabelOutOfRange, ZeroPoint
from ..exactnum import BiPoly, BiRat, Cyclotomic

Triple = Tuple[int, int, int]
Point = Tuple[Any, Any, Any]


class Matroid3:
    """A rank 3 matroid on {0, ..., ground_size - 1}, given by its non-bases."""

    def __init__(
        self, ground_size: int, nonbases: Iterable[Iterable[int]], *, atom_labels=None, **kwargs
    ):
        cleaned = set()
        for triple in nonbases:
            triple = tuple(sorted(triple))
            if len(triple) != 3 or len(set(triple)) != 3:
                raise LabelOutOfRange(f"A non-basis needs three distinct elements, got {triple}.")
            if triple[0] < 0 or triple[2] >= ground_size:
                raise LabelOutOfRange(f"{triple} is outside the ground set of size {ground_size}.")
            cleaned.add(triple)
        self.ground_size = ground_size
        self.nonbases = frozenset(cleaned)
        # external names of the atoms, when they differ from the 0-based labels
        self.atom_labels = tuple(atom_labels) if atom_labels else None
        self.kwargs = kwargs

    def is_nonbasis(self, triple: Iterable[int]) -> bool:
        return tuple(sorted(triple)) in self.nonbases

    def __eq__(self, other):
        if not isinstance(other, Matroid3):
            return NotImplemented
        return self.ground_size == other.ground_size and self.nonbases == other.nonbases

    def __hash__(self):
        return hash((self.ground_size, self.nonbases))

    def __repr__(self):
        name = self.kwargs.get("name", "Matroid3")
        return f"<{name} ground_size={self.ground_size} nonbases={len(self.nonbases)}>"


def field_of(value: Any) -> str:
    if isinstance(value, Cyclotomic):
        return f"cyclotomic:{value.order}"
    if isinstance(value, (BiRat, BiPoly)):
        return "bivariate"
    return "rational"


def _prepare(value: Any) -> Any:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, BiPoly):
        return BiRat(value)
    return value


def normalize_point(point: Sequence[Any]) -> Point:
    """Rescale so that the first nonzero coordinate is 1."""
    coords = tuple(_prepare(x) for x in point)
    if len(coords) != 3:
        raise ZeroPoint(f"A point of the projective plane needs 3 coordinates, got {len(coords)}.")
    lead = next((x for x in coords if x), None)
    if lead is None:
        raise ZeroPoint("(0:0:0) is not a point of the projective plane.")
    if lead == 1:
        return coords
    return tuple(x / lead for x in coords)


class Configuration:
    """Labelled points of the projective plane, stored with the first nonzero coordinate 1."""

    def __init__(self, points: Iterable[Sequence[Any]], field: Optional[str] = None):
        self.points: Tuple[Point, ...] = tuple(normalize_point(p) for p in points)
        if field is None:
            fields = {field_of(x) for p in self.points for x in p} - {"rational"}
            field = fields.pop() if len(fields) == 1 else "rational"
        self.field = field

    @property
    def labels(self) -> range:
        return range(len(self.points))

    def __len__(self):
        return len(self.points)

    def __getitem__(self, label: int) -> Point:
        if not 0 <= label < len(self.points):
            raise LabelOutOfRange(f"Label {label} is not in 0..{len(self.points) - 1}.")
        return self.points[label]

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return len(self) == len(other) and all(
            a == b for p, q in zip(self.points, other.points) for a, b in zip(p, q)
        )

    __hash__ = None

    def map_coordinates(self, func) -> "Configuration":
        return Configuration(
            ([func(x) for x in p] for p in self.points), field=self.field
        )

    def to_json(self) -> Dict[str, Any]:
        points = [[encode_value(x) for x in p] for p in self.points]
        return {"field": self.field, "points": points}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Configuration":
        field = data.get("field", "rational")
        try:
            points = [[_decode(x, field) for x in p] for p in data["points"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"Malformed configuration: {exc}") from exc
        return cls(points, field=field)

    def __repr__(self):
        return f"<Configuration field={self.field} points={len(self.points)}>"


def _encode_poly(poly: BiPoly) -> List[List[Any]]:
    return [[i, j, str(c)] for (i, j), c in sorted(poly.terms.items())]


def encode_value(value: Any) -> Any:
    if isinstance(value, Cyclotomic):
        return value.to_strings()
    if isinstance(value, BiRat):
        return {"num": _encode_poly(value.num), "den": _encode_poly(value.den)}
    return str(Fraction(value))


def _decode(value: Any, field: str) -> Any:
    if field.startswith("cyclotomic:"):
        return Cyclotomic.from_strings(int(field.split(":", 1)[1]), value)
    if field == "bivariate":
        num = BiPoly({(i, j): Fraction(c) for i, j, c in value["num"]})
        den = BiPoly({(i, j): Fraction(c) for i, j, c in value["den"]})
        return BiRat(num, den)
    if field == "rational":
        return Fraction(value)
    raise ValueError(f"unknown field {field!r}")


class RealizationReport:
    def __init__(
        self,
        failed_nonbases: List[Triple],
        degenerate_bases: List[Triple],
        **kwargs,
    ) -> None:
        self.failed_nonbases = failed_nonbases
        self.degenerate_bases = degenerate_bases
        self.kwargs = kwargs

    @property
    def is_realization(self) -> bool:
        return not self.failed_nonbases and not self.degenerate_bases

    @property
    def nonbases_vanish(self) -> bool:
        return not self.failed_nonbases

    def to_json(self) -> Dict[str, Any]:
        return {
            "is_realization": self.is_realization,
            "failed_nonbases": [list(t) for t in self.failed_nonbases],
            "degenerate_bases": [list(t) for t in self.degenerate_bases],
            **{k: v for k, v in self.kwargs.items() if v is not None},
        }

    def __repr__(self):
        return (
            f"<RealizationReport is_realization={self.is_realization} "
            f"failed_nonbases={len(self.failed_nonbases)} "
            f"degenerate_bases={len(self.degenerate_bases)}>"
        )
