"""Problem class taxonomy: nine transformation cases x alignment x front shape"""

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from qbench.core.exceptions import ValidationError
from qbench.rng import CLASS_NAME_PATTERN, validate_class_name

DEFAULT_KAPPA = 1e3


class Shape(str, Enum):
    """Front shape suffix and the power s of the quadratic form"""

    CONVEX = "C"
    LINEAR = "I"
    CONCAVE = "J"

    @property
    def power(self) -> float:
        return {"C": 2.0, "I": 1.0, "J": 0.5}[self.value]


class Spectrum(str, Enum):
    """Eigenvalue spectrum kind of non-identity diagonal factors"""

    ELLIPSOID = "ellipsoid"
    CIGAR = "cigar"
    DISCUS = "discus"


# Structural recipe per case: (U1 random, U2 random, U shared, D1 non-identity, D2 non-identity)
CASE_TABLE: dict[int, tuple[bool, bool, bool, bool, bool]] = {
    1: (False, False, False, False, False),
    2: (False, False, False, False, True),
    3: (False, False, False, True, True),
    4: (False, False, False, True, True),
    5: (False, True, False, False, True),
    6: (False, True, False, True, True),
    7: (True, True, True, True, True),
    8: (True, True, True, True, True),
    9: (True, True, False, True, True),
}

SHARED_SPECTRUM_CASES = frozenset({3, 7})
REDRAW_EQUAL_SPECTRUM_CASES = frozenset({4, 8})
DUPLICATION_CASES = frozenset({2, 3, 4})


@dataclass(frozen=True)
class ProblemClass:
    """One of the 54 classes, at a given dimension and conditioning"""

    case_id: int
    aligned: bool
    shape: Shape
    dimension: int
    kappa: float = DEFAULT_KAPPA
    spectrum: Spectrum = Spectrum.ELLIPSOID

    def __post_init__(self) -> None:
        if self.case_id not in CASE_TABLE:
            raise ValidationError(f"Case must be in 1..9, got {self.case_id}")
        if self.dimension < 2:
            raise ValidationError(f"Dimension must be at least 2, got {self.dimension}")
        if not self.kappa > 1:
            raise ValidationError(f"Conditioning must exceed 1, got {self.kappa}")
        object.__setattr__(self, "shape", Shape(self.shape))
        object.__setattr__(self, "spectrum", Spectrum(self.spectrum))

    @classmethod
    def from_name(
        cls,
        name: str,
        dimension: int,
        kappa: float = DEFAULT_KAPPA,
        spectrum: Spectrum | str = Spectrum.ELLIPSOID,
    ) -> "ProblemClass":
        case_id, aligned, shape = parse_class_name(name)
        return cls(case_id, aligned, shape, dimension, kappa, Spectrum(spectrum))

    @property
    def name(self) -> str:
        return f"{self.case_id}{'|' if self.aligned else '/'}{self.shape.value}"

    @property
    def power(self) -> float:
        return self.shape.power

    @property
    def needs_duplication(self) -> bool:
        return not self.aligned and self.case_id in DUPLICATION_CASES

    @property
    def separable(self) -> bool:
        return self.case_id <= 4


def parse_class_name(name: str) -> tuple[int, bool, Shape]:
    """Split a class name like ``7|C`` into (case, aligned, shape)"""
    validate_class_name(name)
    match = CLASS_NAME_PATTERN.match(name)
    assert match is not None
    return int(match.group(1)), match.group(2) == "|", Shape(match.group(3))


def all_class_names() -> list[str]:
    """The 54 class names in case, alignment, shape order"""
    return [f"{case}{bar}{shape.value}" for case in range(1, 10) for bar in "|/" for shape in Shape]


def _case(name: str) -> int:
    return int(name[0])


CLASS_GROUPS: dict[str, Callable[[str], bool]] = {
    "all": lambda name: True,
    "C": lambda name: name[2] == "C",
    "I": lambda name: name[2] == "I",
    "J": lambda name: name[2] == "J",
    "aligned": lambda name: name[1] == "|",
    "non-aligned": lambda name: name[1] == "/",
    "separable": lambda name: _case(name) <= 4,
    "non-separable": lambda name: _case(name) >= 5,
    "rotated": lambda name: _case(name) >= 7,
    "separable-aligned": lambda name: _case(name) <= 4 and name[1] == "|",
}

TAXONOMY_GROUPS = ["C", "I", "J", "aligned", "non-aligned", "separable", "non-separable", "rotated"]

GROUPINGS: dict[str, list[str]] = {
    "shape": ["C", "I", "J"],
    "alignment": ["aligned", "non-aligned"],
    "separability": ["separable", "non-separable"],
    "rotation": ["separable-aligned", "rotated"],
    "taxonomy": TAXONOMY_GROUPS,
    "all": ["all"],
}


def group_members(group: str) -> list[str]:
    """Class names belonging to a named group"""
    if group not in CLASS_GROUPS:
        raise ValidationError(f"Unknown class group '{group}'")
    predicate = CLASS_GROUPS[group]
    return [name for name in all_class_names() if predicate(name)]


def expand_class_names(names: list[str]) -> list[str]:
    """Resolve class and group names into a de-duplicated list of class names.

    Order follows first appearance; group members follow the canonical order.
    """
    resolved: list[str] = []
    for name in names:
        members = group_members(name) if name in CLASS_GROUPS else None
        if members is None:
            validate_class_name(name)
            members = [name]
        for member in members:
            if member not in resolved:
                resolved.append(member)
    if not resolved:
        raise ValidationError("At least one problem class is required")
    return resolved
