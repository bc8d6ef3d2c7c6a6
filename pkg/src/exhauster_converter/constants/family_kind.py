from enum import Enum


class FamilyKind(str, Enum):
    """The four min-max / max-min representations a family can stand for."""
    UPPER_EXHAUSTER = "upper_exhauster"
    LOWER_EXHAUSTER = "lower_exhauster"
    UPPER_COEXHAUSTER = "upper_coexhauster"
    LOWER_COEXHAUSTER = "lower_coexhauster"

    @property
    def is_upper(self) -> bool:
        return self in (FamilyKind.UPPER_EXHAUSTER, FamilyKind.UPPER_COEXHAUSTER)

    @property
    def is_coexhauster(self) -> bool:
        return self in (FamilyKind.UPPER_COEXHAUSTER, FamilyKind.LOWER_COEXHAUSTER)

    @property
    def dual(self) -> "FamilyKind":
        """Upper <-> lower, keeping the exhauster/coexhauster class."""
        return _DUALS[self]

    def vertex_dim(self, space_dim: int) -> int:
        """Length of a stored vertex: n for exhausters, n+1 for coexhausters."""
        return space_dim + 1 if self.is_coexhauster else space_dim


_DUALS = {
    FamilyKind.UPPER_EXHAUSTER: FamilyKind.LOWER_EXHAUSTER,
    FamilyKind.LOWER_EXHAUSTER: FamilyKind.UPPER_EXHAUSTER,
    FamilyKind.UPPER_COEXHAUSTER: FamilyKind.LOWER_COEXHAUSTER,
    FamilyKind.LOWER_COEXHAUSTER: FamilyKind.UPPER_COEXHAUSTER,
}
