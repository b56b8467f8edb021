from enum import Enum


class GraphKind(str, Enum):
    """The three graphs built from a ring: G_R itself, its complement, its line graph."""

    UNITARY = "unitary"
    COMPLEMENT = "complement"
    LINE = "line"
