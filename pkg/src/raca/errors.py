"""Exception types shared across the package.

The CLI maps these onto exit codes: DomainError and malformed input exit 3,
mathematical failures exit 2, ResourceLimitError exits 4.
"""


class RacaError(Exception):
    pass


class DomainError(RacaError):
    """Input outside the mathematical domain of an operation."""


class ResourceLimitError(RacaError):
    """Computation would exceed the supported problem size."""


class PolyhedronError(RacaError):
    """Structural validation failure; carries a stable error code."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


# validation codes, in the order the checks run
BAD_INDEX = "bad_index"
BAD_FACE = "bad_face"
EDGE_FACE_COUNT = "edge_face_count"
MULTI_ADJACENT_FACES = "multi_adjacent_faces"
DISCONNECTED = "disconnected"
NOT_3_CONNECTED = "not_3_connected"
BAD_DEGREE = "bad_degree"
EULER = "euler"
