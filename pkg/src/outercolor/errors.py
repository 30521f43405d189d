"""Exception hierarchy for outercolor."""


class OutercolorError(Exception):
    pass


class ValidationError(OutercolorError, ValueError):
    """Raised when an outerplane embedding violates its invariants."""


class BadCycle(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class ChordIsCycleEdge(ValidationError):
    pass


class CrossingChords(ValidationError):
    def __init__(self, first, second):
        self.chords = (tuple(first), tuple(second))
        super().__init__(f"chords {tuple(first)} and {tuple(second)} cross")


class NoSafeChord(OutercolorError):
    """No chord of a large face avoids new triangles and protected pairs."""

    def __init__(self, face):
        self.face = tuple(face)
        super().__init__(f"no safe chord in face {self.face}")


class NoSafeAugmentation(OutercolorError):
    def __init__(self, cut_vertex, gap):
        self.cut_vertex = cut_vertex
        self.gap = tuple(gap)
        super().__init__(
            f"cannot join {self.gap} without a new triangle (cut vertex {cut_vertex})"
        )


class InconsistentAnchor(OutercolorError):
    pass


class AdjustmentFailed(OutercolorError):
    def __init__(self, face, diagnostics=""):
        self.face = tuple(face)
        self.diagnostics = diagnostics
        super().__init__(f"adjustment failed at face {self.face}: {diagnostics}")


class PreconditionViolated(OutercolorError, ValueError):
    pass


class InfeasibleSpec(OutercolorError, ValueError):
    """No outerplane graph exists for the requested (n, triangle count)."""

    def __init__(self, n, triangles):
        self.n = n
        self.triangles = triangles
        super().__init__(f"no biconnected outerplane graph with n={n} and {triangles} triangles")


class ParseError(OutercolorError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
