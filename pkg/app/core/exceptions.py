from typing import Optional, Sequence, Tuple


# Process exit codes
EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3


class BPerfError(Exception):
    """Base exception; carries the process exit code and a readable detail."""

    def __init__(self, exit_code: int, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


class GraphConstructionError(BPerfError):
    """Exception raised when an edge list cannot form a simple graph."""

    def __init__(self, pair: Tuple[int, int], reason: str):
        self.pair = pair
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Invalid edge {pair}: {reason}"
        )


class VertexOutOfRangeError(BPerfError):
    """Exception raised when a vertex index does not exist in the host graph."""

    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Vertex {vertex} is out of range for a graph on {n} vertices"
        )


class InvalidGraphError(BPerfError):
    """Exception raised when an operation is called on a graph or argument it cannot handle."""

    def __init__(self, operation: str, message: str):
        self.operation = operation
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"{operation}: {message}"
        )


class Graph6Error(BPerfError):
    """Base exception for graph6 decoding failures."""

    def __init__(self, message: str):
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Failed to parse graph6: {message}"
        )


class Graph6HeaderError(Graph6Error):
    """Exception raised when the graph6 size header is malformed."""


class Graph6TruncatedError(Graph6Error):
    """Exception raised when the adjacency payload is shorter than the header requires."""


class Graph6ByteRangeError(Graph6Error):
    """Exception raised when a byte lies outside the printable range [63, 126]."""


class Graph6TrailingDataError(Graph6Error):
    """Exception raised when bytes follow the adjacency payload."""


class EdgeListFormatError(BPerfError):
    """Exception raised when an edge-list file is malformed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Edge list line {line_number}: {message}"
        )


class InvalidOrderingError(BPerfError):
    """Exception raised when an elimination ordering is not a permutation."""

    def __init__(self, message: str):
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Invalid elimination ordering: {message}"
        )


class NotChordalError(BPerfError):
    """Exception raised when a chordal-only operation receives a graph with a hole."""

    def __init__(self, hole: Sequence[int]):
        self.hole = tuple(hole)
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Graph is not chordal; hole {list(self.hole)}"
        )


class NotPeoError(BPerfError):
    """Exception raised when an ordering fails the perfect elimination check."""

    def __init__(self, vertex: int, pair: Tuple[int, int]):
        self.vertex = vertex
        self.pair = pair
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Ordering is not a PEO: later neighbours {pair} of vertex {vertex} are non-adjacent"
        )


class ImproperColoringError(BPerfError):
    """Exception raised when two adjacent vertices share a color."""

    def __init__(self, edge: Tuple[int, int], color: int):
        self.edge = edge
        self.color = color
        super().__init__(
            exit_code=EXIT_VIOLATIONS,
            detail=f"Improper coloring: adjacent vertices {edge} both have color {color}"
        )


class InvalidColoringError(BPerfError):
    """Exception raised when a color map violates the 1..k, all-classes-used invariant."""

    def __init__(self, message: str):
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Invalid coloring: {message}"
        )


class SolverTimeoutError(BPerfError):
    """Exception raised when a solver call exceeds its time limit (outcome unknown)."""

    def __init__(self, operation: str, limit_ms: Optional[int]):
        self.operation = operation
        self.limit_ms = limit_ms
        super().__init__(
            exit_code=EXIT_INCOMPLETE,
            detail=f"{operation} exceeded the time limit of {limit_ms} ms"
        )


class BudgetExceededError(BPerfError):
    """Exception raised when an input is larger than an operation's exactness budget."""

    def __init__(self, operation: str, size: int, budget: int):
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"{operation} supports n <= {budget}, got {size}"
        )


class UnknownPatternError(BPerfError):
    """Exception raised when a pattern name is not in the catalog."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Unknown pattern '{name}'"
        )


class CatalogDefectError(BPerfError):
    """Exception raised when a compiled-in pattern fails its load-time validation."""

    def __init__(self, name: str, message: str):
        super().__init__(
            exit_code=EXIT_VIOLATIONS,
            detail=f"Catalog pattern {name}: {message}"
        )


class SiteError(BPerfError):
    """Base exception for C5 sites that break the attachment structure."""

    def __init__(self, message: str, witness_name: str, witness: Tuple[int, ...]):
        self.witness_name = witness_name
        self.witness = witness
        super().__init__(
            exit_code=EXIT_VIOLATIONS,
            detail=f"{message}; induced {witness_name} on {list(witness)}"
        )


class PartialAttachmentError(SiteError):
    """Exception raised when a vertex sees part, but not all, of the C5."""


class NonCliqueAttachmentError(SiteError):
    """Exception raised when two vertices attached to the C5 are non-adjacent."""


class StaleStructureError(BPerfError):
    """Exception raised when a site or decomposition no longer matches its graph."""

    def __init__(self, message: str):
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Stale structure: {message}"
        )


class ReductionPreconditionError(BPerfError):
    """Exception raised when the C5 reduction receives a coloring that is not a b-coloring."""

    def __init__(self, message: str):
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Reduction precondition failed: {message}"
        )


class InvalidSeedError(BPerfError):
    """Exception raised when a decomposition seed does not induce a 2K2."""

    def __init__(self, seed: Sequence[int]):
        super().__init__(
            exit_code=EXIT_USAGE,
            detail=f"Seed {list(seed)} does not induce a 2K2"
        )
