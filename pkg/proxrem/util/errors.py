# -*- coding: utf-8 -*-
"""Exception hierarchy and process exit codes for proxrem."""

from typing import Any, Optional

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4
EXIT_VIOLATION = 5


class ProxremError(Exception):
    """Base class of every error raised by proxrem."""

    exit_code = EXIT_UNEXPECTED


class GraphError(ProxremError, ValueError):
    """Invalid input to a graph builder or query."""

    exit_code = EXIT_IO

    def __init__(self, msg: str, offending: Any = None):
        super().__init__(msg)
        self.offending = offending


class DisconnectedGraphError(GraphError):
    """A distance computation reached only part of the graph."""

    def __init__(self, msg: str, unreached: int):
        super().__init__(msg, unreached)
        self.unreached = unreached


class ForbiddenSubgraphError(GraphError):
    """The graph contains a subgraph the operation requires to be absent."""

    def __init__(self, msg: str, witness):
        super().__init__(msg, witness)
        self.witness = witness


class FieldError(ProxremError, ValueError):
    """Unsupported or invalid finite field order."""

    exit_code = EXIT_USAGE


class ConstructionIntegrityError(ProxremError, RuntimeError):
    """A built graph failed one of the properties its family guarantees."""

    exit_code = EXIT_VALIDATION

    def __init__(self, claim: str, expected: Any = None, measured: Any = None,
                 detail: Optional[str] = None):
        msg = f"construction claim '{claim}' failed: expected {expected}, measured {measured}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.claim = claim
        self.expected = expected
        self.measured = measured


class MissingClassFlagError(ProxremError):
    """A bound needs a class flag (triangle/C4-free) that the report lacks."""

    def __init__(self, bound_id: str, flag: str):
        super().__init__(f"bound '{bound_id}' needs the '{flag}' flag, which is not set in the report")
        self.bound_id = bound_id
        self.flag = flag


class BoundCatalogError(ProxremError):
    """The bound catalog data is malformed."""


class UnknownBoundError(ProxremError, KeyError):
    """A requested bound id is not in the catalog."""

    exit_code = EXIT_USAGE

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown bound"


class ExpressionError(ProxremError, ValueError):
    """A bound expression failed to parse or evaluate."""


class Graph6Error(ProxremError, ValueError):
    """Malformed graph6 input."""

    exit_code = EXIT_IO


class CorpusError(ProxremError):
    """A corpus request is out of the supported range."""

    exit_code = EXIT_USAGE


class FamilyError(ProxremError, ValueError):
    """Unknown construction family or parameters outside its range."""

    exit_code = EXIT_USAGE
