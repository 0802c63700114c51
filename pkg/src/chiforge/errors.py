"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ChiForgeError(Exception):
    """Base class for all errors raised by chiforge."""


class GraphError(ChiForgeError, ValueError):
    """Invalid graph construction (bad endpoint, loop, empty expansion part)."""


class ColoringError(ChiForgeError, ValueError):
    """A coloring whose domain does not match the graph."""


class ParseError(ChiForgeError, ValueError):
    """Malformed graph6 or DIMACS input.

    ``offset`` is the byte offset inside the line (graph6) and ``line`` the
    1-based line number when reading a file.
    """

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.reason = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class BudgetExceeded(ChiForgeError):
    """An exact search ran out of nodes; carries the best bound found so far."""

    def __init__(self, message: str, best=None, certificate=None):
        super().__init__(message)
        self.best = best
        self.certificate = certificate


class NotInClass(ChiForgeError):
    """Input violates a class precondition; ``witness`` is the induced pattern."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class StructureViolation(ChiForgeError):
    """A structural claim failed on the input.

    ``claim`` names the failed property and ``vertices`` the offending vertices.
    Only reachable when the input is outside the class it was assumed to be in.
    """

    def __init__(self, claim: str, vertices=(), detail: str = ""):
        self.claim = claim
        self.vertices = tuple(vertices)
        msg = f"{claim} violated at vertices {list(self.vertices)}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotTwoK2Free(StructureViolation):
    pass


class Disconnected(ChiForgeError):
    pass


class NotCograph(NotInClass):
    pass


class NotChordal(NotInClass):
    pass


class NotPseudoSplit(NotInClass):
    pass


class NotMultipartite(NotInClass):
    pass


class BoundViolated(NotInClass):
    def __init__(self, chi: int, bound: int):
        super().__init__(f"chromatic number {chi} exceeds asserted bound {bound}")
        self.chi = chi
        self.bound = bound
