"""crownkit: crown decompositions, expansion lemmas, and certificate-checked
kernelization for graph and satisfiability problems."""

from .errors import (
    ContractViolationError,
    CrownkitError,
    FormatError,
    GuardError,
    InvalidInstanceError,
    PreconditionError,
)
from .graphs import (
    BipartiteGraph,
    CnfFormula,
    Graph,
    ProblemInstance,
    ProblemTag,
    WeightedBipartiteGraph,
    complement,
    connected_components,
    induced_subgraph,
)

__all__ = [
    "BipartiteGraph",
    "CnfFormula",
    "ContractViolationError",
    "CrownkitError",
    "FormatError",
    "Graph",
    "GuardError",
    "InvalidInstanceError",
    "PreconditionError",
    "ProblemInstance",
    "ProblemTag",
    "WeightedBipartiteGraph",
    "complement",
    "connected_components",
    "induced_subgraph",
]
