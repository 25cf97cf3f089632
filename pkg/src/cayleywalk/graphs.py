"""
Graph families and their direct products.

Atomic families are circulant (cycle, complete, explicit circulant) or an
explicit 0/1 adjacency matrix.  Hypercubes and charter graphs are built as
direct products, whose adjacency is the Kronecker sum of the factor
adjacencies.  Product vertices use mixed-radix labels over ``factor_dims``
with the leftmost factor most significant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from .errors import DimensionError, SpecValidationError
from .linalg import circulant_matrix, kron_sum

__all__ = [
    "GraphSpec",
    "Graph",
    "build",
    "direct_product",
    "degree",
    "is_regular",
    "vertex_label",
    "vertex_index",
]

FAMILIES = ("cycle", "complete", "hypercube", "circulant", "charter", "explicit", "product")


@dataclass(frozen=True)
class GraphSpec:
    """Declarative description of a graph.

    Use the classmethod constructors (``GraphSpec.cycle(5)``...) or
    :meth:`from_dict` for the JSON form.  Validation happens in
    :meth:`validate`, which :func:`build` calls.
    """

    family: str
    n: Optional[int] = None
    coeffs: Optional[tuple[float, ...]] = None
    factors: Optional[tuple["GraphSpec", ...]] = None
    adjacency: Optional[tuple[tuple[float, ...], ...]] = None

    @classmethod
    def cycle(cls, n: int) -> "GraphSpec":
        return cls("cycle", n=n)

    @classmethod
    def complete(cls, n: int) -> "GraphSpec":
        return cls("complete", n=n)

    @classmethod
    def hypercube(cls, n: int) -> "GraphSpec":
        return cls("hypercube", n=n)

    @classmethod
    def charter(cls, n: int) -> "GraphSpec":
        return cls("charter", n=n)

    @classmethod
    def circulant(cls, n: int, coeffs: Sequence[float]) -> "GraphSpec":
        return cls("circulant", n=n, coeffs=tuple(float(c) for c in coeffs))

    @classmethod
    def explicit(cls, adjacency) -> "GraphSpec":
        rows = tuple(tuple(float(x) for x in row) for row in np.asarray(adjacency).tolist())
        return cls("explicit", adjacency=rows)

    @classmethod
    def product(cls, factors: Sequence["GraphSpec"]) -> "GraphSpec":
        return cls("product", factors=tuple(factors))

    def validate(self) -> None:
        """Raise SpecValidationError naming the first violated constraint."""
        fam = self.family
        if fam not in FAMILIES:
            raise SpecValidationError(f"family must be one of {FAMILIES}, got {fam!r}")
        minimum = {"cycle": 3, "complete": 2, "hypercube": 1, "charter": 2, "circulant": 1}
        if fam in minimum:
            if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
                raise SpecValidationError(f"{fam}: n must be an integer, got {self.n!r}")
            if self.n < minimum[fam]:
                raise SpecValidationError(f"{fam}: n >= {minimum[fam]} required, got n={self.n}")
        if fam == "circulant":
            if self.coeffs is None or len(self.coeffs) != self.n:
                raise SpecValidationError(f"circulant: coeffs must have length n={self.n}")
            c = self.coeffs
            if any(x not in (0.0, 1.0) for x in c):
                raise SpecValidationError("circulant: coeffs must be 0/1")
            if c[0] != 0:
                raise SpecValidationError("circulant: a_0 = 0 required (no self-loops)")
            for k in range(1, self.n):
                if c[k] != c[self.n - k]:
                    raise SpecValidationError(f"circulant: coeffs must be symmetric, a_{k} != a_{self.n - k}")
        elif fam == "explicit":
            if self.adjacency is None or len(self.adjacency) == 0:
                raise SpecValidationError("explicit: adjacency must be a non-empty square matrix")
            a = np.asarray(self.adjacency, dtype=float)
            if a.ndim != 2 or a.shape[0] != a.shape[1]:
                raise SpecValidationError(f"explicit: adjacency must be square, got shape {a.shape}")
            if not np.all((a == 0) | (a == 1)):
                raise SpecValidationError("explicit: adjacency entries must be 0/1")
            if not np.array_equal(a, a.T):
                raise SpecValidationError("explicit: adjacency must be symmetric")
            if np.any(np.diag(a) != 0):
                raise SpecValidationError("explicit: adjacency diagonal must be zero")
        elif fam == "product":
            if not self.factors:
                raise SpecValidationError("product: factor list must be non-empty")
            for f in self.factors:
                if not isinstance(f, GraphSpec):
                    raise SpecValidationError(f"product: factors must be GraphSpec, got {type(f).__name__}")
                f.validate()

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"family": self.family}
        if self.n is not None:
            d["n"] = int(self.n)
        if self.coeffs is not None:
            d["coeffs"] = [int(c) if float(c).is_integer() else c for c in self.coeffs]
        if self.factors is not None:
            d["factors"] = [f.to_dict() for f in self.factors]
        if self.adjacency is not None:
            d["adjacency"] = [[int(x) for x in row] for row in self.adjacency]
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "GraphSpec":
        if not isinstance(d, dict):
            raise SpecValidationError(f"graph spec must be a JSON object, got {type(d).__name__}")
        if "family" not in d:
            raise SpecValidationError("graph spec is missing 'family'")
        unknown = set(d) - {"family", "n", "coeffs", "factors", "adjacency"}
        if unknown:
            raise SpecValidationError(f"graph spec has unknown keys {sorted(unknown)}")
        fam = d["family"]
        n = d.get("n")
        coeffs = d.get("coeffs")
        factors = d.get("factors")
        adjacency = d.get("adjacency")
        try:
            if fam == "circulant" and n is None and coeffs is not None:
                n = len(coeffs)
            spec = cls(
                family=fam,
                n=n,
                coeffs=None if coeffs is None else tuple(float(c) for c in coeffs),
                factors=None if factors is None else tuple(cls.from_dict(f) for f in factors),
                adjacency=None if adjacency is None else tuple(tuple(float(x) for x in row) for row in adjacency),
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, SpecValidationError):
                raise
            raise SpecValidationError(f"malformed graph spec: {exc}") from exc
        spec.validate()
        return spec

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "GraphSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecValidationError(f"graph spec is not valid JSON: {exc}") from exc
        return cls.from_dict(data)


@dataclass(frozen=True, eq=False)
class Graph:
    """A built graph.

    ``factors`` lists the atomic factor graphs of a product (empty for an
    atomic graph); ``factor_dims`` is their vertex counts, or the singleton
    ``(vertex_count,)``.
    """

    spec: GraphSpec
    adjacency: np.ndarray
    factor_dims: tuple[int, ...]
    factors: tuple["Graph", ...] = field(default=())

    @property
    def vertex_count(self) -> int:
        return int(self.adjacency.shape[0])

    def atoms(self) -> tuple["Graph", ...]:
        """Atomic factors, or ``(self,)`` for an atomic graph."""
        return self.factors if self.factors else (self,)


def _atomic(spec: GraphSpec, adjacency: np.ndarray) -> Graph:
    adjacency = np.asarray(adjacency, dtype=float)
    adjacency.setflags(write=False)
    return Graph(spec=spec, adjacency=adjacency, factor_dims=(adjacency.shape[0],))


def build(spec: GraphSpec) -> Graph:
    """Construct the adjacency matrix described by `spec`."""
    spec.validate()
    fam = spec.family
    if fam == "cycle":
        c = np.zeros(spec.n)
        c[1] = c[-1] = 1.0
        return _atomic(spec, circulant_matrix(c))
    if fam == "complete":
        return _atomic(spec, np.ones((spec.n, spec.n)) - np.eye(spec.n))
    if fam == "circulant":
        return _atomic(spec, circulant_matrix(spec.coeffs))
    if fam == "explicit":
        return _atomic(spec, np.asarray(spec.adjacency, dtype=float))
    if fam == "hypercube":
        k2 = build(GraphSpec.complete(2))
        return _relabel(direct_product([k2] * spec.n), spec)
    if fam == "charter":
        # a 2-cycle collapses to the single edge K_2, making charter(2) the square
        ring = GraphSpec.cycle(spec.n) if spec.n >= 3 else GraphSpec.complete(2)
        g = direct_product([build(GraphSpec.complete(2)), build(ring)])
        return _relabel(g, spec)
    return _relabel(direct_product([build(f) for f in spec.factors]), spec)


def _relabel(g: Graph, spec: GraphSpec) -> Graph:
    return Graph(spec=spec, adjacency=g.adjacency, factor_dims=g.factor_dims, factors=g.factors)


def direct_product(factors: Sequence[Graph]) -> Graph:
    """Direct product: adjacency ``sum_j I x ... x A_j x ... x I``.

    Nested products are flattened, so ``factors`` of the result are atomic.
    """
    if len(factors) == 0:
        raise DimensionError("direct_product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    atoms = tuple(a for g in factors for a in g.atoms())
    adjacency = kron_sum([a.adjacency for a in atoms])
    adjacency.setflags(write=False)
    spec = GraphSpec.product([g.spec for g in factors])
    return Graph(
        spec=spec,
        adjacency=adjacency,
        factor_dims=tuple(a.vertex_count for a in atoms),
        factors=atoms,
    )


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise DimensionError(f"vertex {v} out of range for graph on {g.vertex_count} vertices")
    return int(round(g.adjacency[v].sum()))


def is_regular(g: Graph) -> Optional[int]:
    """Common degree if every vertex has the same degree, else None."""
    rows = np.rint(g.adjacency.sum(axis=1)).astype(int)
    if np.all(rows == rows[0]):
        return int(rows[0])
    return None


def vertex_label(g: Graph, index: int) -> tuple[int, ...]:
    """Mixed-radix label ``(i_1, ..., i_d)`` of a product vertex."""
    if not 0 <= index < g.vertex_count:
        raise DimensionError(f"vertex {index} out of range for graph on {g.vertex_count} vertices")
    return tuple(int(i) for i in np.unravel_index(index, g.factor_dims))


def vertex_index(g: Graph, label: Sequence[int]) -> int:
    if len(label) != len(g.factor_dims):
        raise DimensionError(f"label of length {len(label)} vs {len(g.factor_dims)} factors")
    return int(np.ravel_multi_index(tuple(label), g.factor_dims))
