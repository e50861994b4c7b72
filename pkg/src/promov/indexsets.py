"""Directed index sets: finite directed posets and the natural-number chain."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union


@dataclass(frozen=True)
class FiniteDirectedPoset:
    """Finite poset given by an explicit order table; must be directed.

    leq is row-major over the element order: leq[i][j] is True iff
    elements[i] <= elements[j].
    """

    elements: tuple
    leq_table: tuple  # tuple of tuples of bool

    def __post_init__(self):
        n = len(self.elements)
        if len(self.leq_table) != n or any(len(r) != n for r in self.leq_table):
            raise ValueError("leq table shape must match element count")
        if len(set(self.elements)) != n:
            raise ValueError("element labels must be distinct")

    def index_of(self, a) -> int:
        return self.elements.index(a)

    def leq(self, a, b) -> bool:
        return self.leq_table[self.index_of(a)][self.index_of(b)]

    def members(self) -> tuple:
        return self.elements

    def upper_set(self, a) -> list:
        return [b for b in self.elements if self.leq(a, b)]

    def greatest(self):
        """The greatest element; exists for every valid directed finite poset."""
        for g in self.elements:
            if all(self.leq(b, g) for b in self.elements):
                return g
        raise ValueError("poset has no greatest element (not directed?)")

    @staticmethod
    def chain(labels) -> "FiniteDirectedPoset":
        labels = tuple(labels)
        n = len(labels)
        table = tuple(tuple(i <= j for j in range(n)) for i in range(n))
        return FiniteDirectedPoset(labels, table)

    @staticmethod
    def from_pairs(labels, pairs) -> "FiniteDirectedPoset":
        """Reflexive-transitive closure of the given covering pairs."""
        labels = tuple(labels)
        n = len(labels)
        idx = {x: i for i, x in enumerate(labels)}
        rel = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            rel[idx[a]][idx[b]] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        return FiniteDirectedPoset(labels, tuple(tuple(r) for r in rel))


@dataclass(frozen=True)
class NatIndex:
    """The chain 0 <= 1 <= 2 <= ..., realized lazily."""

    def leq(self, a: int, b: int) -> bool:
        return a <= b


IndexSet = Union[FiniteDirectedPoset, NatIndex]

NAT = NatIndex()


def is_finite_index(idx: IndexSet) -> bool:
    return isinstance(idx, FiniteDirectedPoset)


def validate_poset(p: FiniteDirectedPoset) -> list:
    """All axiom violations: reflexivity, antisymmetry, transitivity,
    directedness.  Empty list iff p is a valid directed poset."""
    out = []
    els = p.elements
    for a in els:
        if not p.leq(a, a):
            out.append(f"reflexivity fails at {a!r}")
    for a in els:
        for b in els:
            if a != b and p.leq(a, b) and p.leq(b, a):
                out.append(f"antisymmetry fails at ({a!r}, {b!r})")
    for a in els:
        for b in els:
            for c in els:
                if p.leq(a, b) and p.leq(b, c) and not p.leq(a, c):
                    out.append(f"transitivity fails at ({a!r}, {b!r}, {c!r})")
    for a in els:
        for b in els:
            if not any(p.leq(a, u) and p.leq(b, u) for u in els):
                out.append(f"no upper bound for ({a!r}, {b!r})")
    return out


def upper_bound(idx: IndexSet, a, b):
    """Some element >= both a and b: max on the chain; on finite posets the
    first element (in declared order) of the upper-bound set."""
    if isinstance(idx, NatIndex):
        return max(a, b)
    for u in idx.elements:
        if idx.leq(a, u) and idx.leq(b, u):
            return u
    raise ValueError(f"no upper bound for ({a!r}, {b!r}); index set not directed")


@dataclass(frozen=True)
class IndexMap:
    """A plain function between index sets (no monotonicity assumed).

    Finite sources carry a table; NatIndex sources carry a closed-form rule.
    """

    source: IndexSet
    target: IndexSet
    table: Optional[dict] = None
    rule: Optional[Callable[[int], int]] = None
    rule_name: str = ""

    def __call__(self, x):
        if self.table is not None:
            return self.table[x]
        if self.rule is not None:
            return self.rule(x)
        raise ValueError("index map carries neither table nor rule")

    @staticmethod
    def identity(idx: IndexSet) -> "IndexMap":
        if isinstance(idx, FiniteDirectedPoset):
            return IndexMap(idx, idx, table={x: x for x in idx.elements})
        return IndexMap(idx, idx, rule=lambda n: n, rule_name="identity")

    @staticmethod
    def from_table(source: IndexSet, target: IndexSet, table: dict) -> "IndexMap":
        return IndexMap(source, target, table=dict(table))
