"""Isomorphisms by generator permutations, graded automorphism permutation
groups, and the rooted layered graph Mon(A) of non-zero monomials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .algebra import MonomialAlgebra, Presentation, PresentationAlgebra, as_algebra
from .errors import AlphabetTooLarge, DepthMismatch
from .words import Alphabet, Exactness, Word

MAX_PERMUTATION_LETTERS = 8

Perm = Tuple[int, ...]


def apply_perm(sigma: Perm, u: Word) -> Word:
    return tuple(sigma[a] for a in u)


def compose(s: Perm, t: Perm) -> Perm:
    """(s o t)(i) = s[t[i]]."""
    return tuple(s[i] for i in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def _check_size(m):
    if m > MAX_PERMUTATION_LETTERS:
        raise AlphabetTooLarge(f"{m} letters exceeds the permutation budget "
                               f"({MAX_PERMUTATION_LETTERS})")


def iso_monomial(pA: Presentation, pB: Presentation) -> Optional[Perm]:
    """A permutation sigma with sigma(forbidden_A) = forbidden_B, or None.

    Both presentations are normalized first (letters that are themselves
    forbidden are deleted); sigma refers to the normalized alphabets. For
    monomial algebras without redundant generators None proves
    non-isomorphism.
    """
    a, b = pA.normalized(), pB.normalized()
    if a.m != b.m:
        return None
    _check_size(a.m)
    target = b.forbidden
    if sorted(map(len, a.forbidden)) != sorted(map(len, target)):
        return None
    for sigma in itertools.permutations(range(a.m)):
        if frozenset(apply_perm(sigma, u) for u in a.forbidden) == target:
            return sigma
    return None


@dataclass(frozen=True)
class IsoSurvivors:
    survivors: Tuple[Perm, ...]
    N: int
    exactness: Exactness
    witness_degree: Optional[int] = None  # first degree with no survivors

    @property
    def isomorphic_evidence(self) -> bool:
        return bool(self.survivors)

    def verdict(self) -> str:
        if not self.survivors:
            return f"NOT ISOMORPHIC (witness degree <= {self.witness_degree})"
        if self.exactness is Exactness.EXACT:
            return "ISOMORPHIC"
        return f"NO OBSTRUCTION UP TO DEGREE {self.N}"

    def to_json(self):
        return {
            "verdict": self.verdict(),
            "survivors": [list(s) for s in self.survivors],
            "N": self.N,
            "witness_degree": self.witness_degree,
            "exactness": self.exactness.value,
        }


def iso_truncated(A, B, N: int) -> IsoSurvivors:
    """Permutations sigma with sigma(L_n(A)) = L_n(B) for every n <= N."""
    A, B = as_algebra(A), as_algebra(B)
    A.check_length(N)
    B.check_length(N)
    exactness = A.exactness & B.exactness
    if A.m != B.m:
        return IsoSurvivors((), N, exactness, 0)
    _check_size(A.m)
    alive = list(itertools.permutations(range(A.m)))
    for n in range(1, N + 1):
        la, lb = A.level(n), B.level(n)
        if len(la) != len(lb):
            return IsoSurvivors((), N, exactness, n)
        alive = [s for s in alive if all(apply_perm(s, u) in lb for u in la)]
        if not alive:
            return IsoSurvivors((), N, exactness, n)
    # for presentations, agreement through degree d is agreement everywhere
    if exactness is Exactness.EXACT:
        for X in (A, B):
            if isinstance(X, PresentationAlgebra) and N < X.presentation.d:
                exactness = Exactness.HEURISTIC
    return IsoSurvivors(tuple(alive), N, exactness)


def _generate(gens: Sequence[Perm], m: int):
    ident = tuple(range(m))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


@dataclass(frozen=True)
class AutGroup:
    elements: Tuple[Perm, ...]
    generators: Tuple[Perm, ...]
    m: int
    N: int
    exactness: Exactness
    projectively_simple: bool = False

    @property
    def order(self):
        return len(self.elements)

    def shape(self) -> Optional[str]:
        if not self.projectively_simple:
            return None
        return f"(G_m)^{self.m} ⋊ H, |H| = {self.order}"

    def to_json(self):
        return {
            "order": str(self.order),
            "elements": [list(s) for s in self.elements],
            "generators": [list(s) for s in self.generators],
            "N": self.N,
            "torus_rank": self.m,
            "shape": self.shape(),
            "exactness": self.exactness.value,
        }


def graded_aut_permutations(A, N: int, projectively_simple: bool = False) -> AutGroup:
    """The permutations of the generators preserving every L_n(A), n <= N.

    The torus part of the graded automorphism group is never enumerated; the
    semidirect-product shape is only annotated when the caller declares the
    algebra projectively simple.
    """
    res = iso_truncated(A, A, N)
    elements = tuple(sorted(res.survivors))
    m = as_algebra(A).m
    gens: List[Perm] = []
    span = {tuple(range(m))}
    for s in elements:
        if s not in span:
            gens.append(s)
            span = _generate(gens, m)
    return AutGroup(elements, tuple(gens), m, N, res.exactness, projectively_simple)


# --------------------------------------------------------------------------
# Mon(A)


@dataclass(frozen=True)
class MonGraph:
    """Rooted layered tree of non-zero monomials; u -> ux when ux is non-zero."""

    alphabet: Alphabet
    layers: Tuple[Tuple[Word, ...], ...]
    exactness: Exactness

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def children(self, u: Word) -> List[Word]:
        k = len(u)
        if k >= self.depth:
            return []
        nxt = self._layer_sets[k + 1]
        return [u + (x,) for x in range(len(self.alphabet)) if u + (x,) in nxt]

    @property
    def _layer_sets(self):
        cached = self.__dict__.get("_ls")
        if cached is None:
            cached = [frozenset(l) for l in self.layers]
            object.__setattr__(self, "_ls", cached)
        return cached

    def edges(self):
        for layer in self.layers[:-1]:
            for u in layer:
                for v in self.children(u):
                    yield u, v

    def layer_sizes(self) -> Tuple[int, ...]:
        return tuple(len(l) for l in self.layers)

    def splitting(self) -> Tuple[Tuple[Word, ...], ...]:
        """Vertices of out-degree >= 2 in each layer below the last."""
        return tuple(tuple(u for u in layer if len(self.children(u)) >= 2)
                     for layer in self.layers[:-1])

    def sinks(self) -> Tuple[Word, ...]:
        return tuple(u for layer in self.layers[:-1] for u in layer if not self.children(u))

    def vertex_count(self) -> int:
        return sum(self.layer_sizes())

    def _label(self, u):
        return self.alphabet.render(u) or "1"

    def to_json(self):
        return {
            "depth": self.depth,
            "layers": [[self._label(u) for u in layer] for layer in self.layers],
            "layer_sizes": [str(s) for s in self.layer_sizes()],
            "splitting": [[self._label(u) for u in layer] for layer in self.splitting()],
            "sinks": [self._label(u) for u in self.sinks()],
            "exactness": self.exactness.value,
        }

    def to_dot(self) -> str:
        ids = {}
        lines = ["digraph Mon {", "  rankdir=TB;", "  node [shape=circle];"]
        split = {u for layer in self.splitting() for u in layer}
        for i, layer in enumerate(self.layers):
            names = []
            for u in layer:
                ids[u] = f"v{len(ids)}"
                style = ', style=filled, fillcolor="lightgray", penwidth=2' if u in split else ""
                lines.append(f'  {ids[u]} [label="{self._label(u)}"{style}];')
                names.append(ids[u])
            lines.append("  { rank=same; " + " ".join(names) + " }")
        for u, v in self.edges():
            lines.append(f'  {ids[u]} -> {ids[v]} [label="{self.alphabet.symbols[v[-1]]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def mon_graph(A, depth: int) -> MonGraph:
    A = as_algebra(A)
    A.check_length(depth)
    layers = tuple(tuple(sorted(A.level(n))) for n in range(depth + 1))
    return MonGraph(A.alphabet, layers, A.exactness)


def canonical_code(g: MonGraph) -> str:
    """AHU code of the rooted tree: children codes sorted, computed bottom-up."""
    codes: Dict[Word, str] = {}
    for layer in reversed(g.layers):
        for u in layer:
            codes[u] = "(" + "".join(sorted(codes[v] for v in g.children(u))) + ")"
    return codes[()]


def mon_graph_iso(gA: MonGraph, gB: MonGraph) -> bool:
    if gA.depth != gB.depth:
        raise DepthMismatch(f"depths differ: {gA.depth} vs {gB.depth}")
    if gA.layer_sizes() != gB.layer_sizes():
        return False
    return canonical_code(gA) == canonical_code(gB)
