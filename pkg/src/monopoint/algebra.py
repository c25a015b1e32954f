"""Monomial algebra presentations, non-zero monomial oracles and Hilbert series."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import LengthBeyondOracle, SchemaError
from .exact import (
    RationalGF,
    det_i_minus_tA_blocks,
    pmul_trunc,
    rational_from_tail,
    strongly_connected_components,
)
from .words import Alphabet, Exactness, FactorSet, Side, Word, is_factor, reverse


def minimize_antichain(words: Iterable[Word]) -> FrozenSet[Word]:
    """Drop every word that contains another word of the set as a factor."""
    kept: List[Word] = []
    for w in sorted(set(words), key=lambda w: (len(w), w)):
        if not any(is_factor(k, w) for k in kept):
            kept.append(w)
    return frozenset(kept)


@dataclass(frozen=True)
class Presentation:
    """Free algebra on ``alphabet`` modulo an antichain of forbidden words."""

    alphabet: Alphabet
    forbidden: FrozenSet[Word]

    def __post_init__(self):
        m = len(self.alphabet)
        words = []
        for w in self.forbidden:
            w = tuple(w)
            if not w:
                raise SchemaError("forbidden words must be non-empty", "forbidden")
            if any(not 0 <= a < m for a in w):
                raise SchemaError(f"letter index out of range in {w}", "forbidden")
            words.append(w)
        object.__setattr__(self, "forbidden", minimize_antichain(words))

    @classmethod
    def free(cls, m_or_alphabet):
        alphabet = (m_or_alphabet if isinstance(m_or_alphabet, Alphabet)
                    else Alphabet.of_size(m_or_alphabet))
        return cls(alphabet, frozenset())

    @classmethod
    def parse(cls, symbols, forbidden):
        alphabet = Alphabet(tuple(symbols))
        return cls(alphabet, frozenset(alphabet.parse(w) for w in forbidden))

    @property
    def m(self) -> int:
        return len(self.alphabet)

    @property
    def d(self) -> int:
        """Longest forbidden word (0 for a free algebra)."""
        return max((len(w) for w in self.forbidden), default=0)

    @property
    def bound(self) -> int:
        """Relation-length bound used by the window machinery (always >= 2)."""
        return max(self.d, 2)

    @property
    def window(self) -> int:
        return self.bound - 1

    @cached_property
    def _by_length(self) -> Dict[int, FrozenSet[Word]]:
        out: Dict[int, set] = {}
        for w in self.forbidden:
            out.setdefault(len(w), set()).add(w)
        return {k: frozenset(v) for k, v in out.items()}

    def is_nonzero(self, u: Word) -> bool:
        u = tuple(u)
        for k, ws in self._by_length.items():
            for i in range(len(u) - k + 1):
                if u[i:i + k] in ws:
                    return False
        return True

    def suffix_ok(self, u: Word) -> bool:
        """No forbidden word ends at the last letter of ``u``."""
        n = len(u)
        for k, ws in self._by_length.items():
            if k <= n and tuple(u[n - k:]) in ws:
                return False
        return True

    def reversed(self) -> "Presentation":
        return Presentation(self.alphabet, frozenset(reverse(w) for w in self.forbidden))

    def normalized(self) -> "Presentation":
        """Delete letters that are themselves forbidden (redundant generators)."""
        dead = {w[0] for w in self.forbidden if len(w) == 1}
        if not dead:
            return self
        keep = [a for a in range(self.m) if a not in dead]
        if not keep:
            raise SchemaError("every generator is forbidden; algebra is the base field",
                              "forbidden")
        remap = {a: i for i, a in enumerate(keep)}
        alphabet = Alphabet(tuple(self.alphabet.symbols[a] for a in keep))
        forbidden = frozenset(tuple(remap[a] for a in w) for w in self.forbidden
                              if not dead.intersection(w))
        return Presentation(alphabet, forbidden)

    def sorted_forbidden(self):
        return sorted(self.forbidden, key=lambda w: (len(w), w))

    def to_json(self):
        return {
            "alphabet": list(self.alphabet.symbols),
            "forbidden": [self.alphabet.render(w) for w in self.sorted_forbidden()],
        }

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise SchemaError("presentation must be an object", "presentation")
        try:
            symbols = data["alphabet"]
        except KeyError:
            raise SchemaError("missing field", "presentation.alphabet") from None
        forbidden = data.get("forbidden", [])
        if not isinstance(symbols, list) or not isinstance(forbidden, list):
            raise SchemaError("alphabet and forbidden must be lists", "presentation")
        alphabet = Alphabet(tuple(symbols))
        parsed = []
        for i, w in enumerate(forbidden):
            try:
                parsed.append(alphabet.parse(w))
            except SchemaError as exc:
                raise SchemaError(str(exc).split(": ", 1)[-1],
                                  f"presentation.forbidden[{i}]") from None
        return cls(alphabet, frozenset(parsed))


# --------------------------------------------------------------------------
# transfer graph on non-zero windows


class TransferGraph:
    """States are the non-zero words of length ``window``; u -> v when they
    overlap in ``window - 1`` letters and the fused word is non-zero."""

    def __init__(self, p: Presentation, window: Optional[int] = None):
        self.presentation = p
        self.window = p.window if window is None else window
        if self.window < 1 or self.window + 1 < p.d:
            raise ValueError("window must be >= max(1, d - 1)")
        self.states: List[Word] = nonzero_words(p, self.window)
        self.index = {s: i for i, s in enumerate(self.states)}
        self.succ: List[Dict[int, int]] = []
        for s in self.states:
            out = {}
            for x in range(p.m):
                fused = s + (x,)
                if p.suffix_ok(fused):
                    out[self.index[fused[1:]]] = 1
            self.succ.append(out)

    def __len__(self):
        return len(self.states)

    @cached_property
    def pred(self):
        pred: List[Dict[int, int]] = [dict() for _ in self.states]
        for v, out in enumerate(self.succ):
            for u in out:
                pred[u][v] = 1
        return pred

    def _prune(self, forward=True, backward=False):
        alive = set(range(len(self.states)))
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if forward and not any(u in alive for u in self.succ[v]):
                    alive.discard(v)
                    changed = True
                elif backward and not any(u in alive for u in self.pred[v]):
                    alive.discard(v)
                    changed = True
        return alive

    @cached_property
    def right_live(self) -> FrozenSet[int]:
        """States with an infinite forward path (iterated sink removal)."""
        return frozenset(self._prune(forward=True))

    @cached_property
    def left_live(self) -> FrozenSet[int]:
        return frozenset(self._prune(forward=False, backward=True))

    @cached_property
    def bi_live(self) -> FrozenSet[int]:
        return frozenset(self._prune(forward=True, backward=True))

    def live(self, side) -> FrozenSet[int]:
        return self.right_live if Side.parse(side) is Side.RIGHT else self.left_live

    def path_counts(self, steps: int) -> List[int]:
        """Number of paths with exactly k edges, for k = 0..steps."""
        vec = [1] * len(self.states)
        out = [sum(vec)]
        for _ in range(steps):
            nxt = [0] * len(vec)
            for v, c in enumerate(vec):
                if c:
                    for u in self.succ[v]:
                        nxt[u] += c
            vec = nxt
            out.append(sum(vec))
        return out


def nonzero_words(p: Presentation, n: int) -> List[Word]:
    """All non-zero words of length n in lexicographic order."""
    level: List[Word] = [()]
    for _ in range(n):
        level = [u + (x,) for u in level for x in range(p.m) if p.suffix_ok(u + (x,))]
    return level


# --------------------------------------------------------------------------
# algebras


class MonomialAlgebra:
    """Common interface of presentation- and oracle-backed monomial algebras."""

    alphabet: Alphabet
    exactness: Exactness
    max_length: Optional[int] = None

    @property
    def m(self):
        return len(self.alphabet)

    def is_nonzero(self, u: Word) -> bool:
        raise NotImplementedError

    def check_length(self, n: int):
        if self.max_length is not None and n > self.max_length:
            raise LengthBeyondOracle(n, self.max_length)

    def level(self, n: int) -> FrozenSet[Word]:
        raise NotImplementedError

    def graded_dim(self, n: int) -> int:
        return len(self.level(n))

    def children(self, u: Word):
        self.check_length(len(u) + 1)
        return [x for x in range(self.m) if self.is_nonzero(tuple(u) + (x,))]


class PresentationAlgebra(MonomialAlgebra):
    exactness = Exactness.EXACT

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.alphabet = presentation.alphabet
        self._levels: Dict[int, FrozenSet[Word]] = {0: frozenset({()})}

    def __repr__(self):
        return f"PresentationAlgebra({self.presentation.to_json()})"

    def is_nonzero(self, u: Word) -> bool:
        return self.presentation.is_nonzero(u)

    def level(self, n: int) -> FrozenSet[Word]:
        if n not in self._levels:
            top = max(k for k in self._levels if k <= n)
            cur = self._levels[top]
            p = self.presentation
            for k in range(top + 1, n + 1):
                cur = frozenset(u + (x,) for u in cur for x in range(p.m) if p.suffix_ok(u + (x,)))
                self._levels[k] = cur
        return self._levels[n]

    @cached_property
    def transfer(self) -> TransferGraph:
        return TransferGraph(self.presentation)

    def graded_dim(self, n: int) -> int:
        if n < 0:
            raise ValueError("degree must be non-negative")
        g = self.transfer
        if n < g.window:
            return len(nonzero_words(self.presentation, n))
        return g.path_counts(n - g.window)[-1]


class OracleAlgebra(MonomialAlgebra):
    """Monomial algebra whose non-zero monomials are the factors in a FactorSet."""

    def __init__(self, factor_set: FactorSet):
        self.factors = factor_set
        self.alphabet = factor_set.alphabet
        self.exactness = factor_set.exactness
        self.max_length = factor_set.N

    def __repr__(self):
        return f"OracleAlgebra(N={self.max_length}, {self.exactness.value})"

    def is_nonzero(self, u: Word) -> bool:
        self.check_length(len(u))
        return tuple(u) in self.factors

    def level(self, n: int) -> FrozenSet[Word]:
        self.check_length(n)
        return self.factors.words(n)


def as_algebra(obj) -> MonomialAlgebra:
    if isinstance(obj, MonomialAlgebra):
        return obj
    if isinstance(obj, Presentation):
        return PresentationAlgebra(obj)
    if isinstance(obj, FactorSet):
        return OracleAlgebra(obj)
    raise TypeError(f"cannot interpret {obj!r} as a monomial algebra")


def is_nonzero(A, u: Word) -> bool:
    return as_algebra(A).is_nonzero(tuple(u))


def graded_dim(A, n: int) -> int:
    return as_algebra(A).graded_dim(n)


# --------------------------------------------------------------------------
# Hilbert series and growth


def path_series_gf(succ, start, end, head, offset):
    """head(t) + t^offset * sum_k (start . A^k . end) t^k as a reduced RationalGF.

    ``succ`` is an adjacency list of dicts; ``start``/``end`` are integer
    weight vectors. The tail is num/det(I - tA) with num recovered from the
    first N series terms (N = number of vertices used).
    """
    n = len(succ)
    keep = _trim_support(succ, start, end)
    if not keep:
        return RationalGF.polynomial(head) if any(head) else RationalGF.make([], [1])
    remap = {v: i for i, v in enumerate(keep)}
    sub = [{remap[u]: c for u, c in succ[v].items() if u in remap} for v in keep]
    s = [start[v] for v in keep]
    e = [end[v] for v in keep]
    size = len(keep)
    den = det_i_minus_tA_blocks(size, sub)
    terms = matrix_power_sequence(sub, s, e, size)
    num = pmul_trunc(den, terms, size)
    return rational_from_tail(head, num, den, offset)


def _trim_support(succ, start, end):
    n = len(succ)
    fwd = {v for v in range(n) if start[v]}
    stack = list(fwd)
    while stack:
        v = stack.pop()
        for u in succ[v]:
            if u not in fwd:
                fwd.add(u)
                stack.append(u)
    pred: List[List[int]] = [[] for _ in range(n)]
    for v in range(n):
        for u in succ[v]:
            pred[u].append(v)
    bwd = {v for v in range(n) if end[v]}
    stack = list(bwd)
    while stack:
        v = stack.pop()
        for u in pred[v]:
            if u not in bwd:
                bwd.add(u)
                stack.append(u)
    return sorted(fwd & bwd)


def matrix_power_sequence(succ, start, end, count):
    """[start . A^k . end for k in range(count)] with exact integers."""
    vec = list(start)
    out = []
    for _ in range(count):
        out.append(sum(c * e for c, e in zip(vec, end) if c))
        nxt = [0] * len(vec)
        for v, c in enumerate(vec):
            if c:
                for u, a in succ[v].items():
                    nxt[u] += c * a
        vec = nxt
    return out


def hilbert_series(p: Presentation) -> RationalGF:
    """Exact Hilbert series of the monomial algebra presented by ``p``."""
    g = TransferGraph(p)
    head = [len(nonzero_words(p, n)) for n in range(g.window)]
    ones = [1] * len(g)
    gf = path_series_gf(g.succ, ones, ones, head, g.window)
    check = 2 * len(g) + p.d
    expected = head + g.path_counts(check - g.window)
    if gf.series(check + 1) != expected[:check + 1]:
        raise AssertionError("Hilbert series expansion disagrees with graded dimensions")
    return gf


@dataclass(frozen=True)
class GrowthReport:
    growth: str  # "linear" | "superlinear"
    certificate: int
    dims: Tuple[int, ...]
    reason: str

    @property
    def is_linear(self):
        return self.growth == "linear"

    def to_json(self):
        return {
            "growth": self.growth,
            "certificate": str(self.certificate),
            "dims": [str(x) for x in self.dims],
            "reason": self.reason,
        }


def _structural_linear(g: TransferGraph):
    """True iff path counts stay bounded: every cyclic block is a single
    simple cycle and no path joins two cyclic blocks."""
    n = len(g)
    comps = strongly_connected_components(n, g.succ)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    cyclic = set()
    for ci, comp in enumerate(comps):
        members = set(comp)
        edges = sum(1 for v in comp for u in g.succ[v] if u in members)
        if edges == 0:
            continue
        if edges > len(comp):
            return False, f"block of {len(comp)} states carries {edges} internal edges"
        cyclic.add(ci)
    # Tarjan emits blocks in reverse topological order; count cyclic blocks
    # on the heaviest path through the condensation.
    best = [0] * len(comps)
    for ci, comp in enumerate(comps):
        here = 1 if ci in cyclic else 0
        reach = 0
        for v in comp:
            for u in g.succ[v]:
                cj = comp_of[u]
                if cj != ci:
                    reach = max(reach, best[cj])
        best[ci] = here + reach
        if best[ci] >= 2:
            return False, "a path joins two distinct cycles"
    return True, "every path meets at most one simple cycle"


def growth_class(p: Presentation) -> GrowthReport:
    """Linear (bounded graded dimension) versus superlinear growth.

    The decision is structural on the transfer graph; a linear verdict comes
    with the least C >= 1 with dim A_C <= C, the witness that bounds growth.
    """
    g = TransferGraph(p)
    A = PresentationAlgebra(p)
    linear, reason = _structural_linear(g)
    c_max = 2 * len(g) + p.d
    if linear:
        dims = []
        c = 0
        while True:
            dims.append(A.graded_dim(c))
            if c >= 1 and dims[-1] <= c:
                return GrowthReport("linear", c, tuple(dims), reason)
            c += 1
    dims = tuple(A.graded_dim(c) for c in range(c_max + 1))
    return GrowthReport("superlinear", c_max, dims, reason)
