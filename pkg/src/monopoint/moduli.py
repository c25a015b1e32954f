"""Trees over monomial algebras and the component structure of truncated
point-module schemes.

A truncated tree is a :class:`SubsetSeq` ``C_0, ..., C_n`` of non-empty letter
sets. It is *coherent* when every word of ``C_0 C_1 ... C_n`` is non-zero and
*prolongable* when it extends to an infinite tree. Irreducible components of
the truncated point scheme (resp. of the scheme of truncated cyclic modules)
correspond to the maximal prolongable (resp. coherent) sequences under
coordinate-wise inclusion.

Internally subsets are bitmasks; both validity notions are closed under
shrinking sets, so maximality is decided by single-letter enlargements.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    MonomialAlgebra,
    OracleAlgebra,
    Presentation,
    PresentationAlgebra,
    as_algebra,
)
from .errors import (
    BudgetExceeded,
    LengthBeyondOracle,
    NotProlongable,
    SchemaError,
    SturmianCheckFailed,
)
from .radical import Verdict, is_prolongable
from .words import (
    DEFAULT_PREFIX_MULTIPLIER,
    Alphabet,
    Exactness,
    FactorSet,
    Side,
    Word,
    factors,
    special_factors,
)

DEFAULT_BUDGET = 10 ** 7

Masks = Tuple[int, ...]


class Variant(str, enum.Enum):
    POINT = "point"          # prolongable sequences, components of P_n
    TRUNCATED = "truncated"  # coherent sequences, components of the truncated scheme

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        v = str(value).lower()
        if v in ("point", "prolongable", "p"):
            return cls.POINT
        if v in ("truncated", "coherent", "t"):
            return cls.TRUNCATED
        raise SchemaError(f"unknown variant {value!r}", "variant")


def bits(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def to_mask(letters: Iterable[int]) -> int:
    out = 0
    for a in letters:
        out |= 1 << a
    return out


@dataclass(frozen=True, order=True)
class SubsetSeq:
    """Sequence C_0, ..., C_n of non-empty letter sets, stored as bitmasks."""

    masks: Masks

    def __post_init__(self):
        object.__setattr__(self, "masks", tuple(self.masks))
        if any(c <= 0 for c in self.masks):
            raise SchemaError("every set in a subset sequence must be non-empty", "sets")

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "SubsetSeq":
        return cls(tuple(to_mask(s) for s in sets))

    @classmethod
    def word(cls, w: Word) -> "SubsetSeq":
        return cls(tuple(1 << a for a in w))

    @property
    def sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(bits(c)) for c in self.masks)

    @property
    def n(self) -> int:
        return len(self.masks) - 1

    def __len__(self):
        return len(self.masks)

    @property
    def dimension(self) -> int:
        return sum(bin(c).count("1") - 1 for c in self.masks)

    def leq(self, other: "SubsetSeq") -> bool:
        return len(self) == len(other) and all(a & ~b == 0 for a, b in zip(self.masks, other.masks))

    def words(self):
        return itertools.product(*(bits(c) for c in self.masks))

    def is_word(self) -> bool:
        return all(c & (c - 1) == 0 for c in self.masks)

    def prefix(self, k: int) -> "SubsetSeq":
        return SubsetSeq(self.masks[:k])

    def render(self, alphabet: Alphabet) -> str:
        parts = []
        for s in self.sets:
            syms = alphabet.render_set(s)
            parts.append(syms[0] if len(syms) == 1 else "{" + ",".join(syms) + "}")
        return " ".join(parts)

    def to_json(self, alphabet: Alphabet):
        return [alphabet.render_set(s) for s in self.sets]

    @classmethod
    def from_json(cls, alphabet: Alphabet, data):
        if not isinstance(data, list):
            raise SchemaError("subset sequence must be a list of lists", "sets")
        return cls.of([alphabet.index(x) for x in s] for s in data)


# --------------------------------------------------------------------------
# validity engines


class _Budget:
    def __init__(self, limit):
        self.limit = DEFAULT_BUDGET if limit is None else limit
        self.used = 0

    def tick(self, k=1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(
                f"enumeration exceeded {self.limit} window checks; use genfun counting "
                f"(quiver matrix powers) for large n",
                "budget",
            )


class PresentationEngine:
    """Coherence and prolongability of subset sequences over a presentation."""

    exactness = Exactness.EXACT

    def __init__(self, p: Presentation):
        self.p = p
        self.m = p.m
        self.D = p.bound
        self.w = self.D - 1
        self.forbidden = [tuple(1 << a for a in f) for f in p.sorted_forbidden()]
        self.all_masks = tuple(range(1, 1 << self.m))

    def coherent_end(self, masks: Sequence[int], k: int) -> bool:
        """No forbidden word sits in the product with its last letter at k."""
        for f in self.forbidden:
            start = k - len(f) + 1
            if start < 0:
                continue
            for j, b in enumerate(f):
                if not masks[start + j] & b:
                    break
            else:
                return False
        return True

    def coherent(self, masks: Sequence[int]) -> bool:
        return all(self.coherent_end(masks, k) for k in range(len(masks)))

    def _coherent_around(self, masks, j):
        hi = min(len(masks) - 1, j + self.D - 1)
        return all(self.coherent_end(masks, k) for k in range(j, hi + 1))

    # window graph on coherent w-sequences
    def _window_graph(self):
        if hasattr(self, "_live"):
            return
        verts: List[Masks] = [()]
        for _ in range(self.w):
            verts = [v + (c,) for v in verts for c in self.all_masks
                     if self.coherent_end(v + (c,), len(v))]
        vset = set(verts)
        succ = {}
        for v in verts:
            out = []
            for c in self.all_masks:
                fused = v + (c,)
                if self.coherent_end(fused, self.w):
                    out.append(fused[1:])
            succ[v] = [u for u in out if u in vset]
        alive = set(verts)
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if not any(u in alive for u in succ[v]):
                    alive.discard(v)
                    changed = True
        self._live = frozenset(alive)
        self._live_prefixes = frozenset(v[:k] for v in alive for k in range(self.w + 1))

    @property
    def live_windows(self) -> FrozenSet[Masks]:
        self._window_graph()
        return self._live

    def prolongable_prefix(self, masks: Sequence[int]) -> bool:
        """Prolongability of a coherent sequence (its last window decides)."""
        self._window_graph()
        masks = tuple(masks)
        if len(masks) >= self.w:
            return masks[len(masks) - self.w:] in self._live
        return masks in self._live_prefixes

    def valid(self, masks, variant: Variant) -> bool:
        if not self.coherent(masks):
            return False
        return variant is Variant.TRUNCATED or self.prolongable_prefix(masks)

    def enlargeable(self, masks, j, variant: Variant) -> bool:
        """Some single letter can be added to C_j keeping the sequence valid.

        ``masks`` is assumed valid; only windows through j can break.
        """
        masks = list(masks)
        orig = masks[j]
        try:
            for x in range(self.m):
                b = 1 << x
                if orig & b:
                    continue
                masks[j] = orig | b
                if not self._coherent_around(masks, j):
                    continue
                if variant is Variant.POINT and not self.prolongable_prefix(masks):
                    continue
                return True
            return False
        finally:
            masks[j] = orig

    def maximal(self, masks, variant: Variant) -> bool:
        return not any(self.enlargeable(masks, j, variant) for j in range(len(masks)))

    def enumerate(self, L: int, variant: Variant, budget: _Budget, maximal_only=True):
        """All valid (optionally maximal) sequences of length L, in canonical order."""
        if L == 0:
            return [()]
        out: List[Masks] = []
        masks: List[int] = []
        w = self.w
        point = variant is Variant.POINT

        def rec(k):
            for c in self.all_masks:
                budget.tick()
                masks.append(c)
                ok = self.coherent_end(masks, k) and (not point or self.prolongable_prefix(masks))
                if ok and maximal_only:
                    j = k - w
                    # windows through coordinate j are complete; later choices cannot
                    # change whether C_j can grow
                    if j >= 0 and self._locally_enlargeable(masks, j):
                        ok = False
                if ok:
                    if k == L - 1:
                        if not maximal_only or not any(
                            self.enlargeable(masks, j, variant) for j in range(max(0, L - w), L)
                        ):
                            out.append(tuple(masks))
                    else:
                        rec(k + 1)
                masks.pop()

        rec(0)
        return out

    def _locally_enlargeable(self, masks, j):
        orig = masks[j]
        try:
            for x in range(self.m):
                b = 1 << x
                if orig & b:
                    continue
                masks[j] = orig | b
                if self._coherent_around(masks, j):
                    return True
            return False
        finally:
            masks[j] = orig


class OracleEngine:
    """Coherence against a factor set; prolongability by singleton extension
    up to the oracle length (heuristic)."""

    def __init__(self, A: OracleAlgebra, horizon: Optional[int] = None):
        self.A = A
        self.f = A.factors
        self.m = A.m
        self.N = A.max_length
        self.horizon = horizon
        self.exactness = A.exactness
        self.all_masks = tuple(range(1, 1 << self.m))
        self._memo: Dict[Tuple[Masks, Variant], bool] = {}

    def _horizon_for(self, L):
        h = self.N - L if self.horizon is None else self.horizon
        if h < 1 or L + h > self.N:
            raise LengthBeyondOracle(L + max(h, 1), self.N)
        return h

    def products(self, masks) -> Optional[set]:
        """Product words of the sequence, or None as soon as one is zero."""
        if len(masks) > self.N:
            raise LengthBeyondOracle(len(masks), self.N)
        cur = {()}
        for k, c in enumerate(masks):
            level = self.f.words(k + 1)
            nxt = set()
            for u in cur:
                for x in bits(c):
                    v = u + (x,)
                    if v not in level:
                        return None
                    nxt.add(v)
            cur = nxt
        return cur

    def coherent(self, masks) -> bool:
        return self.products(masks) is not None

    def extends(self, words: set, length: int, steps: int) -> bool:
        if steps == 0:
            return True
        level = self.f.words(length + 1)
        for x in range(self.m):
            nxt = {u + (x,) for u in words}
            if all(v in level for v in nxt) and self.extends(nxt, length + 1, steps - 1):
                return True
        return False

    def valid(self, masks, variant: Variant) -> bool:
        masks = tuple(masks)
        key = (masks, variant)
        if key not in self._memo:
            prods = self.products(masks)
            ok = prods is not None
            if ok and variant is Variant.POINT:
                ok = self.extends(prods, len(masks), self._horizon_for(len(masks)))
            self._memo[key] = ok
        return self._memo[key]

    def prolongable_prefix(self, masks) -> bool:
        return self.valid(masks, Variant.POINT)

    def enlargeable(self, masks, j, variant: Variant) -> bool:
        masks = list(masks)
        orig = masks[j]
        for x in range(self.m):
            if orig >> x & 1:
                continue
            masks[j] = orig | 1 << x
            if self.valid(masks, variant):
                return True
        return False

    def maximal(self, masks, variant: Variant) -> bool:
        return not any(self.enlargeable(masks, j, variant) for j in range(len(masks)))

    def enumerate(self, L: int, variant: Variant, budget: _Budget, maximal_only=True):
        if L == 0:
            return [()]
        if L > self.N:
            raise LengthBeyondOracle(L, self.N)
        if variant is Variant.POINT:
            self._horizon_for(L)
        out = []

        def rec(masks, prods):
            k = len(masks)
            level = self.f.words(k + 1)
            for c in self.all_masks:
                budget.tick(max(1, len(prods)))
                letters = bits(c)
                nxt = set()
                ok = True
                for u in prods:
                    for x in letters:
                        v = u + (x,)
                        if v not in level:
                            ok = False
                            break
                        nxt.add(v)
                    if not ok:
                        break
                if not ok:
                    continue
                seq = masks + (c,)
                if k + 1 < L:
                    rec(seq, nxt)
                elif self.valid(seq, variant) and (not maximal_only or self.maximal(seq, variant)):
                    out.append(seq)

        rec((), {()})
        return out


def engine_for(A, horizon: Optional[int] = None):
    if isinstance(A, (PresentationEngine, OracleEngine)):
        return A
    if isinstance(A, Presentation):
        return _presentation_engine(A)
    A = as_algebra(A)
    if isinstance(A, PresentationAlgebra):
        return _presentation_engine(A.presentation)
    return OracleEngine(A, horizon)


@lru_cache(maxsize=256)
def _presentation_engine(p: Presentation) -> PresentationEngine:
    return PresentationEngine(p)


# --------------------------------------------------------------------------
# public operations


def is_coherent(A, s: SubsetSeq) -> bool:
    """Every word of the product C_0 C_1 ... C_n is non-zero in A."""
    return engine_for(A).coherent(s.masks)


def is_prolongable_seq(A, s: SubsetSeq, horizon: Optional[int] = None) -> Verdict:
    """Whether s extends to an infinite tree (exact for presentations)."""
    eng = engine_for(A, horizon)
    if not eng.coherent(s.masks):
        return Verdict(False, eng.exactness)
    if isinstance(eng, PresentationEngine):
        return Verdict(eng.prolongable_prefix(s.masks), Exactness.EXACT)
    ok = eng.valid(s.masks, Variant.POINT)
    return Verdict(ok, Exactness.HEURISTIC)


@dataclass(frozen=True)
class ComponentSet:
    variant: Variant
    n: int
    components: Tuple[SubsetSeq, ...]
    alphabet: Alphabet
    exactness: Exactness

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def dimension(self) -> Optional[int]:
        return max((c.dimension for c in self.components), default=None)

    def to_json(self):
        return {
            "variant": self.variant.value,
            "n": self.n,
            "count": str(self.count),
            "dimension": None if self.dimension is None else str(self.dimension),
            "components": [
                {"sets": c.to_json(self.alphabet), "dimension": str(c.dimension)}
                for c in self.components
            ],
            "exactness": self.exactness.value,
        }

    def table(self) -> str:
        lines = [f"{self.variant.value} scheme, n={self.n}: {self.count} components, "
                 f"dimension {self.dimension} ({self.exactness.value})"]
        for c in self.components:
            lines.append(f"  dim {c.dimension}: {c.render(self.alphabet)}")
        return "\n".join(lines)


def components(A, n: int, variant=Variant.POINT, budget: Optional[int] = None,
               horizon: Optional[int] = None) -> ComponentSet:
    """Maximal coherent (truncated) or prolongable (point) sequences of length n+1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    variant = Variant.parse(variant)
    alg = A if isinstance(A, Presentation) else as_algebra(A)
    eng = engine_for(alg, horizon)
    found = eng.enumerate(n + 1, variant, _Budget(budget))
    exactness = eng.exactness if variant is Variant.TRUNCATED else (
        Exactness.EXACT if isinstance(eng, PresentationEngine) else Exactness.HEURISTIC)
    alphabet = alg.alphabet
    comps = tuple(sorted(SubsetSeq(m) for m in found))
    return ComponentSet(variant, n, comps, alphabet, exactness)


def count_components(A, n: int, variant=Variant.POINT, budget: Optional[int] = None,
                     horizon: Optional[int] = None) -> Tuple[int, Exactness]:
    cs = components(A, n, variant, budget, horizon)
    return cs.count, cs.exactness


# --------------------------------------------------------------------------
# point modules


@dataclass(frozen=True)
class PointModuleTrunc:
    """Rows lambda_i of a truncated point module: e_i . x_j = lambda[i][j] e_{i+1}."""

    scalars: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.scalars)
        if rows and len({len(r) for r in rows}) != 1:
            raise SchemaError("all scalar rows must have the same length", "scalars")
        object.__setattr__(self, "scalars", rows)

    @property
    def n(self):
        return len(self.scalars) - 1

    def support_masks(self) -> Masks:
        return tuple(to_mask(j for j, x in enumerate(row) if x) for row in self.scalars)

    def support(self) -> Optional[SubsetSeq]:
        masks = self.support_masks()
        return None if any(c == 0 for c in masks) else SubsetSeq(masks)

    def to_json(self):
        return {"scalars": [[str(x) for x in row] for row in self.scalars]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(tuple(tuple(Fraction(x) for x in row) for row in data["scalars"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad scalars: {exc}", "scalars") from None


@dataclass(frozen=True)
class ModuleVerification:
    ok: bool
    failure: Optional[dict] = None

    def to_json(self):
        return {"ok": self.ok, "failure": self.failure}


def verify_point_module(A, M: PointModuleTrunc) -> ModuleVerification:
    """Check that every zero monomial acts by zero on the truncated module.

    A zero row breaks cyclic generation and is reported as such. For a word
    u = x_{r_1}...x_{r_k} and start row i the action of u on e_i is the
    product lambda_{i,r_1} ... lambda_{i+k-1,r_k}.
    """
    for i, row in enumerate(M.scalars):
        if not any(row):
            return ModuleVerification(False, {"kind": "zero-row", "row": i})
    rows = M.scalars
    L = len(rows)
    if isinstance(A, Presentation):
        A = PresentationAlgebra(A)
    A = as_algebra(A)
    if isinstance(A, PresentationAlgebra):
        p = A.presentation
        for u in p.sorted_forbidden():
            for i in range(L - len(u) + 1):
                prod = Fraction(1)
                for j, a in enumerate(u):
                    prod *= rows[i + j][a]
                    if not prod:
                        break
                if prod:
                    return ModuleVerification(False, {
                        "kind": "relation", "word": p.alphabet.render(u), "row": i})
        return ModuleVerification(True)
    # oracle: every word of the support product must be non-zero
    A.check_length(L)
    support = M.support_masks()
    for i in range(L):
        cur = {()}
        for k in range(i, L):
            cur = {u + (x,) for u in cur for x in bits(support[k])}
            bad = [u for u in cur if not A.is_nonzero(u)]
            if bad:
                u = min(bad)
                return ModuleVerification(False, {
                    "kind": "relation", "word": A.alphabet.render(u), "row": i})
    return ModuleVerification(True)


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class IrreducibilityReport:
    irreducible_through: int
    per_degree: Tuple[bool, ...]
    chain: Optional[SubsetSeq]
    stable_letters: Optional[FrozenSet[int]]
    stabilization_index: Optional[int]
    nilpotent_generators: Optional[FrozenSet[int]]
    nilpotency_bound: Optional[int]
    alphabet: Alphabet

    @property
    def irreducible(self) -> bool:
        return all(self.per_degree)

    @property
    def free_rank(self) -> Optional[int]:
        return None if self.stable_letters is None else len(self.stable_letters)

    def to_json(self):
        a = self.alphabet
        return {
            "irreducible": self.irreducible,
            "per_degree": self.per_degree and list(self.per_degree),
            "first_reducible": None if self.irreducible else self.per_degree.index(False),
            "chain": None if self.chain is None else self.chain.to_json(a),
            "free_rank": None if self.free_rank is None else str(self.free_rank),
            "stable_letters": None if self.stable_letters is None else a.render_set(self.stable_letters),
            "nilpotent_generators": (None if self.nilpotent_generators is None
                                     else a.render_set(self.nilpotent_generators)),
            "nilpotency_bound": None if self.nilpotency_bound is None else str(self.nilpotency_bound),
            "exactness": Exactness.EXACT.value,
        }


def irreducibility_report(p: Presentation, n_max: int,
                          budget: Optional[int] = None) -> IrreducibilityReport:
    """Decide whether each P_n (n <= n_max) is irreducible and, if so, read
    off the nested chain C_0 ⊇ C_1 ⊇ ... of the dominating tree.

    The letters outside the stable set generate a nilpotent ideal N with
    A/N free on the stable letters; N^(s+1) = 0 where s is the index at
    which the chain stabilizes.
    """
    if not is_prolongable(p, Side.RIGHT):
        raise NotProlongable("irreducibility report needs a right-prolongable presentation")
    per_degree = []
    last = None
    for n in range(n_max + 1):
        cs = components(p, n, Variant.POINT, budget)
        per_degree.append(cs.count == 1)
        if cs.count != 1:
            break
        last = cs.components[0]
    per = tuple(per_degree)
    if not all(per):
        return IrreducibilityReport(per.index(False) - 1, per, None, None, None, None, None,
                                    p.alphabet)
    masks = last.masks
    stable = masks[-1]
    s = len(masks) - 1
    while s > 0 and masks[s - 1] == stable:
        s -= 1
    nil = frozenset(a for a in range(p.m) if not stable >> a & 1)
    return IrreducibilityReport(n_max, per, last, frozenset(bits(stable)), s, nil,
                                s + 1 if nil else 0, p.alphabet)


def nilpotent_power_vanishes(p: Presentation, letters: FrozenSet[int], k: int) -> bool:
    """True iff no non-zero word contains k letters from ``letters``.

    Decided on the transfer graph: the count of such letters along paths is
    bounded iff no cycle through live windows uses one.
    """
    if k <= 0:
        return False
    if not letters:
        return True
    from .algebra import TransferGraph

    g = TransferGraph(p)
    w = g.window
    # states remember up to k of the counted letters; explore (state, count)
    best: Dict[int, int] = {}
    start = [(i, sum(1 for a in s if a in letters)) for i, s in enumerate(g.states)]
    # short words never reach k letters unless a state already does
    if any(c >= k for _, c in start):
        return False
    for short in range(1, w):
        from .algebra import nonzero_words

        if any(sum(1 for a in u if a in letters) >= k for u in nonzero_words(p, short)):
            return False
    stack = list(start)
    while stack:
        v, c = stack.pop()
        if best.get(v, -1) >= c:
            continue
        best[v] = c
        for u in g.succ[v]:
            cu = c + (1 if g.states[u][-1] in letters else 0)
            if cu >= k:
                return False
            if best.get(u, -1) < cu:
                stack.append((u, cu))
    return True


@dataclass(frozen=True)
class P1Report:
    n: int
    tree: SubsetSeq
    others_are_words: bool
    component_count: int
    dimension: int
    intersection_points: Tuple[Word, Word]
    complexity: Tuple[int, ...]
    alphabet: Alphabet
    exactness: Exactness

    def to_json(self):
        a = self.alphabet
        return {
            "n": self.n,
            "tree": self.tree.to_json(a),
            "others_are_words": self.others_are_words,
            "component_count": str(self.component_count),
            "dimension": str(self.dimension),
            "intersection_points": [a.render(w) for w in self.intersection_points],
            "complexity": [str(x) for x in self.complexity],
            "exactness": self.exactness.value,
        }


def sturmian_oracle_length(n: int) -> int:
    """Oracle length used for degree-n reports on Sturmian-type words."""
    return 3 * (n + 1) + 8


def p1_report(g, n: int, prefix_multiplier: int = DEFAULT_PREFIX_MULTIPLIER,
              N: Optional[int] = None, budget: Optional[int] = None) -> P1Report:
    """Component shape of P_n for the algebra of a Sturmian word: one
    projective line (the unique tree with |C_0| = 2) and isolated words."""
    N = sturmian_oracle_length(n) if N is None else N
    f = factors(g, N, prefix_multiplier) if not isinstance(g, FactorSet) else g
    if len(f.alphabet) != 2:
        raise SturmianCheckFailed("monomial P^1 reports need a two-letter alphabet")
    for k in range(min(n + 2, f.N + 1)):
        if f.p(k) != k + 1:
            raise SturmianCheckFailed(f"p({k}) = {f.p(k)} != {k + 1}")
    if f.N < n + 2:
        raise LengthBeyondOracle(n + 2, f.N)
    cs = components(OracleAlgebra(f), n, Variant.POINT, budget)
    doubled = [c for c in cs.components if c.masks[0] == 0b11]
    if len(doubled) != 1 or not SubsetSeq(doubled[0].masks[1:] or (1,)).is_word():
        raise SturmianCheckFailed(f"expected a unique tree with |C_0| = 2, found {len(doubled)}")
    tree = doubled[0]
    others = [c for c in cs.components if c != tree]
    suffix = tuple(bits(c)[0] for c in tree.masks[1:])
    return P1Report(
        n=n,
        tree=tree,
        others_are_words=all(c.is_word() for c in others),
        component_count=cs.count,
        dimension=cs.dimension,
        intersection_points=((0,) + suffix, (1,) + suffix),
        complexity=tuple(f.p(k) for k in range(n + 2)),
        alphabet=f.alphabet,
        exactness=Exactness.HEURISTIC if f.exactness is Exactness.HEURISTIC else cs.exactness,
    )


@dataclass(frozen=True)
class DimProfile:
    dims: Tuple[int, ...]
    stabilized: bool
    exactness: Exactness

    def to_json(self):
        return {"dims": [str(d) for d in self.dims], "stabilized": self.stabilized,
                "exactness": self.exactness.value}


def dim_profile(A, n_max: int, budget: Optional[int] = None,
                horizon: Optional[int] = None, window: int = 3) -> DimProfile:
    """dim P_n for n = 0..n_max. ``stabilized`` means the last ``window``
    values agree (a finite-data indication, not a proof)."""
    dims = []
    exactness = Exactness.EXACT
    for n in range(n_max + 1):
        cs = components(A, n, Variant.POINT, budget, horizon)
        dims.append(cs.dimension if cs.dimension is not None else -1)
        exactness = exactness & cs.exactness
    tail = dims[-window:]
    stabilized = len(dims) >= window and len(set(tail)) == 1
    return DimProfile(tuple(dims), stabilized, exactness)
