"""Prolongable radicals, prolongability tests and Subshift(A) languages."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional

from .algebra import (
    MonomialAlgebra,
    OracleAlgebra,
    Presentation,
    PresentationAlgebra,
    TransferGraph,
    as_algebra,
    minimize_antichain,
    nonzero_words,
)
from .errors import EmptySubshift, LengthBeyondOracle
from .words import Exactness, FactorSet, Side, Word, reverse


def _oriented(p: Presentation, side) -> Presentation:
    return p if Side.parse(side) is Side.RIGHT else p.reversed()


def _unorient(words, side):
    if Side.parse(side) is Side.RIGHT:
        return frozenset(words)
    return frozenset(reverse(w) for w in words)


def dead_states(p: Presentation, side=Side.RIGHT) -> FrozenSet[Word]:
    """Non-zero windows of length max(d-1, 1) with no infinite extension on ``side``."""
    g = TransferGraph(_oriented(p, side))
    dead = [s for i, s in enumerate(g.states) if i not in g.right_live]
    return _unorient(dead, side)


@dataclass(frozen=True)
class RadicalReport:
    side: Side
    generators: FrozenSet[Word]
    quotient: Presentation
    is_prolongable_input: bool
    finite_dimensional: bool = False

    def sorted_generators(self):
        return sorted(self.generators, key=lambda w: (len(w), w))

    def to_json(self):
        alphabet = self.quotient.alphabet
        return {
            "side": self.side.value,
            "generators": [alphabet.render(w) for w in self.sorted_generators()],
            "quotient": self.quotient.to_json(),
            "is_prolongable_input": self.is_prolongable_input,
            "finite_dimensional": self.finite_dimensional,
            "exactness": Exactness.EXACT.value,
        }


def _right_dead_words(p: Presentation):
    """Minimal right-dead non-zero words (all of length <= window)."""
    g = TransferGraph(p)
    w = g.window
    live_states = [g.states[i] for i in g.right_live]
    if not live_states:
        return frozenset({()}), g

    live_prefixes = {s[:k] for s in live_states for k in range(w + 1)}

    def is_live(u):
        if len(u) >= w:
            return g.index[u[len(u) - w:]] in g.right_live
        return u in live_prefixes

    gens = []
    for n in range(1, w + 1):
        for u in nonzero_words(p, n):
            if not is_live(u) and is_live(u[1:]) and is_live(u[:-1]):
                gens.append(u)
    return minimize_antichain(gens), g


def prolongable_radical(p: Presentation, side=Side.RIGHT, verify: bool = True) -> RadicalReport:
    """Monomial generators of the prolongable radical on ``side`` and the quotient.

    A non-zero monomial lies in the radical iff it has no infinite extension,
    i.e. iff its terminal window cannot reach a cycle of the transfer graph.
    If nothing is live the algebra is finite-dimensional, the radical is the
    whole algebra (generator: the empty word) and the quotient kills every
    generator.
    """
    side = Side.parse(side)
    q = _oriented(p, side)
    gens, g = _right_dead_words(q)
    if gens == frozenset({()}):
        quotient = Presentation(p.alphabet, frozenset((a,) for a in range(p.m)))
        return RadicalReport(side, gens, quotient, False, True)
    quotient_q = Presentation(q.alphabet, q.forbidden | gens)
    if verify:
        bound = len(g) + 1
        A = PresentationAlgebra(q)
        for u in gens:
            if _has_extension(A, u, bound):
                raise AssertionError(f"generator {u} has a long non-zero extension")
        again, _ = _right_dead_words(quotient_q)
        if again:
            raise AssertionError("quotient is not prolongable")
    generators = _unorient(gens, side)
    quotient = quotient_q if side is Side.RIGHT else quotient_q.reversed()
    return RadicalReport(side, generators, quotient, not generators)


def _has_extension(A: PresentationAlgebra, u: Word, length: int) -> bool:
    p = A.presentation
    level = {u}
    for _ in range(length):
        level = {v + (x,) for v in level for x in range(p.m) if p.suffix_ok(v + (x,))}
        if not level:
            return False
    return True


@dataclass(frozen=True)
class Verdict:
    value: bool
    exactness: Exactness

    def __bool__(self):
        return self.value

    def __str__(self):
        if self.exactness is Exactness.EXACT:
            return f"Exact({self.value})"
        return "HeuristicTrue" if self.value else "HeuristicFalse"

    def to_json(self):
        return {"value": self.value, "exactness": self.exactness.value}


def is_prolongable(A, side=Side.RIGHT, horizon: Optional[int] = None) -> Verdict:
    """Exact for presentations; for oracles every factor of length < horizon
    must extend on ``side`` inside the factor set (heuristic)."""
    side = Side.parse(side)
    if isinstance(A, Presentation):
        A = PresentationAlgebra(A)
    if isinstance(A, PresentationAlgebra):
        report = prolongable_radical(A.presentation, side, verify=False)
        return Verdict(report.is_prolongable_input, Exactness.EXACT)
    A = as_algebra(A)
    horizon = A.max_length if horizon is None else horizon
    A.check_length(horizon)
    for n in range(horizon):
        longer = A.level(n + 1)
        for u in A.level(n):
            if side is Side.RIGHT:
                ok = any(u + (x,) in longer for x in range(A.m))
            else:
                ok = any((x,) + u in longer for x in range(A.m))
            if not ok:
                return Verdict(False, A.exactness)
    return Verdict(True, Exactness.HEURISTIC)


def subshift_language(p: Presentation, n: int, two_sided: bool = True) -> FactorSet:
    """Factors of length <= n of the subshift cut out by ``p``.

    By default a word counts when every window lies on a bi-infinite path
    (two-sided pruning). With ``two_sided=False`` only right-infinite
    extension is required, which is the language of the one-sided subshift.
    """
    g = TransferGraph(p)
    live = g.bi_live if two_sided else g.right_live
    if not live:
        raise EmptySubshift("no infinite word avoids the forbidden factors")
    w = g.window
    states = [g.states[i] for i in live]
    levels = [frozenset({()})]
    short = {s[i:i + k] for s in states for k in range(1, w + 1) for i in range(w - k + 1)}
    for k in range(1, n + 1):
        if k <= w:
            levels.append(frozenset(u for u in short if len(u) == k))
        else:
            prev = levels[-1]
            levels.append(frozenset(
                u + (x,) for u in prev for x in range(p.m)
                if p.suffix_ok(u + (x,)) and g.index.get(u[k - w:] + (x,)) in live
            ))
    return FactorSet.from_language(p.alphabet, levels, Exactness.EXACT)
