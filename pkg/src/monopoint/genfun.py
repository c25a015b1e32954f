"""Quivers on (2D-2)-windows of subset sequences and exact counting of
irreducible components by transfer-matrix powers.

With D = max(d, 2), a maximal sequence of length n+1 >= 2D-2 is a path in
the quiver whose vertices are valid (coherent or prolongable) sequences of
length 2D-2: it starts at a premaximal vertex, every arrow keeps its middle
coordinate maximal within the fused (2D-1)-window, and it ends at a
postmaximal vertex. Hence a_n = w_pre . A^(n-2D+3) . w_post.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Presentation, _trim_support, matrix_power_sequence, path_series_gf
from .errors import DegreeTooSmall, NotProlongable
from .exact import (
    RationalGF,
    Recurrence,
    det_i_minus_tA_blocks,
    fit_recurrence,
    recurrence_from_denominator,
)
from .moduli import PresentationEngine, SubsetSeq, Variant, _Budget, components, engine_for
from .radical import is_prolongable
from .words import Exactness, Side


@dataclass(frozen=True)
class Quiver:
    variant: Variant
    D: int
    vertices: Tuple[Tuple[int, ...], ...]
    succ: Tuple[Tuple[int, ...], ...]
    w_pre: Tuple[int, ...]
    w_post: Tuple[int, ...]
    presentation: Presentation

    @property
    def start_degree(self) -> int:
        """Smallest n covered by the matrix formula (2D - 3)."""
        return 2 * self.D - 3

    def __len__(self):
        return len(self.vertices)

    def adjacency(self) -> List[List[int]]:
        n = len(self.vertices)
        rows = [[0] * n for _ in range(n)]
        for v, out in enumerate(self.succ):
            for u in out:
                rows[v][u] = 1
        return rows

    def succ_dicts(self):
        return [{u: 1 for u in out} for out in self.succ]

    def to_json(self):
        alphabet = self.presentation.alphabet
        return {
            "variant": self.variant.value,
            "d": self.D,
            "vertices": [SubsetSeq(v).to_json(alphabet) for v in self.vertices],
            "adjacency": [[str(x) for x in row] for row in self.adjacency()],
            "w_pre": [str(x) for x in self.w_pre],
            "w_post": [str(x) for x in self.w_post],
        }


def build_quiver(p: Presentation, variant=Variant.POINT, budget: Optional[int] = None) -> Quiver:
    variant = Variant.parse(variant)
    if variant is Variant.POINT and not is_prolongable(p, Side.RIGHT):
        raise NotProlongable(
            "the prolongable quiver needs a right-prolongable presentation; "
            "pass the quotient from prolongable_radical first")
    eng: PresentationEngine = engine_for(p)
    D = eng.D
    L = 2 * D - 2
    verts = eng.enumerate(L, variant, _Budget(budget), maximal_only=False)
    index = {v: i for i, v in enumerate(verts)}
    mid = D - 1
    succ = []
    for v in verts:
        out = []
        for c in eng.all_masks:
            u = v[1:] + (c,)
            j = index.get(u)
            if j is None:
                continue
            fused = v + (c,)
            if not eng.coherent_end(fused, len(fused) - 1):
                continue
            if variant is Variant.POINT and not eng.prolongable_prefix(fused):
                continue
            if eng.enlargeable(fused, mid, variant):
                continue
            out.append(j)
        succ.append(tuple(out))
    w_pre = tuple(0 if any(eng.enlargeable(v, j, variant) for j in range(D - 1)) else 1
                  for v in verts)
    w_post = tuple(0 if any(eng.enlargeable(v, j, variant) for j in range(D - 1, L)) else 1
                   for v in verts)
    return Quiver(variant, D, tuple(verts), tuple(succ), w_pre, w_post, p)


def count_via_matrix(q: Quiver, n: int) -> int:
    if n < q.start_degree:
        raise DegreeTooSmall(f"matrix formula needs n >= {q.start_degree}; use brute force")
    steps = n - q.start_degree
    return matrix_power_sequence(q.succ_dicts(), q.w_pre, q.w_post, steps + 1)[-1]


def counts_via_matrix(q: Quiver, n_max: int) -> List[int]:
    """count_via_matrix for n = start_degree .. n_max in one pass."""
    k = n_max - q.start_degree + 1
    return matrix_power_sequence(q.succ_dicts(), q.w_pre, q.w_post, max(k, 0))


class Source(str, enum.Enum):
    BRUTE_FORCE = "brute-force"
    MATRIX_POWER = "matrix-power"


@dataclass(frozen=True)
class CountSequence:
    values: Tuple[int, ...]
    source: Source = Source.BRUTE_FORCE
    exactness: Exactness = Exactness.EXACT

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("counts are non-negative")

    def to_json(self):
        return {"values": [str(v) for v in self.values], "source": self.source.value,
                "exactness": self.exactness.value}


def brute_force_counts(p: Presentation, variant, n_max: int,
                       budget: Optional[int] = None) -> CountSequence:
    vals = [components(p, n, variant, budget).count for n in range(n_max + 1)]
    return CountSequence(tuple(vals), Source.BRUTE_FORCE)


def generating_function(q: Quiver, head) -> RationalGF:
    """Sum_n a_n t^n with the head (n < 2D-3) taken from ``head``."""
    values = head.values if isinstance(head, CountSequence) else tuple(head)
    k = q.start_degree
    if len(values) < k:
        raise DegreeTooSmall(f"head must contain a_0 .. a_{k - 1}")
    head_vals = list(values[:k])
    succ = q.succ_dicts()
    gf = path_series_gf(succ, list(q.w_pre), list(q.w_post), head_vals, k)
    size = len(_trim_support(succ, q.w_pre, q.w_post))
    check = k + 2 * size
    expected = head_vals + counts_via_matrix(q, check)
    if gf.series(check + 1) != expected[:check + 1]:
        raise AssertionError("generating function expansion disagrees with matrix counts")
    return gf


def counting_gf(p: Presentation, variant=Variant.POINT, budget: Optional[int] = None) -> RationalGF:
    """Convenience: quiver plus brute-force head."""
    q = build_quiver(p, variant, budget)
    head = brute_force_counts(p, variant, q.start_degree - 1, budget) if q.start_degree else \
        CountSequence(())
    return generating_function(q, head)


def quiver_recurrence(q: Quiver) -> Recurrence:
    """Recurrence from det(I - tA); valid from n = start_degree + #vertices on."""
    den = det_i_minus_tA_blocks(len(q), q.succ_dicts())
    return recurrence_from_denominator(den)


@dataclass(frozen=True)
class RecurrenceReport:
    recurrence: Optional[Recurrence]
    n_values: int

    @property
    def found(self):
        return self.recurrence is not None

    def to_json(self):
        if self.recurrence is None:
            return {"found": False, "message": "none found", "n_values": self.n_values}
        return {
            "found": True,
            "order": self.recurrence.order,
            "coefficients": [str(c) for c in self.recurrence.coeffs],
            "text": str(self.recurrence),
            "n_values": self.n_values,
        }

    def __str__(self):
        return str(self.recurrence) if self.recurrence else "none found"


def recurrence_check(values) -> RecurrenceReport:
    """Shortest linear recurrence fitted on the first half, validated on all values."""
    vals = values.values if isinstance(values, CountSequence) else tuple(values)
    if len(vals) < 8:
        raise ValueError("recurrence_check needs at least 8 values")
    return RecurrenceReport(fit_recurrence(list(vals)), len(vals))
