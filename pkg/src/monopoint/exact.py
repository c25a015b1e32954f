"""Exact integer/rational polynomial arithmetic and rational generating functions.

Polynomials are lists of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .errors import SchemaError

Poly = List[int]


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def psub(a, b):
    return padd(a, [-c for c in b])


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def pmul_trunc(a, b, n):
    """Product modulo t^n."""
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j, y in enumerate(b[:n - i]):
            out[i + j] += x * y
    return trim(out)


def pshift(p, k):
    return trim([0] * k + list(p)) if p else []


def pdiv_exact_unit(a, b):
    """Exact quotient a / b where b(0) = ±1, computed from the low end.

    Raises ``ArithmeticError`` when the division leaves a remainder.
    """
    a, b = trim(a), trim(b)
    if not b or b[0] not in (1, -1):
        raise ArithmeticError("divisor must have constant term ±1")
    if not a:
        return []
    qlen = len(a) - len(b) + 1
    if qlen <= 0:
        raise ArithmeticError("inexact polynomial division")
    rem = list(a)
    q = [0] * qlen
    for i in range(qlen):
        c = rem[i] * b[0]  # b[0] is its own inverse
        q[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] -= c * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return trim(q)


def peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def series_inverse(p, n):
    """First n coefficients of 1/p for p(0) = ±1."""
    if not p or p[0] not in (1, -1):
        raise ArithmeticError("series inverse needs constant term ±1")
    out = [0] * n
    for k in range(n):
        s = 1 if k == 0 else 0
        for j in range(1, min(k, len(p) - 1) + 1):
            s -= p[j] * out[k - j]
        out[k] = s * p[0]
    return out


# --------------------------------------------------------------------------
# polynomials over Q


def _qtrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _qmod(a, b):
    a = [Fraction(c) for c in a]
    b = _qtrim(b)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a = _qtrim(a)
    return a


def _qdiv(a, b):
    a = [Fraction(c) for c in a]
    b = _qtrim(b)
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a = _qtrim(a)
    if a:
        raise ArithmeticError("inexact division over Q")
    return _qtrim(q)


def pgcd(a, b):
    """Monic gcd over Q (as a list of Fractions)."""
    a, b = _qtrim(a), _qtrim(b)
    while b:
        a, b = b, _qmod(a, b)
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def primitive(p):
    """Scale a rational polynomial to a primitive integer polynomial."""
    p = [Fraction(c) for c in p]
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


# --------------------------------------------------------------------------
# determinants


def bareiss_det(matrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_i_minus_tA(adj: Sequence[Sequence[int]], vertices: Sequence[int]) -> Poly:
    """det(I - tA) restricted to ``vertices`` by Bareiss elimination over Z[t].

    Every leading principal minor of I - tA has constant term 1, so pivots
    never vanish and each exact division runs from the low-degree end.
    """
    n = len(vertices)
    if n == 0:
        return [1]
    index = {v: i for i, v in enumerate(vertices)}
    m = [[[] for _ in range(n)] for _ in range(n)]
    for i, v in enumerate(vertices):
        m[i][i] = [1]
        for u, c in adj[v].items():
            j = index.get(u)
            if j is None:
                continue
            m[i][j] = psub(m[i][j], [0, c])
    prev = [1]
    for k in range(n - 1):
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                a = pmul(m[i][j], piv)
                if mik and m[k][j]:
                    a = psub(a, pmul(mik, m[k][j]))
                m[i][j] = pdiv_exact_unit(a, prev) if a else []
        prev = piv
    return m[n - 1][n - 1]


def strongly_connected_components(n, adj):
    """Tarjan's algorithm; ``adj[v]`` is a dict or iterable of successors."""
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    comps: List[List[int]] = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if index[u] is None:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, iter(adj[u])))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                comps.append(sorted(comp))
    return comps


def det_i_minus_tA_blocks(n, adj) -> Poly:
    """det(I - tA) as the product over strongly connected blocks."""
    out = [1]
    for comp in strongly_connected_components(n, adj):
        if len(comp) == 1:
            v = comp[0]
            c = adj[v].get(v, 0)
            if c:
                out = pmul(out, [1, -c])
            continue
        out = pmul(out, det_i_minus_tA(adj, comp))
    return out


# --------------------------------------------------------------------------
# rational generating functions


@dataclass(frozen=True)
class RationalGF:
    """num(t) / den(t) with integer coefficients, reduced, den(0) = 1."""

    num: Tuple[int, ...]
    den: Tuple[int, ...]

    @classmethod
    def make(cls, num, den):
        num, den = trim(num), trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls((), (1,))
        g = pgcd(num, den)
        if len(g) > 1:
            num = _qdiv(num, g)
            den = _qdiv(den, g)
        num = [Fraction(c) for c in num]
        den = [Fraction(c) for c in den]
        if den[0] == 0:
            raise ArithmeticError("pole at t = 0; not a power series")
        c0 = den[0]
        num = [c / c0 for c in num]
        den = [c / c0 for c in den]
        if any(c.denominator != 1 for c in num + den):
            raise ArithmeticError("reduced generating function is not integral")
        return cls(tuple(int(c) for c in num), tuple(int(c) for c in den))

    @classmethod
    def polynomial(cls, coeffs):
        return cls.make(list(coeffs), [1])

    def series(self, n):
        """First n coefficients of the power-series expansion."""
        inv = series_inverse(list(self.den), n)
        return (pmul_trunc(list(self.num), inv, n) + [0] * n)[:n]

    def __add__(self, other):
        return RationalGF.make(
            padd(pmul(list(self.num), list(other.den)), pmul(list(other.num), list(self.den))),
            pmul(list(self.den), list(other.den)),
        )

    def shifted(self, k):
        """Multiply by t^k."""
        return RationalGF.make(pshift(list(self.num), k), list(self.den))

    def to_json(self):
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls.make([int(c) for c in data["num"]], [int(c) for c in data["den"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad rational function: {exc}", "gf") from None

    def __str__(self):
        return f"({_pstr(self.num)}) / ({_pstr(self.den)})"


def _pstr(p):
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if mono and c in (1, -1):
            coef = "-" if c == -1 else ""
        else:
            coef = str(c)
        terms.append(f"{coef}{mono}")
    s = " + ".join(terms)
    return s.replace("+ -", "- ")


def rational_from_tail(head, tail_num, tail_den, offset):
    """head(t) + t^offset * tail_num / tail_den, reduced."""
    num = padd(pmul(list(head), list(tail_den)), pshift(list(tail_num), offset))
    return RationalGF.make(num, tail_den)


# --------------------------------------------------------------------------
# linear recurrences


def _solve_rational(rows, rhs):
    """One solution of rows * x = rhs over Q, or None if inconsistent."""
    n_unknowns = len(rows[0]) if rows else 0
    aug = [[Fraction(c) for c in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n_unknowns):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            return None
    x = [Fraction(0)] * n_unknowns
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return x


@dataclass(frozen=True)
class Recurrence:
    """a_n = sum_i coeffs[i] * a_{n-1-i} for all n >= order."""

    coeffs: Tuple[Fraction, ...]

    @property
    def order(self):
        return len(self.coeffs)

    def holds(self, values, start=None) -> bool:
        r = self.order
        start = r if start is None else max(start, r)
        return all(
            values[n] == sum(c * values[n - 1 - i] for i, c in enumerate(self.coeffs))
            for n in range(start, len(values))
        )

    def integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{coef}a_(n-{i + 1})"))
        if not terms:
            return "a_n = 0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return "a_n = " + out


def fit_recurrence(values):
    """Shortest recurrence fitted on the first half and validated on all values.

    Returns ``None`` when no recurrence of order <= len(values)//4 fits.
    """
    values = [int(v) for v in values]
    if len(values) < 8:
        raise ValueError("recurrence fitting needs at least 8 values")
    half = len(values) // 2
    for r in range(0, half // 2 + 1):
        rows = [[values[n - 1 - i] for i in range(r)] for n in range(r, half)]
        rhs = [values[n] for n in range(r, half)]
        if r == 0:
            if all(v == 0 for v in values[:half]):
                rec = Recurrence(())
            else:
                continue
        else:
            sol = _solve_rational(rows, rhs)
            if sol is None:
                continue
            rec = Recurrence(tuple(sol))
        if rec.holds(values):
            return rec
    return None


def recurrence_from_denominator(den):
    """Recurrence a_n = -sum_{i>=1} den[i] a_{n-i} read off a denominator with den(0)=1."""
    den = list(den)
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    return Recurrence(tuple(Fraction(-c) for c in den[1:]))
