"""Alphabets, finite words, infinite-word generators and factor statistics.

Words are plain tuples of letter indices. An :class:`Alphabet` owns the
mapping between indices and the symbol strings used at the edges (JSON,
CLI, DOT); everything in between is index based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from .errors import (
    InsufficientPrecision,
    NonProlongingSubstitution,
    SchemaError,
)

Word = Tuple[int, ...]

DEFAULT_PREFIX_MULTIPLIER = 16


class Exactness(str, enum.Enum):
    EXACT = "exact"
    HEURISTIC = "heuristic"

    def __and__(self, other):
        if self is Exactness.EXACT and other is Exactness.EXACT:
            return Exactness.EXACT
        return Exactness.HEURISTIC


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def parse(cls, value):
        if isinstance(value, Side):
            return value
        v = str(value).lower()
        if v in ("l", "left"):
            return cls.LEFT
        if v in ("r", "right"):
            return cls.RIGHT
        raise SchemaError(f"unknown side {value!r}", "side")


@dataclass(frozen=True)
class Alphabet:
    symbols: Tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise SchemaError("alphabet must contain at least one symbol", "alphabet")
        if any(not isinstance(s, str) or not s for s in symbols):
            raise SchemaError("symbols must be non-empty strings", "alphabet")
        if len(set(symbols)) != len(symbols):
            raise SchemaError("symbols must be pairwise distinct", "alphabet")

    @classmethod
    def of_size(cls, m):
        return cls(tuple(str(i) for i in range(m)))

    def __len__(self):
        return len(self.symbols)

    @property
    def size(self):
        return len(self.symbols)

    def index(self, symbol):
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise SchemaError(f"unknown symbol {symbol!r}", "alphabet") from None

    def parse(self, text) -> Word:
        """Parse a word given as a string (longest symbol match) or a list of symbols."""
        if isinstance(text, (list, tuple)):
            return tuple(self.index(s) for s in text)
        if not isinstance(text, str):
            raise SchemaError(f"cannot parse word from {text!r}", "word")
        by_length = sorted(self.symbols, key=len, reverse=True)
        out = []
        i = 0
        while i < len(text):
            for s in by_length:
                if text.startswith(s, i):
                    out.append(self.symbols.index(s))
                    i += len(s)
                    break
            else:
                raise SchemaError(f"cannot tokenize {text!r} at offset {i}", "word")
        return tuple(out)

    def render(self, word: Iterable[int]) -> str:
        return "".join(self.symbols[i] for i in word)

    def render_set(self, letters: Iterable[int]):
        return [self.symbols[i] for i in sorted(letters)]


def reverse(word: Word) -> Word:
    return tuple(reversed(word))


def is_factor(u: Word, v: Word) -> bool:
    """True iff ``u`` occurs as a contiguous block of ``v``."""
    n = len(u)
    if n == 0:
        return True
    return any(v[i:i + n] == u for i in range(len(v) - n + 1))


def all_factors(word: Word, max_length: Optional[int] = None):
    top = len(word) if max_length is None else min(max_length, len(word))
    out = {0: {()}}
    for n in range(1, top + 1):
        out[n] = {word[i:i + n] for i in range(len(word) - n + 1)}
    return out


# --------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class EventuallyPeriodic:
    alphabet: Alphabet
    preperiod: Word
    period: Word

    def __post_init__(self):
        if not self.period:
            raise SchemaError("period must be non-empty", "period")

    @property
    def output_alphabet(self):
        return self.alphabet


@dataclass(frozen=True)
class SubstitutionFixedPoint:
    alphabet: Alphabet
    rules: Dict[int, Word]
    seed: int
    coding: Optional[Dict[int, Word]] = None
    coded_alphabet: Optional[Alphabet] = None
    max_iterations: int = 64

    def __post_init__(self):
        for a in range(len(self.alphabet)):
            if not self.rules.get(a):
                raise SchemaError(f"missing or empty rule for letter {a}", "rules")
        if self.coding is not None:
            if self.coded_alphabet is None:
                raise SchemaError("coding requires a target alphabet", "coded_alphabet")
            for a in range(len(self.alphabet)):
                if not self.coding.get(a):
                    raise SchemaError(f"missing or empty coding for letter {a}", "coding")

    # dict fields make the default dataclass hash unusable
    def __hash__(self):
        return hash((self.alphabet, tuple(sorted(self.rules.items())), self.seed))

    @property
    def output_alphabet(self):
        return self.coded_alphabet if self.coding is not None else self.alphabet


@dataclass(frozen=True)
class CharacteristicSturmian:
    """Characteristic Sturmian word from continued-fraction partial quotients.

    Standard words follow s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{a_k} s_{k-2}.
    Once ``cf`` is used up the recursion continues with ``tail`` as every
    further partial quotient; ``tail=None`` makes exhaustion an error.
    """

    cf: Tuple[int, ...]
    alphabet: Alphabet = field(default_factory=lambda: Alphabet(("0", "1")))
    tail: Optional[int] = 1

    def __post_init__(self):
        object.__setattr__(self, "cf", tuple(self.cf))
        if not self.cf or any(int(a) < 1 for a in self.cf):
            raise SchemaError("cf must be a non-empty list of positive integers", "cf")
        if self.tail is not None and self.tail < 1:
            raise SchemaError("tail partial quotient must be positive", "tail")
        if len(self.alphabet) != 2:
            raise SchemaError("Sturmian words need a two-letter alphabet", "alphabet")

    @property
    def output_alphabet(self):
        return self.alphabet


@dataclass(frozen=True)
class ExplicitPrefix:
    alphabet: Alphabet
    prefix: Word

    @property
    def output_alphabet(self):
        return self.alphabet


WordGenerator = (EventuallyPeriodic, SubstitutionFixedPoint, CharacteristicSturmian, ExplicitPrefix)


def thue_morse(alphabet: Optional[Alphabet] = None) -> SubstitutionFixedPoint:
    alphabet = alphabet or Alphabet(("0", "1"))
    return SubstitutionFixedPoint(alphabet, {0: (0, 1), 1: (1, 0)}, 0)


def fibonacci(length: int = 8, alphabet: Optional[Alphabet] = None) -> CharacteristicSturmian:
    """Fibonacci word as the characteristic word with all partial quotients 1."""
    return CharacteristicSturmian((1,) * length, alphabet or Alphabet(("0", "1")))


def _standard_words(g: CharacteristicSturmian, length: int) -> Word:
    prev, cur = (1,), (0,)
    k = 0
    while len(cur) < length:
        if k < len(g.cf):
            a = g.cf[k]
        elif g.tail is not None:
            a = g.tail
        else:
            raise InsufficientPrecision(
                f"cf of length {len(g.cf)} yields only {len(cur)} letters, {length} requested"
            )
        prev, cur = cur, cur * a + prev
        k += 1
    return cur


def _substitution_prefix(g: SubstitutionFixedPoint, length: int) -> Word:
    image = g.rules[g.seed]
    if image[0] != g.seed:
        raise NonProlongingSubstitution("rule for the seed must start with the seed")
    w: Word = (g.seed,)
    target = length
    for _ in range(g.max_iterations):
        coded_len = len(w) if g.coding is None else sum(len(g.coding[a]) for a in w)
        if coded_len >= target:
            break
        nxt = tuple(b for a in w for b in g.rules[a])
        if len(nxt) <= len(w):
            raise NonProlongingSubstitution("iterated images stopped growing")
        w = nxt
    else:
        raise NonProlongingSubstitution(
            f"prefix of length {length} not reached within {g.max_iterations} iterations"
        )
    if g.coding is not None:
        w = tuple(b for a in w for b in g.coding[a])
    return w[:length]


def generate_prefix(g, length: int) -> Word:
    """First ``length`` letters of the infinite word described by ``g``."""
    if length < 0:
        raise ValueError("length must be non-negative")
    if isinstance(g, EventuallyPeriodic):
        out = list(g.preperiod[:length])
        while len(out) < length:
            out.extend(g.period)
        return tuple(out[:length])
    if isinstance(g, SubstitutionFixedPoint):
        return _substitution_prefix(g, length) if length else ()
    if isinstance(g, CharacteristicSturmian):
        return _standard_words(g, length)[:length]
    if isinstance(g, ExplicitPrefix):
        if length > len(g.prefix):
            raise InsufficientPrecision(
                f"explicit prefix has {len(g.prefix)} letters, {length} requested"
            )
        return g.prefix[:length]
    raise TypeError(f"not a word generator: {g!r}")


# --------------------------------------------------------------------------
# factor sets


@dataclass(frozen=True)
class FactorSet:
    """Hereditary set of factors of lengths 0..N of an infinite word."""

    alphabet: Alphabet
    by_length: Tuple[FrozenSet[Word], ...]
    exactness: Exactness

    @property
    def N(self) -> int:
        return len(self.by_length) - 1

    def __contains__(self, word) -> bool:
        n = len(word)
        return n <= self.N and tuple(word) in self.by_length[n]

    def words(self, n: int):
        return self.by_length[n]

    def p(self, n: int) -> int:
        return len(self.by_length[n])

    def complexity(self):
        return [len(s) for s in self.by_length]

    def to_json(self):
        return {
            str(n): sorted(self.alphabet.render(w) for w in words)
            for n, words in enumerate(self.by_length)
        }

    @classmethod
    def from_json(cls, alphabet: Alphabet, data, exactness=Exactness.EXACT):
        keys = sorted(int(k) for k in data)
        if keys != list(range(len(keys))):
            raise SchemaError("factor lengths must be 0..N without gaps", "factors")
        levels = tuple(frozenset(alphabet.parse(w) for w in data[str(n)]) for n in keys)
        return cls(alphabet, levels, Exactness(exactness))

    @classmethod
    def from_word(cls, alphabet: Alphabet, word: Word, N: int, exactness: Exactness):
        if N > len(word):
            raise InsufficientPrecision(f"cannot harvest length-{N} factors from {len(word)} letters")
        levels = [frozenset({()})]
        for n in range(1, N + 1):
            levels.append(frozenset(word[i:i + n] for i in range(len(word) - n + 1)))
        return cls(alphabet, tuple(levels), exactness)

    @classmethod
    def from_language(cls, alphabet: Alphabet, levels, exactness=Exactness.EXACT):
        return cls(alphabet, tuple(frozenset(map(tuple, lv)) for lv in levels), exactness)


def factors(g, N: int, prefix_multiplier: int = DEFAULT_PREFIX_MULTIPLIER) -> FactorSet:
    """Distinct factors of lengths 0..N of the word produced by ``g``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if prefix_multiplier < 1:
        raise ValueError("prefix_multiplier must be at least 1")
    alphabet = g.output_alphabet
    if isinstance(g, EventuallyPeriodic):
        # every factor starts before the end of the first period copy
        length = len(g.preperiod) + 2 * (len(g.period) + N)
        return FactorSet.from_word(alphabet, generate_prefix(g, length), N, Exactness.EXACT)
    if isinstance(g, ExplicitPrefix):
        return FactorSet.from_word(alphabet, g.prefix, N, Exactness.EXACT)
    word = generate_prefix(g, prefix_multiplier * N)
    return FactorSet.from_word(alphabet, word, N, Exactness.HEURISTIC)


def letter_count(word: Word, letter: int) -> int:
    return sum(1 for a in word if a == letter)


def is_k_balanced(f: FactorSet, k: int):
    """Return ``(True, None)`` or ``(False, (n, letter, u1, u2))``.

    ``u1`` holds the fewest occurrences of ``letter`` and ``u2`` the most.
    """
    for n in range(1, f.N + 1):
        words = f.words(n)
        if not words:
            continue
        for x in range(len(f.alphabet)):
            counted = sorted(words, key=lambda u: (letter_count(u, x), u))
            lo, hi = counted[0], counted[-1]
            if letter_count(hi, x) - letter_count(lo, x) > k:
                return False, (n, x, lo, hi)
    return True, None


def special_factors(f: FactorSet, n: int, side) -> set:
    """Length-``n`` factors with at least two one-letter extensions on ``side``."""
    side = Side.parse(side)
    if n + 1 > f.N:
        raise ValueError(f"need factors of length {n + 1}, oracle stores up to {f.N}")
    ext: Dict[Word, set] = {}
    for v in f.words(n + 1):
        if side is Side.RIGHT:
            ext.setdefault(v[:-1], set()).add(v[-1])
        else:
            ext.setdefault(v[1:], set()).add(v[0])
    return {u for u, letters in ext.items() if len(letters) >= 2}


def recurrence_gap(prefix: Word, u: Word) -> Optional[int]:
    """Least C with every length-C window of ``prefix`` containing ``u``."""
    n = len(u)
    occ = [i for i in range(len(prefix) - n + 1) if prefix[i:i + n] == u]
    if not occ:
        return None
    need = occ[0] + n
    for a, b in zip(occ, occ[1:]):
        need = max(need, b - a - 1 + n)
    need = max(need, len(prefix) - occ[-1])
    return need


def uniform_recurrence_report(g, n: int, window: int,
                              prefix_multiplier: int = DEFAULT_PREFIX_MULTIPLIER):
    """Map each length-``n`` factor to its recurrence window, or ``None`` if > ``window``.

    The scan covers a prefix of ``prefix_multiplier * window`` letters; the
    result is diagnostic only.
    """
    if window < n:
        raise ValueError("window must be at least n")
    prefix = generate_prefix(g, prefix_multiplier * window)
    found = sorted({prefix[i:i + n] for i in range(len(prefix) - n + 1)})
    report = {}
    for u in found:
        c = recurrence_gap(prefix, u)
        report[u] = c if c is not None and c <= window else None
    return report


# --------------------------------------------------------------------------
# generator JSON (variant-tagged)


def _parse_word(alphabet: Alphabet, value, field_name):
    try:
        return alphabet.parse(value)
    except (KeyError, ValueError) as exc:
        raise SchemaError(str(exc), field_name) from None


def generator_from_json(data):
    """Build a WordGenerator from {"type": ..., ...}."""
    if not isinstance(data, dict) or "type" not in data:
        raise SchemaError("generator must be an object with a 'type' tag", "generator")
    kind = data["type"]
    if kind == "sturmian":
        cf = data.get("cf")
        if not isinstance(cf, list) or not all(isinstance(a, int) for a in cf):
            raise SchemaError("cf must be a list of integers", "generator.cf")
        alphabet = Alphabet(tuple(data.get("alphabet", ["0", "1"])))
        return CharacteristicSturmian(tuple(cf), alphabet, data.get("tail", 1))
    if "alphabet" not in data:
        raise SchemaError("missing field", "generator.alphabet")
    alphabet = Alphabet(tuple(data["alphabet"]))
    if kind == "eventually_periodic":
        return EventuallyPeriodic(
            alphabet,
            _parse_word(alphabet, data.get("preperiod", ""), "generator.preperiod"),
            _parse_word(alphabet, data.get("period", ""), "generator.period"),
        )
    if kind == "substitution":
        rules_raw = data.get("rules")
        if not isinstance(rules_raw, dict):
            raise SchemaError("rules must be an object", "generator.rules")
        rules = {alphabet.index(k): _parse_word(alphabet, v, "generator.rules")
                 for k, v in rules_raw.items()}
        seed = alphabet.index(data.get("seed", alphabet.symbols[0]))
        coding = coded = None
        if data.get("coding") is not None:
            if "coded_alphabet" not in data:
                raise SchemaError("coding requires coded_alphabet", "generator.coded_alphabet")
            coded = Alphabet(tuple(data["coded_alphabet"]))
            coding = {alphabet.index(k): _parse_word(coded, v, "generator.coding")
                      for k, v in data["coding"].items()}
        return SubstitutionFixedPoint(alphabet, rules, seed, coding, coded)
    if kind == "prefix":
        return ExplicitPrefix(alphabet, _parse_word(alphabet, data.get("prefix", ""),
                                                    "generator.prefix"))
    raise SchemaError(f"unknown generator type {kind!r}", "generator.type")


def generator_to_json(g):
    if isinstance(g, CharacteristicSturmian):
        return {"type": "sturmian", "cf": list(g.cf), "alphabet": list(g.alphabet.symbols),
                "tail": g.tail}
    if isinstance(g, EventuallyPeriodic):
        return {"type": "eventually_periodic", "alphabet": list(g.alphabet.symbols),
                "preperiod": g.alphabet.render(g.preperiod),
                "period": g.alphabet.render(g.period)}
    if isinstance(g, SubstitutionFixedPoint):
        out = {"type": "substitution", "alphabet": list(g.alphabet.symbols),
               "rules": {g.alphabet.symbols[a]: g.alphabet.render(w)
                         for a, w in sorted(g.rules.items())},
               "seed": g.alphabet.symbols[g.seed]}
        if g.coding is not None:
            out["coded_alphabet"] = list(g.coded_alphabet.symbols)
            out["coding"] = {g.alphabet.symbols[a]: g.coded_alphabet.render(w)
                             for a, w in sorted(g.coding.items())}
        return out
    if isinstance(g, ExplicitPrefix):
        return {"type": "prefix", "alphabet": list(g.alphabet.symbols),
                "prefix": g.alphabet.render(g.prefix)}
    raise TypeError(f"not a word generator: {g!r}")
