"""Term association over document collections: the Stiles association factor and TF-IDF."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CorrectionDominates, DegenerateTerm, InvalidValue


@dataclass(frozen=True)
class AssocCounts:
    """Document counts: ``a`` indexed by term 1, ``b`` by term 2, ``f`` by both, ``n`` total."""

    a: int
    b: int
    f: int
    n: int

    def __post_init__(self):
        for name in ("a", "b", "f", "n"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise InvalidValue(f"{name} must be an integer, got {v}")
        if self.n < 1:
            raise InvalidValue("collection must hold at least one document")
        if not (0 <= self.f <= min(self.a, self.b) and self.a <= self.n and self.b <= self.n):
            raise InvalidValue(f"inconsistent counts {self}")
        if self.a + self.b - self.f > self.n:
            raise InvalidValue(f"documents with either term ({self.a + self.b - self.f}) exceed n={self.n}")


@dataclass(frozen=True)
class AssocResult:
    magnitude: float
    negative: bool


def stiles_association(c: AssocCounts) -> AssocResult:
    """Stiles (1961) association factor.

    ``log10(N (|fN - AB| - N/2)**2 / (A B (N - A)(N - B)))``; the direction is
    reported separately and is negative when ``AB > fN``.
    """
    a, b, f, n = c.a, c.b, c.f, c.n
    if not (0 < a < n and 0 < b < n):
        raise DegenerateTerm(f"each term must occur in some but not all documents (A={a}, B={b}, N={n})")
    dev = abs(f * n - a * b)
    # |fN - AB| > N/2, kept in integers
    if 2 * dev <= n:
        raise CorrectionDominates(
            f"|fN - AB| = {dev} does not exceed N/2 = {n / 2}; the continuity correction swallows it"
        )
    ratio = Fraction(n * (2 * dev - n) ** 2, 4 * a * b * (n - a) * (n - b))
    magnitude = math.log10(ratio.numerator) - math.log10(ratio.denominator)
    return AssocResult(magnitude=magnitude, negative=a * b > f * n)


@dataclass(frozen=True)
class Corpus:
    documents: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        docs = tuple(tuple(d) for d in self.documents)
        object.__setattr__(self, "documents", docs)
        if not docs:
            raise InvalidValue("corpus must contain at least one document")
        for d in docs:
            if any(not isinstance(t, str) or not t for t in d):
                raise InvalidValue("tokens must be non-empty strings")

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "Corpus":
        """One document per non-blank line, lower-cased and split on whitespace."""
        return cls(tuple(tuple(line.lower().split()) for line in lines if line.strip()))

    def __len__(self) -> int:
        return len(self.documents)


def count_pair(corpus: Corpus, term1: str, term2: str) -> AssocCounts:
    a = b = f = 0
    for doc in corpus.documents:
        terms = set(doc)
        in1, in2 = term1 in terms, term2 in terms
        a += in1
        b += in2
        f += in1 and in2
    return AssocCounts(a, b, f, len(corpus))


def document_frequencies(corpus: Corpus) -> Counter:
    df: Counter = Counter()
    for doc in corpus.documents:
        df.update(set(doc))
    return df


def tfidf(corpus: Corpus, base: float = math.e) -> list[dict[str, float]]:
    """``tf(t, d) * log(N / df(t))`` per document, with raw counts as ``tf``."""
    if not (base > 0 and base != 1 and math.isfinite(base)):
        raise InvalidValue(f"logarithm base must be positive and not 1, got {base}")
    n = len(corpus)
    df = document_frequencies(corpus)
    log_base = math.log(base)
    idf = {t: math.log(n / k) / log_base for t, k in df.items()}
    return [{t: tf * idf[t] for t, tf in Counter(doc).items()} for doc in corpus.documents]


def top_terms(weights: Sequence[dict[str, float]], k: int = 10) -> list[list[tuple[str, float]]]:
    """Highest-weighted terms per document, ties broken alphabetically."""
    return [sorted(w.items(), key=lambda kv: (-kv[1], kv[0]))[:k] for w in weights]
