"""Normal ordering in the three-parameter deformation with relations

    D D U = alpha D U D + beta U D D + gamma D
    D U U = alpha U D U + beta U U D + gamma U.

Read left to right these are rewriting rules; a monomial is *normal* when
it contains neither DDU nor DUU as a factor, which pins it to the shape
U^a (DU)^b D^c.  Each rewrite strictly decreases the sum of the positions
of the U's, so rewriting terminates, and the normal monomials form a basis
of the algebra, so the resulting normal form is independent of the rewrite
order.  When alpha + beta = 1 and gamma - beta = 1 two monomials have equal
normal forms exactly when the words are Weyl-equivalent.

Parameters are exact rationals.  Normal forms are memoized per (monomial,
parameters, strategy); the memo is a plain dict with idempotent inserts,
which is safe under CPython's GIL (entries for the same key are always
equal), so calls may be issued from multiple threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError


class DownUpParams(NamedTuple):
    """The three scalars of the deformed relations, as exact rationals."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    @classmethod
    def of(cls, alpha, beta, gamma) -> "DownUpParams":
        return cls(Fraction(alpha), Fraction(beta), Fraction(gamma))


class DownUpElement:
    """Finite rational combination of normal monomials U^a (DU)^b D^c.

    ``terms`` maps each normal word to a nonzero Fraction; equality is map
    equality.  Immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[str, Fraction]):
        self._terms = {w: c for w, c in terms.items() if c}
        for w in self._terms:
            if not is_normal_monomial(w):
                raise DomainError(f"{w!r} is not a normal monomial")
        self._hash: int | None = None

    @property
    def terms(self) -> dict[str, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[str, Fraction]]:
        return sorted(self._terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, DownUpElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "DownUpElement(0)"
        parts = (f"{c}*{w or '1'}" for w, c in self.sorted_terms())
        return f"DownUpElement({' + '.join(parts)})"


def is_normal_monomial(word: str) -> bool:
    """True iff the word avoids both factors DDU and DUU."""
    return "DDU" not in word and "DUU" not in word


_memo: dict[tuple[str, DownUpParams, str], dict[str, Fraction]] = {}


def _first_redex(word: str, strategy: str) -> int:
    hits = [i for i in (word.find("DDU"), word.find("DUU")) if i != -1]
    if strategy == "leftmost":
        return min(hits) if hits else -1
    if strategy == "rightmost":
        return max(word.rfind("DDU"), word.rfind("DUU"))
    raise DomainError(f"unknown strategy {strategy!r}")


def _normal_terms(word: str, params: DownUpParams, strategy: str) -> dict[str, Fraction]:
    key = (word, params, strategy)
    got = _memo.get(key)
    if got is not None:
        return got
    idx = _first_redex(word, strategy)
    if idx == -1:
        result = {word: Fraction(1)}
    else:
        head, tail = word[:idx], word[idx + 3 :]
        if word[idx : idx + 3] == "DDU":
            replacements = (("DUD", params.alpha), ("UDD", params.beta), ("D", params.gamma))
        else:
            replacements = (("UDU", params.alpha), ("UUD", params.beta), ("U", params.gamma))
        result = {}
        for repl, coeff in replacements:
            if not coeff:
                continue
            for w, c in _normal_terms(head + repl + tail, params, strategy).items():
                new = result.get(w, Fraction(0)) + coeff * c
                if new:
                    result[w] = new
                elif w in result:
                    del result[w]
    _memo[key] = result
    return result


def du_normal_order(word: str, params, strategy: str = "leftmost") -> DownUpElement:
    """Normal form of a monomial: rewrite until no DDU or DUU factor remains.

    ``params`` is a DownUpParams or any (alpha, beta, gamma) triple of
    rationals.  ``strategy`` picks which redex to contract first; the
    result is the same either way (tested), the knob exists to make that
    checkable.
    """
    if not isinstance(params, DownUpParams):
        params = DownUpParams.of(*params)
    return DownUpElement(_normal_terms(word, params, strategy))


def du_equivalent(u: str, v: str, params) -> bool:
    """True iff the two monomials are equal in the algebra with the given scalars."""
    if not isinstance(params, DownUpParams):
        params = DownUpParams.of(*params)
    return _normal_terms(u, params, "leftmost") == _normal_terms(v, params, "leftmost")
