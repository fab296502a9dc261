"""Free-group words written as strings.

A generator is a lowercase ASCII letter and its inverse is the matching
uppercase letter.  The empty string is the identity.  Cyclic words are
stored in a canonical rotation so they can be used as dictionary keys for
conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


class WordError(ValueError):
    """Raised for malformed words or operations undefined on the input."""


def inverse_letter(ch: str) -> str:
    return ch.swapcase()


def letter_key(ch: str) -> tuple[int, int]:
    # generator id first, then +1 before -1
    return (ord(ch.lower()) - ord("a"), 0 if ch.islower() else 1)


def check_word(raw: str) -> str:
    for i, ch in enumerate(raw):
        if not ("a" <= ch.lower() <= "z") or not ch.isascii():
            raise WordError(f"bad letter {ch!r} at position {i} in word {raw!r}")
    return raw


def free_reduce(raw: Union[str, Iterable[str]]) -> str:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[str] = []
    for ch in raw:
        if out and out[-1] == inverse_letter(ch):
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def invert(w: str) -> str:
    return "".join(inverse_letter(ch) for ch in reversed(w))


def multiply(*words: str) -> str:
    return free_reduce("".join(words))


def power(w: str, n: int) -> str:
    if n < 0:
        w, n = invert(w), -n
    return free_reduce(w * n)


def least_rotation(w: str) -> str:
    if not w:
        return w
    keys = [letter_key(ch) for ch in w]
    n = len(w)
    best = min(range(n), key=lambda i: keys[i:] + keys[:i])
    return w[best:] + w[:best]


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word kept in its least rotation."""

    letters: str

    @property
    def canonical(self) -> bool:
        return least_rotation(self.letters) == self.letters

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def inverse(self) -> "CyclicWord":
        return cyclic(invert(self.letters))

    def power(self, n: int) -> "CyclicWord":
        return cyclic(power(self.letters, n))


@dataclass(frozen=True)
class PrimitiveDecomposition:
    root: CyclicWord
    exponent: int


def cyclic_reduce(w: str) -> tuple[CyclicWord, str]:
    """Return ``(c, x)`` with ``x c x^-1 == w`` and ``c`` canonical."""
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == inverse_letter(w[j - 1]):
        i += 1
        j -= 1
    core = w[i:j]
    canon = least_rotation(core)
    if not core:
        return CyclicWord(""), ""
    # core = u v and canon = v u, so core = u canon u^-1
    shift = next(r for r in range(len(core)) if core[r:] + core[:r] == canon)
    conj = multiply(w[:i], core[:shift])
    return CyclicWord(canon), conj


def cyclic(w: Union[str, CyclicWord]) -> CyclicWord:
    if isinstance(w, CyclicWord):
        return w
    return cyclic_reduce(w)[0]


def conjugate_eq(u: Union[str, CyclicWord], v: Union[str, CyclicWord]) -> bool:
    return cyclic(u).letters == cyclic(v).letters


def smallest_period(s: str) -> int:
    # prefix function; a cyclic word is a proper power iff the period divides n
    n = len(s)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return p if n % p == 0 else n


def primitive_root(c: Union[str, CyclicWord]) -> PrimitiveDecomposition:
    c = cyclic(c)
    if not c:
        raise WordError("contractible has no primitive root")
    p = smallest_period(c.letters)
    return PrimitiveDecomposition(cyclic(c.letters[:p]), len(c) // p)


def is_primitive(c: Union[str, CyclicWord]) -> bool:
    return bool(cyclic(c)) and primitive_root(c).exponent == 1


def orientation_character(s, w: Union[str, CyclicWord]) -> int:
    """+1 when ``w`` crosses twisted generators an even number of times.

    ``s`` is a surface (anything with ``twisted`` and ``generators``) or a
    plain collection of twisted generator letters.
    """
    letters = w.letters if isinstance(w, CyclicWord) else w
    gens = getattr(s, "generators", None)
    if gens is not None:
        unknown = generators_of(letters) - set(gens)
        if unknown:
            raise WordError(f"unknown generator {sorted(unknown)[0]!r} in word {letters!r}")
    tw = set(getattr(s, "twisted", s))
    odd = sum(1 for ch in letters if ch.lower() in tw) % 2
    return -1 if odd else 1


def generators_of(w: str) -> set[str]:
    return {ch.lower() for ch in w}


def reduced_words(generators: Iterable[str], max_len: int):
    """All freely reduced words up to ``max_len`` letters, shortest first."""
    letters = [g for g in generators] + [g.upper() for g in generators]
    level = [""]
    yield ""
    for _ in range(max_len):
        level = [w + ch for w in level for ch in letters if not (w and ch == inverse_letter(w[-1]))]
        yield from level


def cyclic_classes(generators: Iterable[str], max_len: int, primitive_only: bool = False):
    """Canonical representatives of nontrivial conjugacy classes up to ``max_len``."""
    out = []
    for w in reduced_words(list(generators), max_len):
        if not w or w[0] == inverse_letter(w[-1]):
            continue
        if least_rotation(w) != w:
            continue
        if primitive_only and smallest_period(w) != len(w):
            continue
        out.append(CyclicWord(w))
    return out
