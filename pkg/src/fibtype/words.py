"""Words in the free group on x_0, ..., x_{n-1} and cyclic presentations.

Words are written as whitespace separated tokens ``xI`` (generator) and
``XI`` (inverse), e.g. ``x0 x7 X1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

_TOKEN = re.compile(r"^([xX])(\d+)$")


@dataclass(frozen=True, order=True)
class Letter:
    generator: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.generator < 0:
            raise ValueError("generator index must be non-negative")

    def inverse(self) -> Letter:
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        return f"{'x' if self.sign == 1 else 'X'}{self.generator}"


class Word:
    """A finite sequence of letters over ``n`` generators.

    Generator indices are reduced mod ``n`` on construction.  No free
    reduction is performed; use :func:`reduce` for that.
    """

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters: Iterable[Letter | tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("rank n must be positive")
        norm = []
        for a in letters:
            if not isinstance(a, Letter):
                a = Letter(a[0] % n, a[1])
            elif a.generator >= n:
                a = Letter(a.generator % n, a.sign)
            norm.append(a)
        self.n = n
        self.letters = tuple(norm)

    @classmethod
    def parse(cls, n: int, text: str) -> Word:
        letters = []
        for tok in text.split():
            mt = _TOKEN.match(tok)
            if mt is None:
                raise ValueError(f"bad word token {tok!r} (expected xI or XI)")
            g = int(mt.group(2))
            if g >= n:
                raise ValueError(f"generator {tok} out of range for n={n}")
            letters.append(Letter(g, 1 if mt.group(1) == "x" else -1))
        return cls(n, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.n, self.letters[i])
        return self.letters[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.n == other.n and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def __mul__(self, other: Word) -> Word:
        if other.n != self.n:
            raise ValueError("cannot concatenate words of different rank")
        return Word(self.n, self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(self.n, [a.inverse() for a in reversed(self.letters)])

    def rotate(self, r: int) -> Word:
        if not self.letters:
            return self
        r %= len(self.letters)
        return Word(self.n, self.letters[r:] + self.letters[:r])

    def rotations(self) -> list[Word]:
        return [self.rotate(r) for r in range(max(len(self), 1))]

    def is_freely_reduced(self) -> bool:
        return all(a != b.inverse() for a, b in zip(self.letters, self.letters[1:]))

    def is_cyclically_reduced(self) -> bool:
        if not self.is_freely_reduced():
            return False
        return len(self) < 2 or self.letters[-1] != self.letters[0].inverse()

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"Word({self.n}, {str(self)!r})"


@dataclass(frozen=True)
class CyclicPresentation:
    """The presentation with relators w, shift(w, 1), ..., shift(w, n-1)."""

    n: int
    w: Word

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("cyclic presentations need n >= 2")
        if self.w.n != self.n:
            raise ValueError("word rank does not match presentation rank")

    @classmethod
    def fibonacci_type(cls, n: int, m: int, k: int) -> CyclicPresentation:
        return cls(n, fib_word(n, m, k))

    def fib_parameters(self) -> tuple[int, int] | None:
        """Return (m, k) if w is x_i x_{i+m} x_{i+k}^-1 for some i, else None."""
        w = self.w
        if len(w) != 3 or [a.sign for a in w] != [1, 1, -1]:
            return None
        i = w[0].generator
        return (w[1].generator - i) % self.n, (w[2].generator - i) % self.n

    def __str__(self) -> str:
        return f"P_{self.n}({self.w})"


def fib_word(n: int, m: int, k: int) -> Word:
    """The word x_0 x_m x_k^-1 defining G_n(m, k)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if not (0 <= m < n and 0 <= k < n):
        raise ValueError(f"parameters out of range: need 0 <= m,k < n, got m={m}, k={k}, n={n}")
    return Word(n, [Letter(0, 1), Letter(m, 1), Letter(k, -1)])


def shift(word: Word, j: int) -> Word:
    """Apply the shift automorphism x_i -> x_{i+j}."""
    n = word.n
    return Word(n, [Letter((a.generator + j) % n, a.sign) for a in word])


def reduce(word: Word, cyclic: bool = False) -> Word:
    stack: list[Letter] = []
    for a in word:
        if stack and stack[-1] == a.inverse():
            stack.pop()
        else:
            stack.append(a)
    if cyclic:
        lo, hi = 0, len(stack)
        while hi - lo >= 2 and stack[lo] == stack[hi - 1].inverse():
            lo += 1
            hi -= 1
        stack = stack[lo:hi]
    return Word(word.n, stack)


def relators(p: CyclicPresentation) -> list[Word]:
    return [shift(p.w, i) for i in range(p.n)]
