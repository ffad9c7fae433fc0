"""Word semantics: alternation, the graph represented by a word, verification.

A word is a sequence of letters 1..n with a declared alphabet size; the graph
it represents has an edge x-y exactly when the {x,y}-subsequence strictly
alternates (xyxy... or yxyx...).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class Word:
    letters: tuple
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("alphabet size must be >= 1")
        for c in self.letters:
            if not (1 <= c <= self.n):
                raise ValueError(f"letter {c} outside alphabet 1..{self.n}")

    @staticmethod
    def make(letters, n=None) -> "Word":
        letters = tuple(letters)
        if n is None:
            n = max(letters) if letters else 1
        return Word(letters, n)

    @staticmethod
    def parse(text: str, n=None) -> "Word":
        """Digit string for alphabets up to 9, space-separated decimals otherwise."""
        text = text.strip()
        if " " in text or "," in text:
            parts = text.replace(",", " ").split()
            letters = tuple(int(p) for p in parts)
        else:
            letters = tuple(int(ch) for ch in text)
        return Word.make(letters, n)

    def text(self) -> str:
        if self.n <= 9:
            return "".join(str(c) for c in self.letters)
        return " ".join(str(c) for c in self.letters)

    def reversed(self) -> "Word":
        return Word(tuple(reversed(self.letters)), self.n)

    def erase(self, v: int) -> "Word":
        """Drop every copy of letter v and close the label gap (v+1 -> v, ...)."""
        if not (1 <= v <= self.n):
            raise ValueError(f"letter {v} outside alphabet 1..{self.n}")
        kept = tuple(c if c < v else c - 1 for c in self.letters if c != v)
        return Word(kept, self.n - 1)

    def relabel(self, sigma) -> "Word":
        """Apply a permutation given as a map 1..n -> 1..n."""
        return Word(tuple(sigma[c] for c in self.letters), self.n)


def alternate_in_word(w: Word, x: int, y: int) -> bool:
    """True iff the {x,y}-subsequence of w strictly alternates."""
    if x == y:
        raise ValueError("alternation needs two distinct letters")
    missing = [v for v in (x, y) if v not in w.letters]
    if missing:
        raise ValueError(f"letter(s) {missing} do not occur in the word")
    last = 0
    for c in w.letters:
        if c == x or c == y:
            if c == last:
                return False
            last = c
    return True


def graph_of_word(w: Word) -> Graph:
    """The graph on 1..n whose edges are exactly the alternating pairs of w.

    One pass: ``since[c]`` collects the letters seen after the latest copy of
    c; re-reading c breaks alternation with everything not in that set.
    """
    n = w.n
    full = (1 << n) - 1
    counts = [0] * n
    since = [0] * n
    present = 0
    broken = [0] * n
    for c in w.letters:
        i = c - 1
        if counts[i]:
            # letters with no copy between the two latest copies of c; a letter
            # first occurring later still sees the double c in its subsequence
            newly = full & ~since[i] & ~(1 << i)
            if newly:
                broken[i] |= newly
                m = newly
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    broken[j] |= 1 << i
        counts[i] += 1
        present |= 1 << i
        since[i] = 0
        for j in range(n):
            if j != i:
                since[j] |= 1 << i
    if present != (1 << n) - 1:
        absent = [j + 1 for j in range(n) if not (present >> j & 1)]
        raise ValueError(f"word misses alphabet letters {absent}")
    adj = tuple((full & ~(1 << i)) & ~broken[i] for i in range(n))
    return Graph(n, adj)


def verify_representation(w: Word, g: Graph) -> bool:
    """True iff w represents g as a labelled graph."""
    if w.n != g.n:
        raise ValueError(f"alphabet size {w.n} does not match graph order {g.n}")
    return graph_of_word(w) == g


def is_k_uniform(w: Word, k: int) -> bool:
    counts = [0] * w.n
    for c in w.letters:
        counts[c - 1] += 1
    return all(c == k for c in counts)
