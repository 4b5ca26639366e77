"""Words and normal forms in graph products of groups of order two.

A commutation graph on vertices 1..k presents the group generated by k
involutions in which two generators commute exactly when they are joined by
an edge (a right-angled Coxeter group).  Words are tuples of 1-based letters;
the empty tuple is the identity and inversion is reversal.  The canonical
form of a word is the unique length-minimal, then lexicographically least
word reachable by deleting adjacent equal letters and swapping adjacent
commuting letters.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import InvalidGeneratorError
from .kernels import normal_form_kernel

Word = tuple[int, ...]


class CommutationGraph:
    """Symmetric, loop-free commutation relation on generators 1..vertex_count."""

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop edge ({i},{j}) not allowed")
            if not (1 <= i <= vertex_count and 1 <= j <= vertex_count):
                raise ValueError(f"edge ({i},{j}) out of range")
            norm.add((min(i, j), max(i, j)))
        self.vertex_count = vertex_count
        self.edges = frozenset(norm)
        noncomm = np.ones((vertex_count + 1, vertex_count + 1), dtype=np.bool_)
        for i, j in norm:
            noncomm[i, j] = False
            noncomm[j, i] = False
        noncomm.setflags(write=False)
        self._noncomm = noncomm

    def commutes(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CommutationGraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"CommutationGraph({self.vertex_count}, {sorted(self.edges)})"


def twin_graph(n: int) -> CommutationGraph:
    """Commutation graph of the planar braid group on n strands.

    Vertices are the n-1 elementary crossings; far crossings commute.
    """
    if n < 1:
        raise ValueError("strand count must be >= 1")
    k = n - 1
    edges = [(i, j) for i in range(1, k + 1) for j in range(i + 2, k + 1)]
    return CommutationGraph(k, edges)


#: Commuting pairs among the eight bicoloured-braid generators a_1..a_8.
A_GRAPH_EDGES = (
    (1, 3), (1, 4), (2, 3), (2, 4), (1, 7), (1, 8), (4, 6), (5, 8), (4, 5),
)


def a_graph() -> CommutationGraph:
    """Commutation graph of the group A underlying the bicoloured braids."""
    return CommutationGraph(8, A_GRAPH_EDGES)


def check_word(g: CommutationGraph, word: Iterable[int]) -> Word:
    """Validate letters against the graph and return the word as a tuple."""
    w = tuple(word)
    for x in w:
        if not (1 <= x <= g.vertex_count):
            raise InvalidGeneratorError(
                f"letter {x} outside 1..{g.vertex_count}"
            )
    return w


def normal_form(g: CommutationGraph, word: Iterable[int]) -> Word:
    """Canonical (shortlex-least) representative of the word's group element."""
    w = check_word(g, word)
    if not w:
        return ()
    letters = np.asarray(w, dtype=np.int64)
    return tuple(int(x) for x in normal_form_kernel(letters, g._noncomm))


def equal(g: CommutationGraph, w1: Iterable[int], w2: Iterable[int]) -> bool:
    """Word problem: do the two words represent the same group element?"""
    return normal_form(g, w1) == normal_form(g, w2)


def is_identity(g: CommutationGraph, word: Iterable[int]) -> bool:
    return normal_form(g, word) == ()


def commutator_is_trivial(
    g: CommutationGraph, w1: Iterable[int], w2: Iterable[int]
) -> bool:
    """Do the two words commute as group elements?"""
    u = check_word(g, w1)
    v = check_word(g, w2)
    return equal(g, u + v, v + u)


def inverse(word: Iterable[int]) -> Word:
    """Inverse of a word: reversal, since every generator is an involution."""
    return tuple(reversed(tuple(word)))


# -- text formats -----------------------------------------------------------
#
# Words render as whitespace-separated 1-based integers, the empty word as
# "e".  Graphs render as a "vertices: k" line followed by one "i j" line per
# edge, sorted.


def word_to_text(word: Iterable[int]) -> str:
    w = tuple(word)
    return " ".join(str(x) for x in w) if w else "e"


def word_from_text(text: str, g: CommutationGraph | None = None) -> Word:
    s = text.strip()
    if s == "e" or not s:
        return ()
    try:
        w = tuple(int(tok) for tok in s.split())
    except ValueError as exc:
        raise InvalidGeneratorError(f"cannot parse word {text!r}") from exc
    if g is not None:
        check_word(g, w)
    elif any(x < 1 for x in w):
        raise InvalidGeneratorError(f"letters must be >= 1 in {text!r}")
    return w


def graph_to_text(g: CommutationGraph) -> str:
    lines = [f"vertices: {g.vertex_count}"]
    lines.extend(f"{i} {j}" for i, j in sorted(g.edges))
    return "\n".join(lines)


def graph_from_text(text: str) -> CommutationGraph:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("vertices:"):
        raise ValueError("graph text must start with 'vertices: k'")
    k = int(lines[0].split(":", 1)[1])
    edges = []
    for ln in lines[1:]:
        i, j = ln.split()
        edges.append((int(i), int(j)))
    return CommutationGraph(k, edges)
