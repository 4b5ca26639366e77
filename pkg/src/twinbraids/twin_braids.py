"""Twin-braid structure on top of the graph-product word machinery.

Permutations are tuples ``images`` of length n with ``images[k-1]`` the
bottom position of the strand that starts at top position k.  A product of
braid words composes left to right: in ``u . v`` the word ``u`` acts first.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .errors import InvalidGeneratorError, InvalidTripleError
from .graph_words import Word, twin_graph
from .kernels import arrangement_kernel

PRIMED = "primed"
DOUBLEPRIMED = "doubleprimed"

#: The 20 strictly increasing triples in {1..6}, lexicographically ordered.
SHUFFLE_TRIPLES: tuple[tuple[int, int, int], ...] = tuple(
    combinations(range(1, 7), 3)
)


def _check_letters(n: int, word: Iterable[int]) -> Word:
    w = tuple(word)
    for x in w:
        if not (1 <= x <= n - 1):
            raise InvalidGeneratorError(f"letter {x} outside 1..{n - 1}")
    return w


def arrangement_of(n: int, word: Iterable[int]) -> tuple[int, ...]:
    """Strand occupying each bottom position: ``arr[p-1]`` for position p."""
    w = _check_letters(n, word)
    letters = np.asarray(w, dtype=np.int64)
    arr = arrangement_kernel(letters, n)
    return tuple(int(x) for x in arr[1:])


def permutation_of(n: int, word: Iterable[int]) -> tuple[int, ...]:
    """Underlying permutation of a braid word, as bottom positions per strand."""
    arr = arrangement_of(n, word)
    images = [0] * n
    for pos, strand in enumerate(arr, start=1):
        images[strand - 1] = pos
    return tuple(images)


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Left-to-right composition: apply p first, then q."""
    return tuple(q[p[k] - 1] for k in range(len(p)))


def invert(p: tuple[int, ...]) -> tuple[int, ...]:
    images = [0] * len(p)
    for k, v in enumerate(p, start=1):
        images[v - 1] = k
    return tuple(images)


def identity_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def is_pure(n: int, word: Iterable[int]) -> bool:
    """True iff every strand ends directly below its starting point."""
    return permutation_of(n, word) == identity_permutation(n)


class ColourPair(NamedTuple):
    """Permutations induced on the red strands 1-3 and black strands 4-6."""

    red: tuple[int, int, int]
    black: tuple[int, int, int]


def colour_permutations(word: Iterable[int]) -> Optional[ColourPair]:
    """Induced colour permutations of a word over twin_graph(6).

    Returns None when the word is not bicoloured (it moves some strand
    across the {1,2,3} | {4,5,6} boundary); that is a normal outcome.
    """
    images = permutation_of(6, word)
    if set(images[:3]) != {1, 2, 3}:
        return None
    red = images[:3]
    black = tuple(x - 3 for x in images[3:])
    return ColourPair(red, black)  # type: ignore[arg-type]


def sorting_word(n: int, target: tuple[int, ...]) -> Word:
    """Reduced braid word realizing the target permutation, by bubble sort.

    Scans positions 1..n-1 left to right, emitting the crossing at p whenever
    the strands at p, p+1 are out of final order; repeats until sorted.  The
    word length equals the inversion number of the target.
    """
    arr = list(range(1, n + 1))
    done = tuple(invert(target))
    word = []
    while tuple(arr) != done:
        for p in range(n - 1):
            if target[arr[p] - 1] > target[arr[p + 1] - 1]:
                word.append(p + 1)
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
    return tuple(word)


def check_triple(t: tuple[int, int, int]) -> tuple[int, int, int]:
    t = tuple(t)  # type: ignore[assignment]
    if len(t) != 3 or not (1 <= t[0] < t[1] < t[2] <= 6):
        raise InvalidTripleError(f"not an increasing triple in 1..6: {t}")
    return t


def shuffle_permutation(t: tuple[int, int, int]) -> tuple[int, ...]:
    """The (3,3)-shuffle sending k to t[k-1] and 4,5,6 to the complement."""
    t = check_triple(t)
    rest = [x for x in range(1, 7) if x not in t]
    return t + tuple(rest)


@lru_cache(maxsize=None)
def shuffle_word(t: tuple[int, int, int]) -> Word:
    """Reduced braid word of the shuffle braid q for the given triple.

    Within each colour the strands never cross, so the word's length is the
    inversion number of the shuffle and the group element does not depend on
    the reduced word chosen; bubble sort fixes one deterministically.
    """
    return sorting_word(6, shuffle_permutation(check_triple(t)))


def gh_words() -> tuple[Word, Word]:
    """The commuting pure braids g = (s1 s2)^3 and h = (s4 s5)^3."""
    return (1, 2, 1, 2, 1, 2), (4, 5, 4, 5, 4, 5)


# Canonical defining cell for each generator of the bicoloured braid group:
# the first row of the generator table (in printed order, see bicoloured.py)
# in which the generator appears, as (triple, crossing index).
DEFINING_CELLS: dict[tuple[int, str], tuple[tuple[int, int, int], int]] = {
    (1, PRIMED): ((1, 2, 3), 1),
    (2, PRIMED): ((1, 2, 3), 2),
    (3, PRIMED): ((1, 2, 3), 4),
    (4, PRIMED): ((1, 2, 3), 5),
    (5, PRIMED): ((2, 3, 6), 2),
    (6, PRIMED): ((1, 3, 4), 3),
    (7, PRIMED): ((1, 2, 5), 3),
    (8, PRIMED): ((1, 2, 6), 4),
    (1, DOUBLEPRIMED): ((4, 5, 6), 1),
    (2, DOUBLEPRIMED): ((4, 5, 6), 2),
    (3, DOUBLEPRIMED): ((4, 5, 6), 4),
    (4, DOUBLEPRIMED): ((4, 5, 6), 5),
    (5, DOUBLEPRIMED): ((1, 4, 5), 2),
    (6, DOUBLEPRIMED): ((2, 5, 6), 3),
    (7, DOUBLEPRIMED): ((3, 4, 6), 3),
    (8, DOUBLEPRIMED): ((3, 4, 5), 4),
}


@lru_cache(maxsize=None)
def realize_a_generator(k: int, copy: str) -> Word:
    """Braid word realizing generator a_k of the primed or doubleprimed copy.

    The word is q . s_m . q^-1 for the generator's canonical defining cell
    (q the shuffle braid of the cell's triple, s_m the cell's crossing).
    """
    if copy not in (PRIMED, DOUBLEPRIMED):
        raise ValueError(f"copy must be {PRIMED!r} or {DOUBLEPRIMED!r}")
    if not 1 <= k <= 8:
        raise InvalidGeneratorError(f"generator index {k} outside 1..8")
    triple, m = DEFINING_CELLS[(k, copy)]
    q = shuffle_word(triple)
    return q + (m,) + tuple(reversed(q))


def triple_to_text(t: tuple[int, int, int]) -> str:
    return "".join(str(x) for x in t)


def triple_from_text(s: str) -> tuple[int, int, int]:
    if len(s.strip()) != 3 or not s.strip().isdigit():
        raise InvalidTripleError(f"cannot parse triple {s!r}")
    t = tuple(int(c) for c in s.strip())
    return check_triple(t)  # type: ignore[arg-type]


def validate_word(n: int, word: Iterable[int]) -> Word:
    """Public letter-range check for words over twin_graph(n)."""
    return _check_letters(n, word)


__all__ = [
    "PRIMED",
    "DOUBLEPRIMED",
    "SHUFFLE_TRIPLES",
    "ColourPair",
    "arrangement_of",
    "permutation_of",
    "compose",
    "invert",
    "identity_permutation",
    "is_pure",
    "colour_permutations",
    "sorting_word",
    "shuffle_permutation",
    "shuffle_word",
    "gh_words",
    "realize_a_generator",
    "triple_to_text",
    "triple_from_text",
    "twin_graph",
]
