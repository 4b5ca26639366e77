"""Decomposition of bicoloured braids over the sixteen generators a'_k, a''_k.

The static table below records, for each of the 20 shuffle triples and each
elementary crossing, which generator (if any) the conjugate q . s_m . q^-1
equals; blank cells are exactly the cross-colour crossings, whose factors
vanish.  ``check_table()`` re-derives every cell from braid arithmetic and
fails loudly on any mismatch, so the table is verified data, not trusted
input.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

from .errors import NotBicolouredError, TableConsistencyError
from .graph_words import (
    Word,
    a_graph,
    equal,
    is_identity,
    normal_form,
    twin_graph,
)
from .twin_braids import (
    DOUBLEPRIMED,
    PRIMED,
    DEFINING_CELLS,
    colour_permutations,
    realize_a_generator,
    shuffle_word,
    validate_word,
)


class HLetter(NamedTuple):
    """One involutive generator of the bicoloured braid group."""

    copy: str  # PRIMED | DOUBLEPRIMED
    index: int  # 1..8


HWord = tuple[HLetter, ...]

# Rows in the printed order of the generator table; the upper half produces
# primed letters, the lower half doubleprimed ones.
TABLE_ROW_ORDER: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 3, 4),
    (1, 3, 5), (1, 3, 6), (2, 3, 6), (2, 3, 5), (2, 3, 4),
    (4, 5, 6), (3, 5, 6), (3, 4, 6), (3, 4, 5), (2, 5, 6),
    (2, 4, 6), (2, 4, 5), (1, 4, 5), (1, 4, 6), (1, 5, 6),
)

# Non-blank cells: triple -> {crossing index: generator index}.
_UPPER_CELLS: dict[tuple[int, int, int], dict[int, int]] = {
    (1, 2, 3): {1: 1, 2: 2, 4: 3, 5: 4},
    (1, 2, 4): {1: 1, 5: 4},
    (1, 2, 5): {1: 1, 3: 7},
    (1, 2, 6): {1: 1, 3: 7, 4: 8},
    (1, 3, 4): {3: 6, 5: 4},
    (1, 3, 5): {},
    (1, 3, 6): {4: 8},
    (2, 3, 6): {2: 5, 4: 8},
    (2, 3, 5): {2: 5},
    (2, 3, 4): {2: 5, 3: 6, 5: 4},
}
_LOWER_CELLS: dict[tuple[int, int, int], dict[int, int]] = {
    (4, 5, 6): {1: 1, 2: 2, 4: 3, 5: 4},
    (3, 5, 6): {1: 1, 5: 4},
    (3, 4, 6): {1: 1, 3: 7},
    (3, 4, 5): {1: 1, 3: 7, 4: 8},
    (2, 5, 6): {3: 6, 5: 4},
    (2, 4, 6): {},
    (2, 4, 5): {4: 8},
    (1, 4, 5): {2: 5, 4: 8},
    (1, 4, 6): {2: 5},
    (1, 5, 6): {2: 5, 3: 6, 5: 4},
}

# Commutation pairs listed alongside each row; the union over either half is
# the edge set of a_graph().
TABLE_RELATIONS: dict[tuple[int, int, int], tuple[tuple[int, int], ...]] = {
    (1, 2, 3): ((1, 3), (1, 4), (2, 3), (2, 4)),
    (1, 2, 4): ((1, 4),),
    (1, 2, 5): ((1, 7),),
    (1, 2, 6): ((1, 7), (1, 8)),
    (1, 3, 4): ((4, 6),),
    (2, 3, 6): ((5, 8),),
    (2, 3, 4): ((4, 5), (4, 6)),
    (4, 5, 6): ((1, 3), (2, 3), (1, 4), (2, 4)),
    (3, 5, 6): ((1, 4),),
    (3, 4, 6): ((1, 7),),
    (3, 4, 5): ((1, 7), (1, 8)),
    (2, 5, 6): ((4, 6),),
    (1, 4, 5): ((5, 8),),
    (1, 5, 6): ((4, 5), (4, 6)),
}

_CELLS: dict[tuple[tuple[int, int, int], int], HLetter] = {}
for _t, _row in _UPPER_CELLS.items():
    for _m, _k in _row.items():
        _CELLS[(_t, _m)] = HLetter(PRIMED, _k)
for _t, _row in _LOWER_CELLS.items():
    for _m, _k in _row.items():
        _CELLS[(_t, _m)] = HLetter(DOUBLEPRIMED, _k)


def table_cell(t: tuple[int, int, int], m: int) -> Optional[HLetter]:
    """Table lookup: the generator equal to q_t . s_m . q_t^-1, or None."""
    return _CELLS.get((tuple(t), m))


def realize_h_letter(letter: HLetter) -> Word:
    return realize_a_generator(letter.index, letter.copy)


def realize_h(hw: Iterable[HLetter]) -> Word:
    """Concatenate the braid realizations of the letters."""
    out: list[int] = []
    for letter in hw:
        out.extend(realize_h_letter(letter))
    return tuple(out)


def decompose_h(word: Iterable[int]) -> HWord:
    """Rewrite a bicoloured braid word over the letters a'_1..a''_8.

    Walks the word tracking the positions of the red strands; every
    same-colour crossing contributes the table letter for the current triple,
    every cross-colour crossing contributes nothing.
    """
    w = validate_word(6, word)
    if colour_permutations(w) is None:
        raise NotBicolouredError(f"word does not preserve {{1,2,3}}: {w}")
    arr = list(range(7))  # arr[p] = strand at position p, arr[0] unused
    out: list[HLetter] = []
    for p in w:
        a, b = arr[p], arr[p + 1]
        if (a <= 3) == (b <= 3):
            triple = tuple(sorted(q for q in range(1, 7) if arr[q] <= 3))
            letter = _CELLS.get((triple, p))
            if letter is None:  # would mean the table misses a cell
                raise TableConsistencyError(
                    f"no table entry for same-colour crossing {p} at {triple}"
                )
            out.append(letter)
        arr[p], arr[p + 1] = arr[p + 1], arr[p]
    return tuple(out)


def h_normal_form(hw: Iterable[HLetter]) -> tuple[tuple[str, Word], ...]:
    """Free-product normal form: alternating copies, nontrivial syllables.

    Each syllable is normalized as a word in A; equal bicoloured elements
    have equal normal forms.
    """
    graph = a_graph()
    syllables: list[tuple[str, Word]] = []
    for letter in hw:
        if syllables and syllables[-1][0] == letter.copy:
            merged = normal_form(graph, syllables[-1][1] + (letter.index,))
            if merged:
                syllables[-1] = (letter.copy, merged)
            else:
                syllables.pop()
        else:
            syllables.append((letter.copy, normal_form(graph, (letter.index,))))
    return tuple(syllables)


def h_equal(hw1: Iterable[HLetter], hw2: Iterable[HLetter]) -> bool:
    return h_normal_form(hw1) == h_normal_form(hw2)


def check_table() -> dict[str, int]:
    """Re-derive every table cell from braid arithmetic.

    For each triple t and crossing m: if the crossing after q_t involves two
    same-coloured strands the cell must name a generator whose canonical
    realization equals q_t . s_m . q_t^-1 in the braid group; otherwise the
    cell must be blank and the factor q_before . s_m . q_after^-1 must be the
    identity.  Raises TableConsistencyError on any mismatch; returns counts.
    """
    g6 = twin_graph(6)
    counts = {"same_colour": 0, "cross_colour": 0}
    for t in TABLE_ROW_ORDER:
        q = shuffle_word(t)
        arr = list(range(7))
        for p in q:
            arr[p], arr[p + 1] = arr[p + 1], arr[p]
        for m in range(1, 6):
            a, b = arr[m], arr[m + 1]
            cell = table_cell(t, m)
            if (a <= 3) == (b <= 3):
                counts["same_colour"] += 1
                if cell is None:
                    raise TableConsistencyError(
                        f"row {t} column {m}: same-colour crossing but blank cell"
                    )
                conj = q + (m,) + tuple(reversed(q))
                if not equal(g6, conj, realize_h_letter(cell)):
                    raise TableConsistencyError(
                        f"row {t} column {m}: cell {cell} does not match braid"
                    )
            else:
                counts["cross_colour"] += 1
                if cell is not None:
                    raise TableConsistencyError(
                        f"row {t} column {m}: cross-colour crossing but cell {cell}"
                    )
                # the factor around a cross-colour crossing is trivial:
                # q_before . s_m . q_after^-1 = 1
                q_after = shuffle_word(pos_triple_after(arr, m))
                if not is_identity(g6, q + (m,) + tuple(reversed(q_after))):
                    raise TableConsistencyError(
                        f"row {t} column {m}: cross-colour factor not identity"
                    )
    # defining cells must agree with the table
    for (k, copy), (t, m) in DEFINING_CELLS.items():
        if table_cell(t, m) != HLetter(copy, k):
            raise TableConsistencyError(
                f"defining cell for ({k},{copy}) disagrees with table"
            )
    return counts


def t_positions(arr: list[int]) -> tuple[int, ...]:
    """Bottom positions currently holding red strands."""
    return tuple(sorted(p for p in range(1, 7) if arr[p] <= 3))


def pos_triple_after(arr: list[int], m: int) -> tuple[int, ...]:
    """Red-strand positions after additionally crossing at m."""
    swapped = list(arr)
    swapped[m], swapped[m + 1] = swapped[m + 1], swapped[m]
    return t_positions(swapped)


# -- text format --------------------------------------------------------------
# Letters render "A1".."A8" for the primed copy and "B1".."B8" for the
# doubleprimed copy; the empty word renders "e".


def hword_to_text(hw: Iterable[HLetter]) -> str:
    hw = tuple(hw)
    if not hw:
        return "e"
    return " ".join(
        ("A" if l.copy == PRIMED else "B") + str(l.index) for l in hw
    )


def hword_from_text(text: str) -> HWord:
    s = text.strip()
    if s == "e" or not s:
        return ()
    out = []
    for tok in s.split():
        if len(tok) < 2 or tok[0] not in "AB" or not tok[1:].isdigit():
            raise ValueError(f"cannot parse H letter {tok!r}")
        k = int(tok[1:])
        if not 1 <= k <= 8:
            raise ValueError(f"H letter index out of range: {tok!r}")
        out.append(HLetter(PRIMED if tok[0] == "A" else DOUBLEPRIMED, k))
    return tuple(out)
