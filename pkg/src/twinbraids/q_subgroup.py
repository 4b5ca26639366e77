"""The kernel Q of A -> S3 x S3: transversal, letter enumeration, rewriting.

A is the graph product of eight involutions a_1..a_8 (see graph_words.a_graph)
and maps onto S3 x S3 by sending each generator to the colour permutations of
its braid realization.  Q is generated by the nontrivial letters
mu a_j nu^-1 with mu, nu coset representatives; this module enumerates those
letters, classifies them into 18 free generators and 10 commuting pairs, and
rewrites arbitrary Q-words over the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from .errors import NotInQError
from .graph_words import (
    Word,
    a_graph,
    commutator_is_trivial,
    equal,
    inverse,
    normal_form,
    twin_graph,
)
from .twin_braids import (
    PRIMED,
    DOUBLEPRIMED,
    colour_permutations,
    compose,
    gh_words,
    invert,
    realize_a_generator,
    shuffle_word,
)

# An element of S3 x S3: a pair of one-line permutations of {1,2,3}.
S3Pair = tuple[tuple[int, int, int], tuple[int, int, int]]

S3S3_IDENTITY: S3Pair = ((1, 2, 3), (1, 2, 3))


def s3s3_mul(x: S3Pair, y: S3Pair) -> S3Pair:
    return (compose(x[0], y[0]), compose(x[1], y[1]))


def s3s3_inv(x: S3Pair) -> S3Pair:
    return (invert(x[0]), invert(x[1]))


def swap_colours(x: S3Pair) -> S3Pair:
    """The factor-swapping automorphism of S3 x S3 (conjugation by q_456)."""
    return (x[1], x[0])


# Coset representative words: Z3 in the letters a_1, a_2 and Z3' in a_3, a_4,
# each listing the six elements of its colour's symmetric group.
Z3_WORDS: tuple[Word, ...] = ((), (1,), (2,), (1, 2), (2, 1), (1, 2, 1))
Z3P_WORDS: tuple[Word, ...] = ((), (3,), (4,), (3, 4), (4, 3), (4, 3, 4))


@lru_cache(maxsize=None)
def a_generator_images() -> tuple[S3Pair, ...]:
    """Images of a_1..a_8 in S3 x S3, read off the primed braid realizations."""
    images = []
    for k in range(1, 9):
        pair = colour_permutations(realize_a_generator(k, PRIMED))
        assert pair is not None
        images.append((pair.red, pair.black))
    return tuple(images)


def a_word_image(word: Iterable[int]) -> S3Pair:
    """Image of a word in A under the map to S3 x S3."""
    gens = a_generator_images()
    acc = S3S3_IDENTITY
    for x in word:
        acc = s3s3_mul(acc, gens[x - 1])
    return acc


@lru_cache(maxsize=None)
def z_transversal() -> tuple[Word, ...]:
    """The 36 coset representative words, Z3 index major, Z3' index minor."""
    return tuple(z3 + z3p for z3 in Z3_WORDS for z3p in Z3P_WORDS)


@lru_cache(maxsize=None)
def _transversal_by_image() -> dict[S3Pair, Word]:
    table = {}
    for w in z_transversal():
        img = a_word_image(w)
        assert img not in table, "transversal images must be distinct"
        table[img] = w
    assert len(table) == 36
    return table


def transversal_word(alpha: S3Pair) -> Word:
    """Representative word of the coset whose image is alpha."""
    return _transversal_by_image()[alpha]


class XLetter(NamedTuple):
    """One nontrivial factor mu a_j nu^-1 of a rewritten Q-word."""

    mu: Word
    j: int
    nu: Word
    word: Word  # normal form over a_graph, used for identity and lookup


def _letter(mu: Word, j: int) -> XLetter:
    nu = transversal_word(s3s3_mul(a_word_image(mu), a_generator_images()[j - 1]))
    nf = normal_form(a_graph(), mu + (j,) + inverse(nu))
    return XLetter(mu, j, nu, nf)


def rewrite_q(b: Iterable[int]) -> tuple[XLetter, ...]:
    """Factor a Q-word into nontrivial letters mu a_j nu^-1.

    Tracks the transversal representative of each prefix's coset; raises
    NotInQError when the word's image is not the identity.
    """
    word = tuple(b)
    if a_word_image(word) != S3S3_IDENTITY:
        raise NotInQError(f"word has image {a_word_image(word)}")
    out = []
    mu = ()
    img = S3S3_IDENTITY
    gens = a_generator_images()
    for j in word:
        img = s3s3_mul(img, gens[j - 1])
        nu = transversal_word(img)
        nf = normal_form(a_graph(), mu + (j,) + inverse(nu))
        if nf:
            out.append(XLetter(mu, j, nu, nf))
        mu = nu
    return tuple(out)


@dataclass(frozen=True)
class QGenerator:
    """One catalog generator: a letter class {x, x^-1} of the kernel Q."""

    gen_id: int
    kind: str  # "free" | "pair_g" | "pair_h"
    j: int
    word: Word  # canonical (shortlex-least of the class)
    inverse_word: Word
    pair_triple: Optional[tuple[int, int, int]]  # present iff kind != free
    partner_id: Optional[int]  # the commuting mate of a pair component


@dataclass(frozen=True)
class QCatalog:
    generators: tuple[QGenerator, ...]
    by_word: dict  # normal form -> (gen_id, +1 | -1)
    x_counts: dict  # j -> number of distinct letters
    pairs: tuple  # ((triple, g_gen_id, h_gen_id), ...)

    def free_generators(self) -> tuple[QGenerator, ...]:
        return tuple(g for g in self.generators if g.kind == "free")

    def generator(self, gen_id: int) -> QGenerator:
        return self.generators[gen_id - 1]


_KIND_BY_J = {2: "pair_g", 5: "pair_g", 3: "pair_h", 8: "pair_h",
              6: "free", 7: "free"}

#: Triples whose conjugated (g, h) realize the commuting pairs from the
#: letters with j in {5, 8}.
X5_X8_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5),
    (1, 3, 6), (2, 3, 4), (2, 3, 5), (2, 3, 6),
)


def realize_a_word(word: Iterable[int], copy: str = PRIMED) -> Word:
    """Braid realization of a word in A, through the chosen copy."""
    out: list[int] = []
    for k in word:
        out.extend(realize_a_generator(k, copy))
    return tuple(out)


def conjugated_gh(t: tuple[int, int, int]) -> tuple[Word, Word]:
    """The commuting pure pair (q^-1 g q, q^-1 h q) for the shuffle braid of t.

    This conjugation order is the one the letters actually realize: with the
    opposite order (q g q^-1) distinct triples give coinciding braids, so no
    bijection with the triples exists.  The strands entering the g-dance are
    then exactly the strands of t.
    """
    q = shuffle_word(t)
    qi = tuple(reversed(q))
    g0, h0 = gh_words()
    return qi + g0 + q, qi + h0 + q


def match_pair_triple(
    g_braid: Word, h_braid: Word, candidates: Iterable[tuple[int, int, int]]
) -> Optional[tuple[tuple[int, int, int], int, int]]:
    """Find the candidate triple whose conjugated (g, h) the pair equals.

    Either component may be the inverse of the conjugated braid; returns
    (triple, g_direction, h_direction) with directions +1/-1, or None when no
    candidate matches.  Asserts at most one candidate matches.
    """
    g6 = twin_graph(6)
    found = None
    for t in candidates:
        qg, qh = conjugated_gh(t)
        g_dir = 1 if equal(g6, g_braid, qg) else (
            -1 if equal(g6, g_braid, inverse(qg)) else 0)
        h_dir = 1 if equal(g6, h_braid, qh) else (
            -1 if equal(g6, h_braid, inverse(qh)) else 0)
        if g_dir and h_dir:
            assert found is None, f"pair matches both {found[0]} and {t}"
            found = (t, g_dir, h_dir)
    return found


@lru_cache(maxsize=None)
def enumerate_x() -> QCatalog:
    """Enumerate all letters mu a_j nu^-1, dedupe, and build the catalog.

    Asserts the structural facts used downstream: equal letters share j, each
    letter's inverse is a letter with the same j, and the pair components
    match up one to one by commutation.
    """
    graph = a_graph()
    first: dict[Word, XLetter] = {}
    order: list[Word] = []
    for mu in z_transversal():
        for j in range(1, 9):
            letter = _letter(mu, j)
            if not letter.word:
                continue
            if letter.word in first:
                # two letters with the same normal form always share j
                assert first[letter.word].j == letter.j
            else:
                first[letter.word] = letter
                order.append(letter.word)

    x_counts = {j: 0 for j in range(1, 9)}
    for nf in order:
        x_counts[first[nf].j] += 1
    assert x_counts[1] == 0 and x_counts[4] == 0

    raw: list[dict] = []
    by_word: dict[Word, tuple[int, int]] = {}
    for nf in order:
        if nf in by_word:
            continue
        letter = first[nf]
        inv_nf = normal_form(graph, inverse(nf))
        assert inv_nf in first and first[inv_nf].j == letter.j
        assert inv_nf != nf, "letters are torsion-free"
        canonical, other = sorted((nf, inv_nf), key=lambda w: (len(w), w))
        gen_id = len(raw) + 1
        raw.append({"gen_id": gen_id, "kind": _KIND_BY_J[letter.j],
                    "j": letter.j, "word": canonical, "inverse_word": other})
        by_word[canonical] = (gen_id, 1)
        by_word[other] = (gen_id, -1)

    # pair components: each g-side generator commutes with exactly one h-side
    g_sides = [r for r in raw if r["kind"] == "pair_g"]
    h_sides = [r for r in raw if r["kind"] == "pair_h"]
    assert len(g_sides) == len(h_sides) == 10
    pairs = []
    partner: dict[int, int] = {}
    for gr in g_sides:
        mates = [
            hr for hr in h_sides
            if commutator_is_trivial(graph, gr["word"], hr["word"])
        ]
        assert len(mates) == 1, f"generator {gr['gen_id']} has {len(mates)} mates"
        hr = mates[0]
        assert hr["gen_id"] not in partner
        partner[gr["gen_id"]] = hr["gen_id"]
        partner[hr["gen_id"]] = gr["gen_id"]
        match = match_pair_triple(
            realize_a_word(gr["word"]),
            realize_a_word(hr["word"]),
            ((1, 2, 3),) + X5_X8_TRIPLES,
        )
        assert match is not None, f"pair {gr['gen_id']} matches no triple"
        triple = match[0]
        gr["pair_triple"] = triple
        hr["pair_triple"] = triple
        pairs.append((triple, gr["gen_id"], hr["gen_id"]))
    pairs.sort(key=lambda p: p[0])
    assert len({p[0] for p in pairs}) == 10, "pair triples must be distinct"

    generators = tuple(
        QGenerator(
            gen_id=r["gen_id"],
            kind=r["kind"],
            j=r["j"],
            word=r["word"],
            inverse_word=r["inverse_word"],
            pair_triple=r.get("pair_triple"),
            partner_id=partner.get(r["gen_id"]),
        )
        for r in raw
    )
    free_count = sum(1 for g in generators if g.kind == "free")
    assert free_count == 18 and len(pairs) == 10
    return QCatalog(
        generators=generators,
        by_word=by_word,
        x_counts=x_counts,
        pairs=tuple(pairs),
    )


def classify_letter(mu: Word, j: int) -> Optional[tuple[int, int]]:
    """Map a letter (mu, j) to (generator id, exponent), or None if trivial."""
    letter = _letter(mu, j)
    if not letter.word:
        return None
    return enumerate_x().by_word[letter.word]


def classify_word(word: Word) -> Optional[tuple[int, int]]:
    """Catalog lookup of an already-normalized letter word."""
    if not word:
        return None
    return enumerate_x().by_word[word]


def catalog_export() -> list[dict]:
    """Machine-readable catalog: one record per generator."""
    cat = enumerate_x()
    records = []
    for g in cat.generators:
        records.append({
            "id": g.gen_id,
            "kind": g.kind,
            "j": g.j,
            "pair_triple": list(g.pair_triple) if g.pair_triple else None,
            "partner_id": g.partner_id,
            "a_word": list(g.word),
            "braid_word": list(realize_a_word(g.word)),
        })
    return records
