"""Pure planar braids on six strands as elements of F_71 * (Z^2)^*20.

The catalog assembles 71 free generators (two copies of the 18 kernel
generators plus 35 bridge generators indexed by the nontrivial elements of
S3 x S3) and 20 commuting pairs (two copies of the 10 kernel pairs), each
with a pure braid realization.  ``decompose_p6`` rewrites any pure braid word
into the canonical syllable normal form over this catalog and ``realize_p6``
maps normal forms back to braid words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .errors import NotPureError
from .bicoloured import decompose_h
from .graph_words import Word, a_graph, inverse, normal_form
from .kernel_rewriter import (
    FIRST,
    SECOND,
    GroupOps,
    KernelSetup,
    rewrite_kernel,
)
from .q_subgroup import (
    S3S3_IDENTITY,
    S3Pair,
    a_word_image,
    conjugated_gh,
    enumerate_x,
    match_pair_triple,
    realize_a_word,
    rewrite_q,
    s3s3_inv,
    s3s3_mul,
    swap_colours,
    transversal_word,
    z_transversal,
)
from .twin_braids import (
    DOUBLEPRIMED,
    PRIMED,
    SHUFFLE_TRIPLES,
    is_pure,
    shuffle_permutation,
    validate_word,
)

# Syllables of a normal form:
#   ("free", fid, exp)                  fid in 1..71, exp nonzero
#   ("pair", triple, g_exp, h_exp)      not both exponents zero
Syllable = tuple
P6NormalForm = tuple[Syllable, ...]


@dataclass(frozen=True)
class P6Generator:
    gen_id: str  # "F<n>" or "P<triple>g" / "P<triple>h"
    kind: str  # "free" | "pair_g" | "pair_h"
    source: tuple  # ("qprime", qid) | ("qdouble", qid) | ("bridge", alpha)
    pair_triple: Optional[tuple[int, int, int]]
    realization: Word


@dataclass(frozen=True)
class P6Catalog:
    free: tuple[P6Generator, ...]  # indexed by fid - 1
    pairs: dict  # triple -> (g_generator, h_generator)
    pair_match: dict  # triple -> (g_direction, h_direction) vs q^-1 (g|h) q
    _q_free: dict  # (copy, qid) -> fid
    _q_pair: dict  # (copy, qid) -> (triple, "g" | "h")
    _bridge: dict  # alpha -> fid

    def free_realization(self, fid: int) -> Word:
        return self.free[fid - 1].realization

    def pair_realizations(self, triple) -> tuple[Word, Word]:
        g_gen, h_gen = self.pairs[triple]
        return g_gen.realization, h_gen.realization


@lru_cache(maxsize=None)
def p6_catalog() -> P6Catalog:
    """Assemble the 71 + 2*20 generator catalog with braid realizations."""
    qcat = enumerate_x()
    free: list[P6Generator] = []
    q_free: dict = {}
    q_pair: dict = {}
    bridge: dict = {}

    for copy_tag, braid_copy in (("qprime", PRIMED), ("qdouble", DOUBLEPRIMED)):
        for gen in qcat.generators:
            if gen.kind != "free":
                continue
            fid = len(free) + 1
            free.append(P6Generator(
                gen_id=f"F{fid}",
                kind="free",
                source=(copy_tag, gen.gen_id),
                pair_triple=None,
                realization=realize_a_word(gen.word, braid_copy),
            ))
            q_free[(copy_tag, gen.gen_id)] = fid

    for idx, t_word in enumerate(z_transversal()):
        if idx == 0:
            continue
        alpha = a_word_image(t_word)
        fid = len(free) + 1
        realization = realize_a_word(t_word, PRIMED) + inverse(
            realize_a_word(transversal_word(swap_colours(alpha)), DOUBLEPRIMED)
        )
        free.append(P6Generator(
            gen_id=f"F{fid}",
            kind="free",
            source=("bridge", alpha),
            pair_triple=None,
            realization=realization,
        ))
        bridge[alpha] = fid
    assert len(free) == 71

    pairs: dict = {}
    pair_match: dict = {}
    q456_perm = shuffle_permutation((4, 5, 6))
    for copy_tag, braid_copy in (("qprime", PRIMED), ("qdouble", DOUBLEPRIMED)):
        for triple_primed, gid, hid in qcat.pairs:
            g_gen = qcat.generator(gid)
            h_gen = qcat.generator(hid)
            g_braid = realize_a_word(g_gen.word, braid_copy)
            h_braid = realize_a_word(h_gen.word, braid_copy)
            if copy_tag == "qprime":
                # the letters themselves equal conjugated (g, h); reverify
                match = match_pair_triple(g_braid, h_braid, SHUFFLE_TRIPLES)
                assert match is not None and match[0] == triple_primed
                triple, g_dir, h_dir = match
            else:
                # the doubled pair is the q_456-conjugate of the primed one,
                # so its triple is the image of the primed triple's strands;
                # an on-the-nose conjugate match is the exception, not the rule
                triple = tuple(sorted(q456_perm[i - 1] for i in triple_primed))
                match = match_pair_triple(g_braid, h_braid, SHUFFLE_TRIPLES)
                if match is not None:
                    assert match[0] == triple
                    g_dir, h_dir = match[1], match[2]
                else:
                    g_dir = h_dir = 0
            assert triple not in pairs
            pairs[triple] = (
                P6Generator(
                    gen_id=f"P{''.join(map(str, triple))}g",
                    kind="pair_g",
                    source=(copy_tag, gid),
                    pair_triple=triple,
                    realization=g_braid,
                ),
                P6Generator(
                    gen_id=f"P{''.join(map(str, triple))}h",
                    kind="pair_h",
                    source=(copy_tag, hid),
                    pair_triple=triple,
                    realization=h_braid,
                ),
            )
            pair_match[triple] = (g_dir, h_dir)
            q_pair[(copy_tag, gid)] = (triple, "g")
            q_pair[(copy_tag, hid)] = (triple, "h")
    assert len(pairs) == 20 and set(pairs) == set(SHUFFLE_TRIPLES)

    return P6Catalog(
        free=tuple(free),
        pairs=pairs,
        pair_match=pair_match,
        _q_free=q_free,
        _q_pair=q_pair,
        _bridge=bridge,
    )


def _a_word_ops() -> GroupOps:
    graph = a_graph()
    return GroupOps(
        identity=(),
        mul=lambda u, v: tuple(u) + tuple(v),
        inv=inverse,
        key=lambda w: normal_form(graph, w),
    )


@lru_cache(maxsize=None)
def h_kernel_setup() -> KernelSetup:
    """Lemma-5 setup for the bicoloured braid group over S3 x S3.

    The second copy's map composes with the colour swap, matching the
    permutations of the doubleprimed braid realizations; its transversal for
    alpha is therefore the representative word of swap(alpha).
    """
    ops = _a_word_ops()
    s_ops = GroupOps(
        identity=S3S3_IDENTITY, mul=s3s3_mul, inv=s3s3_inv, key=lambda x: x
    )
    alphas = [a_word_image(w) for w in z_transversal()]
    return KernelSetup(
        first=ops,
        second=ops,
        s=s_ops,
        f_first=a_word_image,
        f_second=lambda w: swap_colours(a_word_image(w)),
        z_first={alpha: transversal_word(alpha) for alpha in alphas},
        z_second={alpha: transversal_word(swap_colours(alpha)) for alpha in alphas},
    )


def _reduce_syllables(letters: Iterable[tuple]) -> P6NormalForm:
    """Stack reduction to the free-product normal form.

    Letters are ("free", fid, exp) or ("pair", triple, comp, exp); adjacent
    letters of the same free generator or the same pair merge, exhausted
    syllables expose the previous one.
    """
    stack: list[list] = []
    for letter in letters:
        if letter[0] == "free":
            _, fid, exp = letter
            if stack and stack[-1][0] == "free" and stack[-1][1] == fid:
                stack[-1][2] += exp
                if stack[-1][2] == 0:
                    stack.pop()
            else:
                stack.append(["free", fid, exp])
        else:
            _, triple, comp, exp = letter
            if stack and stack[-1][0] == "pair" and stack[-1][1] == triple:
                idx = 2 if comp == "g" else 3
                stack[-1][idx] += exp
                if stack[-1][2] == 0 and stack[-1][3] == 0:
                    stack.pop()
            else:
                entry = ["pair", triple, 0, 0]
                entry[2 if comp == "g" else 3] = exp
                stack.append(entry)
    return tuple(
        ("free", s[1], s[2]) if s[0] == "free" else ("pair", s[1], s[2], s[3])
        for s in stack
    )


def decompose_p6(word: Iterable[int]) -> P6NormalForm:
    """Canonical normal form of a pure braid word on six strands.

    Pipeline: bicoloured decomposition, kernel rewriting over S3 x S3, kernel
    letters rewritten over the generator catalog, syllable reduction.
    """
    w = validate_word(6, word)
    if not is_pure(6, w):
        raise NotPureError("decompose_p6 requires a pure braid word")
    hw = decompose_h(w)

    blocks: list[tuple[str, tuple]] = []
    for letter in hw:
        tag = FIRST if letter.copy == PRIMED else SECOND
        if blocks and blocks[-1][0] == tag:
            blocks[-1] = (tag, blocks[-1][1] + (letter.index,))
        else:
            blocks.append((tag, (letter.index,)))

    setup = h_kernel_setup()
    kernel_word = rewrite_kernel(setup, blocks)

    cat = p6_catalog()
    by_word = enumerate_x().by_word
    letters: list[tuple] = []
    for kl in kernel_word:
        if kl[0] in ("k1", "k2"):
            copy_tag = "qprime" if kl[0] == "k1" else "qdouble"
            for xl in rewrite_q(kl[1]):
                qid, exp = by_word[xl.word]
                key = (copy_tag, qid)
                if key in cat._q_free:
                    letters.append(("free", cat._q_free[key], exp))
                else:
                    triple, comp = cat._q_pair[key]
                    letters.append(("pair", triple, comp, exp))
        else:
            _, alpha, exp = kl
            letters.append(("free", cat._bridge[alpha], exp))
    return _reduce_syllables(letters)


def _power(word: Word, exp: int) -> Word:
    if exp >= 0:
        return word * exp
    return inverse(word) * (-exp)


def realize_p6(nf: Iterable[Syllable]) -> Word:
    """Braid word realizing a normal form; pure by construction."""
    cat = p6_catalog()
    out: list[int] = []
    for syl in nf:
        if syl[0] == "free":
            _, fid, exp = syl
            out.extend(_power(cat.free_realization(fid), exp))
        else:
            _, triple, g_exp, h_exp = syl
            g_real, h_real = cat.pair_realizations(triple)
            out.extend(_power(g_real, g_exp))
            out.extend(_power(h_real, h_exp))
    return tuple(out)


def syllable_to_text(syl: Syllable) -> str:
    if syl[0] == "free":
        return f"F{syl[1]}^{syl[2]}"
    triple = "".join(str(x) for x in syl[1])
    return f"P{triple}[g^{syl[2]} h^{syl[3]}]"


def normal_form_to_text(nf: Iterable[Syllable]) -> str:
    lines = [syllable_to_text(s) for s in nf]
    return "\n".join(lines) if lines else "e"


def catalog_export() -> dict:
    """Machine-readable catalog with the conjugation-form report per pair."""
    cat = p6_catalog()
    free_records = [
        {
            "id": g.gen_id,
            "kind": g.kind,
            "source": [g.source[0], list(g.source[1]) if g.source[0] == "bridge"
                       else g.source[1]],
            "realization": list(g.realization),
        }
        for g in cat.free
    ]
    pair_records = []
    for triple in sorted(cat.pairs):
        g_gen, h_gen = cat.pairs[triple]
        g_dir, h_dir = cat.pair_match[triple]
        qg, qh = conjugated_gh(triple)
        pair_records.append({
            "triple": list(triple),
            "g": {"id": g_gen.gen_id, "source": list(g_gen.source),
                  "realization": list(g_gen.realization)},
            "h": {"id": h_gen.gen_id, "source": list(h_gen.source),
                  "realization": list(h_gen.realization)},
            # directions of the match against (q^-1 g q, q^-1 h q)
            "conjugate_form": "q^-1 (g|h) q",
            "g_direction": g_dir,
            "h_direction": h_dir,
            "conjugate_g_word": list(qg),
            "conjugate_h_word": list(qh),
        })
    return {"free": free_records, "pairs": pair_records}
