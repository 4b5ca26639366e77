"""Executable verification suites for every structural claim in the library.

Each suite returns a Report of named checks with expected/actual values; the
CLI renders them and the acceptance tests assert on them.  Randomized suites
take a seeded ``random.Random`` so identical seeds reproduce identical
reports (timings aside).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product

from .bicoloured import (
    TABLE_RELATIONS,
    TABLE_ROW_ORDER,
    check_table,
    decompose_h,
    h_normal_form,
    realize_h,
    table_cell,
)
from .graph_words import (
    CommutationGraph,
    Word,
    a_graph,
    commutator_is_trivial,
    equal,
    inverse,
    normal_form,
    twin_graph,
)
from .kernel_rewriter import (
    FIRST,
    SECOND,
    GroupOps,
    KernelSetup,
    blocks_equal,
    embed_kernel,
    kernel_words_equal,
    reduce_kernel_word,
    rewrite_kernel,
)
from .p6 import decompose_p6, h_kernel_setup, p6_catalog, realize_p6
from .q_subgroup import (
    S3S3_IDENTITY,
    a_word_image,
    conjugated_gh,
    enumerate_x,
    realize_a_word,
    s3s3_inv,
    swap_colours,
    transversal_word,
    z_transversal,
    X5_X8_TRIPLES,
)
from .rs import pure_twin_h1
from .twin_braids import (
    DOUBLEPRIMED,
    PRIMED,
    SHUFFLE_TRIPLES,
    colour_permutations,
    gh_words,
    is_pure,
    permutation_of,
    realize_a_generator,
    shuffle_word,
    sorting_word,
)


@dataclass
class Check:
    check: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def add(self, check: str, expected, actual) -> None:
        self.checks.append(Check(check, expected, actual))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _timed(fn):
    def wrapper(*args, **kwargs) -> Report:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
        return report

    return wrapper


# -- random data helpers ------------------------------------------------------


def random_word(rng: random.Random, g: CommutationGraph, max_len: int) -> Word:
    n = rng.randrange(max_len + 1)
    return tuple(rng.randrange(1, g.vertex_count + 1) for _ in range(n))


def random_pure_word(rng: random.Random, max_prefix: int = 20) -> Word:
    """Random pure braid word: a random word closed up by a same-permutation tail."""
    w = random_word(rng, twin_graph(6), max_prefix)
    tail = sorting_word(6, permutation_of(6, w))
    return w + inverse(tail)


def random_bicoloured_word(rng: random.Random, max_prefix: int = 31) -> Word:
    """Random bicoloured word: restore {1,2,3} with an inverse shuffle tail."""
    w = random_word(rng, twin_graph(6), max_prefix)
    triple = tuple(sorted(permutation_of(6, w)[:3]))
    return w + inverse(shuffle_word(triple))


def random_move(rng: random.Random, g: CommutationGraph, w: Word) -> Word:
    """Apply one uniformly chosen twin-group move to the word."""
    moves = []
    for i in range(len(w) + 1):
        moves.append(("insert", i))
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            moves.append(("delete", i))
        elif g.commutes(w[i], w[i + 1]):
            moves.append(("swap", i))
    kind, i = rng.choice(moves)
    if kind == "insert":
        x = rng.randrange(1, g.vertex_count + 1)
        return w[:i] + (x, x) + w[i:]
    if kind == "delete":
        return w[:i] + w[i + 2:]
    return w[:i] + (w[i + 1], w[i]) + w[i + 2:]


def random_p6_normal_form(rng: random.Random, max_syllables: int = 8):
    n = rng.randrange(1, max_syllables + 1)
    out = []
    while len(out) < n:
        if rng.random() < 0.5:
            fid = rng.randrange(1, 72)
            if out and out[-1][0] == "free" and out[-1][1] == fid:
                continue
            exp = rng.choice([-3, -2, -1, 1, 2, 3])
            out.append(("free", fid, exp))
        else:
            triple = rng.choice(SHUFFLE_TRIPLES)
            if out and out[-1][0] == "pair" and out[-1][1] == triple:
                continue
            ge = rng.randint(-3, 3)
            he = rng.randint(-3, 3)
            if ge == 0 and he == 0:
                continue
            out.append(("pair", triple, ge, he))
    return tuple(out)


# -- the word-problem oracle ---------------------------------------------------
#
# Breadth-first search over the rewriting moves, never calling the piling
# normal form.  Deletions and commutations only shrink or preserve length, so
# the reachable set from a short word is finite; two words are equal exactly
# when their reachable sets meet (a meet witness is a bounded move path from
# one word to the other through insertions' inverses).


def _reachable(g: CommutationGraph, w: Word) -> set[Word]:
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(len(u) - 1):
                a, b = u[i], u[i + 1]
                if a == b:
                    v = u[:i] + u[i + 2:]
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
                elif g.commutes(a, b):
                    v = u[:i] + (b, a) + u[i + 2:]
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return seen


def bfs_equal(g: CommutationGraph, w1: Word, w2: Word) -> bool:
    """Move-graph oracle for the word problem on short words."""
    r1 = _reachable(g, w1)
    if w2 in r1:
        return True
    r2 = _reachable(g, w2)
    return not r1.isdisjoint(r2)


def bfs_normal_form(g: CommutationGraph, w: Word) -> Word:
    """Shortlex-least reachable word; oracle for normal_form."""
    return min(_reachable(g, w), key=lambda u: (len(u), u))


# -- suites -------------------------------------------------------------------


@_timed
def suite_table1() -> Report:
    """Criterion 1: the generator table against braid arithmetic, 100 cells."""
    report = Report("table1")
    counts = check_table()
    report.add("cells_total", 100, counts["same_colour"] + counts["cross_colour"])
    report.add("cells_nonblank", 40, counts["same_colour"])
    report.add("cells_blank", 60, counts["cross_colour"])
    # every label's cells realize one and the same braid element
    g6 = twin_graph(6)
    by_label: dict = {}
    for t in TABLE_ROW_ORDER:
        for m in range(1, 6):
            cell = table_cell(t, m)
            if cell is not None:
                q = shuffle_word(t)
                by_label.setdefault(cell, []).append(q + (m,) + inverse(q))
    consistent = sum(
        1
        for cells in by_label.values()
        if all(equal(g6, cells[0], c) for c in cells[1:])
    )
    report.add("labels_consistent", 16, consistent)
    union = set()
    for pairs in TABLE_RELATIONS.values():
        union.update(pairs)
    report.add("relation_column_union", sorted(a_graph().edges), sorted(union))
    return report


@_timed
def suite_prop4(rng: random.Random, n_random: int = 1000, n_moves: int = 200) -> Report:
    """Criterion 2 and the bicoloured decomposition round trips."""
    report = Report("prop4")
    g6 = twin_graph(6)
    ga = a_graph()

    # commutation exactness: realized commutators vanish iff edge in a_graph
    mismatches = []
    for i, j in combinations(range(1, 9), 2):
        braid_comm = commutator_is_trivial(
            g6, realize_a_generator(i, PRIMED), realize_a_generator(j, PRIMED)
        )
        if braid_comm != ga.commutes(i, j):
            mismatches.append((i, j))
    report.add("commutation_exactness_mismatches", [], mismatches)

    bad = []
    for k in range(1, 9):
        for copy in (PRIMED, DOUBLEPRIMED):
            w = realize_a_generator(k, copy)
            if not equal(g6, w + w, ()) or colour_permutations(w) is None:
                bad.append((k, copy))
    report.add("generators_involutive_bicoloured", [], bad)

    # conjugation symmetry: q456 a'_k q456^-1 represents a''_k
    q456 = shuffle_word((4, 5, 6))
    bad = []
    for k in range(1, 9):
        w = q456 + realize_a_generator(k, PRIMED) + inverse(q456)
        if h_normal_form(decompose_h(w)) != ((DOUBLEPRIMED, (k,)),):
            bad.append(k)
    report.add("conjugation_symmetry", [], bad)

    # round trip on every bicoloured word of length <= 6
    total = failures = 0
    for length in range(7):
        for w in product(range(1, 6), repeat=length):
            if colour_permutations(w) is None:
                continue
            total += 1
            if not equal(g6, realize_h(decompose_h(w)), w):
                failures += 1
    report.add("round_trip_exhaustive_words", 0, failures)
    report.add("round_trip_exhaustive_count", 8454, total)

    failures = 0
    for _ in range(n_random):
        w = random_bicoloured_word(rng)
        if not equal(g6, realize_h(decompose_h(w)), w):
            failures += 1
    report.add(f"round_trip_random_{n_random}", 0, failures)

    failures = 0
    for _ in range(n_moves):
        w = random_bicoloured_word(rng, max_prefix=15)
        w2 = random_move(rng, g6, w)
        if h_normal_form(decompose_h(w)) != h_normal_form(decompose_h(w2)):
            failures += 1
    report.add("relation_invariance", 0, failures)
    return report


@_timed
def suite_prop6() -> Report:
    """Criterion 3: the letter enumeration behind the kernel catalog."""
    report = Report("prop6")
    cat = enumerate_x()
    report.add("x1_x4_empty", [0, 0], [cat.x_counts[1], cat.x_counts[4]])
    report.add("x2_x3_sizes", [2, 2], [cat.x_counts[2], cat.x_counts[3]])
    report.add(
        "x5678_sizes", [18, 18, 18, 18], [cat.x_counts[j] for j in (5, 6, 7, 8)]
    )
    report.add("free_generators", 18, len(cat.free_generators()))
    report.add("commuting_pairs", 10, len(cat.pairs))

    ga = a_graph()
    g_word, h_word = (1, 2, 1, 2, 1, 2), (3, 4, 3, 4, 3, 4)
    x2 = sorted(g.word for g in cat.generators if g.j == 2)
    x3 = sorted(g.word for g in cat.generators if g.j == 3)
    report.add(
        "x2_is_g", True,
        len(x2) == 1 and equal(ga, x2[0], g_word) or equal(ga, x2[0], inverse(g_word)),
    )
    report.add(
        "x3_is_h", True,
        len(x3) == 1 and equal(ga, x3[0], h_word) or equal(ga, x3[0], inverse(h_word)),
    )

    # letters come in classes of four: mu, mu*shift, and the inverses
    shift_gen = {5: 4, 6: 4, 7: 1, 8: 1}
    bad_orbits = []
    for j in (5, 6, 7, 8):
        words = [g for g in cat.generators if g.j == j]
        if len(words) != 9:
            bad_orbits.append((j, len(words)))
            continue
        c = shift_gen[j]
        from .q_subgroup import _letter  # orbit structure re-derivation

        for mu in z_transversal():
            letter = _letter(mu, j)
            if not letter.word:
                bad_orbits.append((j, mu))
                continue
            shifted_mu = transversal_word(
                a_word_image(mu + (c,))
            )
            shifted = _letter(shifted_mu, j)
            if shifted.word != letter.word:
                bad_orbits.append((j, mu, "shift"))
    report.add("orbit_classes_of_four", [], bad_orbits)

    # pair components commute only with their own partner
    bad_pairs = []
    for g1, g2 in combinations(cat.generators, 2):
        comm = commutator_is_trivial(ga, g1.word, g2.word)
        partnered = g1.partner_id == g2.gen_id
        if comm != partnered:
            bad_pairs.append((g1.gen_id, g2.gen_id))
    report.add("pair_commutations_exact", [], bad_pairs)

    nine = sorted(t for t, _, _ in cat.pairs if t != (1, 2, 3))
    report.add("nine_triples", sorted(X5_X8_TRIPLES), nine)
    report.add("gh_pair_triple", True, any(t == (1, 2, 3) for t, _, _ in cat.pairs))
    return report


@_timed
def suite_theorem2_catalog() -> Report:
    """Criterion 4: the 71 + 20 generator catalog."""
    report = Report("theorem2_catalog")
    g6 = twin_graph(6)
    cat = p6_catalog()
    report.add("free_generators", 71, len(cat.free))
    report.add("commuting_pairs", 20, len(cat.pairs))
    report.add(
        "pair_triples_all", [list(t) for t in SHUFFLE_TRIPLES],
        [list(t) for t in sorted(cat.pairs)],
    )

    bad = [
        list(t)
        for t, (g_gen, h_gen) in sorted(cat.pairs.items())
        if not commutator_is_trivial(g6, g_gen.realization, h_gen.realization)
    ]
    report.add("pairs_commute", [], bad)

    realizations = [g.realization for g in cat.free]
    for t in sorted(cat.pairs):
        realizations.extend([cat.pairs[t][0].realization, cat.pairs[t][1].realization])
    forms = [normal_form(g6, w) for w in realizations]
    report.add("realizations_count", 111, len(forms))
    report.add("realizations_distinct", 111, len(set(forms)))
    report.add("realizations_nontrivial", 0, sum(1 for f in forms if not f))
    report.add(
        "realizations_pure", 0,
        sum(1 for w in realizations if not is_pure(6, w)),
    )

    # the doubled pairs are the shuffle-conjugates of the primed pairs
    q456 = shuffle_word((4, 5, 6))
    bad = []
    qcat = enumerate_x()
    for t, (g_gen, h_gen) in sorted(cat.pairs.items()):
        if g_gen.source[0] != "qdouble":
            continue
        for gen in (g_gen, h_gen):
            primed = realize_a_word(qcat.generator(gen.source[1]).word, PRIMED)
            if not equal(g6, gen.realization, q456 + primed + inverse(q456)):
                bad.append(gen.gen_id)
    report.add("doubled_pairs_are_q456_conjugates", [], bad)

    # report (not assert) how the two conjugation orders behave per pair
    on_the_nose = sum(
        1 for t in cat.pairs if cat.pair_match[t][0] and cat.pair_match[t][1]
    )
    report.add("pairs_matching_inverse_conjugates", 12, on_the_nose)
    commuting_pure_conjugates = 0
    for t in SHUFFLE_TRIPLES:
        qg, qh = conjugated_gh(t)
        if (
            commutator_is_trivial(g6, qg, qh)
            and is_pure(6, qg)
            and is_pure(6, qh)
        ):
            commuting_pure_conjugates += 1
    report.add("conjugated_pairs_commuting_pure", 20, commuting_pure_conjugates)
    return report


@_timed
def suite_theorem2_roundtrips(
    rng: random.Random, n_random: int = 1000, n_nf: int = 500, n_moves: int = 100
) -> Report:
    """Criterion 5: realize/decompose round trips."""
    report = Report("theorem2_roundtrips")
    g6 = twin_graph(6)

    # round trip 1, exhaustive short pure words
    total = failures = 0
    for length in range(7):
        for w in product(range(1, 6), repeat=length):
            if not is_pure(6, w):
                continue
            total += 1
            if not equal(g6, realize_p6(decompose_p6(w)), w):
                failures += 1
    report.add("round_trip1_exhaustive", 0, failures)
    report.add("round_trip1_exhaustive_count", 904, total)

    failures = 0
    for _ in range(n_random):
        w = random_pure_word(rng)
        if not equal(g6, realize_p6(decompose_p6(w)), w):
            failures += 1
    report.add(f"round_trip1_random_{n_random}", 0, failures)

    # round trip 2, exact on normal forms
    failures = 0
    for _ in range(n_nf):
        nf = random_p6_normal_form(rng)
        if decompose_p6(realize_p6(nf)) != nf:
            failures += 1
    report.add(f"round_trip2_random_{n_nf}", 0, failures)

    failures = 0
    for _ in range(n_moves):
        w = random_pure_word(rng, max_prefix=12)
        w2 = random_move(rng, g6, w)
        if decompose_p6(w) != decompose_p6(w2):
            failures += 1
    report.add("relation_invariance", 0, failures)
    return report


def _toy_setup() -> KernelSetup:
    ints = GroupOps(identity=0, mul=lambda a, b: a + b, inv=lambda a: -a,
                    key=lambda a: a)
    z2 = GroupOps(identity=0, mul=lambda a, b: (a + b) % 2, inv=lambda a: a % 2,
                  key=lambda a: a)
    return KernelSetup(
        first=ints,
        second=ints,
        s=z2,
        f_first=lambda a: a % 2,
        f_second=lambda a: a % 2,
        z_first={0: 0, 1: 1},
        z_second={0: 0, 1: 1},
    )


def _same_map_h_setup() -> KernelSetup:
    """Lemma 5 for A * A with the same map on both copies."""
    base = h_kernel_setup()
    alphas = [a_word_image(w) for w in z_transversal()]
    return KernelSetup(
        first=base.first,
        second=base.second,
        s=base.s,
        f_first=a_word_image,
        f_second=a_word_image,
        z_first={a: transversal_word(a) for a in alphas},
        z_second={a: transversal_word(a) for a in alphas},
    )


def _random_toy_kernel_blocks(rng: random.Random):
    blocks = []
    for _ in range(rng.randrange(6)):
        copy = rng.choice([FIRST, SECOND])
        blocks.append((copy, rng.randint(-4, 4)))
    total = sum(b[1] for b in blocks) % 2
    if total:
        blocks.append((SECOND, rng.choice([-1, 1, 3])))
    return blocks


def _random_h_kernel_blocks(rng: random.Random, setup: KernelSetup):
    blocks = []
    img = S3S3_IDENTITY
    for _ in range(rng.randrange(4)):
        copy = rng.choice([FIRST, SECOND])
        w = random_word(rng, a_graph(), 6)
        blocks.append((copy, w))
        img = setup.s.mul(img, setup.f(copy, w))
    target = s3s3_inv(img)
    # a correcting second-copy block: f''(v) = target
    v = transversal_word(swap_colours(target))
    blocks.append((SECOND, v))
    return blocks


def _random_kernel_word(rng: random.Random, setup: KernelSetup, toy: bool):
    word = []
    alphas = [a for a in setup.z_first if a != setup.s.identity]
    for _ in range(rng.randrange(1, 7)):
        kind = rng.choice(["k1", "k2", "x"])
        if kind == "x":
            word.append(("x", rng.choice(alphas), rng.choice([1, -1])))
        elif toy:
            word.append((kind, rng.choice([-2, 2, 4])))
        else:
            # both kernels equal Q, so the same closing tail works
            u = random_word(rng, a_graph(), 5)
            u = u + inverse(transversal_word(a_word_image(u)))
            word.append((kind, u))
    return tuple(word)


@_timed
def suite_lemma5(rng: random.Random, n_random: int = 500) -> Report:
    """Criterion 6: section/retraction laws for the kernel rewriting."""
    report = Report("lemma5")
    toy = _toy_setup()

    kw = rewrite_kernel(toy, [(FIRST, 1), (SECOND, 1)])
    report.add("toy_example", [("x", 1, 1), ("k2", 2)], list(kw))
    back = embed_kernel(toy, kw)
    report.add("toy_embed_back", [(FIRST, 1), (SECOND, 1)], list(back))

    for name, setup, gen in (
        ("toy", toy, _random_toy_kernel_blocks),
        ("h", h_kernel_setup(), None),
    ):
        failures = 0
        for _ in range(n_random):
            blocks = (
                gen(rng) if gen else _random_h_kernel_blocks(rng, setup)
            )
            kw = rewrite_kernel(setup, blocks)
            if not blocks_equal(setup, embed_kernel(setup, kw), blocks):
                failures += 1
        report.add(f"section_{name}_{n_random}", 0, failures)

        failures = 0
        for _ in range(n_random):
            w = _random_kernel_word(rng, setup, toy=name == "toy")
            back = rewrite_kernel(setup, embed_kernel(setup, w))
            if not kernel_words_equal(setup, back, w):
                failures += 1
        report.add(f"retraction_{name}_{n_random}", 0, failures)

    # same-map instantiation on A * A: the letter-level example
    same = _same_map_h_setup()
    alpha = a_word_image((1,))
    kw = rewrite_kernel(same, [(FIRST, (1,)), (SECOND, (1,))])
    report.add("same_map_example", [("x", alpha, 1)], list(kw))

    # splitting a factor through the identity does not change the rewriting
    failures = 0
    for _ in range(200):
        blocks = _random_toy_kernel_blocks(rng)
        if not blocks:
            continue
        i = rng.randrange(len(blocks))
        copy, val = blocks[i]
        a = rng.randint(-2, 2)
        split = blocks[:i] + [(copy, a), (copy, val - a)] + blocks[i + 1:]
        if not kernel_words_equal(
            toy, rewrite_kernel(toy, blocks), rewrite_kernel(toy, split)
        ):
            failures += 1
    report.add("refactoring_invariance", 0, failures)
    return report


@_timed
def suite_h1(n: int) -> Report:
    """Criteria 7 and 8: H_1 of the pure subgroup via Schreier + SNF."""
    report = Report(f"h1_{n}")
    data = pure_twin_h1(n)
    expected_rank = {1: 0, 2: 0, 3: 1, 4: 7, 5: 31, 6: 111}
    import math

    index = math.factorial(n)
    report.add("index", index, data["index"])
    if n >= 2:
        k = n - 1
        relator_count = k + k * (k - 1) // 2 - (k - 1)
        report.add(
            "schreier_generators", index * k - (index - 1),
            data["schreier_generators"],
        )
        report.add("relators", index * relator_count, data["relators"])
    if n in expected_rank:
        report.add("h1_rank", expected_rank[n], data["h1_rank"])
    report.add("torsion", [], data["torsion"])
    return report


@_timed
def suite_wordproblem(rng: random.Random, n_pairs: int = 10000) -> Report:
    """Criterion 9: normal-form equality against the move-graph oracle."""
    report = Report("wordproblem")
    g6 = twin_graph(6)
    disagreements = 0
    equal_seen = 0
    for k in range(n_pairs):
        w1 = random_word(rng, g6, 8)
        if k % 2 == 0:
            w2 = random_word(rng, g6, 8)
        else:
            # an equal pair: random moves, keeping the last state of length <= 8
            w2 = cur = w1
            for _ in range(rng.randrange(1, 5)):
                cur = random_move(rng, g6, cur)
                if len(cur) <= 8:
                    w2 = cur
        oracle = bfs_equal(g6, w1, w2)
        fast = equal(g6, w1, w2)
        if oracle != fast:
            disagreements += 1
        if oracle:
            equal_seen += 1
    report.add(f"agreement_{n_pairs}", 0, disagreements)
    report.add("equal_pairs_exercised", True, equal_seen >= n_pairs // 4)
    return report


SUITE_BUILDERS = {
    "table1": lambda rng: [suite_table1()],
    "prop4": lambda rng: [suite_prop4(rng)],
    "prop6": lambda rng: [suite_prop6()],
    "theorem2": lambda rng: [suite_theorem2_catalog(),
                             suite_theorem2_roundtrips(rng)],
    "lemma5": lambda rng: [suite_lemma5(rng)],
    "wordproblem": lambda rng: [suite_wordproblem(rng)],
}


def run_suite(name: str, seed: int = 0, h1_n: int | None = None) -> list[Report]:
    """Run one named suite (or 'all') and return its reports."""
    rng = random.Random(seed)
    if name == "h1":
        return [suite_h1(h1_n if h1_n is not None else 6)]
    if name == "all":
        reports = []
        for builder in SUITE_BUILDERS.values():
            reports.extend(builder(rng))
        reports.extend(suite_h1(n) for n in (3, 4, 5, 6))
        return reports
    if name not in SUITE_BUILDERS:
        raise KeyError(name)
    return SUITE_BUILDERS[name](rng)
