"""Reidemeister-Schreier rewriting for finite-index subgroups.

Presentations keep signed words so non-involutive groups work too.  Cosets
are the points of a given permutation action (point 0 is the subgroup);
the Schreier transversal comes from a breadth-first spanning tree with
generators in increasing order and exponent +1 explored before -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations
from typing import Iterable

from .errors import InconsistentImagesError, NonTransitiveActionError
from .snf import homology_of_rows

SignedWord = tuple[tuple[int, int], ...]  # (generator 1-based, +1 | -1)


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relators: tuple[SignedWord, ...]

    def __post_init__(self):
        for rel in self.relators:
            for gen, exp in rel:
                if not (1 <= gen <= self.ngens) or exp not in (1, -1):
                    raise ValueError(f"bad relator letter {(gen, exp)}")


def twin_presentation(n: int) -> Presentation:
    """Presentation of the planar braid group on n strands."""
    if n < 2:
        return Presentation(max(n - 1, 0), ())
    k = n - 1
    relators: list[SignedWord] = []
    for i in range(1, k + 1):
        relators.append(((i, 1), (i, 1)))
    for i in range(1, k + 1):
        for j in range(i + 2, k + 1):
            relators.append(((i, 1), (j, 1), (i, -1), (j, -1)))
    return Presentation(k, tuple(relators))


def symmetric_group_images(n: int) -> list[tuple[int, ...]]:
    """Right-multiplication action of each elementary crossing on S_n.

    Points are the permutations of 1..n in sorted order (identity is point
    0); generator i maps the point p to p with the values i, i+1 exchanged.
    """
    points = sorted(iter_permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(points)}
    images = []
    for i in range(1, n):
        img = []
        for p in points:
            q = tuple(
                (i + 1 if x == i else (i if x == i + 1 else x)) for x in p
            )
            img.append(index[q])
        images.append(tuple(img))
    return images


@dataclass(frozen=True)
class CosetTable:
    count: int
    actions: tuple[tuple[int, ...], ...]  # per generator, coset -> coset
    inv_actions: tuple[tuple[int, ...], ...]
    transversal: tuple[SignedWord, ...]  # BFS tree word per coset
    schreier_gens: tuple[tuple[int, int], ...]  # nontrivial (coset, gen)
    schreier_index: dict  # (coset, gen) -> 1-based generator number

    def act(self, coset: int, gen: int, exp: int) -> int:
        if exp == 1:
            return self.actions[gen - 1][coset]
        return self.inv_actions[gen - 1][coset]


def _check_images(pres: Presentation, images) -> int:
    sizes = {len(img) for img in images}
    if len(images) != pres.ngens or len(sizes) != 1:
        raise ValueError("need one image permutation per generator")
    npoints = sizes.pop()
    for img in images:
        if sorted(img) != list(range(npoints)):
            raise ValueError("images must be permutations of 0..n-1")
    inv = []
    for img in images:
        v = [0] * npoints
        for a, b in enumerate(img):
            v[b] = a
        inv.append(tuple(v))
    for rel in pres.relators:
        for start in range(npoints):
            c = start
            for gen, exp in rel:
                c = images[gen - 1][c] if exp == 1 else inv[gen - 1][c]
            if c != start:
                raise InconsistentImagesError(
                    f"relator {rel} not satisfied by the images"
                )
    return npoints


def coset_table(pres: Presentation, images: Iterable[tuple[int, ...]]) -> CosetTable:
    """Enumerate cosets of the point-0 stabilizer preimage via BFS."""
    images = [tuple(img) for img in images]
    npoints = _check_images(pres, images)
    inv_actions = []
    for img in images:
        v = [0] * npoints
        for a, b in enumerate(img):
            v[b] = a
        inv_actions.append(tuple(v))

    transversal: list[SignedWord | None] = [None] * npoints
    transversal[0] = ()
    tree_edges: set[tuple[int, int]] = set()  # (coset, gen) with trivial word
    queue = [0]
    seen = 1
    while queue:
        nxt = []
        for c in queue:
            for gen in range(1, pres.ngens + 1):
                for exp in (1, -1):
                    d = images[gen - 1][c] if exp == 1 else inv_actions[gen - 1][c]
                    if transversal[d] is None:
                        transversal[d] = transversal[c] + ((gen, exp),)
                        # the trivial Schreier generator of this tree edge
                        tree_edges.add((c, gen) if exp == 1 else (d, gen))
                        nxt.append(d)
                        seen += 1
        queue = nxt
    if seen != npoints:
        raise NonTransitiveActionError(
            f"orbit of point 0 has size {seen} < {npoints}"
        )

    schreier = []
    index = {}
    for c in range(npoints):
        for gen in range(1, pres.ngens + 1):
            if (c, gen) not in tree_edges:
                index[(c, gen)] = len(schreier) + 1
                schreier.append((c, gen))
    return CosetTable(
        count=npoints,
        actions=tuple(images),
        inv_actions=tuple(inv_actions),
        transversal=tuple(transversal),  # type: ignore[arg-type]
        schreier_gens=tuple(schreier),
        schreier_index=index,
    )


def schreier_generator_word(ct: CosetTable, coset: int, gen: int) -> SignedWord:
    """t_c . x . t_{cx}^-1 over the original generators."""
    target = ct.act(coset, gen, 1)
    back = tuple((g, -e) for g, e in reversed(ct.transversal[target]))
    return ct.transversal[coset] + ((gen, 1),) + back


def rewrite_relator(ct: CosetTable, coset: int, relator: SignedWord) -> SignedWord:
    """Rewrite t_c . r . t_c^-1 over the Schreier generators."""
    out: list[tuple[int, int]] = []
    c = coset
    for gen, exp in relator:
        if exp == 1:
            num = ct.schreier_index.get((c, gen))
            c = ct.act(c, gen, 1)
            if num is not None:
                out.append((num, 1))
        else:
            c = ct.act(c, gen, -1)
            num = ct.schreier_index.get((c, gen))
            if num is not None:
                out.append((num, -1))
    return tuple(out)


def subgroup_presentation(
    pres: Presentation, images: Iterable[tuple[int, ...]]
) -> Presentation:
    """Presentation of the subgroup from the Schreier rewriting.

    Generators: non-tree (coset, generator) pairs; relators: every conjugate
    of every original relator by a transversal word, rewritten.
    """
    ct = coset_table(pres, images)
    relators = []
    for c in range(ct.count):
        for rel in pres.relators:
            relators.append(rewrite_relator(ct, c, rel))
    return Presentation(len(ct.schreier_gens), tuple(relators))


def abelianized_rows(pres: Presentation) -> list[dict[int, int]]:
    rows = []
    for rel in pres.relators:
        row: dict[int, int] = {}
        for gen, exp in rel:
            row[gen - 1] = row.get(gen - 1, 0) + exp
            if row[gen - 1] == 0:
                del row[gen - 1]
        if row:
            rows.append(row)
    return rows


def abelianization(pres: Presentation) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients) of the presented group's H_1."""
    return homology_of_rows(abelianized_rows(pres), pres.ngens)


def pure_twin_h1(n: int) -> dict:
    """Schreier presentation of the pure subgroup and its H_1 data."""
    pres = twin_presentation(n)
    images = symmetric_group_images(n)
    ct = coset_table(pres, images)
    sub = subgroup_presentation(pres, images)
    rank, torsion = abelianization(sub)
    return {
        "index": ct.count,
        "schreier_generators": sub.ngens,
        "relators": len(sub.relators),
        "h1_rank": rank,
        "torsion": torsion,
    }
