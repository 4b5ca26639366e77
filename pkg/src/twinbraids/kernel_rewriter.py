"""Rewriting kernel elements of a free product G' * G'' over K' u K'' u {x_a}.

Given surjections f': G' -> S and f'': G'' -> S onto a finite group S with
kernels K', K'', every element of ker(f' * f'') factors canonically as a
product of K'-letters, K''-letters and letters x_a (a in S - {e}), where x_a
stands for z'_a z''_a^-1 built from chosen transversals.  ``rewrite_kernel``
computes that factorization and ``embed_kernel`` expands it back.

Group elements are opaque values manipulated through a ``GroupOps`` bundle;
elements of S are hashable canonical values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Mapping

from .errors import NotInKernelError, SetupError

FIRST = "first"
SECOND = "second"

# Kernel letters are tagged tuples:
#   ("k1", element)        an element of K' <= G'
#   ("k2", element)        an element of K'' <= G''
#   ("x", alpha, +1 | -1)  a free-group letter indexed by alpha in S - {e}
KernelLetter = tuple
KernelWord = tuple[KernelLetter, ...]

# Free-product input/output: a sequence of (copy, element) blocks.
Block = tuple[str, Any]


@dataclass(frozen=True)
class GroupOps:
    """A group's elements as opaque values plus the operations on them."""

    identity: Any
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    key: Callable[[Any], Hashable]  # canonical form, decides equality

    def is_identity(self, x: Any) -> bool:
        return self.key(x) == self.key(self.identity)

    def eq(self, x: Any, y: Any) -> bool:
        return self.key(x) == self.key(y)

    def mul_all(self, xs: Iterable[Any]) -> Any:
        acc = self.identity
        for x in xs:
            acc = self.mul(acc, x)
        return acc


@dataclass(frozen=True)
class KernelSetup:
    """Everything Lemma-5 rewriting needs about G', G'', S and transversals."""

    first: GroupOps
    second: GroupOps
    s: GroupOps  # finite group; key is the identity function in practice
    f_first: Callable[[Any], Any]
    f_second: Callable[[Any], Any]
    z_first: Mapping[Any, Any]  # S element -> G' element, z[e] = identity
    z_second: Mapping[Any, Any]

    def __post_init__(self):
        e = self.s.key(self.s.identity)
        for name, z, f, ops in (
            ("z_first", self.z_first, self.f_first, self.first),
            ("z_second", self.z_second, self.f_second, self.second),
        ):
            if e not in {self.s.key(a) for a in z}:
                raise SetupError(f"{name} misses the identity of S")
            for alpha, rep in z.items():
                if self.s.key(f(rep)) != self.s.key(alpha):
                    raise SetupError(
                        f"{name}[{alpha!r}] does not map to its index"
                    )
            if not ops.is_identity(z[self.s.identity]):
                raise SetupError(f"{name}[e] must be the identity element")

    def ops(self, copy: str) -> GroupOps:
        return self.first if copy == FIRST else self.second

    def f(self, copy: str, x: Any) -> Any:
        return self.f_first(x) if copy == FIRST else self.f_second(x)


def _alternating_pairs(setup: KernelSetup, blocks: Iterable[Block]):
    """Merge blocks into an alternating list of (r_k, s_k) pairs."""
    merged: list[list] = []
    for copy, elem in blocks:
        if copy not in (FIRST, SECOND):
            raise ValueError(f"unknown copy tag {copy!r}")
        if merged and merged[-1][0] == copy:
            ops = setup.ops(copy)
            merged[-1][1] = ops.mul(merged[-1][1], elem)
        else:
            merged.append([copy, elem])
    pairs: list[tuple[Any, Any]] = []
    i = 0
    while i < len(merged):
        if merged[i][0] == FIRST:
            r = merged[i][1]
            i += 1
            if i < len(merged) and merged[i][0] == SECOND:
                s = merged[i][1]
                i += 1
            else:
                s = setup.second.identity
        else:
            r = setup.first.identity
            s = merged[i][1]
            i += 1
        pairs.append((r, s))
    return pairs


def rewrite_kernel(setup: KernelSetup, blocks: Iterable[Block]) -> KernelWord:
    """Canonical kernel factorization of an element given as (copy, element) blocks.

    Raises NotInKernelError when the element does not map to the identity of
    S.  Trivial K-letters are dropped at emission; every emitted K-letter is
    asserted to map to e.
    """
    pairs = _alternating_pairs(setup, blocks)
    s_ops = setup.s
    e_key = s_ops.key(s_ops.identity)
    total = s_ops.identity
    for r, s in pairs:
        total = s_ops.mul(total, setup.f_first(r))
        total = s_ops.mul(total, setup.f_second(s))
    if s_ops.key(total) != e_key:
        raise NotInKernelError(f"image {total!r} is not the identity of S")

    out: list[KernelLetter] = []
    beta_prev = s_ops.identity
    for r, s in pairs:
        alpha = s_ops.mul(beta_prev, setup.f_first(r))
        beta = s_ops.mul(alpha, setup.f_second(s))
        k1 = setup.first.mul_all(
            [setup.z_first[beta_prev], r, setup.first.inv(setup.z_first[alpha])]
        )
        if not setup.first.is_identity(k1):
            assert s_ops.key(setup.f_first(k1)) == e_key
            out.append(("k1", k1))
        if s_ops.key(alpha) != e_key:
            out.append(("x", s_ops.key(alpha), 1))
        k2 = setup.second.mul_all(
            [setup.z_second[alpha], s, setup.second.inv(setup.z_second[beta])]
        )
        if not setup.second.is_identity(k2):
            assert s_ops.key(setup.f_second(k2)) == e_key
            out.append(("k2", k2))
        if s_ops.key(beta) != e_key:
            out.append(("x", s_ops.key(beta), -1))
        beta_prev = beta
    return tuple(out)


def embed_kernel(setup: KernelSetup, word: Iterable[KernelLetter]) -> tuple[Block, ...]:
    """Expand kernel letters back into alternating (copy, element) blocks."""
    blocks: list[Block] = []
    for letter in word:
        tag = letter[0]
        if tag == "k1":
            blocks.append((FIRST, letter[1]))
        elif tag == "k2":
            blocks.append((SECOND, letter[1]))
        elif tag == "x":
            _, alpha, exp = letter
            zf = setup.z_first[alpha]
            zs = setup.z_second[alpha]
            if exp == 1:
                blocks.append((FIRST, zf))
                blocks.append((SECOND, setup.second.inv(zs)))
            else:
                blocks.append((SECOND, zs))
                blocks.append((FIRST, setup.first.inv(zf)))
        else:
            raise ValueError(f"unknown kernel letter {letter!r}")
    return reduce_blocks(setup, blocks)


def reduce_blocks(setup: KernelSetup, blocks: Iterable[Block]) -> tuple[Block, ...]:
    """Free-product normal form of a block sequence (alternating, nontrivial)."""
    stack: list[list] = []
    for copy, elem in blocks:
        if stack and stack[-1][0] == copy:
            ops = setup.ops(copy)
            merged = ops.mul(stack[-1][1], elem)
            if ops.is_identity(merged):
                stack.pop()
            else:
                stack[-1][1] = merged
        else:
            ops = setup.ops(copy)
            if not ops.is_identity(elem):
                stack.append([copy, elem])
    return tuple((c, x) for c, x in stack)


def blocks_equal(setup: KernelSetup, b1: Iterable[Block], b2: Iterable[Block]) -> bool:
    """Equality in G' * G'' via reduced block sequences."""

    def canon(blocks):
        return tuple(
            (c, setup.ops(c).key(x)) for c, x in reduce_blocks(setup, blocks)
        )

    return canon(b1) == canon(b2)


def reduce_kernel_word(setup: KernelSetup, word: Iterable[KernelLetter]) -> KernelWord:
    """Normal form in K' * K'' * F: merge same-kind neighbours, cancel x-pairs."""
    stack: list[KernelLetter] = []

    def push(letter: KernelLetter):
        if letter[0] in ("k1", "k2"):
            ops = setup.first if letter[0] == "k1" else setup.second
            if stack and stack[-1][0] == letter[0]:
                merged = ops.mul(stack[-1][1], letter[1])
                prev = stack.pop()
                if not ops.is_identity(merged):
                    stack.append((letter[0], merged))
                return
            if ops.is_identity(letter[1]):
                return
            stack.append(letter)
        else:
            _, alpha, exp = letter
            if (
                stack
                and stack[-1][0] == "x"
                and stack[-1][1] == alpha
                and stack[-1][2] == -exp
            ):
                stack.pop()
                return
            stack.append(letter)

    changed = True
    current = tuple(word)
    while changed:
        stack = []
        for letter in current:
            push(letter)
        reduced = tuple(stack)
        changed = reduced != current
        current = reduced
    return current


def kernel_words_equal(
    setup: KernelSetup, w1: Iterable[KernelLetter], w2: Iterable[KernelLetter]
) -> bool:
    def canon(w):
        out = []
        for letter in reduce_kernel_word(setup, w):
            if letter[0] == "k1":
                out.append(("k1", setup.first.key(letter[1])))
            elif letter[0] == "k2":
                out.append(("k2", setup.second.key(letter[1])))
            else:
                out.append(letter)
        return tuple(out)

    return canon(w1) == canon(w2)
