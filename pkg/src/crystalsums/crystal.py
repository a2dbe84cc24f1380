"""Classical crystal operators on tensor words.

Operators act through the signature rule: each letter contributes "+" signs
for its phi and "-" signs for its epsilon, blocks are laid out in display
order, and every "-" immediately followed by "+" cancels.  A lowering
operator acts at the letter owning the rightmost surviving "+", a raising
operator at the letter owning the leftmost surviving "-".  This reproduces
the pairwise rule in which f moves to the left factor exactly when its
epsilon is at least the right factor's phi.
"""

from __future__ import annotations

import functools
import itertools
from typing import Callable, Iterator, Literal, Sequence

from .shapes_words import (
    AFactor,
    AWord,
    DiamondFactor,
    DiamondKind,
    DiamondLetter,
    DiamondWord,
    a_weight,
    is_dual_factor,
)

Op = Literal["e", "f"]


# ---------------------------------------------------------------------------
# single letters, type A


def a_letter_phi(x: int, i: int) -> int:
    return 1 if (x == i or x == -(i + 1)) else 0


def a_letter_epsilon(x: int, i: int) -> int:
    return 1 if (x == i + 1 or x == -i) else 0


def a_letter_apply(op: Op, i: int, x: int) -> int | None:
    if op == "f":
        if x == i:
            return i + 1
        if x == -(i + 1):
            return -i
        return None
    if x == i + 1:
        return i
    if x == -i:
        return -(i + 1)
    return None


# ---------------------------------------------------------------------------
# single letters, box and hdomino families


def d_letter_apply(op: Op, i: int, x: DiamondLetter, n: int, d: DiamondKind) -> DiamondLetter | None:
    """One step along the i-string of the rank-n letter chain."""
    if d is DiamondKind.EMPTY:
        if op == "f":
            if x.kind == "plain" and x.index == i and i < n:
                return DiamondLetter("plain", i + 1)
        else:
            if x.kind == "plain" and x.index == i + 1 and i < n:
                return DiamondLetter("plain", i)
        return None
    if op == "f":
        if i < n:
            if x.kind == "plain" and x.index == i:
                return DiamondLetter("plain", i + 1)
            if x.kind == "bar" and x.index == i + 1:
                return DiamondLetter("bar", i)
        else:
            if x.kind == "plain" and x.index == n:
                return DiamondLetter("zero") if d is DiamondKind.BOX else DiamondLetter("bar", n)
            if x.kind == "zero":
                return DiamondLetter("bar", n)
        return None
    if i < n:
        if x.kind == "plain" and x.index == i + 1:
            return DiamondLetter("plain", i)
        if x.kind == "bar" and x.index == i:
            return DiamondLetter("bar", i + 1)
    else:
        if x.kind == "zero":
            return DiamondLetter("plain", n)
        if x.kind == "bar" and x.index == n:
            return DiamondLetter("zero") if d is DiamondKind.BOX else DiamondLetter("plain", n)
    return None


def d_letter_phi(x: DiamondLetter, i: int, n: int, d: DiamondKind) -> int:
    k = 0
    cur: DiamondLetter | None = x
    while True:
        cur = d_letter_apply("f", i, cur, n, d)
        if cur is None:
            return k
        k += 1


def d_letter_epsilon(x: DiamondLetter, i: int, n: int, d: DiamondKind) -> int:
    k = 0
    cur: DiamondLetter | None = x
    while True:
        cur = d_letter_apply("e", i, cur, n, d)
        if cur is None:
            return k
        k += 1


# ---------------------------------------------------------------------------
# the signature rule on words


def _signature_reduce(blocks: Sequence[tuple[int, int]]) -> list[tuple[int, str]]:
    """Reduce (phi, eps) letter blocks to the surviving signs.

    Returns a list of (letter position, sign) pairs of the form +...+-...-.
    """
    stack: list[tuple[int, str]] = []
    for pos, (phi, eps) in enumerate(blocks):
        for _ in range(phi):
            if stack and stack[-1][1] == "-":
                stack.pop()
            else:
                stack.append((pos, "+"))
        stack.extend((pos, "-") for _ in range(eps))
    return stack


class _WordOps:
    """Letter-level callbacks for one alphabet."""

    def __init__(self, phi: Callable, eps: Callable, app: Callable):
        self.phi = phi
        self.eps = eps
        self.app = app


def _a_ops(n: int) -> _WordOps:
    return _WordOps(
        lambda x, i: a_letter_phi(x, i),
        lambda x, i: a_letter_epsilon(x, i),
        lambda op, i, x: a_letter_apply(op, i, x),
    )


def _d_ops(n: int, d: DiamondKind) -> _WordOps:
    return _WordOps(
        lambda x, i: d_letter_phi(x, i, n, d),
        lambda x, i: d_letter_epsilon(x, i, n, d),
        lambda op, i, x: d_letter_apply(op, i, x, n, d),
    )


def _word_letters(w) -> list[tuple[int, int, object]]:
    """Flatten to (factor index, letter index, letter) in display order."""
    out = []
    if isinstance(w, DiamondWord):
        for fi, f in enumerate(w.factors):
            out.extend((fi, li, x) for li, x in enumerate(f.letters))
    else:
        for fi, f in enumerate(w):
            out.extend((fi, li, x) for li, x in enumerate(f))
    return out


def _rebuild(w, fi: int, li: int, letter):
    if isinstance(w, DiamondWord):
        f = w.factors[fi]
        letters = f.letters[:li] + (letter,) + f.letters[li + 1 :]
        keys = [x.key() for x in letters]
        if keys != sorted(keys):
            raise AssertionError(f"operator left factor unsorted: {letters}")
        new = DiamondFactor(f.width, letters)
        return DiamondWord(w.diamond, w.factors[:fi] + (new,) + w.factors[fi + 1 :])
    f = w[fi]
    letters = f[:li] + (letter,) + f[li + 1 :]
    if list(letters) != sorted(letters):
        raise AssertionError(f"operator left factor unsorted: {letters}")
    return w[:fi] + (letters,) + w[fi + 1 :]


def _ops_for(w, n: int) -> _WordOps:
    if isinstance(w, DiamondWord):
        return _d_ops(n, w.diamond)
    return _a_ops(n)


def epsilon_phi(w, i: int, n: int) -> tuple[int, int]:
    """(epsilon_i, phi_i) of a word; n is the rank of its alphabet."""
    ops = _ops_for(w, n)
    flat = _word_letters(w)
    stack = _signature_reduce([(ops.phi(x, i), ops.eps(x, i)) for _, _, x in flat])
    eps = sum(1 for _, s in stack if s == "-")
    phi = len(stack) - eps
    return eps, phi


def apply(op: Op, i: int, w, n: int):
    """Apply e_i or f_i; returns None when the operator vanishes."""
    ops = _ops_for(w, n)
    flat = _word_letters(w)
    stack = _signature_reduce([(ops.phi(x, i), ops.eps(x, i)) for _, _, x in flat])
    if op == "f":
        plus = [pos for pos, s in stack if s == "+"]
        if not plus:
            return None
        target = plus[-1]
    else:
        minus = [pos for pos, s in stack if s == "-"]
        if not minus:
            return None
        target = minus[0]
    fi, li, x = flat[target]
    moved = ops.app(op, i, x)
    if moved is None:
        raise AssertionError(f"signature rule chose a dead letter {x} for {op}_{i}")
    return _rebuild(w, fi, li, moved)


def classical_index_set(w, n: int) -> range:
    """Indices of the classical raising/lowering operators for this word."""
    if isinstance(w, DiamondWord):
        return range(1, n + 1)
    return range(1, n)  # here n is the letter count N; indices 1..N-1


def is_classical_highest_weight(w, n: int) -> bool:
    return all(epsilon_phi(w, i, n)[0] == 0 for i in classical_index_set(w, n))


def raise_to_highest(w, n: int) -> tuple[object, list[int]]:
    """Apply raising operators until none applies; returns (vector, path).

    The path lists the indices in the order they were applied.
    """
    path: list[int] = []
    cur = w
    progress = True
    while progress:
        progress = False
        for i in classical_index_set(w, n):
            nxt = apply("e", i, cur, n)
            if nxt is not None:
                cur = nxt
                path.append(i)
                progress = True
                break
    return cur, path


def diamond_epsilon_vector(w: DiamondWord, n: int) -> tuple[int, ...]:
    return tuple(epsilon_phi(w, i, n)[0] for i in range(1, n + 1))


def diamond_phi_vector(w: DiamondWord, n: int) -> tuple[int, ...]:
    return tuple(epsilon_phi(w, i, n)[1] for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# dual and star involutions on type A words


def dual(w: AWord) -> AWord:
    """Reverse the factors and negate every letter."""
    return tuple(tuple(sorted(-x for x in f)) for f in reversed(w))


def star_letter(x: int, n_letters: int) -> int:
    return (n_letters + 1 - x) if x > 0 else -(n_letters + 1 + x)


def star(w: AWord, n_letters: int) -> AWord:
    """Reverse the factors and replace each letter j by N+1-j (duals alike)."""
    return tuple(
        tuple(sorted(star_letter(x, n_letters) for x in f)) for f in reversed(w)
    )


# ---------------------------------------------------------------------------
# transport: the unique classical isomorphism between factor reorderings

FactorType = tuple[bool, int]  # (is dual, width)


def a_factor_types(w: AWord) -> tuple[FactorType, ...]:
    return tuple((is_dual_factor(f), len(f)) for f in w)


def _a_factor_elements(t: FactorType, n_letters: int) -> Iterator[AFactor]:
    dualf, s = t
    if dualf:
        pool = range(-n_letters, 0)
    else:
        pool = range(1, n_letters + 1)
    yield from itertools.combinations_with_replacement(pool, s)


@functools.lru_cache(maxsize=None)
def highest_weight_elements(types: tuple[FactorType, ...], n_letters: int) -> tuple[AWord, ...]:
    """Classical highest weight vectors of a type A factor product."""
    partial: list[AWord] = [()]
    for t in reversed(types):  # rightmost factor first
        grown = []
        for word in partial:
            phis = [epsilon_phi(word, i, n_letters)[1] for i in range(1, n_letters)]
            for f in _a_factor_elements(t, n_letters):
                unit = (f,)
                ok = all(
                    epsilon_phi(unit, i, n_letters)[0] <= phis[i - 1]
                    for i in range(1, n_letters)
                )
                if ok:
                    grown.append(unit + word)
        partial = grown
    return tuple(partial)


@functools.lru_cache(maxsize=None)
def transport(w: AWord, n_letters: int, target: tuple[FactorType, ...]) -> AWord:
    """Carry w to the product with the given factor types.

    Raises w to its classical highest weight vector, locates the unique
    highest weight vector of the same weight in the target product, and
    replays the recorded lowering path there.  The classical component of w
    must occur exactly once in the target.
    """
    if sorted(a_factor_types(w)) != sorted(target):
        raise ValueError(f"target {target} is not a reordering of {a_factor_types(w)}")
    hw, path = raise_to_highest(w, n_letters)
    wt = a_weight(hw, n_letters)
    matches = [
        u for u in highest_weight_elements(target, n_letters)
        if a_weight(u, n_letters) == wt
    ]
    if len(matches) != 1:
        raise ValueError(
            f"component of weight {wt} occurs {len(matches)} times in {target}"
        )
    cur = matches[0]
    for i in reversed(path):
        nxt = apply("f", i, cur, n_letters)
        if nxt is None:
            raise AssertionError("lowering path died in the target product")
        cur = nxt
    return cur
