"""Partitions, letter alphabets, and tensor words.

Words are displayed left to right as b_L ... b_1: the rightmost text token
is tensor position 1.  Every factor of a word is a weakly increasing row of
letters over one alphabet; a factor of width s may hold fewer than s letters
when its family allows width-dropping components.

Three letter families appear:

* plain rows over {1 < ... < N} and dual rows over {Nv < ... < 1v}
  (type A letters, stored as positive resp. negative ints);
* "box" letters 1 < ... < n < 0 < nbar < ... < 1bar, plus an empty element;
* "hdomino" letters 1 < ... < n < nbar < ... < 1bar.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def as_partition(seq: Iterable[int]) -> Partition:
    """Validate and normalize a weakly decreasing sequence of parts."""
    parts = tuple(int(p) for p in seq if int(p) != 0)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def partition_contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def partition_union(a: Partition, b: Partition) -> Partition:
    rows = max(len(a), len(b))
    return as_partition(
        max(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(rows)
    )


def partition_intersection(a: Partition, b: Partition) -> Partition:
    rows = min(len(a), len(b))
    return as_partition(min(a[i], b[i]) for i in range(rows))


def add_cell(lam: Partition, row: int) -> Partition:
    """Add one cell in the given 1-based row; the result must be a partition."""
    parts = list(lam) + [0] * max(0, row - len(lam))
    parts[row - 1] += 1
    return as_partition(parts)


def remove_cell(lam: Partition, row: int) -> Partition:
    parts = list(lam)
    if row < 1 or row > len(parts):
        raise ValueError(f"no cell to remove in row {row} of {lam}")
    parts[row - 1] -= 1
    return as_partition(parts)


def partitions_of(n: int, max_length: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of n (optionally with at most max_length parts)."""

    def gen(rest: int, bound: int, rows: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in gen(rest - first, first, rows - 1):
                yield (first,) + tail

    limit = n if max_length is None else max_length
    yield from gen(n, n, limit)


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition; "-" denotes the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    return as_partition(int(tok) for tok in text.split(","))


def render_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


# ---------------------------------------------------------------------------
# letter families


class DiamondKind(Enum):
    """Families of single-column content blocks the grading is computed for.

    EMPTY words use plain letters only; BOX words add barred letters, a
    middle letter 0 and an empty element; HDOMINO words add barred letters
    only.  The two-cell vertical block family is not supported.
    """

    EMPTY = "empty"
    BOX = "box"
    HDOMINO = "hdomino"

    @property
    def xi(self) -> int:
        return 2 if self is DiamondKind.BOX else 1


def parse_diamond_kind(text: str) -> DiamondKind:
    try:
        return DiamondKind(text.strip().lower())
    except ValueError:
        raise ValueError(
            f"unknown letter family {text!r}; choose empty, box or hdomino"
        ) from None


def diamond_tileable(lam: Partition, d: DiamondKind) -> bool:
    """Whether every row of lam can be tiled by the family's block."""
    lam = as_partition(lam)
    if d is DiamondKind.EMPTY:
        return lam == ()
    if d is DiamondKind.BOX:
        return True
    return all(p % 2 == 0 for p in lam)


@dataclass(frozen=True, slots=True)
class DiamondLetter:
    """One letter of a box or hdomino alphabet.

    kind is "plain", "bar" or "zero"; index is the numeral for plain/bar
    letters and 0 for the zero letter.
    """

    kind: str
    index: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("plain", "bar", "zero"):
            raise ValueError(f"bad letter kind {self.kind!r}")
        if self.kind == "zero":
            if self.index != 0:
                raise ValueError("zero letter takes no index")
        elif self.index < 1:
            raise ValueError(f"letter index must be positive, got {self.index}")

    def key(self) -> tuple[int, int]:
        """Sort key for the order 1 < ... < n < 0 < nbar < ... < 1bar."""
        if self.kind == "plain":
            return (0, self.index)
        if self.kind == "zero":
            return (1, 0)
        return (2, -self.index)

    def __le__(self, other: "DiamondLetter") -> bool:
        return self.key() <= other.key()

    def __lt__(self, other: "DiamondLetter") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        if self.kind == "plain":
            return str(self.index)
        if self.kind == "zero":
            return "0"
        return f"{self.index}-"


def parse_diamond_letter(tok: str) -> DiamondLetter:
    tok = tok.strip()
    if tok == "0":
        return DiamondLetter("zero")
    if tok.endswith("-"):
        return DiamondLetter("bar", int(tok[:-1]))
    return DiamondLetter("plain", int(tok))


def _letter_allowed(x: DiamondLetter, d: DiamondKind) -> bool:
    if d is DiamondKind.EMPTY:
        return x.kind == "plain"
    if d is DiamondKind.HDOMINO:
        return x.kind in ("plain", "bar")
    return True


@dataclass(frozen=True, slots=True)
class DiamondFactor:
    """One row factor: a width and a weakly increasing letter content.

    The content may be shorter than the width when the family admits
    width-dropping components: any drop for box, even drops for hdomino,
    none for empty.  Content of length zero renders as "E".
    """

    width: int
    letters: tuple[DiamondLetter, ...]

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError(f"factor width must be >= 1, got {self.width}")
        if len(self.letters) > self.width:
            raise ValueError(
                f"{len(self.letters)} letters exceed factor width {self.width}"
            )
        keys = [x.key() for x in self.letters]
        if keys != sorted(keys):
            raise ValueError(f"factor letters not weakly increasing: {self}")
        if sum(1 for x in self.letters if x.kind == "zero") > 1:
            raise ValueError("letter 0 may occur at most once in a factor")

    @property
    def drop(self) -> int:
        return self.width - len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "E"
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True, slots=True)
class DiamondWord:
    """A tensor word over one of the box/hdomino/empty alphabets."""

    diamond: DiamondKind
    factors: tuple[DiamondFactor, ...]

    def __post_init__(self) -> None:
        for f in self.factors:
            for x in f.letters:
                if not _letter_allowed(x, self.diamond):
                    raise ValueError(
                        f"letter {x} not in the {self.diamond.value} alphabet"
                    )
            if f.drop:
                if self.diamond is DiamondKind.EMPTY:
                    raise ValueError("empty-family factors cannot drop width")
                if self.diamond is DiamondKind.HDOMINO and f.drop % 2:
                    raise ValueError("hdomino factors drop width in steps of two")

    @property
    def nu(self) -> tuple[int, ...]:
        """Widths as a composition (nu_1, ..., nu_m); nu_1 is the rightmost."""
        return tuple(f.width for f in reversed(self.factors))

    @property
    def total_width(self) -> int:
        return sum(f.width for f in self.factors)

    def letters(self) -> tuple[DiamondLetter, ...]:
        """All letters in display order (leftmost factor first)."""
        return tuple(x for f in self.factors for x in f.letters)

    def __str__(self) -> str:
        return render_diamond_word(self)


def diamond_word(
    d: DiamondKind, factors: Iterable[Iterable[DiamondLetter]], nu: Iterable[int] | None = None
) -> DiamondWord:
    """Build a word from letter tuples; widths default to content lengths.

    nu, when given, lists widths in composition order (rightmost first).
    """
    contents = [tuple(f) for f in factors]
    if nu is None:
        widths = [len(c) for c in contents]
    else:
        widths = list(reversed(tuple(nu)))
        if len(widths) != len(contents):
            raise ValueError("nu length does not match factor count")
    return DiamondWord(d, tuple(DiamondFactor(w, c) for w, c in zip(widths, contents)))


def parse_diamond_word(text: str, d: DiamondKind, nu: Iterable[int] | None = None) -> DiamondWord:
    """Parse a word; factors split on "|", or one letter per token without it.

    Tokens: plain "3", barred "3-", zero "0", empty content "E".
    """
    text = text.strip()
    if "|" in text:
        groups = [g.strip() for g in text.split("|")]
    else:
        groups = text.split()
    contents = []
    for g in groups:
        toks = g.split()
        if "E" in toks:
            if len(toks) != 1:
                raise ValueError(f"empty content must stand alone, got {g!r}")
            contents.append(())
        else:
            contents.append(tuple(parse_diamond_letter(t) for t in toks))
    if nu is None and all(len(c) <= 1 for c in contents):
        nu = tuple(1 for _ in contents)[::-1] if contents else ()
    return diamond_word(d, contents, nu)


def render_diamond_word(w: DiamondWord) -> str:
    if all(f.width == 1 for f in w.factors):
        return " ".join(str(f) for f in w.factors)
    return " | ".join(str(f) for f in w.factors)


# ---------------------------------------------------------------------------
# type A words: factors are bare int tuples, negatives for dual letters


AFactor = tuple[int, ...]
AWord = tuple[AFactor, ...]


def a_factor(letters: Iterable[int]) -> AFactor:
    row = tuple(letters)
    if not row:
        raise ValueError("type A factors are never empty")
    if not (all(x > 0 for x in row) or all(x < 0 for x in row)):
        raise ValueError(f"factor mixes plain and dual letters: {row}")
    if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
        raise ValueError(f"factor letters not weakly increasing: {row}")
    return row


def a_word(factors: Iterable[Iterable[int]]) -> AWord:
    return tuple(a_factor(f) for f in factors)


def validate_a_word(w: AWord, n_letters: int) -> None:
    """Check every letter fits inside the alphabet {1..N} resp. {Nv..1v}."""
    for f in w:
        for x in f:
            if not 1 <= abs(x) <= n_letters:
                raise ValueError(f"letter {x} outside rank {n_letters} alphabet")


def is_dual_factor(f: AFactor) -> bool:
    return f[0] < 0


def parse_a_word(text: str) -> AWord:
    """Parse a type A word: "3" is plain, "3v" is dual; factors split on "|"."""
    text = text.strip()
    groups = [g.strip() for g in text.split("|")] if "|" in text else text.split()
    factors = []
    for g in groups:
        toks = g.split()
        letters = []
        for t in toks:
            if t.endswith("v"):
                letters.append(-int(t[:-1]))
            else:
                letters.append(int(t))
        factors.append(letters)
    return a_word(factors)


def render_a_letter(x: int) -> str:
    return f"{-x}v" if x < 0 else str(x)


def render_a_word(w: AWord) -> str:
    if all(len(f) == 1 for f in w):
        return " ".join(render_a_letter(f[0]) for f in w)
    return " | ".join(" ".join(render_a_letter(x) for x in f) for f in w)


# ---------------------------------------------------------------------------
# weights


def a_weight(w: AWord, n_letters: int) -> tuple[int, ...]:
    """Multiplicity vector (m_1 - m_1v, ..., m_N - m_Nv)."""
    wt = [0] * n_letters
    for f in w:
        for x in f:
            wt[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(wt)


def diamond_weight(w: DiamondWord, n: int) -> tuple[int, ...]:
    """Multiplicity vector (m_1 - m_1bar, ..., m_n - m_nbar)."""
    wt = [0] * n
    for x in w.letters():
        if x.kind == "plain":
            wt[x.index - 1] += 1
        elif x.kind == "bar":
            wt[x.index - 1] -= 1
    return tuple(wt)


def weight(w: DiamondWord | AWord, n: int) -> tuple[int, ...]:
    if isinstance(w, DiamondWord):
        return diamond_weight(w, n)
    return a_weight(w, n)


def _is_partition_vector(wt: Iterable[int]) -> bool:
    vec = list(wt)
    if any(v < 0 for v in vec):
        return False
    return all(vec[i] >= vec[i + 1] for i in range(len(vec) - 1))


def weight_partition(wt: Iterable[int]) -> Partition:
    vec = tuple(wt)
    if not _is_partition_vector(vec):
        raise ValueError(f"weight {vec} is not a partition")
    return as_partition(vec)


# ---------------------------------------------------------------------------
# highest weight vectors


def resolve_rank(rank: int | str, total_letters: int) -> int:
    """Resolve the rank flag: "auto" means one more than the letter count."""
    if rank == "auto":
        return total_letters + 1
    rank = int(rank)
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    return rank


def is_diamond_highest_weight(w: DiamondWord, n: int) -> bool:
    """Partial-weight test for words of single letters.

    Requires n at least the number of letters.  True iff every right factor
    has partition weight and no letter 0 (box) resp. no letter n or nbar
    (hdomino) occurs.
    """
    if any(f.width != 1 for f in w.factors):
        raise ValueError("partial-weight test applies to words of single letters")
    letters = w.letters()
    if n < len(w.factors):
        raise ValueError(f"rank {n} below letter count {len(w.factors)}")
    for x in letters:
        if w.diamond is DiamondKind.BOX and x.kind == "zero":
            return False
        if w.diamond is DiamondKind.HDOMINO and x.index == n:
            return False
    wt = [0] * n
    for f in reversed(w.factors):
        for x in f.letters:
            wt[x.index - 1] += 1 if x.kind == "plain" else -1
        if not _is_partition_vector(wt):
            return False
    return True


def _factor_contents(d: DiamondKind, s: int, n: int) -> list[tuple[DiamondLetter, ...]]:
    """All elements of a width-s row over the rank-n alphabet of family d."""
    alphabet = [DiamondLetter("plain", i) for i in range(1, n + 1)]
    if d is DiamondKind.BOX:
        alphabet.append(DiamondLetter("zero"))
    if d is not DiamondKind.EMPTY:
        alphabet.extend(DiamondLetter("bar", i) for i in range(n, 0, -1))
    if d is DiamondKind.EMPTY:
        lengths = [s]
    elif d is DiamondKind.BOX:
        lengths = list(range(s, -1, -1))
    else:
        lengths = list(range(s, -1, -2))
    out = []
    for m in lengths:
        for combo in itertools.combinations_with_replacement(alphabet, m):
            if sum(1 for x in combo if x.kind == "zero") > 1:
                continue
            out.append(combo)
    return out


def enumerate_highest_weight_vectors(
    nu: tuple[int, ...], d: DiamondKind, n: int, lam: Partition | None = None
) -> list[DiamondWord]:
    """All classical highest weight vectors of the width-nu tensor product.

    Extends partial words one factor at a time, keeping exactly those whose
    raising operators all vanish; with lam given, filters to that weight.
    The rank must be at least the total width.
    """
    from . import crystal

    nu = tuple(int(s) for s in nu)
    if any(s < 1 for s in nu):
        raise ValueError(f"widths must be positive: {nu}")
    total = sum(nu)
    if n < total:
        raise ValueError(f"rank {n} below total width {total}")
    if lam is not None:
        lam = as_partition(lam)
        if sum(lam) > total or len(lam) > n:
            return []

    partial: list[DiamondWord] = [DiamondWord(d, ())]
    for s in nu:  # nu_1 (rightmost factor) first
        contents = _factor_contents(d, s, n)
        grown: list[DiamondWord] = []
        for word in partial:
            phis = crystal.diamond_phi_vector(word, n)
            for content in contents:
                factor = DiamondFactor(s, content)
                eps = crystal.diamond_epsilon_vector(
                    DiamondWord(d, (factor,)), n
                )
                if all(eps[i] <= phis[i] for i in range(n)):
                    grown.append(DiamondWord(d, (factor,) + word.factors))
        partial = grown
    if lam is None:
        return partial
    return [w for w in partial if diamond_weight(w, n) == lam + (0,) * (n - len(lam))]
