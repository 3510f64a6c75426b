"""Partitions, Young tableaux and Young symmetrizers."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterator, Sequence

from .linalg import rational_rank
from .perm_algebra import (
    GroupRingElement,
    Permutation,
    all_permutations,
    compose,
    ring_multiply,
    sign,
)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for p in self.parts if p > j) for j in range(self.parts[0])])

    def hook_lengths(self) -> list[list[int]]:
        conj = self.conjugate().parts
        return [[(row - j - 1) + (conj[j] - i - 1) + 1 for j in range(row)]
                for i, row in enumerate(self.parts)]

    def num_standard_tableaux(self) -> int:
        """f^lambda from the hook length formula."""
        hooks = prod(h for row in self.hook_lengths() for h in row)
        return factorial(self.weight) // hooks

    def addable_boxes(self) -> list["Partition"]:
        out = []
        parts = list(self.parts) + [0]
        for i in range(len(parts)):
            if i == 0 or parts[i - 1] > parts[i]:
                new = parts.copy()
                new[i] += 1
                out.append(Partition(new))
        return out

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.parts)) + "]"


def partitions(r: int) -> list[Partition]:
    """All partitions of r, in reverse lexicographic order ((r) first)."""
    def gen(n: int, largest: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for k in range(min(n, largest), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest
    return [Partition(p) for p in gen(r, r)]


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        Partition([len(row) for row in rows])  # validates the frame
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"tableau entries must be 1..r exactly once: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungTableau":
        """Parse ``"1,3;2,4"`` (rows separated by semicolons)."""
        return cls([[int(x) for x in row.split(",") if x.strip()]
                    for row in text.split(";") if row.strip()])

    @property
    def frame(self) -> Partition:
        return Partition([len(row) for row in self.rows])

    @property
    def size(self) -> int:
        return self.frame.weight

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        ncols = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(row[j] for row in self.rows if len(row) > j) for j in range(ncols))

    def is_standard(self) -> bool:
        def increasing(seq):
            return all(a < b for a, b in zip(seq, seq[1:]))
        return all(map(increasing, self.rows)) and all(map(increasing, self.columns))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return ";".join(",".join(map(str, row)) for row in self.rows)


def standard_tableaux(shape: Partition | Sequence[int]) -> list[YoungTableau]:
    """All standard tableaux of the given frame, sorted by row-reading word."""
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    r = shape.weight
    found: list[YoungTableau] = []

    # place 1..r one at a time into an addable corner of the partial filling
    def place(rows: list[list[int]], k: int) -> None:
        if k > r:
            found.append(YoungTableau(rows))
            return
        for i, target in enumerate(shape.parts):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(rows, k + 1)
                rows[i].pop()

    if r == 0:
        return []
    place([[] for _ in shape.parts], 1)
    return sorted(found, key=lambda t: [x for row in t.rows for x in row])


def _block_group(blocks: Sequence[Sequence[int]], r: int) -> list[Permutation]:
    """Permutations of 1..r that map every block onto itself."""
    choices = [list(itertools.permutations(b)) for b in blocks if len(b) > 1]
    movable = [b for b in blocks if len(b) > 1]
    out = []
    for combo in itertools.product(*choices):
        images = list(range(1, r + 1))
        for block, img in zip(movable, combo):
            for src, dst in zip(block, img):
                images[src - 1] = dst
        out.append(Permutation(images))
    return sorted(out)


def horizontal_group(t: YoungTableau) -> list[Permutation]:
    return _block_group(t.rows, t.size)


def vertical_group(t: YoungTableau) -> list[Permutation]:
    return _block_group(t.columns, t.size)


def young_symmetrizer(t: YoungTableau) -> GroupRingElement:
    """y_t = sum over p in H_t, q in V_t of sign(q) p*q."""
    terms: dict[Permutation, int] = {}
    vertical = [(q, sign(q)) for q in vertical_group(t)]
    for p in horizontal_group(t):
        for q, s in vertical:
            pq = compose(p, q)
            terms[pq] = terms.get(pq, 0) + s
    return GroupRingElement(t.size, terms)


def essential_factor(y: GroupRingElement) -> Fraction:
    """mu with y*y = mu*y; raises if y is not essentially idempotent."""
    yy = ring_multiply(y, y)
    if not y:
        raise ValueError("zero element")
    p, c = next(iter(y.items()))
    mu = yy.coefficient(p) / c
    if yy != y * mu:
        raise ValueError("element is not essentially idempotent")
    return mu


def verify_ring_decomposition(r: int) -> dict:
    """Check that the Young symmetrizers of standard tableaux fill out Q[S_r].

    Reports the sum of squared standard-tableau counts and the exact rank of
    the left translates p*y_t over all p in S_r and standard t.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    counts = {str(lam): lam.num_standard_tableaux() for lam in partitions(r)}
    sum_sq = sum(c * c for c in counts.values())
    group = all_permutations(r)
    index = {p: i for i, p in enumerate(group)}
    rows = []
    for lam in partitions(r):
        for t in standard_tableaux(lam):
            y = young_symmetrizer(t)
            for p in group:
                py = ring_multiply(GroupRingElement.from_perm(p), y)
                row = [0] * len(group)
                for s, c in py.items():
                    row[index[s]] = c
                rows.append(row)
    rank = rational_rank(rows)
    return {
        "r": r,
        "f_lambda": counts,
        "sum_f_squared": sum_sq,
        "order": factorial(r),
        "left_translate_rank": rank,
        "pass": sum_sq == factorial(r) and rank == factorial(r),
    }
