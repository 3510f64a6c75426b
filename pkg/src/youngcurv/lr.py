"""Littlewood-Richardson products of Schur symbols [lambda][mu]."""
from __future__ import annotations

import json
from collections import Counter
from typing import Iterator, Mapping, Sequence

from .young import Partition, partitions


class PartitionMultiset(Mapping):
    """Partition -> positive multiplicity, iterated in decreasing order."""

    def __init__(self, entries: Mapping | None = None):
        clean: dict[Partition, int] = {}
        for lam, m in (entries or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            m = int(m)
            if m < 0:
                raise ValueError("multiplicities must be non-negative")
            if m:
                clean[lam] = clean.get(lam, 0) + m
        self._entries = dict(sorted(clean.items(), reverse=True))

    def __getitem__(self, key) -> int:
        key = key if isinstance(key, Partition) else Partition(key)
        return self._entries[key]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, PartitionMultiset):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == PartitionMultiset(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"PartitionMultiset({ {p.parts: m for p, m in self._entries.items()} })"

    def format(self) -> str:
        if not self._entries:
            return "0"
        return " + ".join(str(p) if m == 1 else f"{m}{p}" for p, m in self._entries.items())

    def to_json(self) -> list[dict]:
        return [{"partition": list(p.parts), "multiplicity": m} for p, m in self._entries.items()]


def _skew_fillings(outer: Sequence[int], inner: Sequence[int],
                   content: Sequence[int]) -> Iterator[list[list[int]]]:
    """Semistandard fillings of outer/inner with the given content, lattice reading word.

    Rows are filled top to bottom, each row right to left, which is exactly the
    reverse reading order; the lattice condition is checked as entries are placed.
    """
    nrows = len(outer)
    inner = list(inner) + [0] * (nrows - len(inner))
    filling: list[list[int]] = [[0] * (outer[i] - inner[i]) for i in range(nrows)]
    counts = [0] * (len(content) + 1)

    def above(i: int, col: int) -> int | None:
        if i == 0 or col < inner[i - 1]:
            return None
        return filling[i - 1][col - inner[i - 1]]

    def fill(i: int, k: int) -> Iterator[list[list[int]]]:
        if i == nrows:
            if all(counts[v + 1] == content[v] for v in range(len(content))):
                yield [row[:] for row in filling]
            return
        width = outer[i] - inner[i]
        if k < 0:
            yield from fill(i + 1, (outer[i + 1] - inner[i + 1] - 1) if i + 1 < nrows else -1)
            return
        col = inner[i] + k
        right = filling[i][k + 1] if k + 1 < width else len(content)
        up = above(i, col)
        low = 1 if up is None else up + 1
        for v in range(low, right + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[i][k] = v
            counts[v] += 1
            yield from fill(i, k - 1)
            counts[v] -= 1
        filling[i][k] = 0

    if nrows == 0:
        if sum(content) == 0:
            yield []
        return
    yield from fill(0, outer[0] - inner[0] - 1)


def lr_coefficient(nu: Partition, lam: Partition, mu: Partition) -> int:
    if nu.weight != lam.weight + mu.weight:
        return 0
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam.parts, nu.parts)):
        return 0
    if not mu.parts:
        return int(nu == lam)
    return sum(1 for _ in _skew_fillings(nu.parts, lam.parts, mu.parts))


def lr_product(lam: Partition | Sequence[int], mu: Partition | Sequence[int]) -> PartitionMultiset:
    """[lam][mu] as a multiset of partitions weighted by LR coefficients."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    out = Counter()
    for nu in partitions(lam.weight + mu.weight):
        c = lr_coefficient(nu, lam, mu)
        if c:
            out[nu] = c
    return PartitionMultiset(out)


def contains_partition(product: Mapping, nu: Partition | Sequence[int]) -> int:
    nu = nu if isinstance(nu, Partition) else Partition(nu)
    return product.get(nu, 0) if isinstance(product, PartitionMultiset) else int(
        PartitionMultiset(product).get(nu, 0))


def format_product(lam, mu, product: PartitionMultiset) -> str:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    return f"{lam}{mu} = {product.format()}"


def product_json(lam, mu, product: PartitionMultiset) -> str:
    return json.dumps({"left": list(Partition(lam).parts), "right": list(Partition(mu).parts),
                       "product": product.to_json()}, sort_keys=True)
