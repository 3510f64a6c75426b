"""Exact arithmetic in the group ring Q[S_r].

Permutations use one-line notation with 1-based images, so ``Permutation((2, 3, 1))``
sends 1 -> 2, 2 -> 3, 3 -> 1.  Products follow ``(p * q)(i) = p(q(i))``.
"""
from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

MAX_DEGREE = 8


class Permutation(tuple):
    """Immutable permutation of {1, ..., r} in one-line notation."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        r = len(images)
        if not 1 <= r <= MAX_DEGREE:
            raise ValueError(f"degree {r} outside 1..{MAX_DEGREE}")
        if sorted(images) != list(range(1, r + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{r}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(range(1, r + 1))

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return compose(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


def compose(p: Permutation, q: Permutation) -> Permutation:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return Permutation(p[j - 1] for j in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p, start=1):
        inv[j - 1] = i
    return Permutation(inv)


def sign(p: Permutation) -> int:
    seen = [False] * len(p)
    s = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


@lru_cache(maxsize=None)
def all_permutations(r: int) -> tuple[Permutation, ...]:
    """All of S_r in lexicographic order of images."""
    return tuple(Permutation(p) for p in itertools.permutations(range(1, r + 1)))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not rational")


class GroupRingElement:
    """Formal sum of permutations of S_r with rational coefficients.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Iterable[int], object] | None = None):
        if not 1 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree {degree} outside 1..{MAX_DEGREE}")
        self.degree = degree
        clean: dict[Permutation, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            p = perm if isinstance(perm, Permutation) else Permutation(perm)
            if len(p) != degree:
                raise ValueError(f"permutation {p} does not have degree {degree}")
            c = clean.get(p, Fraction(0)) + _as_fraction(coeff)
            if c:
                clean[p] = c
            else:
                clean.pop(p, None)
        self._terms = clean

    @classmethod
    def identity(cls, r: int) -> "GroupRingElement":
        return cls(r, {Permutation.identity(r): 1})

    @classmethod
    def from_perm(cls, p: Iterable[int], coeff=1) -> "GroupRingElement":
        p = Permutation(p)
        return cls(len(p), {p: coeff})

    @property
    def terms(self) -> dict[Permutation, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, p: Iterable[int]) -> Fraction:
        return self._terms.get(Permutation(p), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._terms.items())))

    def _check(self, other: "GroupRingElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        terms = dict(self._terms)
        for p, c in other._terms.items():
            terms[p] = terms.get(p, 0) + c
        return GroupRingElement(self.degree, terms)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.degree, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            return ring_multiply(self, other)
        c = _as_fraction(other)
        return GroupRingElement(self.degree, {p: c * v for p, v in self._terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (1 / _as_fraction(other))

    def __repr__(self) -> str:
        if not self._terms:
            return f"0 (S_{self.degree})"
        return " + ".join(f"{c}*{p!r}" for p, c in self.items())

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"perm": list(p), "num": str(c.numerator), "den": str(c.denominator)}
                for p, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "GroupRingElement":
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[Permutation, Fraction] = {}
        for t in data["terms"]:
            p = Permutation(t["perm"])
            terms[p] = terms.get(p, 0) + Fraction(int(t["num"]), int(t["den"]))
        return cls(int(data["degree"]), terms)


def ring_multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product: the coefficient of s is the sum of a(p) b(q) over p*q = s."""
    a._check(b)
    out: dict[Permutation, Fraction] = {}
    for p, cp in a._terms.items():
        for q, cq in b._terms.items():
            s = compose(p, q)
            out[s] = out.get(s, 0) + cp * cq
    return GroupRingElement(a.degree, out)


def star(a: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(a.degree, {inverse(p): c for p, c in a._terms.items()})


def alternator(r: int) -> GroupRingElement:
    """Sum of sign(p) p over S_r (not normalized)."""
    return GroupRingElement(r, {p: sign(p) for p in all_permutations(r)})


def symmetrizer(r: int) -> GroupRingElement:
    return GroupRingElement(r, {p: 1 for p in all_permutations(r)})


def zeta(nu) -> GroupRingElement:
    """The one-parameter family of primitive idempotents of the (2 1) ideal of Q[S_3]."""
    nu = _as_fraction(nu)
    third = Fraction(1, 3)
    return GroupRingElement(3, {
        (1, 2, 3): third,
        (1, 3, 2): third * nu,
        (2, 1, 3): third * (1 - nu),
        (2, 3, 1): -third * nu,
        (3, 1, 2): third * (nu - 1),
        (3, 2, 1): -third,
    })


def eta() -> GroupRingElement:
    third = Fraction(1, 3)
    return GroupRingElement(3, {
        (1, 2, 3): third,
        (2, 1, 3): -third,
        (2, 3, 1): -third,
        (3, 2, 1): third,
    })


def rho() -> GroupRingElement:
    """Idempotent extracting the (2 1) part of T_{lmn} antisymmetrized in m, n."""
    half = GroupRingElement(3, {(1, 2, 3): Fraction(1, 2), (1, 3, 2): Fraction(-1, 2)})
    return half - alternator(3) * Fraction(1, 6)


def f0() -> GroupRingElement:
    """Generating idempotent of the exceptional right ideal for (2 1)."""
    half = GroupRingElement(3, {(1, 2, 3): Fraction(1, 2), (3, 2, 1): Fraction(-1, 2)})
    return half - alternator(3) * Fraction(1, 6)


def build_named(name: str, nu=None) -> GroupRingElement:
    """Build ``f0``, ``eta``, ``rho`` or ``zeta`` (the latter needs ``nu``).

    ``name`` may also be written ``"zeta(1/2)"``.
    """
    key = name.strip().lower()
    if key.startswith("zeta"):
        if "(" in key:
            nu = key[key.index("(") + 1:key.rindex(")")]
        if nu is None:
            raise ValueError("zeta requires a parameter nu")
        return zeta(nu)
    builders = {"f0": f0, "eta": eta, "rho": rho}
    if key not in builders:
        raise ValueError(f"unknown named element {name!r}")
    return builders[key]()
