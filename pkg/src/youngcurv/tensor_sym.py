"""Dense covariant tensors and the action of Q[S_r] on them.

The action is ``(a T)_{i_1..i_r} = sum_p a(p) T_{i_p(1) .. i_p(r)}``.  With the
product ``(p*q)(i) = p(q(i))`` this is a left action: ``a(bT) = (a*b)T``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .linalg import rational_rank
from .perm_algebra import GroupRingElement, Permutation, inverse

EXACT = "exact"
FLOAT = "float"


class DenseTensor:
    """Order-r covariant tensor over an n-dimensional space.

    ``array`` has shape ``(n,) * r``; exact tensors hold ``Fraction`` objects.
    """

    __slots__ = ("array", "mode")

    def __init__(self, array, mode: str | None = None):
        arr = np.asarray(array)
        if mode is None:
            mode = EXACT if arr.dtype == object or np.issubdtype(arr.dtype, np.integer) else FLOAT
        if mode == EXACT:
            arr = np.vectorize(Fraction, otypes=[object])(arr) if arr.size else arr.astype(object)
        elif mode == FLOAT:
            arr = arr.astype(float)
        else:
            raise ValueError(f"unknown scalar mode {mode!r}")
        if arr.ndim and len(set(arr.shape)) != 1:
            raise ValueError(f"tensor must be square in every slot, got shape {arr.shape}")
        arr.setflags(write=False)
        self.array = arr
        self.mode = mode

    @classmethod
    def zeros(cls, order: int, dim: int, mode: str = EXACT) -> "DenseTensor":
        if mode == EXACT:
            return cls(np.full((dim,) * order, Fraction(0), dtype=object), EXACT)
        return cls(np.zeros((dim,) * order), FLOAT)

    @property
    def order(self) -> int:
        return self.array.ndim

    @property
    def dim(self) -> int:
        return self.array.shape[0] if self.array.ndim else 0

    @property
    def components(self) -> list:
        return list(self.array.reshape(-1))

    def __getitem__(self, idx):
        return self.array[idx]

    def __add__(self, other: "DenseTensor") -> "DenseTensor":
        _check_compatible(self, other)
        return DenseTensor(self.array + other.array, self.mode)

    def __sub__(self, other: "DenseTensor") -> "DenseTensor":
        _check_compatible(self, other)
        return DenseTensor(self.array - other.array, self.mode)

    def __neg__(self) -> "DenseTensor":
        return DenseTensor(-self.array, self.mode)

    def __mul__(self, c) -> "DenseTensor":
        c = Fraction(c) if self.mode == EXACT else float(c)
        return DenseTensor(self.array * c, self.mode)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return (self.mode == other.mode and self.array.shape == other.array.shape
                and bool(np.all(self.array == other.array)))

    def is_zero(self, tol: float = 0.0) -> bool:
        return max_abs(self.array) <= tol

    def to_json(self) -> dict:
        comps = [str(c) for c in self.components] if self.mode == EXACT else [float(c) for c in self.components]
        return {"order": self.order, "dim": self.dim, "mode": self.mode, "components": comps}

    @classmethod
    def from_json(cls, data: dict | str) -> "DenseTensor":
        if isinstance(data, str):
            data = json.loads(data)
        r, n, mode = int(data["order"]), int(data["dim"]), data["mode"]
        comps = data["components"]
        if len(comps) != n ** r:
            raise ValueError(f"expected {n ** r} components, got {len(comps)}")
        if mode == EXACT:
            arr = np.array([Fraction(c) for c in comps], dtype=object)
        else:
            arr = np.array(comps, dtype=float)
        return cls(arr.reshape((n,) * r), mode)

    def __repr__(self) -> str:
        return f"DenseTensor(order={self.order}, dim={self.dim}, mode={self.mode})"


def max_abs(arr) -> float:
    arr = np.asarray(arr)
    if arr.size == 0:
        return 0.0
    if arr.dtype == object:
        return float(max(abs(x) for x in arr.reshape(-1)))
    return float(np.max(np.abs(arr)))


def _check_compatible(a: DenseTensor, b: DenseTensor) -> None:
    if a.mode != b.mode:
        raise ValueError(f"scalar mode mismatch: {a.mode} vs {b.mode}")
    if a.array.shape != b.array.shape:
        raise ValueError(f"shape mismatch: {a.array.shape} vs {b.array.shape}")


def permute_indices(p: Permutation, arr: np.ndarray) -> np.ndarray:
    """Array with components ``T[i_p(1), ..., i_p(r)]`` at position ``(i_1, ..., i_r)``."""
    return np.transpose(arr, [j - 1 for j in inverse(p)])


def apply_operator(a: GroupRingElement, T: DenseTensor) -> DenseTensor:
    if a.degree != T.order:
        raise ValueError(f"operator degree {a.degree} does not match tensor order {T.order}")
    if T.mode == EXACT:
        out = np.full(T.array.shape, Fraction(0), dtype=object)
        for p, c in a.items():
            out = out + permute_indices(p, T.array) * c
    else:
        out = np.zeros(T.array.shape)
        for p, c in a.items():
            out = out + float(c) * permute_indices(p, T.array)
    return DenseTensor(out, T.mode)


def is_class_member(e: GroupRingElement, T: DenseTensor, tol: float = 0.0) -> bool:
    """True iff e T = T, i.e. T lies in the symmetry class generated by the idempotent e."""
    diff = apply_operator(e, T).array - T.array
    if T.mode == EXACT:
        return max_abs(diff) <= Fraction(tol).limit_denominator() if tol else not np.any(diff != 0)
    return max_abs(diff) <= tol


def embed(a: GroupRingElement, r_total: int, offset: int) -> GroupRingElement:
    """Push a through S_k -> S_{r_total}, s -> (offset + s(k - offset)) on slots offset+1..offset+k."""
    k = a.degree
    if offset < 0 or offset + k > r_total:
        raise ValueError(f"cannot embed S_{k} at offset {offset} into S_{r_total}")
    terms = {}
    for p, c in a.items():
        images = list(range(1, r_total + 1))
        for i, v in enumerate(p, start=1):
            images[offset + i - 1] = offset + v
        terms[Permutation(images)] = c
    return GroupRingElement(r_total, terms)


def tensor_product(T1: DenseTensor, T2: DenseTensor) -> DenseTensor:
    if T1.mode != T2.mode:
        raise ValueError(f"scalar mode mismatch: {T1.mode} vs {T2.mode}")
    if T1.dim != T2.dim:
        raise ValueError(f"dimension mismatch: {T1.dim} vs {T2.dim}")
    return DenseTensor(np.multiply.outer(T1.array, T2.array), T1.mode)


def span_rank(tensors: Iterable[DenseTensor]) -> int:
    """Exact rank over Q of the component vectors of exact-mode tensors."""
    tensors = list(tensors)
    if not tensors:
        return 0
    shape = tensors[0].array.shape
    for T in tensors:
        if T.mode != EXACT:
            raise ValueError("span_rank needs exact-mode tensors")
        if T.array.shape != shape:
            raise ValueError("span_rank needs tensors of uniform order and dimension")
    return rational_rank(T.components for T in tensors)


def random_tensor(rng: np.random.Generator, order: int, dim: int, low: int = -9, high: int = 9) -> DenseTensor:
    """Exact tensor with integer components drawn uniformly from low..high."""
    ints = rng.integers(low, high + 1, size=(dim,) * order)
    return DenseTensor(np.vectorize(Fraction, otypes=[object])(ints), EXACT)
