"""Second-order truncated Taylor arithmetic in the four space-time coordinates.

``Jet2`` is the scalar used by metric providers.  ``JetArray`` carries whole
tensor fields (value, gradient, Hessian) and differentiates products by the
Leibniz rule; ``partial`` trades one order of accuracy for a derivative index.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

NDIM = 4


class Jet2:
    __slots__ = ("value", "grad", "hess")

    def __init__(self, value: float, grad=None, hess=None):
        self.value = float(value)
        self.grad = np.zeros(NDIM) if grad is None else np.asarray(grad, dtype=float)
        self.hess = np.zeros((NDIM, NDIM)) if hess is None else np.asarray(hess, dtype=float)

    @classmethod
    def variable(cls, value: float, index: int) -> "Jet2":
        grad = np.zeros(NDIM)
        grad[index] = 1.0
        return cls(value, grad)

    @staticmethod
    def lift(x) -> "Jet2":
        return x if isinstance(x, Jet2) else Jet2(x)

    def _chain(self, f0: float, f1: float, f2: float) -> "Jet2":
        g = self.grad
        return Jet2(f0, f1 * g, f1 * self.hess + f2 * np.outer(g, g))

    def __add__(self, other):
        o = Jet2.lift(other)
        return Jet2(self.value + o.value, self.grad + o.grad, self.hess + o.hess)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.value, -self.grad, -self.hess)

    def __sub__(self, other):
        return self + (-Jet2.lift(other))

    def __rsub__(self, other):
        return Jet2.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            c = float(other)
            return Jet2(c * self.value, c * self.grad, c * self.hess)
        a, b = self, other
        cross = np.outer(a.grad, b.grad)
        return Jet2(a.value * b.value,
                    a.value * b.grad + b.value * a.grad,
                    a.value * b.hess + b.value * a.hess + (cross + cross.T))

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet2":
        v = self.value
        if v == 0.0:
            raise ZeroDivisionError("jet division by zero value")
        return self._chain(1.0 / v, -1.0 / v**2, 2.0 / v**3)

    def __truediv__(self, other):
        if not isinstance(other, Jet2):
            return self * (1.0 / float(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return Jet2.lift(other) * self.reciprocal()

    def __pow__(self, k):
        if isinstance(k, Jet2):
            raise TypeError("jet exponents are not supported")
        k = float(k)
        if k == int(k) and k >= 0:
            out = Jet2(1.0)
            for _ in range(int(k)):
                out = out * self
            return out
        v = self.value
        if v <= 0.0:
            raise ValueError("non-integer power of a non-positive jet")
        return self._chain(v**k, k * v**(k - 1), k * (k - 1) * v**(k - 2))

    def __repr__(self) -> str:
        return f"Jet2({self.value!r}, grad={self.grad.tolist()})"


def sqrt(x):
    if not isinstance(x, Jet2):
        return math.sqrt(x)
    v = x.value
    if v <= 0.0:
        raise ValueError("sqrt of a non-positive jet")
    s = math.sqrt(v)
    return x._chain(s, 0.5 / s, -0.25 / (s * v))


def sin(x):
    if not isinstance(x, Jet2):
        return math.sin(x)
    s, c = math.sin(x.value), math.cos(x.value)
    return x._chain(s, c, -s)


def cos(x):
    if not isinstance(x, Jet2):
        return math.cos(x)
    s, c = math.sin(x.value), math.cos(x.value)
    return x._chain(c, -s, -c)


def exp(x):
    if not isinstance(x, Jet2):
        return math.exp(x)
    e = math.exp(x.value)
    return x._chain(e, e, e)


def coordinates(x: Sequence[float]) -> list[Jet2]:
    """Seed jets for the coordinate functions at the point x."""
    return [Jet2.variable(v, i) for i, v in enumerate(x)]


class JetArray:
    """A tensor field to second (or first) order at a point.

    ``d`` and ``dd`` append derivative indices after the tensor indices; ``dd``
    is None for first-order jets.
    """

    __slots__ = ("val", "d", "dd")

    def __init__(self, val, d, dd=None):
        self.val = np.asarray(val, dtype=float)
        self.d = np.asarray(d, dtype=float)
        self.dd = None if dd is None else np.asarray(dd, dtype=float)

    @classmethod
    def from_jets(cls, jets) -> "JetArray":
        arr = np.asarray(jets, dtype=object)
        flat = [Jet2.lift(j) for j in arr.reshape(-1)]
        shape = arr.shape
        return cls(np.array([j.value for j in flat]).reshape(shape),
                   np.array([j.grad for j in flat]).reshape(shape + (NDIM,)),
                   np.array([j.hess for j in flat]).reshape(shape + (NDIM, NDIM)))

    @classmethod
    def constant(cls, val) -> "JetArray":
        val = np.asarray(val, dtype=float)
        return cls(val, np.zeros(val.shape + (NDIM,)), np.zeros(val.shape + (NDIM, NDIM)))

    @property
    def second_order(self) -> bool:
        return self.dd is not None

    def __add__(self, other: "JetArray") -> "JetArray":
        dd = None if self.dd is None or other.dd is None else self.dd + other.dd
        return JetArray(self.val + other.val, self.d + other.d, dd)

    def __neg__(self) -> "JetArray":
        return JetArray(-self.val, -self.d, None if self.dd is None else -self.dd)

    def __sub__(self, other: "JetArray") -> "JetArray":
        return self + (-other)

    def scale(self, c: float) -> "JetArray":
        return JetArray(c * self.val, c * self.d, None if self.dd is None else c * self.dd)

    def transpose(self, *axes) -> "JetArray":
        n = self.val.ndim
        return JetArray(self.val.transpose(axes),
                        self.d.transpose(tuple(axes) + (n,)),
                        None if self.dd is None else self.dd.transpose(tuple(axes) + (n, n + 1)))


def partial(J: JetArray) -> JetArray:
    """Gradient as a new last index; the result is one order lower."""
    return JetArray(J.d, J.dd if J.dd is not None else np.full(J.d.shape + (NDIM,), np.nan))


def jeinsum(spec: str, *ops: JetArray) -> JetArray:
    """einsum over jets with the product rule applied to gradient and Hessian."""
    ins, out = spec.replace(" ", "").split("->")
    subs = ins.split(",")
    if len(subs) != len(ops):
        raise ValueError("operand count does not match subscripts")
    # Y and Z name the derivative directions
    val = np.einsum(spec, *(o.val for o in ops))
    d = np.zeros(val.shape + (NDIM,))
    for i in range(len(ops)):
        s = [x + ("Z" if j == i else "") for j, x in enumerate(subs)]
        arrs = [o.d if j == i else o.val for j, o in enumerate(ops)]
        d = d + np.einsum(",".join(s) + "->" + out + "Z", *arrs)
    if any(o.dd is None for o in ops):
        return JetArray(val, d, None)
    dd = np.zeros(val.shape + (NDIM, NDIM))
    for i in range(len(ops)):
        s = [x + ("ZY" if j == i else "") for j, x in enumerate(subs)]
        arrs = [o.dd if j == i else o.val for j, o in enumerate(ops)]
        dd = dd + np.einsum(",".join(s) + "->" + out + "ZY", *arrs)
        for k in range(len(ops)):
            if k == i:
                continue
            s = [x + ("Z" if j == i else "Y" if j == k else "") for j, x in enumerate(subs)]
            arrs = [o.d if j in (i, k) else o.val for j, o in enumerate(ops)]
            dd = dd + np.einsum(",".join(s) + "->" + out + "ZY", *arrs)
    return JetArray(val, d, dd)


def jet_inverse(G: JetArray) -> JetArray:
    """Matrix inverse of a 2-index jet, using d(G^-1) = -G^-1 dG G^-1."""
    Gi = np.linalg.inv(G.val)
    dGi = -np.einsum("ab,bcz,cd->adz", Gi, G.d, Gi)
    if G.dd is None:
        return JetArray(Gi, dGi)
    ddGi = (-np.einsum("ab,bczy,cd->adzy", Gi, G.dd, Gi)
            + np.einsum("ab,bcz,ce,efy,fd->adzy", Gi, G.d, Gi, G.d, Gi)
            + np.einsum("ab,bcy,ce,efz,fd->adzy", Gi, G.d, Gi, G.d, Gi))
    return JetArray(Gi, dGi, ddGi)


def jet_sqrt(J: JetArray) -> JetArray:
    """Elementwise square root (entries must be positive)."""
    if np.any(J.val <= 0):
        raise ValueError("sqrt of a non-positive jet")
    s = np.sqrt(J.val)
    f1 = 0.5 / s
    d = f1[..., None] * J.d
    if J.dd is None:
        return JetArray(s, d)
    f2 = -0.25 / (s * J.val)
    dd = f1[..., None, None] * J.dd + f2[..., None, None] * np.einsum("...z,...y->...zy", J.d, J.d)
    return JetArray(s, d, dd)


def jet_reciprocal(J: JetArray) -> JetArray:
    if np.any(J.val == 0):
        raise ZeroDivisionError("jet division by zero value")
    v = J.val
    d = (-1.0 / v**2)[..., None] * J.d
    if J.dd is None:
        return JetArray(1.0 / v, d)
    dd = ((-1.0 / v**2)[..., None, None] * J.dd
          + (2.0 / v**3)[..., None, None] * np.einsum("...z,...y->...zy", J.d, J.d))
    return JetArray(1.0 / v, d, dd)
