"""Algebraic curvature tensors: predicate, generators, projector and span experiments."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .linalg import rational_rank
from .perm_algebra import GroupRingElement, star, zeta
from .tensor_sym import (
    EXACT,
    DenseTensor,
    apply_operator,
    max_abs,
    random_tensor,
    span_rank,
    tensor_product,
)
from .young import YoungTableau, young_symmetrizer

# rows {1,3}, {2,4}; its symmetrizer generates the curvature symmetry class
CURVATURE_TABLEAU = YoungTableau([[1, 3], [2, 4]])


@lru_cache(maxsize=None)
def curvature_symmetrizer() -> GroupRingElement:
    """y_t for the 2x2 tableau with rows (1 3), (2 4)."""
    return young_symmetrizer(CURVATURE_TABLEAU)


@lru_cache(maxsize=None)
def curvature_idempotent() -> GroupRingElement:
    """(1/12) y_t^*, the primitive idempotent whose fixed points are the curvature tensors."""
    return star(curvature_symmetrizer()) * Fraction(1, 12)


def _as_matrix(form) -> np.ndarray:
    return form.array if isinstance(form, DenseTensor) else np.asarray(form)


def _wrap(arr: np.ndarray) -> DenseTensor:
    return DenseTensor(arr, EXACT if arr.dtype == object else None)


def gamma(S) -> DenseTensor:
    """S_{kn} S_{lm} - S_{km} S_{ln} for a symmetric form S."""
    S = _as_matrix(S)
    if np.any(S != S.T):
        raise ValueError("gamma needs a symmetric form")
    out = np.einsum("kn,lm->klmn", S, S) - np.einsum("km,ln->klmn", S, S)
    return _wrap(out)


def alpha(A) -> DenseTensor:
    """2 A_{kl} A_{mn} + A_{km} A_{ln} - A_{kn} A_{lm} for an alternating form A."""
    A = _as_matrix(A)
    if np.any(A != -A.T):
        raise ValueError("alpha needs an alternating form")
    out = (2 * np.einsum("kl,mn->klmn", A, A) + np.einsum("km,ln->klmn", A, A)
           - np.einsum("kn,lm->klmn", A, A))
    return _wrap(out)


def curvature_residuals(T: DenseTensor) -> dict[str, float]:
    R = T.array
    swap_last = R + R.transpose(0, 1, 3, 2)
    pair_exchange = R - R.transpose(2, 3, 0, 1)
    # R(w,x,y,z) + R(w,y,z,x) + R(w,z,x,y)
    bianchi = R + R.transpose(0, 3, 1, 2) + R.transpose(0, 2, 3, 1)
    swap_first = R + R.transpose(1, 0, 2, 3)
    return {
        "antisymmetry_last": max_abs(swap_last),
        "pair_exchange": max_abs(pair_exchange),
        "first_bianchi": max_abs(bianchi),
        "antisymmetry_first": max_abs(swap_first),
    }


def is_algebraic_curvature(T: DenseTensor, tol: float = 0.0) -> bool:
    if T.order != 4:
        raise ValueError("algebraic curvature tensors have order 4")
    res = curvature_residuals(T)
    ok = res["antisymmetry_last"] <= tol and res["pair_exchange"] <= tol and res["first_bianchi"] <= tol
    if ok and res["antisymmetry_first"] > tol:
        raise AssertionError("first-pair antisymmetry must follow from the defining identities")
    return ok


def acr_projector(T: DenseTensor) -> DenseTensor:
    if T.order != 4:
        raise ValueError("acr_projector acts on order-4 tensors")
    return apply_operator(curvature_idempotent(), T)


def operator_matrix(e: GroupRingElement, dim: int) -> list[list[Fraction]]:
    """Matrix of T -> eT on the dim**r component space (rows = images of basis tensors)."""
    r = e.degree
    size = dim ** r
    rows = []
    for k in range(size):
        basis = np.full(size, Fraction(0), dtype=object)
        basis[k] = Fraction(1)
        image = apply_operator(e, DenseTensor(basis.reshape((dim,) * r), EXACT))
        rows.append(image.components)
    return rows


@lru_cache(maxsize=None)
def acr_dimension(n: int) -> int:
    """Exact rank of the curvature projector on n**4-dimensional tensor space."""
    if not 2 <= n <= 4:
        raise ValueError("acr_dimension is supported for 2 <= n <= 4")
    return rational_rank(operator_matrix(curvature_idempotent(), n))


def random_symmetric(rng: np.random.Generator, n: int) -> np.ndarray:
    M = random_tensor(rng, 2, n).array
    return M + M.T


def random_alternating(rng: np.random.Generator, n: int) -> np.ndarray:
    M = random_tensor(rng, 2, n).array
    return M - M.T


def thm12_span_experiment(n: int, samples: int, generator: str, rng: np.random.Generator) -> int:
    """Rank of the span of gamma(S) or alpha(A) over random rational forms."""
    if generator == "gamma":
        tensors = [gamma(random_symmetric(rng, n)) for _ in range(samples)]
    elif generator == "alpha":
        tensors = [alpha(random_alternating(rng, n)) for _ in range(samples)]
    else:
        raise ValueError(f"unknown generator {generator!r}")
    return span_rank(tensors)


def product_generators(nu, samples: int, order: str, rng: np.random.Generator,
                       dim: int = 4, zero_w: bool = False) -> list[DenseTensor]:
    """y_t^*(U (x) w) or y_t^*(w (x) U) with U = zeta_nu T for random T, w."""
    if order not in ("Uw", "wU"):
        raise ValueError("order must be 'Uw' or 'wU'")
    e = zeta(nu)
    y_star = star(curvature_symmetrizer())
    out = []
    for _ in range(samples):
        U = apply_operator(e, random_tensor(rng, 3, dim))
        w = random_tensor(rng, 1, dim)
        if zero_w:
            w = DenseTensor.zeros(1, dim)
        prod = tensor_product(U, w) if order == "Uw" else tensor_product(w, U)
        out.append(apply_operator(y_star, prod))
    return out


def thm13_span_experiment(nu, samples: int, order: str, rng: np.random.Generator,
                          zero_w: bool = False) -> int:
    return span_rank(product_generators(nu, samples, order, rng, zero_w=zero_w))
