"""Residual checks of the projection identities and curvature formulas at a point."""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Mapping

import numpy as np

from ..curvature_gen import curvature_symmetrizer
from ..perm_algebra import alternator, star, zeta
from ..tensor_sym import EXACT, FLOAT, DenseTensor, apply_operator, max_abs, random_tensor
from .frame import PointFrame, alternation3, build_point_frame
from .metrics import MetricProvider

FORMULAS = ("2.29", "2.30", "3.5", "1.5", "1.18", "1.20")
OUT = "klmn"


@lru_cache(maxsize=None)
def term_tables() -> dict[str, list[tuple[Fraction, tuple[tuple[str, str], ...], str]]]:
    """Summand tables of the long curvature formulas, keyed by formula label."""
    raw = json.loads(resources.files(__package__).joinpath("terms.json").read_text())
    return {
        name: [(Fraction(c), tuple((f, idx) for f, idx in factors), group)
               for c, factors, group in rows]
        for name, rows in raw.items() if not name.startswith("_")
    }


def evaluate_terms(terms, fields: Mapping[str, np.ndarray], group: str | None = None):
    """Sum of table terms as an order-4 array indexed (k, l, m, n).

    Works for float arrays and for exact ``Fraction`` object arrays.
    """
    exact = any(np.asarray(v).dtype == object for v in fields.values())
    total = None
    for coeff, factors, grp in terms:
        if group is not None and grp != group:
            continue
        spec = ",".join(idx for _, idx in factors) + "->" + OUT
        val = np.einsum(spec, *(fields[f] for f, _ in factors))
        val = val * (coeff if exact else float(coeff))
        total = val if total is None else total + val
    if total is None:
        n = len(next(iter(fields.values())))
        total = np.zeros((n,) * 4, dtype=object if exact else float)
        if exact:
            total[...] = Fraction(0)
    return total


def frame_fields(frame: PointFrame) -> dict[str, np.ndarray]:
    return {"F": frame.F, "tau": frame.tau_dn, "K": frame.curl, "theta": frame.theta}


def _relative(res: float, scale: float) -> float:
    return res / scale if scale > 0 else res


def curvature_scale(frame: PointFrame) -> float:
    """Normalization for curvature-formula residuals.

    max|Z| alone vanishes on flat space-times where P and the field terms do
    not, so the larger of max|Z| and max|P| is used; 0 means absolute residuals.
    """
    return max(max_abs(frame.Z_dn), max_abs(frame.P_dn))


def formula_rhs(frame: PointFrame, name: str) -> np.ndarray:
    """Right-hand side of -Z = ... for the named formula (lowered last index)."""
    A, D, P = frame.A, frame.D, frame.P_dn
    if name == "2.29":
        A_lk = frame.g_up @ A                       # A^l_k
        A_el = A @ frame.g_up                       # A_e^l
        D_el = D @ frame.g_up
        return (frame.P_up + 2 * np.einsum("lk,eg->egkl", A_lk, A)
                + np.einsum("el,gk->egkl", D_el + A_el, D + A)
                - np.einsum("gl,ek->egkl", D_el + A_el, D + A))
    if name == "2.30":
        return (P + 2 * np.einsum("lk,eg->egkl", A, A)
                + np.einsum("el,gk->egkl", D + A, D + A)
                - np.einsum("gl,ek->egkl", D + A, D + A))
    if name == "3.5":
        return (P + 2 * np.einsum("lk,eg->egkl", A, A)
                + np.einsum("el,gk->egkl", A, A) - np.einsum("gl,ek->egkl", A, A))
    if name == "synchronized":
        return P + np.einsum("el,gk->egkl", D, D) - np.einsum("gl,ek->egkl", D, D)
    tables = term_tables()
    if name not in tables:
        raise ValueError(f"unknown formula {name!r}")
    return P + evaluate_terms(tables[name], frame_fields(frame))


def formula_lhs(frame: PointFrame, name: str) -> np.ndarray:
    return -frame.Z_up if name == "2.29" else -frame.Z_dn


def verify_curvature_formulas(frame: PointFrame, formulas=FORMULAS) -> dict:
    """Residuals max|LHS - RHS| for each formula, absolute and scaled.

    Formulas that assume D = 0 are still evaluated off that precondition, with
    the violation reported alongside.
    """
    scale = curvature_scale(frame)
    d_res = max_abs(frame.D)
    report: dict = {"scale": scale, "D_residual": d_res, "formulas": {}}
    for name in formulas:
        diff = formula_lhs(frame, name) - formula_rhs(frame, name)
        if name == "2.29":
            diff = frame.lower_last(diff)
        res = max_abs(diff)
        entry = {"absolute": res, "relative": _relative(res, scale)}
        if name in ("3.5", "1.5", "1.18", "1.20") and d_res > 1e-10:
            entry["precondition"] = "D != 0: formula assumes a stationary observer"
        report["formulas"][name] = entry
    rhs = {n: formula_rhs(frame, n) for n in ("1.5", "1.18", "1.20")}
    report["pairwise"] = {
        f"{a}~{b}": _relative(max_abs(rhs[a] - rhs[b]), scale)
        for a, b in (("1.5", "1.18"), ("1.18", "1.20"), ("1.5", "1.20"))
    }
    report["underbrace"] = theta_line_residual(frame)
    return report


def theta_line_residual(frame: PointFrame) -> float:
    """Distance between the F*theta line of the 12-term formula and (1/2) y_t^*(theta (x) F)."""
    line = evaluate_terms(term_tables()["1.20"], frame_fields(frame), group="Ftheta")
    prod = DenseTensor(np.einsum("abc,d->abcd", frame.theta, frame.F), FLOAT)
    half = apply_operator(star(curvature_symmetrizer()), prod).array * 0.5
    return max_abs(line - half)


def check_h_identities(frame: PointFrame) -> dict[str, float]:
    h, hm, hu = frame.h_dn, frame.h_mixed, frame.h_up
    tu, td = frame.tau_up, frame.tau_dn
    return {
        "h_dn.tau_up": max_abs(h @ tu),
        "h_mixed.tau_up": max_abs(hm @ tu),
        "h_up.tau_dn": max_abs(hu @ td),
        "h_mixed.h_dn+h_dn": max_abs(np.einsum("ma,mb->ab", hm, h) + h),
        "h.h-3": abs(float(np.einsum("mn,mn->", h, hu)) - 3.0),
        "g_dn-tautau+h": max_abs(frame.g_dn - np.outer(td, td) + h),
        "g_up-tautau+h": max_abs(frame.g_up - np.outer(tu, tu) + hu),
    }


def check_A_decomposition(frame: PointFrame) -> float:
    rhs = frame.curl + 0.5 * (np.outer(frame.tau_dn, frame.F) - np.outer(frame.F, frame.tau_dn))
    return max_abs(frame.A - rhs)


def check_F_forms(frame: PointFrame) -> float:
    """Spread between the three equivalent expressions for F."""
    curl_p = frame.dtau - frame.dtau.T
    sym = frame.tau_cov + frame.tau_cov.T
    f2 = -np.einsum("mn,m,na->a", sym, frame.tau_up, frame.h_mixed)
    f3 = curl_p @ frame.tau_up
    return max(max_abs(frame.F - f2), max_abs(frame.F - f3))


def check_gamma_decomposition(frame: PointFrame) -> float:
    tu, td, A, D, F = frame.tau_up, frame.tau_dn, frame.A, frame.D, frame.F
    A_up = frame.g_up @ A                                   # A^m_b
    rhs = (frame.Ltilde
           - np.einsum("m,ab->mab", tu, A - D + np.outer(F, td))
           + np.einsum("m,a,b->mab", frame.F_up, td, td)
           + np.einsum("a,mb->mab", td, A_up) + np.einsum("b,ma->mab", td, A_up)
           - np.einsum("a,mb->mab", td, frame.dtau_up))
    return max_abs(frame.Gamma - rhs)


def check_projection_orthogonality(frame: PointFrame) -> float:
    """Contractions of every slot of Z_dn (and of P_dn) with tau^a."""
    worst = 0.0
    for T in (frame.Z_dn, frame.P_dn):
        for slot in range(4):
            worst = max(worst, max_abs(np.tensordot(T, frame.tau_up, axes=([slot], [0]))))
    return worst


def time_component(frame: PointFrame, B: np.ndarray, r: int) -> float:
    """Full contraction of B (first r slots covariant, the rest contravariant).

    Covariant slots take tau^m, contravariant slots take tau_n.
    """
    out = np.asarray(B, dtype=float)
    for slot in range(out.ndim):
        out = np.tensordot(out, frame.tau_up if slot < r else frame.tau_dn, axes=([0], [0]))
    return float(out)


def spatial_projection(frame: PointFrame, B: np.ndarray, r: int) -> np.ndarray:
    """(-1)^(r+s) times B with every slot projected by h^m_n."""
    out = np.asarray(B, dtype=float)
    s = out.ndim - r
    for slot in range(out.ndim):
        # h_mixed[m, n] = h^m_n; a contravariant slot contracts the lower index
        h = frame.h_mixed if slot < r else frame.h_mixed.T
        out = np.moveaxis(np.tensordot(out, h, axes=([slot], [0])), -1, slot)
    return (-1) ** (r + s) * out


def invariants(frame: PointFrame) -> dict[str, float]:
    return {
        "metric_inverse": max_abs(frame.g_dn @ frame.g_up - np.eye(4)),
        "tau_norm": abs(float(frame.tau_up @ frame.g_dn @ frame.tau_up) - 1.0),
        "tau_cov.tau_up": max_abs(frame.tau_up @ frame.tau_cov),
        "killing": max_abs(frame.xi_cov + frame.xi_cov.T),
        "A_antisymmetry": max_abs(frame.A + frame.A.T),
        "D_symmetry": max_abs(frame.D - frame.D.T),
        "projection_orthogonality": check_projection_orthogonality(frame),
        "theta_index_commutation": max_abs(frame.theta + frame.theta.transpose(0, 2, 1)),
        "riemann_convention": max_abs(frame.R_mixed + np.einsum("lanm->mnal", frame.R_vlad)),
        "riemann_antisymmetry": max_abs(frame.R_dn + frame.R_dn.transpose(1, 0, 2, 3)),
    }


def staticity_test(provider: MetricProvider, x, tol: float = 1e-10) -> dict:
    frame = build_point_frame(provider, x)
    xi_alt = alternation3(np.einsum("l,mn->lmn", frame.xi_dn, frame.xi_cov))
    tau_alt = frame.alt_part
    ratio_diff = max_abs(xi_alt - frame.phi ** 2 * tau_alt)
    ratio_scale = max(max_abs(xi_alt), frame.phi ** 2 * max_abs(tau_alt))
    return {
        "stationary": frame.stationary,
        "is_static": max_abs(tau_alt) <= tol,
        "xi_residual": max_abs(xi_alt),
        "tau_residual": max_abs(tau_alt),
        "killing_residual": max_abs(frame.xi_cov + frame.xi_cov.T),
        "ratio_check": _relative(ratio_diff, ratio_scale),
    }


def theta_identity_residuals(theta: np.ndarray) -> list[float]:
    """The four linear relations satisfied by tensors of the zeta_{-1} class."""
    t = theta
    def p(spec):
        return np.einsum(spec + "->lmn", t)
    rows = [
        t + p("lnm"),
        -t + p("nml") + p("mln"),
        t - p("nml") + p("mnl"),
        p("nml") + p("nlm"),
    ]
    return [max_abs(r) for r in rows]


def theta_decompose(frame: PointFrame) -> dict:
    """theta = tau_l tau_[m;n] - tau_[l tau_m;n], with the alternation cross-checked."""
    T = DenseTensor(np.einsum("l,mn->lmn", frame.tau_dn, frame.curl), FLOAT)
    alt_op = apply_operator(alternator(3) * Fraction(1, 6), T).array
    member = apply_operator(zeta(-1), DenseTensor(frame.theta, FLOAT)).array - frame.theta
    return {
        "theta": frame.theta,
        "alt_part": frame.alt_part,
        "alternation_crosscheck": max_abs(alt_op - frame.alt_part),
        "identities_1_19": theta_identity_residuals(frame.theta),
        "zeta_minus_one_membership": max_abs(member),
    }


def cancellation_experiment(rng: np.random.Generator, dim: int = 4, alternating: bool = True,
                            zero: bool = False) -> Fraction:
    """Evaluate the twelve F*tau*curl summands with tau_a curl_bc replaced by a_{abc}.

    With a totally alternating a the sum vanishes identically; returns the
    largest absolute component, exactly.
    """
    F = random_tensor(rng, 1, dim).array
    a = random_tensor(rng, 3, dim)
    if alternating:
        a = apply_operator(alternator(3) * Fraction(1, 6), a)
    a = a.array
    if zero:
        a = DenseTensor.zeros(3, dim, EXACT).array
    terms = []
    for coeff, factors, group in term_tables()["1.5"]:
        if group != "FtK":
            continue
        f_idx = next(idx for f, idx in factors if f == "F")
        t_idx = next(idx for f, idx in factors if f == "tau")
        k_idx = next(idx for f, idx in factors if f == "K")
        terms.append((coeff, (("F", f_idx), ("a", t_idx + k_idx)), group))
    total = evaluate_terms(terms, {"F": F, "a": a})
    return Fraction(max_abs(total)) if not total.size else max(abs(x) for x in total.reshape(-1))


def synchronized_reduction_check(provider: MetricProvider, x) -> dict:
    frame = build_point_frame(provider, x)
    g = frame.g_dn
    if abs(g[0, 0] - 1.0) > 1e-14 or max_abs(g[0, 1:]) > 1e-14:
        raise ValueError(f"{provider.name} is not in synchronized coordinates at {x}")
    diff = formula_lhs(frame, "synchronized") - formula_rhs(frame, "synchronized")
    scale = curvature_scale(frame)
    return {
        "F": max_abs(frame.F),
        "A": max_abs(frame.A),
        "curl": max_abs(frame.curl),
        "reduced_formula": _relative(max_abs(diff), scale),
        "formula_2_30": _relative(max_abs(formula_lhs(frame, "2.30") - formula_rhs(frame, "2.30")), scale),
    }
