"""The full verification suite, assembled as one JSON-ready document."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import curvature_gen as cg
from .lr import contains_partition, lr_product
from .perm_algebra import eta, f0, ring_multiply, rho, star, zeta
from .rng import derive_rng
from .spacetime.formulas import (
    cancellation_experiment,
    check_A_decomposition,
    check_gamma_decomposition,
    check_h_identities,
    invariants,
    staticity_test,
    synchronized_reduction_check,
    theta_decompose,
    verify_curvature_formulas,
)
from .spacetime.frame import build_point_frame
from .spacetime.metrics import get_metric
from .young import (
    YoungTableau,
    essential_factor,
    partitions,
    verify_ring_decomposition,
    young_symmetrizer,
)

NU_VALUES = (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
EXCEPTIONAL_NU = Fraction(1, 2)

DEFAULT_TOLERANCES = {
    "killing": 1e-10,
    "D": 1e-10,
    "static": 1e-10,
    "formula": 1e-7,
    "pairwise": 1e-7,
    "ratio": 1e-10,
    "langevin_alternation_min": 1e-3,
    "synchronized_FA": 1e-10,
    "flat": 1e-14,
    "theta_identities": 1e-12,
    "theta_membership": 1e-10,
    "underbrace": 1e-9,
    "h_identities": 1e-12,
}


def idempotent_table(nus=NU_VALUES) -> list[dict]:
    """Relations among zeta_nu, eta, rho and f0; each row states whether it matches the expected outcome."""
    r, e, f = rho(), eta(), f0()
    rows = [
        {"relation": "rho*rho = rho", "holds": ring_multiply(r, r) == r, "expected": True},
        {"relation": "eta*eta = eta", "holds": ring_multiply(e, e) == e, "expected": True},
        {"relation": "f0*f0 = f0", "holds": ring_multiply(f, f) == f, "expected": True},
        {"relation": "eta*rho = rho", "holds": ring_multiply(e, r) == r, "expected": False},
        {"relation": "rho*eta = eta", "holds": ring_multiply(r, e) == e, "expected": False},
    ]
    for nu in nus:
        z = zeta(nu)
        rows.append({"relation": f"zeta({nu})^2 = zeta({nu})",
                     "holds": ring_multiply(z, z) == z, "expected": True})
        both = ring_multiply(z, r) == r and ring_multiply(r, z) == z
        rows.append({"relation": f"zeta({nu})*rho = rho and rho*zeta({nu}) = zeta({nu})",
                     "holds": both, "expected": nu == -1})
    for row in rows:
        row["pass"] = row["holds"] == row["expected"]
    return rows


def algebra_section() -> dict:
    rows = idempotent_table()
    return {"relations": rows, "pass": all(r["pass"] for r in rows)}


def young_section() -> dict:
    t = YoungTableau([[1, 3], [2, 4]])
    y = young_symmetrizer(t)
    mu = essential_factor(y)
    decomp = {str(r): verify_ring_decomposition(r) for r in (1, 2, 3, 4)}
    sums = {str(r): sum(lam.num_standard_tableaux() ** 2 for lam in partitions(r)) for r in range(1, 6)}
    ok = (len(y) == 16 and mu == 12 and ring_multiply(star(y), star(y)) == star(y) * 12
          and all(d["pass"] for d in decomp.values())
          and all(s == factorial(int(r)) for r, s in sums.items()))
    return {
        "tableau": t.to_json(),
        "terms": len(y),
        "essential_factor": str(mu),
        "decomposition": {r: {"left_translate_rank": d["left_translate_rank"], "order": d["order"]}
                          for r, d in decomp.items()},
        "sum_f_squared": sums,
        "pass": ok,
    }


def lr_section() -> dict:
    cases = [((1, 1), (1,), {(2, 1): 1, (1, 1, 1): 1}),
             ((2, 1), (1,), {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}),
             ((1, 1, 1), (1,), {(2, 1, 1): 1, (1, 1, 1, 1): 1})]
    out = []
    for lam, mu, expected in cases:
        prod = lr_product(lam, mu)
        out.append({"left": list(lam), "right": list(mu), "product": prod.format(),
                    "pass": prod == expected})
    only_21 = (contains_partition(lr_product((2, 1), (1,)), (2, 2)) == 1
               and contains_partition(lr_product((1, 1, 1), (1,)), (2, 2)) == 0)
    return {"products": out, "two_two_only_in_21x1": only_21,
            "pass": only_21 and all(c["pass"] for c in out)}


def curvature_section(seed: int, samples_thm12: int = 40, samples_thm13: int = 60) -> dict:
    dims = {str(n): cg.acr_dimension(n) for n in (2, 3, 4)}
    target = dims["4"]
    gamma_rank = cg.thm12_span_experiment(4, samples_thm12, "gamma", derive_rng(seed, "span/gamma"))
    alpha_rank = cg.thm12_span_experiment(4, samples_thm12, "alpha", derive_rng(seed, "span/alpha"))
    thm13 = []
    for nu in (Fraction(-1), Fraction(0), Fraction(2), EXCEPTIONAL_NU):
        for order in ("Uw", "wU"):
            rank = cg.thm13_span_experiment(nu, samples_thm13, order,
                                            derive_rng(seed, f"span/thm13/{nu}/{order}"))
            ok = rank < target if nu == EXCEPTIONAL_NU else rank == target
            thm13.append({"nu": str(nu), "order": order, "rank": rank, "pass": ok})
    ok = (dims == {"2": 1, "3": 6, "4": 20} and gamma_rank == target and alpha_rank == target
          and all(r["pass"] for r in thm13))
    return {"acr_dimension": dims, "gamma_rank": gamma_rank, "alpha_rank": alpha_rank,
            "thm13": thm13, "pass": ok}


def cancellation_section(seed: int, trials: int = 20) -> dict:
    zero = [cancellation_experiment(derive_rng(seed, f"cancel/{i}")) == 0 for i in range(trials)]
    generic = cancellation_experiment(derive_rng(seed, "cancel/generic"), alternating=False)
    return {"trials": trials, "all_zero": all(zero), "generic_max": str(generic),
            "pass": all(zero) and generic != 0}


def geometry_section(tol: dict | None = None) -> dict:
    tol = {**DEFAULT_TOLERANCES, **(tol or {})}
    out: dict = {}

    sch = get_metric("schwarzschild")
    f = build_point_frame(sch, sch.default_point)
    rep = verify_curvature_formulas(f)
    st = staticity_test(sch, sch.default_point)
    inv = invariants(f)
    out["schwarzschild"] = {
        "point": list(sch.default_point),
        "killing": inv["killing"], "D": rep["D_residual"], "static_residual": st["tau_residual"],
        "formulas": {k: v["relative"] for k, v in rep["formulas"].items()},
        "pass": (inv["killing"] <= tol["killing"] and rep["D_residual"] <= tol["D"]
                 and st["tau_residual"] <= tol["static"] and st["is_static"]
                 and all(v["relative"] <= tol["formula"] for v in rep["formulas"].values())),
    }

    lan = get_metric("langevin")
    f = build_point_frame(lan, lan.default_point)
    rep = verify_curvature_formulas(f)
    st = staticity_test(lan, lan.default_point)
    out["langevin"] = {
        "point": list(lan.default_point),
        "is_static": st["is_static"], "alternation": st["tau_residual"],
        "ratio_check": st["ratio_check"], "pairwise": rep["pairwise"],
        "formulas": {k: v["relative"] for k, v in rep["formulas"].items()},
        "pass": (not st["is_static"] and st["tau_residual"] > tol["langevin_alternation_min"]
                 and st["ratio_check"] <= tol["ratio"]
                 and all(v <= tol["pairwise"] for v in rep["pairwise"].values())
                 and all(rep["formulas"][k]["relative"] <= tol["formula"] for k in ("1.5", "1.18", "1.20"))),
    }

    flrw = get_metric("flrw")
    sync = synchronized_reduction_check(flrw, flrw.default_point)
    out["flrw"] = {
        "point": list(flrw.default_point), **sync,
        "pass": (sync["F"] <= tol["synchronized_FA"] and sync["A"] <= tol["synchronized_FA"]
                 and sync["reduced_formula"] <= tol["formula"]),
    }

    mink = get_metric("minkowski")
    f = build_point_frame(mink, mink.default_point)
    rep = verify_curvature_formulas(f)
    values = ([v["absolute"] for v in rep["formulas"].values()] + list(rep["pairwise"].values())
              + [rep["underbrace"], rep["D_residual"], check_A_decomposition(f),
                 check_gamma_decomposition(f)]
              + list(check_h_identities(f).values()) + list(invariants(f).values()))
    out["minkowski"] = {"max_residual": max(values), "pass": max(values) <= tol["flat"]}
    out["pass"] = all(v["pass"] for v in out.values())
    return out


def theta_section(tol: dict | None = None) -> dict:
    tol = {**DEFAULT_TOLERANCES, **(tol or {})}
    lan = get_metric("langevin")
    f = build_point_frame(lan, lan.default_point)
    td = theta_decompose(f)
    underbrace = verify_curvature_formulas(f, formulas=())["underbrace"]
    ident = max(td["identities_1_19"])
    return {
        "identities_1_19": ident,
        "zeta_minus_one_membership": td["zeta_minus_one_membership"],
        "underbrace": underbrace,
        "pass": (ident <= tol["theta_identities"]
                 and td["zeta_minus_one_membership"] <= tol["theta_membership"]
                 and underbrace <= tol["underbrace"]),
    }


def full_report(seed: int, tolerances: dict | None = None) -> dict:
    sections = {
        "algebra": algebra_section(),
        "young": young_section(),
        "lr": lr_section(),
        "curvature": curvature_section(seed),
        "cancellation": cancellation_section(seed),
        "geometry": geometry_section(tolerances),
        "theta": theta_section(tolerances),
    }
    return {"seed": seed, "sections": sections, "pass": all(s["pass"] for s in sections.values())}
