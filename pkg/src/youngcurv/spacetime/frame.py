"""All geometric fields of the observer projection formalism at one point.

Index conventions (coordinate basis, 0-based):

* ``Gamma[l, m, n]``  = Gamma^l_{mn}; ``dGamma[l, m, n, k]`` = d_k Gamma^l_{mn}
* ``R_mixed[m, n, a, l]`` = R_{mna}^l = d_m Gamma^l_{na} - d_n Gamma^l_{ma} + ...
* ``R_dn[m, n, a, l]`` = g_{ls} R_{mna}^s (the last index is always the lowered one)
* ``h_mixed[m, n]`` = h^m_n = g^{ma} h_{an}; since h is symmetric this is also h_n^m
* ``dtau[m, n]`` = d_n tau_m; ``tau_cov[m, n]`` = tau_{m;n}
* ``Ltilde[e, s, n]`` = L^e_{sn} + d_n h^e_s; ``dLtilde[..., k]`` = d_k of it
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .jet import (
    JetArray,
    jeinsum,
    jet_inverse,
    jet_reciprocal,
    jet_sqrt,
    partial,
)
from .metrics import MetricProvider


class GeometryError(ValueError):
    """Raised for singular metrics or a non-timelike observer field."""


def alternation3(T: np.ndarray) -> np.ndarray:
    """Total antisymmetrization T_{[abc]} of an order-3 array."""
    return (T + T.transpose(1, 2, 0) + T.transpose(2, 0, 1)
            - T.transpose(0, 2, 1) - T.transpose(2, 1, 0) - T.transpose(1, 0, 2)) / 6.0


@dataclass(frozen=True)
class PointFrame:
    x: tuple[float, ...]
    g_dn: np.ndarray
    g_up: np.ndarray
    dg: np.ndarray          # dg[m, n, l] = d_l g_{mn}
    ddg: np.ndarray         # ddg[m, n, l, k] = d_l d_k g_{mn}
    Gamma: np.ndarray
    dGamma: np.ndarray
    R_mixed: np.ndarray
    R_dn: np.ndarray
    R_vlad: np.ndarray      # R^l_{ana} in the alternative sign/index convention
    xi_up: np.ndarray
    xi_dn: np.ndarray
    xi_cov: np.ndarray      # xi_{m;n}
    phi: float
    dphi: np.ndarray
    tau_up: np.ndarray
    tau_dn: np.ndarray
    dtau: np.ndarray
    dtau_up: np.ndarray     # dtau_up[m, n] = d_n tau^m
    tau_cov: np.ndarray
    h_dn: np.ndarray
    h_mixed: np.ndarray
    h_up: np.ndarray
    dh_mixed: np.ndarray    # dh_mixed[e, s, n] = d_n h^e_s
    F: np.ndarray
    A: np.ndarray
    D: np.ndarray
    L: np.ndarray
    Ltilde: np.ndarray
    dLtilde: np.ndarray
    P_up: np.ndarray        # P_{abr}^l
    P_dn: np.ndarray
    Z_up: np.ndarray        # Z_{mnk}^l
    Z_dn: np.ndarray
    Y: np.ndarray
    X: np.ndarray
    curl: np.ndarray        # tau_{[m;n]} = (d_n tau_m - d_m tau_n) / 2
    theta: np.ndarray
    alt_part: np.ndarray
    stationary: bool

    @property
    def F_up(self) -> np.ndarray:
        return self.g_up @ self.F

    def lower_last(self, T: np.ndarray) -> np.ndarray:
        return np.einsum("...s,ls->...l", T, self.g_dn)


def build_point_frame(provider: MetricProvider, x: Sequence[float]) -> PointFrame:
    """Evaluate the metric with second-order jets at x and derive every field.

    The observer field is tau = xi / |xi| with xi = d/dx^0.
    """
    x = tuple(float(v) for v in x)
    if len(x) != 4:
        raise ValueError("a space-time point needs 4 coordinates")
    try:
        g = JetArray.from_jets(provider.jets(x))
    except ZeroDivisionError as exc:
        raise GeometryError(f"metric is singular at {x}") from exc
    if abs(np.linalg.det(g.val)) < 1e-300 or not np.all(np.isfinite(g.val)):
        raise GeometryError(f"metric is singular at {x}")
    if g.val[0, 0] <= 0:
        raise GeometryError(f"d/dt is not timelike at {x} (g_00 = {g.val[0, 0]})")
    gi = jet_inverse(g)

    dg = partial(g)
    # Gamma^l_{mn} = 1/2 g^{lc} (d_m g_{nc} + d_n g_{mc} - d_c g_{mn})
    # bracket[m, n, c]; its first term d_m g_{nc} is dg[n, c, m]
    bracket = JetArray(
        dg.val.transpose(2, 0, 1) + dg.val.transpose(0, 2, 1) - dg.val,
        dg.d.transpose(2, 0, 1, 3) + dg.d.transpose(0, 2, 1, 3) - dg.d,
    )
    Gam = jeinsum("lc,mnc->lmn", gi, bracket).scale(0.5)
    Gamma, dGamma = Gam.val, Gam.d

    R_mixed = (np.einsum("lnam->mnal", dGamma) - np.einsum("lman->mnal", dGamma)
               + np.einsum("ena,lme->mnal", Gamma, Gamma)
               - np.einsum("ema,lne->mnal", Gamma, Gamma))
    R_dn = np.einsum("mnas,ls->mnal", R_mixed, g.val)
    # alternative convention: Rv[l, a, n, m] = d_n G^l_{am} - d_m G^l_{an} + G^e_{am} G^l_{en} - G^e_{an} G^l_{em}
    R_vlad = (np.einsum("lamn->lanm", dGamma) - np.einsum("lanm->lanm", dGamma)
              + np.einsum("eam,len->lanm", Gamma, Gamma)
              - np.einsum("ean,lem->lanm", Gamma, Gamma))

    # Killing candidate xi = d/dx^0 and the unit observer field
    xi_up = np.array([1.0, 0.0, 0.0, 0.0])
    xi = JetArray(g.val[:, 0], g.d[:, 0], g.dd[:, 0])
    phi_j = jet_sqrt(JetArray(g.val[0, 0], g.d[0, 0], g.dd[0, 0]))
    inv_phi = jet_reciprocal(phi_j)
    tau = jeinsum("m,->m", xi, inv_phi)
    tau_up_j = jeinsum("m,->m", JetArray.constant(xi_up), inv_phi)

    tau_dn, tau_up = tau.val, tau_up_j.val
    dtau = tau.d
    tau_cov = dtau - np.einsum("lmn,l->mn", Gamma, tau_dn)
    xi_cov = xi.d - np.einsum("lmn,l->mn", Gamma, xi.val)

    tt = jeinsum("m,n->mn", tau, tau)
    h = tt - g
    hm = jeinsum("ma,an->mn", gi, h)
    hu = jeinsum("ma,nb,ab->mn", gi, gi, h)
    hv, hmv = h.val, hm.val

    curl_partial = dtau - dtau.T                     # tau_{m,n} - tau_{n,m}
    sym_cov = tau_cov + tau_cov.T                    # tau_{m;n} + tau_{n;m}
    F = -np.einsum("mn,n,ma->a", curl_partial, tau_up, hmv)
    A = 0.5 * np.einsum("mn,ma,nb->ab", curl_partial, hmv, hmv)
    D = -0.5 * np.einsum("mn,ma,nb->ab", sym_cov, hmv, hmv)

    dh = partial(h)                                  # dh[a, b, c] = d_c h_{ab}
    # bracket[a, b, e] = d_b h_{ae} + d_a h_{be} - d_e h_{ab}
    hb = JetArray(dh.val.transpose(0, 2, 1) + dh.val.transpose(2, 0, 1) - dh.val,
                  dh.d.transpose(0, 2, 1, 3) + dh.d.transpose(2, 0, 1, 3) - dh.d)
    L = jeinsum("me,abe->mab", hu, hb).scale(0.5)
    dhm = partial(hm)
    Lt = L + dhm
    Ltv, dLt = Lt.val, Lt.d
    # K[e, s, n, m] = d_m Lt^e_{sn} - d_n Lt^e_{sm} + Lt^e_{km} Lt^k_{sn} - Lt^e_{kn} Lt^k_{sm}
    K = (dLt - dLt.transpose(0, 1, 3, 2)
         + np.einsum("ekm,ksn->esnm", Ltv, Ltv)
         - np.einsum("ekn,ksm->esnm", Ltv, Ltv))
    P_up = -np.einsum("ma,nb,sr,le,esnm->abrl", hmv, hmv, hmv, hmv, K)
    P_dn = np.einsum("abrs,ls->abrl", P_up, g.val)

    Z_up = np.einsum("am,bn,ck,ld,abcd->mnkl", hmv, hmv, hmv, hmv, R_mixed)
    Z_dn = np.einsum("mnks,ls->mnkl", Z_up, g.val)
    Y = np.einsum("am,bn,ck,d,abcd->mnk", hmv, hmv, hmv, tau_dn, R_mixed)
    X = -np.einsum("bn,ck,a,d,abcd->nk", hmv, hmv, tau_up, tau_dn, R_mixed)

    curl = 0.5 * (dtau - dtau.T)
    tk = np.einsum("l,mn->lmn", tau_dn, curl)
    alt_part = alternation3(np.einsum("l,mn->lmn", tau_dn, tau_cov))
    theta = tk - alt_part

    stationary = bool(np.all(g.d[:, :, 0] == 0.0) and np.all(g.dd[:, :, 0, :] == 0.0))

    return PointFrame(
        x=x, g_dn=g.val, g_up=gi.val, dg=g.d, ddg=g.dd,
        Gamma=Gamma, dGamma=dGamma, R_mixed=R_mixed, R_dn=R_dn, R_vlad=R_vlad,
        xi_up=xi_up, xi_dn=xi.val, xi_cov=xi_cov, phi=float(phi_j.val), dphi=phi_j.d,
        tau_up=tau_up, tau_dn=tau_dn, dtau=dtau, dtau_up=tau_up_j.d, tau_cov=tau_cov,
        h_dn=hv, h_mixed=hmv, h_up=hu.val, dh_mixed=dhm.val,
        F=F, A=A, D=D, L=L.val, Ltilde=Ltv, dLtilde=dLt, P_up=P_up, P_dn=P_dn,
        Z_up=Z_up, Z_dn=Z_dn, Y=Y, X=X,
        curl=curl, theta=theta, alt_part=alt_part, stationary=stationary,
    )
