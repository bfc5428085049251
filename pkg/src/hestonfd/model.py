"""Heston model parameters, option contracts, benchmark cases, and boundary data.

The PDE solved by this package is, in forward time t (time to maturity),

    u_t = 1/2 s^2 v u_ss + rho*sigma*s*v u_sv + 1/2 sigma^2 v u_vv
          + (r_d - r_f) s u_s + kappa (eta - v) u_v - r_d u

on the truncated domain [0,S] x [0,V] (or [B,S] x [0,V] for a down-and-out
call), with payoff initial data and Dirichlet/Neumann boundary data supplied
by :func:`payoff` and :func:`boundary_values`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .errors import BarrierError, DomainError, FellerViolation, RangeError, UnknownCase

EUROPEAN_CALL = "european_call"
DOWN_AND_OUT_CALL = "down_and_out_call"


@dataclass(frozen=True)
class HestonParams:
    """Coefficients of the Heston PDE.

    kappa : mean-reversion rate of the variance process (> 0)
    eta   : long-term mean variance (> 0)
    sigma : volatility-of-variance (> 0)
    rho   : correlation between the asset and variance drivers, in [-1, 1]
    r_d   : domestic interest rate
    r_f   : foreign interest rate (dividend-yield convention)

    The market price of volatility risk is fixed to zero and is not a
    parameter. Invariants (including the Feller condition
    2*kappa*eta > sigma**2) are enforced by :func:`validate`, not at
    construction, so rejected parameter sets can still be built and inspected.
    """

    kappa: float
    eta: float
    sigma: float
    rho: float
    r_d: float
    r_f: float

    @property
    def feller_margin(self) -> float:
        """2*kappa*eta - sigma**2; must be strictly positive."""
        return 2.0 * self.kappa * self.eta - self.sigma * self.sigma


@dataclass(frozen=True)
class OptionSpec:
    """Contract terms: kind, strike K, maturity T, optional barrier B."""

    kind: str
    K: float
    T: float
    B: float | None = None

    @property
    def is_barrier(self) -> bool:
        return self.kind == DOWN_AND_OUT_CALL

    @property
    def s_floor(self) -> float:
        """Lower end of the s-domain: 0 for a call, B for a barrier option."""
        return self.B if self.is_barrier else 0.0


@dataclass(frozen=True)
class DomainSpec:
    """Truncated computational domain and mesh-concentration parameters.

    S : s-truncation (must exceed K and any barrier)
    V : v-truncation
    c : s-mesh concentration parameter (fraction of nodes near K)
    d : v-mesh concentration parameter (fraction of nodes near 0)
    """

    S: float
    V: float
    c: float
    d: float

    @classmethod
    def default(cls, spec: OptionSpec) -> "DomainSpec":
        """S=8K (14K for barrier options), V=5, c=K/5, d=V/500."""
        s_mult = 14.0 if spec.is_barrier else 8.0
        V = 5.0
        return cls(S=s_mult * spec.K, V=V, c=spec.K / 5.0, d=V / 500.0)


@dataclass(frozen=True)
class BoundaryValues:
    """Boundary data of the truncated problem at a fixed time t.

    left_dirichlet(v)  : value on s = 0 (or s = B), identically 0
    top_dirichlet(s)   : value on v = V
    right_neumann      : du/ds on s = S
    """

    left_dirichlet: Callable[[float], float]
    top_dirichlet: Callable[[float], float]
    right_neumann: float


def validate(params: HestonParams, spec: OptionSpec) -> tuple[HestonParams, OptionSpec]:
    """Check all model/contract invariants; return the pair unchanged.

    Raises RangeError for out-of-range fields, FellerViolation when
    2*kappa*eta <= sigma**2, and BarrierError for a barrier outside (0, K).
    """
    if not params.kappa > 0:
        raise RangeError(f"kappa must be > 0, got {params.kappa}")
    if not params.eta > 0:
        raise RangeError(f"eta must be > 0, got {params.eta}")
    if not params.sigma > 0:
        raise RangeError(f"sigma must be > 0, got {params.sigma}")
    if not -1.0 <= params.rho <= 1.0:
        raise RangeError(f"rho must be in [-1, 1], got {params.rho}")
    if params.feller_margin <= 0:
        raise FellerViolation(
            f"Feller condition violated: 2*kappa*eta = {2 * params.kappa * params.eta:g} "
            f"<= sigma^2 = {params.sigma ** 2:g}"
        )
    if spec.kind not in (EUROPEAN_CALL, DOWN_AND_OUT_CALL):
        raise RangeError(f"unknown option kind {spec.kind!r}")
    if not spec.K > 0:
        raise RangeError(f"strike must be > 0, got {spec.K}")
    if not spec.T > 0:
        raise RangeError(f"maturity must be > 0, got {spec.T}")
    if spec.is_barrier:
        if spec.B is None or not 0.0 < spec.B < spec.K:
            raise BarrierError(f"barrier must lie in (0, K), got {spec.B}")
    elif spec.B is not None:
        raise BarrierError("barrier given for a non-barrier option")
    return params, spec


def validate_domain(spec: OptionSpec, domain: DomainSpec) -> DomainSpec:
    """Check domain truncation against the contract; return it unchanged."""
    if not domain.S > spec.K:
        raise RangeError(f"S must exceed K, got S={domain.S}, K={spec.K}")
    if spec.is_barrier and not domain.S > spec.B:
        raise RangeError(f"S must exceed the barrier, got S={domain.S}, B={spec.B}")
    if not domain.V > 0:
        raise RangeError(f"V must be > 0, got {domain.V}")
    if not domain.c > 0:
        raise RangeError(f"c must be > 0, got {domain.c}")
    if not domain.d > 0:
        raise RangeError(f"d must be > 0, got {domain.d}")
    return domain


_BENCHMARKS = {
    1: dict(kappa=1.5, eta=0.04, sigma=0.3, rho=-0.9, r_d=0.025, r_f=0.0, T=1.0),
    2: dict(kappa=3.0, eta=0.12, sigma=0.04, rho=0.6, r_d=0.01, r_f=0.04, T=1.0),
    3: dict(kappa=0.6067, eta=0.0707, sigma=0.2928, rho=-0.7571, r_d=0.03, r_f=0.0, T=3.0),
    4: dict(kappa=2.5, eta=0.06, sigma=0.5, rho=-0.1, r_d=0.0507, r_f=0.0469, T=0.25),
}


def benchmark_case(case_id: int) -> tuple[HestonParams, OptionSpec, DomainSpec]:
    """Return the four standard European-call parameter sets (K=100, S=800, V=5)."""
    try:
        row = _BENCHMARKS[case_id]
    except (KeyError, TypeError):
        raise UnknownCase(case_id) from None
    params = HestonParams(
        kappa=row["kappa"], eta=row["eta"], sigma=row["sigma"],
        rho=row["rho"], r_d=row["r_d"], r_f=row["r_f"],
    )
    spec = OptionSpec(kind=EUROPEAN_CALL, K=100.0, T=row["T"])
    return params, spec, DomainSpec.default(spec)


def payoff(spec: OptionSpec, s):
    """Terminal payoff max(0, s - K); barrier payoff on its restricted domain.

    Accepts a scalar or array of asset prices. Raises DomainError if any
    price lies below the barrier of a down-and-out contract.
    """
    s_arr = np.asarray(s, dtype=float)
    if spec.is_barrier and np.any(s_arr < spec.B):
        raise DomainError(f"asset price below the barrier B={spec.B}")
    out = np.maximum(0.0, s_arr - spec.K)
    return float(out) if np.isscalar(s) else out


def boundary_values(params: HestonParams, spec: OptionSpec, t: float) -> BoundaryValues:
    """Boundary data at time t.

    European call: u = 0 on s=0, u = s*exp(-r_f t) on v=V, du/ds = exp(-r_f t)
    on s=S. Down-and-out call: u = 0 on s=B, u = (s-B)*exp(-r_f t) on v=V,
    same Neumann datum on s=S.
    """
    decay = math.exp(-params.r_f * t)
    floor = spec.s_floor
    return BoundaryValues(
        left_dirichlet=lambda v: 0.0,
        top_dirichlet=lambda s: (s - floor) * decay,
        right_neumann=decay,
    )


def from_config(cfg: Mapping) -> tuple[HestonParams, OptionSpec, DomainSpec]:
    """Build a validated (HestonParams, OptionSpec, DomainSpec) from a JSON dict.

    Recognized keys: kappa, eta, sigma, rho, rd, rf, T, K, kind, barrier,
    S, V, c, d. Missing S/V/c/d take the defaults of :meth:`DomainSpec.default`.
    """
    known = {"kappa", "eta", "sigma", "rho", "rd", "rf", "T", "K",
             "kind", "barrier", "S", "V", "c", "d"}
    unknown = set(cfg) - known
    if unknown:
        raise RangeError(f"unknown config keys: {sorted(unknown)}")
    try:
        params = HestonParams(
            kappa=float(cfg["kappa"]), eta=float(cfg["eta"]),
            sigma=float(cfg["sigma"]), rho=float(cfg["rho"]),
            r_d=float(cfg["rd"]), r_f=float(cfg["rf"]),
        )
        kind = cfg.get("kind", EUROPEAN_CALL)
        barrier = cfg.get("barrier")
        spec = OptionSpec(
            kind=kind, K=float(cfg["K"]), T=float(cfg["T"]),
            B=None if barrier is None else float(barrier),
        )
    except KeyError as exc:
        raise RangeError(f"missing config key: {exc.args[0]}") from None
    validate(params, spec)
    base = DomainSpec.default(spec)
    domain = DomainSpec(
        S=float(cfg.get("S", base.S)), V=float(cfg.get("V", base.V)),
        c=float(cfg.get("c", base.c)), d=float(cfg.get("d", base.d)),
    )
    validate_domain(spec, domain)
    return params, spec, domain
