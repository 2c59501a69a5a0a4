"""Canonical-ensemble thermodynamics for the sqrt(n) spectrum E_n = sqrt(2 c hbar k n).

Two routes to the single-particle partition function:

  * partition_exact - direct summation of exp(-beta E_n) with an analytic
    integral tail bound controlling the truncation;
  * partition_em    - the Euler-Maclaurin closed form 1/2 + 1/(c hbar k beta^2),
    valid at weak coupling (c hbar k beta^2 << 1; it tends to 1/2 instead of 1
    as beta -> inf, so the exact series is the low-temperature authority).

N indistinguishable fermions enter as Z_N = Z^N, and F, U, S, C_V follow from
ln Z_N.  The closed forms carry the particle count N throughout (including U,
which -d/dbeta ln Z^N forces to scale with N); the companion "exact" mode
differentiates ln(partition_exact) numerically.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .spinor import NATURAL_UNITS, PhysicalConstants

DEFAULT_TOL = 1e-10
MAX_TERMS = 10**8
EM_VALIDITY_WARN = 0.1  # warn threshold on c*hbar*k*beta^2

_BLOCK = 65536
_MODES = ("em", "exact")


class TruncationBudget(RuntimeError):
    """Series truncation exceeded the term budget before meeting the tolerance."""

    def __init__(self, message, partial_sum, truncation_n, tail_bound):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.truncation_n = truncation_n
        self.tail_bound = tail_bound


@dataclass(frozen=True)
class EnsembleParams:
    """Inverse temperature beta = 1/(k_B T), slope k, particle count N."""

    beta: float
    k: float
    N: int = 1
    pc: PhysicalConstants = NATURAL_UNITS

    def __post_init__(self):
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise ValueError("beta must be positive and finite")
        if not (self.k > 0.0):
            raise ValueError("k must be > 0")
        if self.N < 1:
            raise ValueError("N must be >= 1")

    @property
    def coupling(self):
        """c hbar k, the only combination the spectrum depends on."""
        return self.pc.c * self.pc.hbar * self.k

    @property
    def em_parameter(self):
        """c hbar k beta^2; the closed form requires this << 1."""
        return self.coupling * self.beta**2

    @property
    def temperature(self):
        return 1.0 / (self.pc.k_B * self.beta)


@dataclass(frozen=True)
class ThermoReport:
    """One (beta, k, N) evaluation: both partition routes and all four functions."""

    beta: float
    k: float
    N: int
    T: float
    Z_exact: float
    Z_em: float
    F: float
    U: float
    S: float
    C_V: float
    F_exact: float
    U_exact: float
    S_exact: float
    C_V_exact: float
    truncation_n: int
    tail_bound: float


def partition_exact(ep, tol=DEFAULT_TOL, max_terms=MAX_TERMS):
    """Single-particle Z = sum_n exp(-beta a sqrt(n)), a = sqrt(2 c hbar k).

    Sums in blocks until the analytic tail bound
    integral_N^inf exp(-beta a sqrt(x)) dx = 2 (beta a sqrt(N) + 1) e^{-beta a sqrt(N)} / (beta a)^2
    drops below `tol`.  Returns (Z, truncation_n, tail_bound); summation order
    is fixed, so results are bit-reproducible.
    """
    lam = ep.beta * math.sqrt(2.0 * ep.coupling)
    block_sums = []
    n0 = 0
    while n0 <= max_terms:
        n1 = min(n0 + _BLOCK, max_terms + 1)
        idx = np.arange(n0, n1, dtype=float)
        block_sums.append(float(np.sum(np.exp(-lam * np.sqrt(idx)))))
        last = n1 - 1
        w = lam * math.sqrt(last)
        tail = 2.0 * (w + 1.0) * math.exp(-w) / lam**2
        if tail < tol:
            return math.fsum(block_sums), last, tail
        n0 = n1
    raise TruncationBudget(
        f"partition series needs more than {max_terms} terms for tol={tol:g} "
        f"(beta={ep.beta!r}, k={ep.k!r})",
        partial_sum=math.fsum(block_sums),
        truncation_n=max_terms,
        tail_bound=tail,
    )


def partition_em(ep):
    """Euler-Maclaurin closed form: 1/2 + 1/(c hbar k beta^2), exactly as printed.

    Validity is the caller's concern (see em_parameter); as beta -> inf this
    tends to 1/2 while the exact series tends to 1.
    """
    return 0.5 + 1.0 / ep.em_parameter


def helmholtz(ep, mode="em", tol=DEFAULT_TOL):
    """F = -(N/beta) ln Z."""
    _check_mode(mode)
    if mode == "em":
        z = partition_em(ep)
    else:
        z = partition_exact(ep, tol)[0]
    return -(ep.N / ep.beta) * math.log(z)


def mean_energy(ep, mode="em", tol=DEFAULT_TOL):
    """U = -d/dbeta ln Z_N = 4N / (beta (2 + c hbar k beta^2)) at weak coupling.

    Exact mode: central difference of ln(partition_exact) with step beta*1e-5.
    """
    _check_mode(mode)
    if mode == "em":
        return 4.0 * ep.N / (ep.beta * (2.0 + ep.em_parameter))
    h = ep.beta * 1e-5
    lnz = _log_z_at(ep, (ep.beta + h, ep.beta - h), tol)
    return -ep.N * (lnz[0] - lnz[1]) / (2.0 * h)


def entropy(ep, mode="em", tol=DEFAULT_TOL):
    """S = k_B beta^2 dF/dbeta = 4 N k_B/(2 + x) + N k_B ln(1/2 + 1/x), x = c hbar k beta^2.

    Exact mode uses the identity S = k_B beta (U - F).
    """
    _check_mode(mode)
    if mode == "em":
        x = ep.em_parameter
        return 4.0 * ep.N * ep.pc.k_B / (2.0 + x) + ep.N * ep.pc.k_B * math.log(0.5 + 1.0 / x)
    u = mean_energy(ep, "exact", tol)
    f = helmholtz(ep, "exact", tol)
    return ep.pc.k_B * ep.beta * (u - f)


def heat_capacity(ep, mode="em", tol=DEFAULT_TOL):
    """C_V = -k_B beta^2 dU/dbeta = 4 k_B N (2 + 3x) / (2 + x)^2; -> 2 N k_B as T -> inf.

    Exact mode: k_B beta^2 d^2(ln Z_N)/dbeta^2 by a second central difference.
    The step is beta*1e-3 (coarser than mean_energy's: second differences
    amplify the series-truncation noise quadratically in 1/h).
    """
    _check_mode(mode)
    if mode == "em":
        x = ep.em_parameter
        return 4.0 * ep.pc.k_B * ep.N * (2.0 + 3.0 * x) / (2.0 + x) ** 2
    h = ep.beta * 1e-3
    tight = min(tol, 1e-12)
    lnz = _log_z_at(ep, (ep.beta + h, ep.beta, ep.beta - h), tight)
    d2 = (lnz[0] - 2.0 * lnz[1] + lnz[2]) / h**2
    return ep.pc.k_B * ep.beta**2 * ep.N * d2


def report(ep, tol=DEFAULT_TOL):
    """Evaluate both partition routes and all four functions at one (beta, k, N)."""
    z_exact, trunc_n, tail = partition_exact(ep, tol)
    return ThermoReport(
        beta=ep.beta,
        k=ep.k,
        N=ep.N,
        T=ep.temperature,
        Z_exact=z_exact,
        Z_em=partition_em(ep),
        F=helmholtz(ep, "em"),
        U=mean_energy(ep, "em"),
        S=entropy(ep, "em"),
        C_V=heat_capacity(ep, "em"),
        F_exact=-(ep.N / ep.beta) * math.log(z_exact),
        U_exact=mean_energy(ep, "exact", tol),
        S_exact=entropy(ep, "exact", tol),
        C_V_exact=heat_capacity(ep, "exact", tol),
        truncation_n=trunc_n,
        tail_bound=tail,
    )


def thermo_sweep(k_values=(0.2, 0.4, 0.8), T_values=None, N=1, pc=NATURAL_UNITS, tol=DEFAULT_TOL):
    """Reports over the (k, T) grid in deterministic (k-major, T-minor) order."""
    if T_values is None:
        T_values = np.linspace(0.1, 10.0, 50)
    rows = []
    for k in k_values:
        for T in T_values:
            beta = 1.0 / (pc.k_B * float(T))
            rows.append(report(EnsembleParams(beta=beta, k=float(k), N=N, pc=pc), tol))
    return rows


def _log_z_at(ep, betas, tol):
    return [math.log(partition_exact(replace(ep, beta=b), tol)[0]) for b in betas]


def _check_mode(mode):
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}")
