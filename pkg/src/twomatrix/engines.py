"""The five partition-function engines and the coefficient determinants.

Engines
-------
``direct_z``
    Tensor-grid quadrature of the full 2N-fold integral (N <= 2); the
    ground truth that everything else is checked against.
``permutation_z``
    Brute-force double permutation sum over bimoments; independent of
    any determinant code path.
``andreief_z``
    ``N! det(B_{n+i-1, m+j-1})``, the determinant collapse of the same
    integral.
``double_series_z``
    Truncated double Schur series in two of the four deformation
    families, with the other two folded into deformed bimoments through
    one of four corner conventions (see below).
``quadruple_series_z``
    Truncated quadruple Schur series over undeformed bimoments with
    Littlewood-Richardson recoupling.

Index conventions for the series coefficients: the ``++`` corner uses
``det(B_{n+h_i, m+h'_j})`` with ``h_i = lam_i - i + N``; the mirrored
corners replace a label ``h`` by ``N - h - 1`` on the reflected side
and carry the prefactor ``(-1)^{N(N-1)/2}`` on the mixed corners.
These conventions are calibrated against the exact fermionic oracle and
the undeformed limit (both enforced in the test suite); they differ
from some printed sources by an index shift on the reflected side.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import (
    LengthExceedsN,
    NUnsupported,
    QuadratureNotConverged,
    TruncationNotConverged,
    WindowTooSmall,
)
from .jsonio import canonical_dumps, scalar_to_json
from .linalg import det_auto
from .measures import (
    BimomentWindow,
    CircleProduct,
    DeformationParams,
    MeasureSpec,
    QuadratureSpec,
    RadialPlanar,
    _paired_grid,
    _product_grid,
    bimoment_window,
    radial_moment,
    validate_deformation,
)
from .partitions import Partition, enumerate_partitions, shifted_labels, tilde_transform
from .schur import (
    SchurSeries,
    TimeSequence,
    schur_bialternant,
    schur_in_times,
    schur_product,
    content_product,
)

__all__ = [
    "ZResult",
    "CoefficientTable",
    "SERIES_VARIANTS",
    "direct_z",
    "permutation_z",
    "andreief_z",
    "g_pp",
    "g_mm",
    "g_pm",
    "g_mp",
    "coefficient_det",
    "window_rect_for_series",
    "series_window",
    "andreief_window",
    "double_series_z",
    "quadruple_coefficient",
    "quadruple_series_z",
    "tau_value",
    "tau_factor",
    "radial_series_z",
    "shifted_partition",
    "coupling_series_side",
    "coupling_determinant_side",
    "coupling_kernel_check",
    "times_from_potential",
]

SERIES_VARIANTS = ("++", "--", "+-", "-+")


@dataclass
class ZResult:
    """A computed partition-function value with provenance."""

    value: object
    engine: str
    N: int
    n: int
    m: int
    deformation: str  # fingerprint
    truncation: int | None = None
    error_estimate: float | None = None

    def to_dict(self) -> dict:
        return {
            "value": scalar_to_json(self.value),
            "engine": self.engine,
            "N": self.N,
            "n": self.n,
            "m": self.m,
            "deformation": self.deformation,
            "truncation": self.truncation,
            "error_estimate": self.error_estimate,
        }

    def to_json(self) -> str:
        return canonical_dumps(self.to_dict())


class CoefficientTable:
    """Series coefficients (pairs or quadruples of partitions) with
    provenance of the window that produced them."""

    def __init__(self, arity: int, truncation: int, provenance: dict | None = None):
        self.series = SchurSeries(arity=arity, truncation=truncation)
        self.provenance = dict(provenance or {})

    def __setitem__(self, key, val):
        self.series[key] = val

    def __getitem__(self, key):
        return self.series[key]

    def items(self):
        return self.series.items()

    def __len__(self):
        return len(self.series)

    def to_json(self) -> str:
        import json

        doc = json.loads(self.series.to_json())
        doc["provenance"] = self.provenance
        return canonical_dumps(doc)

    def to_csv(self) -> str:
        return self.series.to_csv()


def _factorial(n: int) -> int:
    return math.factorial(n)


def _fingerprint(deform: DeformationParams) -> str:
    return deform.fingerprint()


# -- direct quadrature engine -----------------------------------------------------

def direct_z(
    spec: MeasureSpec,
    deform: DeformationParams | None = None,
    N: int = 1,
    quad: QuadratureSpec | None = None,
) -> ZResult:
    """Tensor-grid evaluation of the 2N-fold integral (N in {0, 1, 2}).

    The monomial factors ``x^n y^m`` are part of the integrand here,
    which makes this engine the calibration point for every index-shift
    convention used elsewhere.
    """
    deform = deform or DeformationParams.zero()
    quad = quad or QuadratureSpec()
    if N < 0:
        return ZResult(0.0, "direct", N, deform.n, deform.m, _fingerprint(deform))
    if N == 0:
        return ZResult(1.0, "direct", N, deform.n, deform.m, _fingerprint(deform))
    if N > 2:
        raise NUnsupported("direct_z supports N <= 2; use permutation_z or andreief_z")
    validate_deformation(spec, deform)

    q = quad.points
    prev = None
    for _ in range(quad.max_doublings + 1):
        val, scale = _direct_value(spec, deform, N, q)
        if prev is not None and abs(val - prev) <= quad.target * max(abs(val), scale):
            out = val.real if abs(val.imag) <= 1e-12 * max(1.0, abs(val.real)) else val
            return ZResult(
                out,
                "direct",
                N,
                deform.n,
                deform.m,
                _fingerprint(deform),
                error_estimate=abs(val - prev),
            )
        prev = val
        q *= 2
    raise QuadratureNotConverged("direct_z did not certify within the point budget")


def _direct_value(spec, deform, N, q):
    n, m = deform.n, deform.m
    if isinstance(spec, RadialPlanar):
        z, zbar, w = _paired_grid(spec, deform.times_only(), q)
        zeta = w * z ** n * zbar ** m
        mass = float(np.sum(np.abs(zeta)))
        if N == 1:
            return complex(np.sum(zeta)), mass
        # N = 2: sum_{ab} zeta_a zeta_b (z_a - z_b)(zbar_a - zbar_b), blocked
        total = 0.0 + 0.0j
        block = 2048
        for start in range(0, len(z), block):
            sl = slice(start, start + block)
            dz = z[sl, None] - z[None, :]
            dzb = zbar[sl, None] - zbar[None, :]
            total += np.einsum("a,b,ab,ab->", zeta[sl], zeta, dz, dzb)
        return complex(total), mass * mass

    x, y, M = _product_grid(spec, deform.times_only(), q)
    Mnm = M * np.outer(x ** n, y ** m)
    mass = float(np.sum(np.abs(Mnm)))
    if N == 1:
        return complex(Mnm.sum()), mass
    dx = x[:, None] - x[None, :]  # dx[a, c] = x_a - x_c
    dy = y[:, None] - y[None, :]
    K = np.einsum("ac,ab->cb", dx, Mnm)
    L = np.einsum("cd,bd->cb", Mnm, dy)
    return complex(np.einsum("cb,cb->", K, L)), mass * mass


# -- bimoment-window engines ---------------------------------------------------------

def permutation_z(window: BimomentWindow, N: int, n: int = 0, m: int = 0) -> ZResult:
    """Double permutation sum over bimoments; no determinant code used.

    ``sum_{sigma, tau} sgn(sigma) sgn(tau) prod_i B_{n+N-sigma(i), m+N-tau(i)}``.
    """
    if N < 0:
        return ZResult(0, "permutation", N, n, m, window.deformation.fingerprint())
    if N == 0:
        return ZResult(1, "permutation", N, n, m, window.deformation.fingerprint())
    if N > 6:
        raise NUnsupported("permutation_z is factorial in N; use andreief_z")
    if not window.covers(n, n + N - 1, m, m + N - 1):
        raise WindowTooSmall(f"window does not cover [{n}..{n + N - 1}]x[{m}..{m + N - 1}]")
    perms = list(_signed_permutations(range(1, N + 1)))
    total = 0
    for sigma, ssign in perms:
        for tau, tsign in perms:
            prod = ssign * tsign
            for i in range(N):
                prod = prod * window.entry(n + N - sigma[i], m + N - tau[i])
            total = total + prod
    return ZResult(total, "permutation", N, n, m, window.deformation.fingerprint())


def _signed_permutations(items):
    from itertools import permutations

    for perm in permutations(list(items)):
        inv = 0
        for a in range(len(perm)):
            for b in range(a + 1, len(perm)):
                if perm[a] > perm[b]:
                    inv += 1
        yield perm, (-1) ** inv


def andreief_z(window: BimomentWindow, N: int, n: int = 0, m: int = 0) -> ZResult:
    """Determinant collapse ``N! det(B_{n+i-1, m+j-1})`` of the integral."""
    if N < 0:
        return ZResult(0, "andreief", N, n, m, window.deformation.fingerprint())
    if N == 0:
        return ZResult(1, "andreief", N, n, m, window.deformation.fingerprint())
    if not window.covers(n, n + N - 1, m, m + N - 1):
        raise WindowTooSmall(f"window does not cover [{n}..{n + N - 1}]x[{m}..{m + N - 1}]")
    rows = [[window.entry(n + i, m + j) for j in range(N)] for i in range(N)]
    det = det_auto(rows)
    return ZResult(
        _factorial(N) * det, "andreief", N, n, m, window.deformation.fingerprint()
    )


# -- coefficient determinants ----------------------------------------------------------

def coefficient_det(
    variant: str,
    lam: Partition,
    mu: Partition,
    N: int,
    n: int,
    m: int,
    window: BimomentWindow,
):
    """One series coefficient ``g^{variant}_{lam mu}`` from a window.

    The window must hold bimoments deformed by the two families that do
    *not* appear as Schur arguments of the variant.  Row labels come
    from ``lam``, column labels from ``mu``; reflected sides use
    ``N - h - 1`` and the mixed corners carry ``(-1)^{N(N-1)/2}``.
    """
    if variant not in SERIES_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if lam.length > N or mu.length > N:
        raise LengthExceedsN("series coefficients need both lengths <= N")
    if N == 0:
        return 1
    h = shifted_labels(lam, N)
    hp = shifted_labels(mu, N)
    if variant == "++":
        rows = [[window.entry(n + hi, m + hj) for hj in hp] for hi in h]
        pref = 1
    elif variant == "--":
        rows = [[window.entry(N + n - hi - 1, N + m - hj - 1) for hj in hp] for hi in h]
        pref = 1
    elif variant == "+-":
        rows = [[window.entry(n + hi, N + m - hj - 1) for hj in hp] for hi in h]
        pref = -1 if (N * (N - 1) // 2) % 2 else 1
    else:  # "-+"
        rows = [[window.entry(N + n - hi - 1, m + hj) for hj in hp] for hi in h]
        pref = -1 if (N * (N - 1) // 2) % 2 else 1
    return pref * det_auto(rows)


def g_pp(lam, mu, N, n, m, window):
    return coefficient_det("++", lam, mu, N, n, m, window)


def g_mm(lam, mu, N, n, m, window):
    return coefficient_det("--", lam, mu, N, n, m, window)


def g_pm(lam, mu, N, n, m, window):
    return coefficient_det("+-", lam, mu, N, n, m, window)


def g_mp(lam, mu, N, n, m, window):
    return coefficient_det("-+", lam, mu, N, n, m, window)


def window_rect_for_series(variant: str, N: int, n: int, m: int, d: int):
    """Bimoment rectangle needed by all coefficients with weights <= d."""
    hmax = d + N - 1
    if variant == "++":
        return (n, n + hmax, m, m + hmax)
    if variant == "--":
        return (N + n - 1 - hmax, N + n - 1, N + m - 1 - hmax, N + m - 1)
    if variant == "+-":
        return (n, n + hmax, N + m - 1 - hmax, N + m - 1)
    if variant == "-+":
        return (N + n - 1 - hmax, N + n - 1, m, m + hmax)
    raise ValueError(f"unknown variant {variant!r}")


def _coefficient_deformation(variant: str, deform: DeformationParams) -> DeformationParams:
    """The two families that stay inside the bimoments for a variant."""
    z = TimeSequence()
    if variant == "++":
        return DeformationParams(z, z, deform.tbar1, deform.tbar2)
    if variant == "--":
        return DeformationParams(deform.t1, deform.t2, z, z)
    if variant == "+-":
        return DeformationParams(z, deform.t2, deform.tbar1, z)
    if variant == "-+":
        return DeformationParams(deform.t1, z, z, deform.tbar2)
    raise ValueError(f"unknown variant {variant!r}")


def _series_slots(variant: str, deform: DeformationParams) -> tuple[TimeSequence, TimeSequence]:
    """The Schur-argument families (lam slot, mu slot) for a variant."""
    if variant == "++":
        return deform.t1, deform.t2
    if variant == "--":
        return deform.tbar1, deform.tbar2
    if variant == "+-":
        return deform.t1, deform.tbar2
    if variant == "-+":
        return deform.tbar1, deform.t2
    raise ValueError(f"unknown variant {variant!r}")


def series_window(
    variant: str,
    spec: MeasureSpec,
    deform: DeformationParams,
    N: int,
    d: int,
    quad: QuadratureSpec | None = None,
) -> BimomentWindow:
    """Window of coefficient-side deformed bimoments for a double series."""
    rect = window_rect_for_series(variant, N, deform.n, deform.m, d)
    return bimoment_window(spec, rect, _coefficient_deformation(variant, deform), quad)


def andreief_window(
    spec: MeasureSpec,
    deform: DeformationParams,
    N: int,
    quad: QuadratureSpec | None = None,
) -> BimomentWindow:
    """Fully deformed window for the determinant engines."""
    rect = (deform.n, deform.n + N - 1, deform.m, deform.m + N - 1)
    return bimoment_window(spec, rect, deform, quad)


def double_series_z(
    variant: str,
    spec: MeasureSpec,
    deform: DeformationParams | None = None,
    N: int = 1,
    d: int = 6,
    quad: QuadratureSpec | None = None,
    tol: float | None = None,
) -> tuple[ZResult, CoefficientTable]:
    """Truncated double Schur series for the deformed integral.

    ``N! sum_{lam, mu} g^{variant}_{lam mu} s_lam(slot1) s_mu(slot2)``
    over weights ``<= d`` per slot, summed shell by shell in the total
    weight.  The magnitude of the last shell is reported as the
    truncation error estimate; with ``tol`` given, a last shell above
    tolerance raises ``TruncationNotConverged``.
    """
    deform = deform or DeformationParams.zero()
    if N < 0:
        return (
            ZResult(0, "series" + variant, N, deform.n, deform.m, _fingerprint(deform), d),
            CoefficientTable(2, d),
        )
    if N == 0:
        return (
            ZResult(1, "series" + variant, N, deform.n, deform.m, _fingerprint(deform), d),
            CoefficientTable(2, d),
        )
    window = series_window(variant, spec, deform, N, d, quad)
    slot1, slot2 = _series_slots(variant, deform)
    parts = [p for p in enumerate_partitions(d, N)]
    s1 = {p: schur_in_times(p, slot1) for p in parts}
    s2 = {p: schur_in_times(p, slot2) for p in parts}
    table = CoefficientTable(2, d, provenance=window.provenance)
    nfact = _factorial(N)
    shells: dict[int, complex] = {}
    total = 0
    for lam in parts:
        for mu in parts:
            if _is_zero(s1[lam]) or _is_zero(s2[mu]):
                continue
            g = coefficient_det(variant, lam, mu, N, deform.n, deform.m, window)
            table[(lam, mu)] = g
            term = nfact * g * s1[lam] * s2[mu]
            total = total + term
            w = lam.weight + mu.weight
            shells[w] = shells.get(w, 0) + term
    top_shell = max(shells) if shells else 0
    est = abs(shells.get(top_shell, 0)) if top_shell > 0 else 0.0
    if tol is not None and est > tol:
        raise TruncationNotConverged(f"last shell {est:g} exceeds tolerance {tol:g}")
    result = ZResult(
        total,
        "series" + variant,
        N,
        deform.n,
        deform.m,
        _fingerprint(deform),
        truncation=d,
        error_estimate=float(est),
    )
    return result, table


def _is_zero(x) -> bool:
    try:
        return not x
    except TypeError:
        return False


# -- quadruple series ---------------------------------------------------------------

def quadruple_coefficient(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    eta: Partition,
    N: int,
    n: int,
    m: int,
    window: BimomentWindow,
):
    """Coefficient of ``s_lam(t1) s_mu(t2) s_nu(tbar1) s_eta(tbar2)``.

    Littlewood-Richardson recoupling of the inverse-variable Schur
    functions against undeformed bimoments:
    ``sum_{alpha, beta} c^alpha_{lam nutilde} c^beta_{mu etatilde}
    N! det(B_{l_i + n, l'_j + m})`` with
    ``l_i = alpha_i - i + N - nu_1``.
    """
    for p in (lam, mu, nu, eta):
        if p.length > N:
            raise LengthExceedsN("all four partitions need length <= N")
    if N == 0:
        return 1 if all(p.weight == 0 for p in (lam, mu, nu, eta)) else 0
    nut = tilde_transform(nu, N)
    etat = tilde_transform(eta, N)
    nu1 = nu.part(0)
    eta1 = eta.part(0)
    nfact = _factorial(N)
    total = 0
    for (alpha,), ca in schur_product(lam, nut).items():
        if alpha.length > N:
            continue
        labels_l = [alpha.part(i) - (i + 1) + N - nu1 for i in range(N)]
        for (beta,), cb in schur_product(mu, etat).items():
            if beta.length > N:
                continue
            labels_r = [beta.part(j) - (j + 1) + N - eta1 for j in range(N)]
            rows = [[window.entry(li + n, lj + m) for lj in labels_r] for li in labels_l]
            total = total + ca * cb * nfact * det_auto(rows)
    return total


def _quadruple_rect(N: int, n: int, m: int, d: int):
    # l_i = alpha_i - i + N - nu_1 with |alpha| <= d + |nutilde|,
    # nu_1 <= d and |nutilde| <= N d, so the labels live in
    # [-d, (N-1) d + N - 1]; same for the column labels
    lo = -d
    hi = (N + 1) * d + N - 1
    return (n + lo, n + hi, m + lo, m + hi)


def quadruple_series_z(
    spec: MeasureSpec,
    deform: DeformationParams | None = None,
    N: int = 1,
    d: int = 4,
    quad: QuadratureSpec | None = None,
    tol: float | None = None,
) -> tuple[ZResult, CoefficientTable]:
    """Quadruple Schur series over undeformed bimoments.

    All four families appear as Schur arguments; negative bimoment
    indices occur as soon as the inverse-variable slots are nonzero,
    so in general this needs a circle-type measure.
    """
    deform = deform or DeformationParams.zero()
    if N < 0:
        return (
            ZResult(0, "quadruple", N, deform.n, deform.m, _fingerprint(deform), d),
            CoefficientTable(4, d),
        )
    if N == 0:
        return (
            ZResult(1, "quadruple", N, deform.n, deform.m, _fingerprint(deform), d),
            CoefficientTable(4, d),
        )
    n, m = deform.n, deform.m
    window = bimoment_window(spec, _quadruple_rect(N, n, m, d), None, quad)
    parts = [p for p in enumerate_partitions(d, N)]
    sv = {
        fam: {p: schur_in_times(p, seq) for p in parts}
        for fam, seq in (
            ("t1", deform.t1),
            ("t2", deform.t2),
            ("b1", deform.tbar1),
            ("b2", deform.tbar2),
        )
    }
    table = CoefficientTable(4, d, provenance=window.provenance)
    shells: dict[int, complex] = {}
    total = 0
    for lam in parts:
        if _is_zero(sv["t1"][lam]):
            continue
        for mu in parts:
            if _is_zero(sv["t2"][mu]):
                continue
            for nu in parts:
                if _is_zero(sv["b1"][nu]):
                    continue
                for eta in parts:
                    if _is_zero(sv["b2"][eta]):
                        continue
                    coeff = quadruple_coefficient(lam, mu, nu, eta, N, n, m, window)
                    if _is_zero(coeff):
                        continue
                    table[(lam, mu, nu, eta)] = coeff
                    term = (
                        coeff
                        * sv["t1"][lam]
                        * sv["t2"][mu]
                        * sv["b1"][nu]
                        * sv["b2"][eta]
                    )
                    total = total + term
                    w = lam.weight + mu.weight + nu.weight + eta.weight
                    shells[w] = shells.get(w, 0) + term
    top_shell = max(shells) if shells else 0
    est = abs(shells.get(top_shell, 0)) if top_shell > 0 else 0.0
    if tol is not None and est > tol:
        raise TruncationNotConverged(f"last shell {est:g} exceeds tolerance {tol:g}")
    result = ZResult(
        total,
        "quadruple",
        N,
        n,
        m,
        _fingerprint(deform),
        truncation=d,
        error_estimate=float(est),
    )
    return result, table


# -- tau normalization ----------------------------------------------------------------

def tau_factor(deform: DeformationParams):
    """The pairing factor ``exp(-sum_a sum_k k t_k^(a) tbar_k^(a))``."""
    expo = 0
    for t, tbar in ((deform.t1, deform.tbar1), (deform.t2, deform.tbar2)):
        for k in t.support():
            expo = expo + k * t[k] * tbar[k]
    return cmath.exp(-expo) if isinstance(expo, complex) else math.exp(-expo)


def tau_value(
    spec: MeasureSpec,
    deform: DeformationParams | None = None,
    N: int = 1,
    quad: QuadratureSpec | None = None,
    engine: str = "andreief",
    d: int = 8,
):
    """Normalized hierarchy value: ``(1/N!) (-1)^{N(N+1)/2 + mN} c Z_N``.

    ``engine`` selects how ``Z_N`` is computed: ``"andreief"`` on the
    fully deformed window, or ``"series++"`` through the double series
    with truncation ``d``.  The two routes agree within series accuracy.
    """
    deform = deform or DeformationParams.zero()
    if N == 0:
        return tau_factor(deform)
    if engine == "andreief":
        window = andreief_window(spec, deform, N, quad)
        z = andreief_z(window, N, deform.n, deform.m).value
    elif engine == "series++":
        z = double_series_z("++", spec, deform, N, d, quad)[0].value
    else:
        raise ValueError(f"unknown engine {engine!r} for tau_value")
    sign = -1 if ((N * (N + 1) // 2) + deform.m * N) % 2 else 1
    return sign * tau_factor(deform) * z / _factorial(N)


# -- radial reduction -----------------------------------------------------------------

def shifted_partition(lam: Partition, N: int, delta: int) -> Partition:
    """``lam`` padded to N parts with ``delta`` added to every part."""
    if delta < 0:
        raise ValueError("shift must be non-negative")
    return Partition(tuple(lam.part(i) + delta for i in range(N)))


def radial_series_z(
    spec: RadialPlanar,
    n: int = 0,
    m: int = 0,
    t1: TimeSequence | None = None,
    t2: TimeSequence | None = None,
    N: int = 1,
    d: int = 6,
    quad: QuadratureSpec | None = None,
) -> ZResult:
    """Angular reduction of the rotation-invariant planar integral.

    Only pairings with ``mu = lam + (n - m)`` survive the angular
    integrals, leaving
    ``N! sum_lam pi^N prod_i M(lam_i - i + n + N) s_lam(t1)
    s_{lam+n-m}(t2)`` with ``M`` the radial moments.  The overall
    constant is pinned by the N = 1, undeformed polar integral.
    """
    t1 = t1 or TimeSequence()
    t2 = t2 or TimeSequence()
    if n < m:
        return radial_series_z(spec, m, n, t2, t1, N, d, quad)
    if N < 0:
        return ZResult(0.0, "radial-series", N, n, m, "-", d)
    if N == 0:
        return ZResult(1.0, "radial-series", N, n, m, "-", d)
    deform = DeformationParams(t1=t1, t2=t2, n=n, m=m)
    validate_deformation(spec, deform)
    moments: dict[int, float] = {}

    def mom(j: int) -> float:
        if j not in moments:
            moments[j] = radial_moment(spec, j, quad)
        return moments[j]

    shells: dict[int, complex] = {}
    total = 0
    for lam in enumerate_partitions(d, N):
        g = math.pi ** N
        for i in range(N):
            g *= mom(lam.part(i) - (i + 1) + n + N)
        term = (
            _factorial(N)
            * g
            * schur_in_times(lam, t1)
            * schur_in_times(shifted_partition(lam, N, n - m), t2)
        )
        if _is_zero(term):
            continue
        total = total + term
        shells[lam.weight] = shells.get(lam.weight, 0) + term
    top_shell = max(shells) if shells else 0
    est = abs(shells.get(top_shell, 0)) if top_shell > 0 else 0.0
    return ZResult(
        total,
        "radial-series",
        N,
        n,
        m,
        deform.fingerprint(),
        truncation=d,
        error_estimate=float(est),
    )


# -- character-coupling kernels ----------------------------------------------------------

def coupling_series_side(
    r: Callable[[int], object], N: int, xs: Sequence, ys: Sequence, d: int
):
    """``sum_{|lam| <= d, len <= N} r_lam(N) s_lam(x) s_lam(y)``."""
    total = 0
    for lam in enumerate_partitions(d, N):
        total = total + content_product(lam, N, r) * schur_bialternant(
            lam, xs
        ) * schur_bialternant(lam, ys)
    return total


def coupling_determinant_side(
    r: Callable[[int], object], N: int, xs: Sequence, ys: Sequence, kmax: int = 400
):
    """``C_{N,r} det(tau_r(1, x_i y_j)) / (Vdm(x) Vdm(y))``.

    ``tau_r(1, w) = 1 + sum_k r(1)...r(k) w^k`` summed until the terms
    are negligible (the products often terminate exactly when some
    ``r(j)`` vanishes).
    """

    def tau1(w):
        total = 1.0
        prod = 1.0
        tiny = 0
        for k in range(1, kmax + 1):
            prod = prod * r(k) * w
            total += prod
            if abs(prod) <= 1e-18 * max(1.0, abs(total)):
                tiny += 1
                if tiny >= 3:
                    break
            else:
                tiny = 0
        return total

    cnr = 1.0
    for k in range(1, N):
        for j in range(1, k + 1):
            cnr = cnr * r(j)
    rows = [[tau1(x * y) for y in ys] for x in xs]
    det = det_auto(rows)
    vdm = 1.0
    for a in range(N):
        for b in range(a + 1, N):
            vdm = vdm * (xs[a] - xs[b]) * (ys[a] - ys[b])
    return det / (cnr * vdm)


def coupling_kernel_check(
    r: Callable[[int], object], N: int, xs: Sequence, ys: Sequence, d: int
):
    """Difference between the content-product series and the kernel
    determinant; must vanish as the truncation grows."""
    lhs = coupling_series_side(r, N, xs, ys, d)
    rhs = coupling_determinant_side(r, N, xs, ys)
    return lhs - rhs


# -- potential-to-times convenience -------------------------------------------------------

def times_from_potential(coefficients: Sequence[float]) -> TimeSequence:
    """Times ``(-u_1, -u_2/2, ..., -u_p/p)`` for polynomial potentials
    whose lower coefficients are fed in as deformations."""
    return TimeSequence(
        {k: -coefficients[k - 1] / k for k in range(1, len(coefficients) + 1)}
    )
