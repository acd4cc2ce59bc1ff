"""Measure specifications, deformations and certified bimoment windows.

Four measure kinds are supported:

``GaussianCoupled``
    ``exp(-x^2/2 - y^2/2 + c x y + V1(x) + V2(y)) dx dy`` on the real
    plane.  Gauss-Hermite nodes are generated for the uncoupled weight;
    the coupling and all deformations are folded into the integrand so
    one node set per axis serves a whole window.

``CircleProduct``
    ``w1(x) w2(y) tau(1/(x y)) (dx / i x)(dy / i y)`` on the product of
    unit circles, i.e. plain ``d theta_x d theta_y`` against Laurent
    data.  Both circles are oriented counterclockwise; with real
    Fourier data the Laurent bimoments come out real.  This is the only
    kind admitting negative moment indices.

``ContourPolynomial``
    ``sum_ab kappa_ab exp(-u_{p+1} x^{p+1}/(p+1) - v_{q+1} y^{q+1}/(q+1)
    + x y)`` over products of straight segments and rays.

``RadialPlanar``
    A rotation-invariant planar measure ``exp(V(|z|^2)) dA`` with the
    identification ``(x, y) = (z, conj z)``.

Monomial prefactors ``x^n y^m`` are deliberately *not* part of the
deformed bimoments: engines fold ``n, m`` in as index shifts, so a
single undeformed window serves every ``(n, m)``.

Every quadrature value is certified by point doubling: a result is
accepted only once doubling the nodes moves it by less than the target,
relative to the larger of the value itself and the measure mass.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import (
    Divergent,
    DivergentDeformation,
    NegativeIndexUnsupported,
    QuadratureNotConverged,
    WindowTooSmall,
)
from .jsonio import canonical_dumps, scalar_from_json, scalar_to_json
from .schur import TimeSequence

__all__ = [
    "GaussianCoupled",
    "CircleProduct",
    "ContourPolynomial",
    "RadialPlanar",
    "MeasureSpec",
    "DeformationParams",
    "QuadratureSpec",
    "BimomentWindow",
    "measure_from_dict",
    "measure_to_dict",
    "bimoment",
    "deformed_bimoment",
    "bimoment_window",
    "radial_moment",
    "gaussian_bimoment_closed_form",
]


# -- measure kinds ---------------------------------------------------------------

@dataclass(frozen=True)
class GaussianCoupled:
    """Coupled Gaussian weight with optional extra polynomial potentials.

    ``v1[j]`` multiplies ``x^(j+1)`` inside the exponent (same for v2),
    so ``v1=()`` is the plain Gaussian.
    """

    c: float
    v1: tuple[float, ...] = ()
    v2: tuple[float, ...] = ()

    kind = "gaussian_coupled"
    allows_negative = False

    def stabilizing_degree(self, which: int) -> int:
        pot = self.v1 if which == 1 else self.v2
        if pot and len(pot) > 2 and len(pot) % 2 == 0 and pot[-1] < 0:
            return len(pot)
        return 2


@dataclass(frozen=True)
class CircleProduct:
    """Product of unit circles with Laurent weights and a coupling kernel.

    Weights are finite Laurent series given as ``((k, coeff), ...)``;
    the kernel acts on ``1/(x y)`` and is one of ``("exp",)``,
    ``("pochhammer", a, z, size)``, ``("coeffs", (rho_1, rho_2, ...))``
    with ``tau(w) = 1 + sum rho_k w^k``, or ``("none",)``.
    """

    w1: tuple[tuple[int, complex], ...] = ()
    w2: tuple[tuple[int, complex], ...] = ()
    kernel: tuple = ("exp",)

    kind = "circle_product"
    allows_negative = True

    def weight_values(self, which: int, z: np.ndarray) -> np.ndarray:
        data = self.w1 if which == 1 else self.w2
        if not data:
            return np.ones_like(z)
        out = np.zeros_like(z)
        for k, coeff in data:
            out = out + coeff * z ** k
        return out

    def kernel_values(self, w: np.ndarray) -> np.ndarray:
        tag = self.kernel[0]
        if tag == "none":
            return np.ones_like(w)
        if tag == "exp":
            return np.exp(w)
        if tag == "coeffs":
            out = np.ones_like(w)
            p = np.ones_like(w)
            for rho in self.kernel[1]:
                p = p * w
                out = out + rho * p
            return out
        if tag == "pochhammer":
            _, a, z, size = self.kernel
            return (1.0 - z * w) ** (size - a - 1)
        raise ValueError(f"unknown kernel {self.kernel!r}")


@dataclass(frozen=True)
class ContourPolynomial:
    """Monomial-potential coupling on products of contours.

    ``u = (u_1, ..., u_{p+1})`` are the x-potential coefficients (the
    leading one defines the unperturbed weight; the lower ones are fed
    in as time deformations by the caller, not here).  Contours are
    ``("segment", z0, z1)``, ``("ray", z0, direction)`` or
    ``("real_line",)``; couplings is the kappa matrix, one row per
    x-contour.
    """

    u: tuple[float, ...]
    v: tuple[float, ...]
    contours_x: tuple[tuple, ...] = (("real_line",),)
    contours_y: tuple[tuple, ...] = (("real_line",),)
    couplings: tuple[tuple[complex, ...], ...] = ((1.0,),)

    kind = "contour_polynomial"
    allows_negative = False


@dataclass(frozen=True)
class RadialPlanar:
    """Rotation-invariant planar measure ``exp(V(|z|^2)) dA``.

    ``potential[j]`` multiplies ``X^(j+1)`` in ``V(X)``; the leading
    coefficient must be negative for convergence.
    """

    potential: tuple[float, ...]

    kind = "radial_planar"
    allows_negative = False

    def potential_values(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros_like(x)
        p = np.ones_like(x)
        for cj in self.potential:
            p = p * x
            out = out + cj * p
        return out


MeasureSpec = GaussianCoupled | CircleProduct | ContourPolynomial | RadialPlanar


def measure_to_dict(spec: MeasureSpec) -> dict:
    if isinstance(spec, GaussianCoupled):
        return {"kind": spec.kind, "c": spec.c, "v1": list(spec.v1), "v2": list(spec.v2)}
    if isinstance(spec, CircleProduct):
        return {
            "kind": spec.kind,
            "w1": {str(k): scalar_to_json(v) for k, v in spec.w1},
            "w2": {str(k): scalar_to_json(v) for k, v in spec.w2},
            "kernel": list(spec.kernel[:1]) + [
                list(x) if isinstance(x, tuple) else x for x in spec.kernel[1:]
            ],
        }
    if isinstance(spec, ContourPolynomial):
        return {
            "kind": spec.kind,
            "u": list(spec.u),
            "v": list(spec.v),
            "contours_x": [list(c) for c in spec.contours_x],
            "contours_y": [list(c) for c in spec.contours_y],
            "couplings": [[scalar_to_json(k) for k in row] for row in spec.couplings],
        }
    if isinstance(spec, RadialPlanar):
        return {"kind": spec.kind, "potential": list(spec.potential)}
    raise TypeError(f"not a measure spec: {spec!r}")


def measure_from_dict(doc: dict) -> MeasureSpec:
    kind = doc["kind"]
    if kind == "gaussian_coupled":
        return GaussianCoupled(
            c=float(doc["c"]),
            v1=tuple(doc.get("v1", ())),
            v2=tuple(doc.get("v2", ())),
        )
    if kind == "circle_product":
        kernel = doc.get("kernel", ["exp"])
        tag = kernel[0]
        if tag == "coeffs":
            kern = ("coeffs", tuple(kernel[1]))
        elif tag == "pochhammer":
            kern = ("pochhammer", kernel[1], kernel[2], kernel[3])
        else:
            kern = (tag,)
        return CircleProduct(
            w1=tuple(sorted((int(k), scalar_from_json(v)) for k, v in doc.get("w1", {}).items())),
            w2=tuple(sorted((int(k), scalar_from_json(v)) for k, v in doc.get("w2", {}).items())),
            kernel=kern,
        )
    if kind == "contour_polynomial":
        return ContourPolynomial(
            u=tuple(doc["u"]),
            v=tuple(doc["v"]),
            contours_x=tuple(tuple(c) for c in doc.get("contours_x", [["real_line"]])),
            contours_y=tuple(tuple(c) for c in doc.get("contours_y", [["real_line"]])),
            couplings=tuple(
                tuple(scalar_from_json(k) for k in row)
                for row in doc.get("couplings", [[1.0]])
            ),
        )
    if kind == "radial_planar":
        return RadialPlanar(potential=tuple(doc["potential"]))
    raise ValueError(f"unknown measure kind {kind!r}")


# -- deformations ------------------------------------------------------------------

_ZERO_TIMES = TimeSequence()


@dataclass(frozen=True)
class DeformationParams:
    """The four deformation sequences and the monomial exponents (n, m)."""

    t1: TimeSequence = _ZERO_TIMES
    t2: TimeSequence = _ZERO_TIMES
    tbar1: TimeSequence = _ZERO_TIMES
    tbar2: TimeSequence = _ZERO_TIMES
    n: int = 0
    m: int = 0

    @classmethod
    def zero(cls) -> "DeformationParams":
        return cls()

    def times_only(self) -> "DeformationParams":
        """Copy with the monomial shifts dropped (engines apply them as
        index shifts, never as measure factors)."""
        return DeformationParams(self.t1, self.t2, self.tbar1, self.tbar2, 0, 0)

    def is_zero(self) -> bool:
        return (
            self.t1.is_zero()
            and self.t2.is_zero()
            and self.tbar1.is_zero()
            and self.tbar2.is_zero()
            and self.n == 0
            and self.m == 0
        )

    def to_dict(self) -> dict:
        return {
            "t1": {str(k): scalar_to_json(v) for k, v in sorted(self.t1.coeffs.items())},
            "t2": {str(k): scalar_to_json(v) for k, v in sorted(self.t2.coeffs.items())},
            "tbar1": {str(k): scalar_to_json(v) for k, v in sorted(self.tbar1.coeffs.items())},
            "tbar2": {str(k): scalar_to_json(v) for k, v in sorted(self.tbar2.coeffs.items())},
            "n": self.n,
            "m": self.m,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "DeformationParams":
        def seq(name):
            return TimeSequence(
                {int(k): scalar_from_json(v) for k, v in doc.get(name, {}).items()}
            )

        return cls(
            t1=seq("t1"),
            t2=seq("t2"),
            tbar1=seq("tbar1"),
            tbar2=seq("tbar2"),
            n=int(doc.get("n", 0)),
            m=int(doc.get("m", 0)),
        )

    def fingerprint(self) -> str:
        import hashlib

        return hashlib.sha256(canonical_dumps(self.to_dict()).encode()).hexdigest()[:16]


def validate_deformation(spec: MeasureSpec, deform: DeformationParams) -> None:
    """Reject deformations that break convergence for the measure kind."""
    if spec.allows_negative:
        return
    if not deform.tbar1.is_zero() or not deform.tbar2.is_zero():
        raise NegativeIndexUnsupported(
            f"{spec.kind} has no negative moments; tbar deformations need a circle measure"
        )
    if isinstance(spec, GaussianCoupled):
        for which, t in ((1, deform.t1), (2, deform.t2)):
            if t.max_index >= spec.stabilizing_degree(which):
                raise DivergentDeformation(
                    f"t{which} degree {t.max_index} >= stabilizing degree"
                )
    elif isinstance(spec, ContourPolynomial):
        if deform.t1.max_index >= len(spec.u):
            raise DivergentDeformation("t1 degree must stay below the leading power")
        if deform.t2.max_index >= len(spec.v):
            raise DivergentDeformation("t2 degree must stay below the leading power")
    elif isinstance(spec, RadialPlanar):
        stab = 2 * len(spec.potential)
        if deform.t1.max_index >= stab or deform.t2.max_index >= stab:
            raise DivergentDeformation("time degree too high for the radial potential")


# -- quadrature -------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureSpec:
    """Node budget and certification target.

    ``points`` is the starting per-axis count; it is doubled until the
    change of every requested value drops below ``target`` relative to
    ``max(|value|, measure mass)``, or ``max_doublings`` is exhausted
    (-> ``QuadratureNotConverged``).
    """

    scheme: str = "auto"
    points: int = 24
    target: float = 1e-10
    max_doublings: int = 7

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "points": self.points,
            "target": self.target,
            "max_doublings": self.max_doublings,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "QuadratureSpec":
        return cls(
            scheme=doc.get("scheme", "auto"),
            points=int(doc.get("points", 24)),
            target=float(doc.get("target", 1e-10)),
            max_doublings=int(doc.get("max_doublings", 7)),
        )


def _time_poly(t: TimeSequence, z: np.ndarray, inverse: bool = False) -> np.ndarray:
    out = np.zeros_like(z)
    for k, coeff in sorted(t.coeffs.items()):
        out = out + coeff * (z ** (-k if inverse else k))
    return out


def _segment_nodes(q: int, z0: complex, z1: complex):
    s, w = np.polynomial.legendre.leggauss(q)
    mid = (z0 + z1) / 2.0
    half = (z1 - z0) / 2.0
    return mid + half * s, w * half


def _contour_nodes(contour: tuple, q: int, lead: float, power: int):
    tag = contour[0]
    if tag == "segment":
        return _segment_nodes(q, complex(contour[1]), complex(contour[2]))
    if tag == "ray":
        z0, direction = complex(contour[1]), complex(contour[2])
        direction = direction / abs(direction)
        decay = (lead / power * (direction ** power)).real
        if decay <= 0:
            raise Divergent(f"ray direction {direction} does not damp the leading term")
        length = (50.0 / (lead / power)) ** (1.0 / power) * 1.5
        nodes, weights = _segment_nodes(q, 0.0, length)
        return z0 + direction * nodes, weights * direction
    if tag == "real_line":
        if power % 2 or lead <= 0:
            raise Divergent("real line needs an even leading power with lead > 0")
        length = (50.0 * power / lead) ** (1.0 / power) * 1.5
        return _segment_nodes(q, -length, length)
    raise ValueError(f"unknown contour {contour!r}")


@lru_cache(maxsize=64)
def _product_grid(spec: MeasureSpec, deform: DeformationParams, q: int):
    """Nodes and fully weighted kernel matrix for product-type measures.

    Returns ``(x, y, M)`` with ``B_{ik} = sum_ab x_a^i M_ab y_b^k``.
    The matrix includes quadrature weights, the measure kernel and all
    exponential deformations, but not the ``x^n y^m`` monomials.
    """
    if isinstance(spec, GaussianCoupled):
        xs, wx = np.polynomial.hermite_e.hermegauss(q)
        ys, wy = xs.copy(), wx.copy()
        expo = spec.c * np.outer(xs, ys)
        extra_x = np.zeros_like(xs)
        p = np.ones_like(xs)
        for cj in spec.v1:
            p = p * xs
            extra_x = extra_x + cj * p
        extra_y = np.zeros_like(ys)
        p = np.ones_like(ys)
        for cj in spec.v2:
            p = p * ys
            extra_y = extra_y + cj * p
        extra_x = extra_x + _time_poly(deform.t1, xs)
        extra_y = extra_y + _time_poly(deform.t2, ys)
        M = np.exp(expo + extra_x[:, None] + extra_y[None, :])
        M = M * np.outer(wx, wy)
        return xs, ys, M

    if isinstance(spec, CircleProduct):
        theta = 2.0 * np.pi * np.arange(q) / q
        x = np.exp(1j * theta)
        y = x.copy()
        wq = 2.0 * np.pi / q
        K = spec.kernel_values(1.0 / np.outer(x, y))
        wvx = spec.weight_values(1, x)
        wvy = spec.weight_values(2, y)
        defx = np.exp(_time_poly(deform.t1, x) + _time_poly(deform.tbar1, x, inverse=True))
        defy = np.exp(_time_poly(deform.t2, y) + _time_poly(deform.tbar2, y, inverse=True))
        M = K * np.outer(wvx * defx, wvy * defy) * (wq * wq)
        return x, y, M

    if isinstance(spec, ContourPolynomial):
        p1 = len(spec.u)
        q1 = len(spec.v)
        lead_u, lead_v = spec.u[-1], spec.v[-1]
        xs_parts, wx_parts, ys_parts, wy_parts = [], [], [], []
        for contour in spec.contours_x:
            nodes, weights = _contour_nodes(contour, q, lead_u, p1)
            xs_parts.append(np.asarray(nodes, dtype=complex))
            wx_parts.append(np.asarray(weights, dtype=complex))
        for contour in spec.contours_y:
            nodes, weights = _contour_nodes(contour, q, lead_v, q1)
            ys_parts.append(np.asarray(nodes, dtype=complex))
            wy_parts.append(np.asarray(weights, dtype=complex))
        xs = np.concatenate(xs_parts)
        ys = np.concatenate(ys_parts)
        wx = np.concatenate(wx_parts)
        wy = np.concatenate(wy_parts)
        kap = np.zeros((len(xs), len(ys)), dtype=complex)
        ro = 0
        for a, xpart in enumerate(xs_parts):
            co = 0
            for b, ypart in enumerate(ys_parts):
                kap[ro:ro + len(xpart), co:co + len(ypart)] = spec.couplings[a][b]
                co += len(ypart)
            ro += len(xpart)
        expo = (
            -(lead_u / p1) * (xs ** p1)[:, None]
            - (lead_v / q1) * (ys ** q1)[None, :]
            + np.outer(xs, ys)
        )
        expo = expo + _time_poly(deform.t1, xs)[:, None] + _time_poly(deform.t2, ys)[None, :]
        M = kap * np.exp(expo) * np.outer(wx, wy)
        return xs, ys, M

    raise TypeError(f"{spec.kind} is not a product-type measure")


@lru_cache(maxsize=64)
def _paired_grid(spec: RadialPlanar, deform: DeformationParams, q: int):
    """Planar polar grid for radial measures: ``(z, zbar, w)`` with
    ``B_{ik} = sum_a w_a z_a^i zbar_a^k``."""
    # radial direction in X = |z|^2 against exp(-X) Laguerre nodes,
    # angular direction by trapezoid; dA = (1/2) dX dtheta
    xg, wg = np.polynomial.laguerre.laggauss(q)
    ntheta = 2 * q
    theta = 2.0 * np.pi * np.arange(ntheta) / ntheta
    rho = np.sqrt(xg)
    z = np.outer(rho, np.exp(1j * theta)).ravel()
    base = wg * np.exp(xg + spec.potential_values(xg))
    w = np.outer(base, np.full(ntheta, np.pi / ntheta)).ravel()
    zbar = np.conj(z)
    if not (deform.t1.is_zero() and deform.t2.is_zero()):
        w = w * np.exp(_time_poly(deform.t1, z) + _time_poly(deform.t2, zbar))
    return z, zbar, w


def _entry_values(spec, deform, q, entries: Sequence[tuple[int, int]]):
    """Raw quadrature values of the requested bimoments at node count q,
    plus the measure mass on the same grid (the certification scale)."""
    if isinstance(spec, RadialPlanar):
        z, zbar, w = _paired_grid(spec, deform, q)
        mass = complex(np.sum(w))
        out = {}
        for i, k in entries:
            out[(i, k)] = complex(np.dot(w, (z ** i) * (zbar ** k)))
        return out, mass
    x, y, M = _product_grid(spec, deform, q)
    mass = complex(M.sum())
    out = {}
    row_cache: dict[int, np.ndarray] = {}
    for i, k in entries:
        row = row_cache.get(i)
        if row is None:
            row = (x ** i) @ M
            row_cache[i] = row
        out[(i, k)] = complex(row @ (y ** k))
    return out, mass


def _certified_values(spec, deform, quad: QuadratureSpec, entries):
    """Point-doubling certification of a batch of bimoments."""
    entries = list(entries)
    validate_deformation(spec, deform)
    if not spec.allows_negative:
        for i, k in entries:
            if i < 0 or k < 0:
                raise NegativeIndexUnsupported(
                    f"index ({i}, {k}) needs a measure with negative moments"
                )
    q = quad.points
    prev = None
    for _ in range(quad.max_doublings + 1):
        vals, mass = _entry_values(spec, deform, q, entries)
        if prev is not None:
            scale0 = abs(mass)
            ok = all(
                abs(vals[e] - prev[e]) <= quad.target * max(abs(vals[e]), scale0)
                for e in vals
            )
            if ok:
                return vals, q
        prev = vals
        q *= 2
    raise QuadratureNotConverged(
        f"no convergence to {quad.target} within {quad.max_doublings} doublings"
    )


def _simplify(val: complex):
    """Return a float when the value is numerically real."""
    if abs(val.imag) <= 1e-14 * max(1.0, abs(val.real)):
        return float(val.real)
    return complex(val)


# -- public operations ---------------------------------------------------------------

def bimoment(spec: MeasureSpec, i: int, k: int, quad: QuadratureSpec | None = None):
    """Undeformed bimoment ``B_ik`` to certified accuracy."""
    return deformed_bimoment(spec, i, k, DeformationParams.zero(), quad)


def deformed_bimoment(
    spec: MeasureSpec,
    i: int,
    k: int,
    deform: DeformationParams,
    quad: QuadratureSpec | None = None,
):
    """Deformed bimoment ``B_ik(t1, t2, tbar1, tbar2)``.

    The monomial shifts ``n, m`` of the deformation are *not* applied
    here; engines fold them in as index offsets.
    """
    quad = quad or QuadratureSpec()
    vals, _ = _certified_values(spec, deform.times_only(), quad, [(i, k)])
    return _simplify(vals[(i, k)])


def bimoment_window(
    spec: MeasureSpec,
    rect: tuple[int, int, int, int],
    deform: DeformationParams | None = None,
    quad: QuadratureSpec | None = None,
) -> "BimomentWindow":
    """All bimoments in the rectangle ``(i_lo, i_hi, k_lo, k_hi)``.

    Quadrature nodes are shared across entries; values are bit-identical
    to entrywise calls at the same certified node count.
    """
    i_lo, i_hi, k_lo, k_hi = rect
    if i_hi < i_lo or k_hi < k_lo:
        raise ValueError("empty window rectangle")
    deform = deform or DeformationParams.zero()
    quad = quad or QuadratureSpec()
    entries = [(i, k) for i in range(i_lo, i_hi + 1) for k in range(k_lo, k_hi + 1)]
    vals, q_used = _certified_values(spec, deform.times_only(), quad, entries)
    values = [
        [_simplify(vals[(i, k)]) for k in range(k_lo, k_hi + 1)]
        for i in range(i_lo, i_hi + 1)
    ]
    provenance = {
        "method": "quadrature",
        "points": q_used,
        "scheme": quad.scheme,
        "target": quad.target,
        "measure": measure_to_dict(spec),
    }
    return BimomentWindow(i_lo, i_hi, k_lo, k_hi, values, deform, provenance)


def radial_moment(spec: RadialPlanar, j: int, quad: QuadratureSpec | None = None) -> float:
    """Radial integral ``int_0^inf exp(V(X)) X^j dX``.

    For ``V(X) = -X`` this is ``j!``; the leading potential coefficient
    must be negative or the integral is declared divergent.
    """
    if j < 0:
        raise NegativeIndexUnsupported("radial moments need j >= 0")
    if not spec.potential or spec.potential[-1] >= 0:
        raise Divergent("radial potential must have a negative leading coefficient")
    quad = quad or QuadratureSpec()
    q = max(quad.points, 2 * (j + 1))
    prev = None
    for _ in range(quad.max_doublings + 1):
        xg, wg = np.polynomial.laguerre.laggauss(q)
        vals = wg * np.exp(xg + spec.potential_values(xg)) * xg ** j
        total = float(np.sum(vals))
        if prev is not None and abs(total - prev) <= quad.target * max(abs(total), 1e-300):
            return total
        prev = total
        q *= 2
    raise QuadratureNotConverged(f"radial moment j={j} did not converge")


def gaussian_bimoment_closed_form(c: float, i: int, k: int) -> float:
    """Exact Gaussian bimoment via pair counting (the analytic oracle).

    The plain coupled Gaussian has mass ``2 pi / sqrt(1 - c^2)``,
    variances ``1/(1-c^2)`` and covariance ``c/(1-c^2)``; moments follow
    by summing over the number of cross pairings.
    """
    if (i + k) % 2:
        return 0.0
    s = 1.0 / (1.0 - c * c)
    gamma = c * s
    mass = 2.0 * math.pi * math.sqrt(s)
    total = 0.0
    for r in range(min(i, k), -1, -1):
        if (i - r) % 2 or (k - r) % 2:
            continue
        a = (i - r) // 2
        b = (k - r) // 2
        ways = (
            math.factorial(i)
            * math.factorial(k)
            // (math.factorial(r) * math.factorial(a) * math.factorial(b) * 2 ** (a + b))
        )
        total += ways * gamma ** r * s ** (a + b)
    return mass * total


# -- window container -----------------------------------------------------------------

class BimomentWindow:
    """Rectangular block of bimoments with provenance.

    ``values[r][c]`` holds ``B_{i_lo + r, k_lo + c}``; scalars may be
    floats, complexes or exact rationals (analytic windows).
    """

    def __init__(self, i_lo, i_hi, k_lo, k_hi, values, deformation, provenance):
        self.i_lo = int(i_lo)
        self.i_hi = int(i_hi)
        self.k_lo = int(k_lo)
        self.k_hi = int(k_hi)
        self.values = values
        self.deformation = deformation
        self.provenance = dict(provenance)
        rows = self.i_hi - self.i_lo + 1
        cols = self.k_hi - self.k_lo + 1
        if len(values) != rows or any(len(r) != cols for r in values):
            raise ValueError("window values do not match the rectangle")

    @classmethod
    def analytic(cls, i_lo, k_lo, values, deformation=None, note: str = "analytic"):
        """Wrap explicitly supplied values (closed forms, exact data)."""
        deformation = deformation or DeformationParams.zero()
        i_hi = i_lo + len(values) - 1
        k_hi = k_lo + (len(values[0]) - 1 if values else 0)
        return cls(i_lo, i_hi, k_lo, k_hi, values, deformation, {"method": note})

    def entry(self, i: int, k: int):
        if not (self.i_lo <= i <= self.i_hi and self.k_lo <= k <= self.k_hi):
            raise WindowTooSmall(
                f"({i}, {k}) outside [{self.i_lo}..{self.i_hi}]x[{self.k_lo}..{self.k_hi}]"
            )
        return self.values[i - self.i_lo][k - self.k_lo]

    def covers(self, i_lo, i_hi, k_lo, k_hi) -> bool:
        return self.i_lo <= i_lo and i_hi <= self.i_hi and self.k_lo <= k_lo and k_hi <= self.k_hi

    # -- persistence ----------------------------------------------------------
    def to_json(self) -> str:
        doc = {
            "i_lo": self.i_lo,
            "i_hi": self.i_hi,
            "k_lo": self.k_lo,
            "k_hi": self.k_hi,
            "values": [[scalar_to_json(v) for v in row] for row in self.values],
            "deformation": self.deformation.to_dict(),
            "provenance": self.provenance,
        }
        return canonical_dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "BimomentWindow":
        doc = json.loads(text)
        return cls(
            doc["i_lo"],
            doc["i_hi"],
            doc["k_lo"],
            doc["k_hi"],
            [[scalar_from_json(v) for v in row] for row in doc["values"]],
            DeformationParams.from_dict(doc["deformation"]),
            doc["provenance"],
        )

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path) -> "BimomentWindow":
        with open(path) as fh:
            return cls.from_json(fh.read())
