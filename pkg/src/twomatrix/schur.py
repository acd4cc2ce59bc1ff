"""Schur functions in time variables and finite variable sets.

Two evaluation routes are kept deliberately independent and are checked
against each other in the test suite:

* ``schur_in_times`` builds the determinant of elementary Schur
  functions of a time sequence ``t`` (power-sum coordinates, so
  ``t_k = (1/k) sum_a x_a^k`` identifies the two pictures);
* ``schur_bialternant`` is the ratio of alternants in finitely many
  variables.

Littlewood-Richardson coefficients are computed by the tableau rule;
``schur_monomial_expansion`` provides the brute-force monomial oracle
used to validate them.  All algebra is generic over the scalar type:
exact rationals, formal polynomials, floats and complexes all work.

Truncation convention used throughout the package: a series indexed by
partitions is cut by weight per partition slot (``|lam| <= d``).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    LengthExceedsN,
    RepeatedVariable,
    SingularContent,
    ZeroVariableForInverse,
)
from .jsonio import scalar_from_json as _scalar_from_json
from .jsonio import scalar_to_json as _scalar_to_json
from .linalg import det_laplace
from .partitions import Partition, enumerate_partitions, shifted_labels

__all__ = [
    "TimeSequence",
    "SchurSeries",
    "elementary_schur",
    "elementary_schur_list",
    "schur_in_times",
    "power_sum_times",
    "schur_bialternant",
    "lr_coefficient",
    "schur_product",
    "schur_monomial_expansion",
    "cauchy_truncated",
    "transpose_sign_check",
    "content_product",
    "gl_dimension",
]

# Floating evaluation points closer than this (relative to their size)
# are treated as repeated in schur_bialternant.
SEPARATION_THRESHOLD = 1e-12


class TimeSequence:
    """Finitely supported sequence ``t_1, t_2, ...`` of scalars.

    Absent indices read zero.  Values may be exact numbers, floats,
    complexes or formal polynomials; the sequence itself is immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean = {}
        for k, v in items:
            k = int(k)
            if k < 1:
                raise ValueError(f"time index must be >= 1, got {k}")
            if not _is_zero(v):
                clean[k] = v
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TimeSequence is immutable")

    @classmethod
    def from_list(cls, values: Sequence) -> "TimeSequence":
        """Build from ``[t_1, t_2, ...]``."""
        return cls({k + 1: v for k, v in enumerate(values)})

    def __getitem__(self, k: int):
        return self.coeffs.get(k, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.coeffs))

    @property
    def max_index(self) -> int:
        return max(self.coeffs, default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def negated(self) -> "TimeSequence":
        return TimeSequence({k: -v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TimeSequence) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in sorted(self.coeffs.items()))
        return f"TimeSequence({{{inner}}})"

    def to_dict(self) -> dict:
        return {str(k): v for k, v in sorted(self.coeffs.items())}


def _is_zero(v) -> bool:
    try:
        return not v
    except TypeError:
        return False


def elementary_schur_list(kmax: int, t: TimeSequence) -> list:
    """``[s_0(t), ..., s_kmax(t)]`` via the derivative recurrence.

    ``s_k`` is the coefficient of ``x^k`` in ``exp(sum_m t_m x^m)``, so
    ``k s_k = sum_{m<=k} m t_m s_{k-m}``.
    """
    out = [1]
    for k in range(1, kmax + 1):
        acc = 0
        for m, tm in sorted(t.coeffs.items()):
            if m <= k:
                acc = acc + (m * tm) * out[k - m]
        out.append(0 if _is_zero(acc) else acc / k)
    return out


def elementary_schur(k: int, t: TimeSequence):
    """The elementary Schur function ``s_k(t)``; zero for k < 0."""
    if k < 0:
        return 0
    return elementary_schur_list(k, t)[k]


def schur_in_times(lam: Partition, t: TimeSequence):
    """Schur function of a time sequence: ``det(s_{lam_i - i + j}(t))``."""
    ell = lam.length
    if ell == 0:
        return 1
    kmax = lam.part(0) + ell - 1
    s = elementary_schur_list(kmax, t)

    def entry(i: int, j: int):
        k = lam.part(i) - (i + 1) + (j + 1)
        return s[k] if k >= 0 else 0

    rows = [[entry(i, j) for j in range(ell)] for i in range(ell)]
    return det_laplace(rows)


def power_sum_times(xs: Sequence, degree: int, inverse: bool = False) -> TimeSequence:
    """Times ``t_k = (1/k) sum_a x_a^k`` up to ``k = degree``.

    With ``inverse=True`` the reciprocals ``x_a^{-1}`` are used; all
    variables must then be nonzero.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    vals = list(xs)
    if inverse:
        if any(_is_zero(x) for x in vals):
            raise ZeroVariableForInverse("zero variable with inverse=True")
        vals = [1 / Fraction(x) if isinstance(x, (int, Fraction)) else 1.0 / x for x in vals]
    coeffs = {}
    powers = list(vals)
    for k in range(1, degree + 1):
        total = sum(powers) if powers else 0
        coeffs[k] = Fraction(total, k) if isinstance(total, int) else total / k
        powers = [p * v for p, v in zip(powers, vals)]
    return TimeSequence(coeffs)


def schur_bialternant(lam: Partition, xs: Sequence, separation: float = SEPARATION_THRESHOLD):
    """Ratio of alternants ``det(x_i^{lam_j - j + N}) / Vandermonde(x)``.

    Exact for exact inputs.  For floating inputs, points closer than
    ``separation`` (relative) raise ``RepeatedVariable``.
    """
    xs = list(xs)
    n = len(xs)
    if lam.length > n:
        raise LengthExceedsN(f"partition length {lam.length} exceeds {n} variables")
    exact = all(isinstance(x, (int, Fraction)) for x in xs)
    for a in range(n):
        for b in range(a + 1, n):
            if exact:
                if xs[a] == xs[b]:
                    raise RepeatedVariable(f"x[{a}] == x[{b}]")
            else:
                scale = max(1.0, abs(xs[a]), abs(xs[b]))
                if abs(xs[a] - xs[b]) <= separation * scale:
                    raise RepeatedVariable(f"x[{a}] and x[{b}] closer than threshold")
    if n == 0:
        return 1
    labels = shifted_labels(lam, n)
    num = det_laplace([[_ipow(x, h) for h in labels] for x in xs])
    den = 1
    for a in range(n):
        for b in range(a + 1, n):
            den = den * (xs[a] - xs[b])
    return num / den


def _ipow(x, k: int):
    if isinstance(x, int):
        x = Fraction(x)
    out = x ** k
    return out


# -- Littlewood-Richardson ----------------------------------------------------

def lr_coefficient(lam: Partition, mu: Partition, alpha: Partition) -> int:
    """Multiplicity of ``s_alpha`` in ``s_lam * s_mu`` (tableau rule).

    Counts column-strict fillings of the skew shape alpha/lam with
    content mu whose reverse reading word is a ballot sequence.
    """
    if alpha.weight != lam.weight + mu.weight:
        return 0
    if not _contains(alpha, lam):
        return 0
    return _lr_count(alpha.parts, lam.parts, mu.parts)


def _contains(outer: Partition, inner: Partition) -> bool:
    return all(outer.part(i) >= inner.part(i) for i in range(inner.length))


@lru_cache(maxsize=None)
def _lr_count(alpha: tuple, lam: tuple, mu: tuple) -> int:
    """DFS over the skew cells of alpha/lam in reverse reading-word order
    (rows top to bottom, each row right to left), so the running value
    counts are exactly the ballot prefix counts."""
    nrows = len(alpha)
    lam_row = [lam[i] if i < len(lam) else 0 for i in range(nrows)]
    cells = []
    for i in range(nrows):
        for j in range(alpha[i] - 1, lam_row[i] - 1, -1):
            cells.append((i, j))
    nmu = len(mu)
    if not cells:
        return 1 if nmu == 0 else 0
    remaining = list(mu)
    fill: dict[tuple[int, int], int] = {}
    counts = [0] * nmu
    count = 0

    def dfs(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        i, j = cells[idx]
        right = fill.get((i, j + 1))
        # cell above is inside alpha whenever i > 0 (alpha is a partition);
        # it constrains only if it lies outside lam, i.e. is a skew cell
        above = fill.get((i - 1, j)) if i > 0 and j >= lam_row[i - 1] else None
        above_is_skew = i > 0 and j >= lam_row[i - 1]
        for v in range(nmu):
            if remaining[v] == 0:
                continue
            if right is not None and v > right:
                continue
            if above_is_skew and (above is None or above >= v):
                continue
            if v > 0 and counts[v] + 1 > counts[v - 1]:
                continue  # ballot violation
            counts[v] += 1
            remaining[v] -= 1
            fill[(i, j)] = v
            dfs(idx + 1)
            del fill[(i, j)]
            remaining[v] += 1
            counts[v] -= 1

    dfs(0)
    return count


@lru_cache(maxsize=None)
def _schur_product_terms(lam_parts: tuple, mu_parts: tuple) -> tuple:
    lam = Partition(lam_parts)
    mu = Partition(mu_parts)
    n = lam.weight + mu.weight
    out = []
    for alpha in enumerate_partitions(n, lam.length + mu.length):
        if alpha.weight != n:
            continue
        c = lr_coefficient(lam, mu, alpha)
        if c:
            out.append((alpha.parts, c))
    return tuple(out)


def schur_product(lam: Partition, mu: Partition) -> "SchurSeries":
    """Expansion ``s_lam s_mu = sum_alpha c^alpha_{lam mu} s_alpha``."""
    terms = {
        (Partition(alpha),): c for alpha, c in _schur_product_terms(lam.parts, mu.parts)
    }
    d = lam.weight + mu.weight
    return SchurSeries(arity=1, terms=terms, truncation=d)


# -- monomial oracle ----------------------------------------------------------

@lru_cache(maxsize=None)
def _ssyt_expansion(lam_parts: tuple, nvars: int) -> tuple:
    """Monomial expansion of s_lam in nvars variables via semistandard
    tableaux; returned as ((exponent tuple, coeff), ...)."""
    lam = Partition(lam_parts)
    if lam.length > nvars:
        return ()
    acc: dict[tuple, int] = {}
    rows = lam.parts
    fill: list[list[int]] = [[0] * p for p in rows]

    def dfs(i: int, j: int, weight: list[int]):
        if i == len(rows):
            key = tuple(weight)
            acc[key] = acc.get(key, 0) + 1
            return
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = fill[i][j - 1] if j > 0 else 1
        up = fill[i - 1][j] + 1 if i > 0 and j < rows[i - 1] else 1
        for v in range(max(lo, up), nvars + 1):
            fill[i][j] = v
            weight[v - 1] += 1
            dfs(ni, nj, weight)
            weight[v - 1] -= 1

    if rows:
        dfs(0, 0, [0] * nvars)
    else:
        acc[tuple([0] * nvars)] = 1
    return tuple(sorted(acc.items()))


def schur_monomial_expansion(lam: Partition, nvars: int) -> dict[tuple, int]:
    """Brute-force monomial expansion of ``s_lam`` in ``nvars`` variables.

    Independent oracle for the tableau-rule product: multiply two of
    these dictionaries and decompose greedily by leading monomials.
    """
    return dict(_ssyt_expansion(lam.parts, nvars))


# -- identities ---------------------------------------------------------------

def cauchy_truncated(t: TimeSequence, tprime: TimeSequence, d: int):
    """Both sides of the truncated Cauchy-Littlewood identity.

    Returns ``(sum_{|lam|<=d} s_lam(t) s_lam(t'), exp-side)`` where the
    exponential side is the weight-``<= d`` truncation of
    ``exp(sum_k k t_k t'_k)`` under the grading ``deg t_k = k``.  The two
    agree exactly for exact scalars.
    """
    if d < 0:
        raise ValueError("truncation degree must be >= 0")
    lhs = 0
    for lam in enumerate_partitions(d, d):
        lhs = lhs + schur_in_times(lam, t) * schur_in_times(lam, tprime)
    # exp side: coefficients of the auxiliary sequence a_k = k t_k t'_k
    # reuse the elementary-Schur recurrence, which is exactly the graded
    # truncated exponential
    a = TimeSequence({k: k * t[k] * tprime[k] for k in set(t.support()) & set(tprime.support())})
    es = elementary_schur_list(d, a)
    rhs = 0
    for w in range(d + 1):
        rhs = rhs + es[w]
    return lhs, rhs


def transpose_sign_check(lam: Partition, t: TimeSequence | None = None) -> bool:
    """Check ``s_lam(t) = (-1)^{|lam|} s_{lam'}(-t)`` exactly.

    With ``t=None`` the check runs on formal variables, making it an
    identity test rather than a point test.
    """
    if t is None:
        from .poly import variable

        t = TimeSequence({k: variable(("t", k)) for k in range(1, max(1, lam.weight) + 1)})
    lhs = schur_in_times(lam, t)
    rhs = schur_in_times(lam.conjugate(), t.negated())
    if lam.weight % 2:
        rhs = -rhs
    diff = lhs - rhs
    return _is_zero(diff)


def content_product(lam: Partition, n_size: int, r: Callable[[int], object]):
    """Product of ``r(N + j - i)`` over the Young-diagram nodes of lam."""
    out = 1
    for i, j in lam.cells():
        try:
            val = r(n_size + j - i)
        except ZeroDivisionError as exc:
            raise SingularContent(f"r undefined at content {n_size + j - i}") from exc
        if val is None:
            raise SingularContent(f"r undefined at content {n_size + j - i}")
        out = out * val
    return out


def gl_dimension(lam: Partition, n_size: int):
    """Dimension of the GL(N) irreducible with highest weight lam.

    Hook-content formula: product over nodes of (N + j - i)/hook(i, j).
    """
    if lam.length > n_size:
        raise LengthExceedsN(f"partition length {lam.length} exceeds {n_size}")
    conj = lam.conjugate()
    num = 1
    den = 1
    for i, j in lam.cells():
        num *= n_size + j - i
        den *= lam.part(i - 1) - j + conj.part(j - 1) - i + 1
    val = Fraction(num, den)
    return int(val) if val.denominator == 1 else val


# -- series container ---------------------------------------------------------

class SchurSeries:
    """Partition-indexed series with a per-slot weight truncation.

    ``terms`` maps tuples of partitions (length = arity) to scalar
    coefficients; zero coefficients are never stored.
    """

    def __init__(self, arity: int, terms: Mapping | None = None, truncation: int | None = None):
        self.arity = int(arity)
        self.truncation = truncation
        self.terms: dict[tuple[Partition, ...], object] = {}
        if terms:
            for key, val in terms.items():
                self[key] = val

    def __setitem__(self, key, val):
        key = tuple(key)
        if len(key) != self.arity:
            raise ValueError(f"expected {self.arity} partitions, got {len(key)}")
        if self.truncation is not None and any(p.weight > self.truncation for p in key):
            raise ValueError("partition weight exceeds the declared truncation")
        if _is_zero(val):
            self.terms.pop(key, None)
        else:
            self.terms[key] = val

    def __getitem__(self, key):
        return self.terms.get(tuple(key), 0)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    # -- serialization ------------------------------------------------------
    def to_json(self) -> str:
        rows = []
        for key, val in sorted(self.terms.items(), key=lambda kv: tuple(p.parts for p in kv[0])):
            rows.append({
                "partitions": [list(p.parts) for p in key],
                "value": _scalar_to_json(val),
            })
        doc = {"arity": self.arity, "truncation": self.truncation, "terms": rows}
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SchurSeries":
        doc = json.loads(text)
        series = cls(arity=doc["arity"], truncation=doc["truncation"])
        for row in doc["terms"]:
            key = tuple(Partition(p) for p in row["partitions"])
            series[key] = _scalar_from_json(row["value"])
        return series

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = [f"partition{i + 1}" for i in range(self.arity)] + ["value"]
        writer.writerow(header)
        for key, val in sorted(self.terms.items(), key=lambda kv: tuple(p.parts for p in kv[0])):
            writer.writerow([p.to_text() for p in key] + [_scalar_to_text(val)])
        return buf.getvalue()


def _scalar_to_text(val) -> str:
    if isinstance(val, Fraction):
        return f"{val.numerator}/{val.denominator}"
    if isinstance(val, complex):
        return f"{val.real:.17g}{val.imag:+.17g}j"
    if isinstance(val, float):
        return f"{val:.17g}"
    return str(val)
