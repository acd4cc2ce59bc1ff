"""Exact finite free-fermion oracle on Maya-diagram Fock states.

States and conventions
----------------------
A basis state is a Maya diagram: its occupied mode set differs from the
reference sea ``{..., -2, -1}`` in finitely many places.  We store that
symmetric difference (``diff``): a negative member is a hole dug into
the sea, a non-negative member is a particle added above it.

Sign convention (this fixes every operator sign in the package): the
reference amplitude of a basis state is the wedge of its occupied modes
listed in strictly decreasing order.  Creating with ``f_k`` or removing
with ``fbar_k`` at mode ``k`` therefore carries the sign ``(-1)^r``,
where ``r`` is the number of occupied modes strictly above ``k``.  With
this choice the charged vacua built from the canonical generator
strings have amplitude +1, and the Vandermonde pairing reproduces the
``(-1)^{N(N+1)/2}`` prefactor checked in the tests.

Two components are embedded by interleaving: component ``a`` (1 or 2)
mode ``n`` is the one-component mode ``2n + a - 1``, so all
two-component signs are inherited from the single convention above.

Amplitudes are exact: rationals, or polynomials in formal deformation
variables (:class:`~twomatrix.poly.Poly`).  Nothing here is floating
point; every identity check is symbol for symbol.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ChargeMismatchWarning
from .linalg import det_auto
from .partitions import Partition, shifted_labels
from .poly import Poly, variable
from .schur import TimeSequence, schur_in_times

__all__ = [
    "MayaState",
    "FockVector",
    "apply_f",
    "apply_fbar",
    "apply_op",
    "apply_chain",
    "vacuum_state",
    "charged_vacuum_ket",
    "two_component_vacuum_ket",
    "vev",
    "two_component_vev",
    "maya_from_charge_partition",
    "charge_partition_of_maya",
    "wick_determinant_check",
    "apply_H",
    "apply_H_component",
    "exp_H_vev",
    "exp_Hbar_right_vev",
    "two_component_embed",
    "vandermonde_vev",
    "expected_vandermonde",
    "schur_product_vev",
    "expected_schur_product",
    "SCHUR_PRODUCT_VARIANTS",
]


class MayaState:
    """Occupation set as a finite symmetric difference from the sea."""

    __slots__ = ("diff", "_hash")

    def __init__(self, diff: Iterable[int] = ()):
        object.__setattr__(self, "diff", frozenset(int(d) for d in diff))
        object.__setattr__(self, "_hash", hash(self.diff))

    def __setattr__(self, name, value):
        raise AttributeError("MayaState is immutable")

    def __eq__(self, other):
        return isinstance(other, MayaState) and self.diff == other.diff

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MayaState({sorted(self.diff, reverse=True)})"

    def occupied(self, k: int) -> bool:
        return (k in self.diff) != (k < 0)

    def count_above(self, k: int) -> int:
        """Number of occupied modes strictly above ``k``."""
        n = 0
        if k < 0:
            n += -k - 1  # sea modes k+1 .. -1
            n -= sum(1 for d in self.diff if k < d < 0)
        n += sum(1 for d in self.diff if d >= 0 and d > k)
        return n

    @property
    def charge(self) -> int:
        return sum(1 for d in self.diff if d >= 0) - sum(1 for d in self.diff if d < 0)

    @property
    def energy(self) -> int:
        """Excitation energy above the charged vacuum of the same charge."""
        raw = sum(d for d in self.diff if d >= 0) + sum(-d - 1 for d in self.diff if d < 0)
        c = abs(self.charge)
        return raw - c * (c - 1) // 2

    def component_charge(self, comp: int) -> int:
        p = comp - 1
        plus = sum(1 for d in self.diff if d >= 0 and d % 2 == p)
        minus = sum(1 for d in self.diff if d < 0 and d % 2 == p)
        return plus - minus

    def component_energy(self, comp: int) -> int:
        p = comp - 1
        raw = 0
        for d in self.diff:
            if d % 2 != p:
                continue
            n = d >> 1  # component-level mode index
            raw += n if d >= 0 else -n - 1
        c = abs(self.component_charge(comp))
        return raw - c * (c - 1) // 2


_VACUUM0 = MayaState()


class FockVector:
    """Finite linear combination of Maya states with exact amplitudes."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for state, amp in terms.items():
                if not _is_zero(amp):
                    clean[state] = amp
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @staticmethod
    def basis(state: MayaState, amp=Fraction(1)) -> "FockVector":
        return FockVector({state: amp})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for state, amp in other.terms.items():
            out[state] = out.get(state, 0) + amp
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, factor) -> "FockVector":
        if _is_zero(factor):
            return FockVector()
        return FockVector({s: a * factor for s, a in self.terms.items()})

    def amplitude(self, state: MayaState):
        return self.terms.get(state, 0)

    def charges(self) -> set[int]:
        return {s.charge for s in self.terms}

    def prune(self, keep: Callable[[MayaState], bool]) -> "FockVector":
        return FockVector({s: a for s, a in self.terms.items() if keep(s)})

    def __repr__(self):
        body = ", ".join(f"{s!r}: {a}" for s, a in list(self.terms.items())[:4])
        more = ", ..." if len(self.terms) > 4 else ""
        return f"FockVector({{{body}{more}}})"


def _is_zero(x) -> bool:
    if isinstance(x, Poly):
        return x.is_zero()
    return not x


# -- elementary operators --------------------------------------------------------

def apply_f(k: int, v: FockVector) -> FockVector:
    """Apply the generator ``f_k`` (fills mode k, zero if occupied)."""
    out: dict = {}
    for state, amp in v.terms.items():
        if state.occupied(k):
            continue
        new = MayaState(state.diff ^ {k})
        signed = -amp if state.count_above(k) % 2 else amp
        out[new] = out.get(new, 0) + signed
    return FockVector(out)


def apply_fbar(k: int, v: FockVector) -> FockVector:
    """Apply the generator ``fbar_k`` (empties mode k, zero if empty)."""
    out: dict = {}
    for state, amp in v.terms.items():
        if not state.occupied(k):
            continue
        new = MayaState(state.diff ^ {k})
        signed = -amp if state.count_above(k) % 2 else amp
        out[new] = out.get(new, 0) + signed
    return FockVector(out)


def apply_op(op: tuple[str, int], v: FockVector) -> FockVector:
    kind, k = op
    if kind == "f":
        return apply_f(k, v)
    if kind == "fbar":
        return apply_fbar(k, v)
    raise ValueError(f"unknown generator kind {kind!r}")


def apply_chain(ops: Sequence[tuple[str, int]], v: FockVector) -> FockVector:
    """Apply a product of generators to a ket, rightmost factor first."""
    for op in reversed(ops):
        v = apply_op(op, v)
        if v.is_zero():
            break
    return v


# -- vacua -----------------------------------------------------------------------

def vacuum_state(charge: int) -> MayaState:
    """Maya state of the canonical charge-``charge`` vacuum."""
    if charge >= 0:
        return MayaState(range(0, charge))
    return MayaState(range(charge, 0))


def charged_vacuum_ket(charge: int) -> FockVector:
    """Canonical charged vacuum ket; its amplitude is +1 by convention."""
    return FockVector.basis(vacuum_state(charge))


def two_component_embed(comp: int, n: int) -> int:
    """One-component mode index of component ``comp`` mode ``n``."""
    if comp not in (1, 2):
        raise ValueError("component must be 1 or 2")
    return 2 * n + comp - 1


def _right_vacuum_ops(comp: int, n: int) -> list[tuple[str, int]]:
    """Generator string (left to right) whose product creates the
    component-``comp`` charge-``n`` sector of a right vacuum."""
    if n > 0:
        return [("f", two_component_embed(comp, j)) for j in range(n - 1, -1, -1)]
    if n < 0:
        return [("fbar", two_component_embed(comp, j)) for j in range(n, 0)]
    return []


def _left_vacuum_ops(comp: int, n: int) -> list[tuple[str, int]]:
    """Generator string of the left charged vacuum for one component."""
    if n > 0:
        return [("fbar", two_component_embed(comp, j)) for j in range(0, n)]
    if n < 0:
        return [("f", two_component_embed(comp, j)) for j in range(-1, n - 1, -1)]
    return []


def two_component_vacuum_ket(n1: int, n2: int) -> FockVector:
    """Right charged vacuum with component charges ``(n1, n2)``."""
    ops = _right_vacuum_ops(2, n2) + _right_vacuum_ops(1, n1)
    return apply_chain(ops, FockVector.basis(_VACUUM0))


def vev(charge: int, v: FockVector):
    """Pairing of ``v`` with the left charged vacuum of given charge.

    Equals the coefficient of the canonical charge-``charge`` vacuum
    state.  A charge mismatch is flagged with a warning and returns 0.
    """
    if not v.is_zero() and charge not in v.charges():
        warnings.warn(
            f"vector has charges {sorted(v.charges())}, not {charge}; VEV is 0",
            ChargeMismatchWarning,
            stacklevel=2,
        )
        return 0
    return v.amplitude(vacuum_state(charge))


def two_component_vev(n1: int, n2: int, v: FockVector):
    """Pairing with the two-component left vacuum of charges (n1, n2)."""
    ops = _left_vacuum_ops(1, n1) + _left_vacuum_ops(2, n2)
    w = apply_chain(ops, v)
    return w.amplitude(_VACUUM0)


# -- Maya <-> (charge, partition) ---------------------------------------------------

def maya_from_charge_partition(charge: int, lam: Partition) -> MayaState:
    """Basis state with occupied modes ``{lam_i - i + charge : i >= 1}``."""
    ell = lam.length
    depth = ell + abs(charge) + 1
    explicit = [lam.part(i) - (i + 1) + charge for i in range(depth)]
    floor = explicit[-1] if explicit else -1
    hit = set(explicit)
    diff = {m for m in hit if m >= 0}
    for m in range(min(floor, -1), 0):
        if m not in hit:
            diff.add(m)
    return MayaState(diff)


def charge_partition_of_maya(state: MayaState) -> tuple[int, Partition]:
    """Charge and partition labelling a basis state (inverse of the above)."""
    charge = state.charge
    top = max((d for d in state.diff if d >= 0), default=-1)
    bottom = min((d for d in state.diff), default=0) - 1
    parts = []
    i = 0
    for mode in range(top, bottom - 1, -1):
        if state.occupied(mode):
            i += 1
            parts.append(mode + i - charge)
    while parts and parts[-1] == 0:
        parts.pop()
    return charge, Partition(parts)


# -- Wick determinant ----------------------------------------------------------------

def _apply_combo(combo: Sequence[tuple[object, tuple[str, int]]], v: FockVector) -> FockVector:
    out = FockVector()
    for coeff, op in combo:
        out = out + apply_op(op, v).scale(coeff)
    return out


def wick_determinant_check(
    ws: Sequence[Sequence[tuple[object, int]]],
    wbars: Sequence[Sequence[tuple[object, int]]],
) -> bool:
    """Check the determinant form of Wick's theorem on given combinations.

    ``ws`` holds N linear combinations of ``f`` generators as
    ``(coefficient, mode)`` pairs, ``wbars`` N combinations of ``fbar``
    generators.  The left side ``<0| w_1 .. w_N wbar_N .. wbar_1 |0>``
    is evaluated by direct state propagation, the right side as the
    determinant of the matrix of pair pairings; both are exact.
    """
    n = len(ws)
    if len(wbars) != n:
        raise ValueError("need equally many f and fbar combinations")
    f_combos = [[(c, ("f", k)) for c, k in combo] for combo in ws]
    fbar_combos = [[(c, ("fbar", k)) for c, k in combo] for combo in wbars]

    v = FockVector.basis(_VACUUM0)
    for combo in fbar_combos:  # rightmost factor is wbar_1
        v = _apply_combo(combo, v)
    for combo in reversed(f_combos):
        v = _apply_combo(combo, v)
    lhs = v.amplitude(_VACUUM0)

    pair = [[0] * n for _ in range(n)]
    for j in range(n):
        vj = _apply_combo(fbar_combos[j], FockVector.basis(_VACUUM0))
        for i in range(n):
            pair[i][j] = _apply_combo(f_combos[i], vj).amplitude(_VACUUM0)
    rhs = det_auto(pair) if n else 1
    return lhs == rhs


# -- Hamiltonian flows ----------------------------------------------------------------

def _h_targets(state: MayaState, m: int, comp: int | None) -> list[tuple[int, int]]:
    """(create, destroy) one-component mode pairs hit by one H term.

    For the one-component flow H_m the pairs are (j - m, j); for the
    component flow H^(comp)_m they are (j - 2m, j) restricted to the
    component's parity.  Only finitely many pairs act on a given state.
    """
    step = m if comp is None else 2 * m
    parity = None if comp is None else comp - 1
    holes = [d for d in state.diff if d < 0]
    particles = [d for d in state.diff if d >= 0]
    out = []
    for j in particles:  # destroy a particle
        if parity is not None and j % 2 != parity:
            continue
        c = j - step
        if not state.occupied(c):
            out.append((c, j))
    for c in holes:  # create into a hole
        if parity is not None and c % 2 != parity:
            continue
        j = c + step
        if state.occupied(j) and j != c:
            out.append((c, j))
    if step < 0:
        # destroy in the untouched sea, create above the surface
        for c in range(0, -step):
            if parity is not None and c % 2 != parity:
                continue
            j = c + step
            if not state.occupied(c) and state.occupied(j):
                out.append((c, j))
    # deduplicate (hole/particle loops can meet)
    return sorted(set(out))


def _apply_h_generic(m: int, v: FockVector, comp: int | None) -> FockVector:
    out: dict = {}
    for state, amp in v.terms.items():
        for c, j in _h_targets(state, m, comp):
            mid_sign = -1 if state.count_above(j) % 2 else 1
            mid = MayaState(state.diff ^ {j})
            sign = -mid_sign if mid.count_above(c) % 2 else mid_sign
            new = MayaState(mid.diff ^ {c})
            add = amp if sign > 0 else -amp
            out[new] = out.get(new, 0) + add
    return FockVector(out)


def apply_H(m: int, v: FockVector) -> FockVector:
    """Apply the one-component Hamiltonian ``H_m`` (m nonzero)."""
    if m == 0:
        raise ValueError("H_0 is not defined here")
    return _apply_h_generic(m, v, None)


def apply_H_component(comp: int, m: int, v: FockVector) -> FockVector:
    """Apply the component Hamiltonian ``H^(comp)_m`` (m nonzero)."""
    if m == 0:
        raise ValueError("H_0 is not defined here")
    if comp not in (1, 2):
        raise ValueError("component must be 1 or 2")
    return _apply_h_generic(m, v, comp)


FlowTerm = tuple[object, int, int | None]  # (coefficient, m, component or None)


def _flow_step(v: FockVector, terms: Sequence[FlowTerm]) -> FockVector:
    out = FockVector()
    for coeff, m, comp in terms:
        out = out + _apply_h_generic(m, v, comp).scale(coeff)
    return out


def exp_flow(
    v: FockVector,
    terms: Sequence[FlowTerm],
    keep: Callable[[MayaState], bool] | None = None,
) -> FockVector:
    """Exact action of ``exp(sum coeff * H)`` on ``v``.

    Lowering flows terminate on their own (each application lowers the
    relevant energy).  Raising flows must pass a ``keep`` predicate that
    discards states beyond the computed energy cap; pruned states can
    never contribute to the final pairing, so the result is exact.
    """
    total = v if keep is None else v.prune(keep)
    current = total
    j = 0
    while not current.is_zero():
        j += 1
        current = _flow_step(current, terms).scale(Fraction(1, j))
        if keep is not None:
            current = current.prune(keep)
        total = total + current
        if j > 10000:
            raise RuntimeError("flow expansion failed to terminate")
    return total


def _vacraw(charge: int) -> int:
    c = abs(charge)
    return c * (c - 1) // 2


def _chain_energy_shift(ops: Sequence[tuple[str, int]], start_charge: int) -> tuple[int, int]:
    """Total (energy shift, final charge) of a generator chain applied to
    states of the given charge; uniform across basis states."""
    q = start_charge
    de = 0
    for kind, k in reversed(ops):  # rightmost acts first
        if kind == "f":
            draw = k if k >= 0 else k + 1
            de += draw - (_vacraw(q + 1) - _vacraw(q))
            q += 1
        else:
            draw = -k if k >= 0 else -(k + 1)
            de += draw - (_vacraw(q - 1) - _vacraw(q))
            q -= 1
    return de, q


def exp_H_vev(charge: int, t: TimeSequence, v: FockVector):
    """``<charge| exp(sum_m H_m t_m) |v>`` as an exact scalar.

    The expansion is graded: each ``H_m`` lowers the energy by ``m``, so
    only finitely many orders reach the vacuum.  ``t`` may hold formal
    polynomial variables, in which case the result is a polynomial.
    """
    terms = [(t[k], k, None) for k in t.support()]
    w = exp_flow(v, terms)
    return vev(charge, w)


def exp_Hbar_right_vev(
    charge: int,
    tbar: TimeSequence,
    ops: Sequence[tuple[str, int]],
    sign: int = -1,
):
    """``<charge| (ops) exp(sign * sum_m H_{-m} tbar_m) |0>`` exactly.

    The negative flows raise energy without bound, but only one energy
    shell of the expanded ket can survive the pairing; that shell is
    computed from the generator chain, truncating the exponential
    exactly rather than heuristically.
    """
    de, q = _chain_energy_shift(ops, 0)
    if q != charge:
        return 0
    cap = -de
    if cap < 0:
        return 0
    terms = [(sign * tbar[k], -k, None) for k in tbar.support()]
    w = exp_flow(
        FockVector.basis(_VACUUM0),
        terms,
        keep=lambda s: s.energy <= cap,
    )
    u = apply_chain(ops, w)
    return vev(charge, u)


# -- Vandermonde pairing ---------------------------------------------------------------

def _as_scalar_power(x, k: int):
    if isinstance(x, Poly):
        return x ** k
    if isinstance(x, int):
        return Fraction(x) ** k
    return x ** k


def vandermonde_vev(n_size: int, xs=None, ys=None, n: int = 0, m: int = 0):
    """Pairing of N generating-function factors between charged vacua.

    Evaluates ``<N+n, -N-m| prod_i f1(x_i) fbar2(y_i) |n, -m>`` with the
    generating functions truncated to the finitely many modes that can
    connect the two charge sectors (a window of exactly N modes per
    factor, computed from the charges).  With ``xs``/``ys`` omitted the
    result is an exact polynomial in formal variables.
    """
    N = n_size
    if xs is None:
        xs = [variable(("x", i)) for i in range(1, N + 1)]
    if ys is None:
        ys = [variable(("y", i)) for i in range(1, N + 1)]
    v = two_component_vacuum_ket(n, -m)
    # product ordered i = 1..N left to right; apply factors right to left
    for i in range(N - 1, -1, -1):
        acc = FockVector()
        for b in range(-m - N, -m):  # component-2 modes that can act
            w = apply_fbar(two_component_embed(2, b), v)
            if not w.is_zero():
                acc = acc + w.scale(_as_scalar_power(ys[i], -b - 1))
        v = acc
        acc = FockVector()
        for a in range(n, n + N):  # component-1 modes that can act
            w = apply_f(two_component_embed(1, a), v)
            if not w.is_zero():
                acc = acc + w.scale(_as_scalar_power(xs[i], a))
        v = acc
        if v.is_zero():
            break
    return two_component_vev(N + n, -N - m, v)


def expected_vandermonde(n_size: int, xs=None, ys=None, n: int = 0, m: int = 0):
    """Closed form ``(-1)^{N(N+1)/2} Vdm(x) Vdm(y) prod x_i^n (-y_i)^m``."""
    N = n_size
    if xs is None:
        xs = [variable(("x", i)) for i in range(1, N + 1)]
    if ys is None:
        ys = [variable(("y", i)) for i in range(1, N + 1)]
    out = -1 if (N * (N + 1) // 2) % 2 else 1
    for i in range(N):
        for j in range(i + 1, N):
            out = out * (xs[i] - xs[j])
            out = out * (ys[i] - ys[j])
    for i in range(N):
        out = out * _as_scalar_power(xs[i], n)
        out = out * _as_scalar_power(-1 * ys[i], m)
    return out


# -- Schur-product pairings --------------------------------------------------------------

SCHUR_PRODUCT_VARIANTS = ("++", "--", "+-", "-+")


def _symbol_times(family: str, kmax: int) -> TimeSequence:
    return TimeSequence({k: variable((family, k)) for k in range(1, max(kmax, 1) + 1)})


def schur_product_vev(n_size: int, lam: Partition, mu: Partition, variant: str = "++"):
    """Exact two-component VEV whose value is a product of Schur functions.

    The four variants place the deformation flows on different sides
    and pick generator modes accordingly; the returned value is an
    exact polynomial in the formal families ``t1``, ``t2`` (positive
    flows) and ``b1``, ``b2`` (negative flows).  Compare against
    :func:`expected_schur_product`.
    """
    N = n_size
    if variant not in SCHUR_PRODUCT_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    h = shifted_labels(lam, N)
    hp = shifted_labels(mu, N)
    t1 = _symbol_times("t1", lam.weight)
    t2 = _symbol_times("t2", mu.weight)
    b1 = _symbol_times("b1", lam.weight)
    b2 = _symbol_times("b2", mu.weight)

    if variant == "++":
        ops = []
        for i in range(N):
            ops.append(("f", two_component_embed(1, h[i])))
            ops.append(("fbar", two_component_embed(2, -hp[i] - 1)))
        left = [(t1[k], k, 1) for k in t1.support()] + [(-t2[k], k, 2) for k in t2.support()]
        right: list[FlowTerm] = []
        caps = (0, 0)
    elif variant == "--":
        ops = []
        for i in range(N):
            ops.append(("f", two_component_embed(1, N - h[i] - 1)))
            ops.append(("fbar", two_component_embed(2, hp[i] - N)))
        left = []
        right = [(b2[k], -k, 2) for k in b2.support()] + [(-b1[k], -k, 1) for k in b1.support()]
        caps = (lam.weight, mu.weight)
    elif variant == "+-":
        ops = []
        for i in range(N):
            ops.append(("f", two_component_embed(1, h[i])))
            ops.append(("fbar", two_component_embed(2, hp[i] - N)))
        left = [(t1[k], k, 1) for k in t1.support()]
        right = [(b2[k], -k, 2) for k in b2.support()]
        caps = (0, mu.weight)
    else:  # "-+"
        ops = []
        for i in range(N):
            ops.append(("f", two_component_embed(1, N - h[i] - 1)))
            ops.append(("fbar", two_component_embed(2, -hp[i] - 1)))
        left = [(-t2[k], k, 2) for k in t2.support()]
        right = [(-b1[k], -k, 1) for k in b1.support()]
        caps = (lam.weight, 0)

    cap1, cap2 = caps
    v = FockVector.basis(_VACUUM0)
    if right:
        v = exp_flow(
            v,
            right,
            keep=lambda s: s.component_energy(1) <= cap1 and s.component_energy(2) <= cap2,
        )
    v = apply_chain(ops, v)
    if left:
        v = exp_flow(v, left)
    return two_component_vev(N, -N, v)


def expected_schur_product(n_size: int, lam: Partition, mu: Partition, variant: str = "++"):
    """Schur-product value the pairing should reproduce, with its sign.

    The mixed variants carry ``(-1)^N`` instead of ``(-1)^{N(N+1)/2}``;
    the difference is the reversal of the fbar mode order between the
    two generator chains.
    """
    N = n_size
    t1 = _symbol_times("t1", lam.weight)
    t2 = _symbol_times("t2", mu.weight)
    b1 = _symbol_times("b1", lam.weight)
    b2 = _symbol_times("b2", mu.weight)
    if variant == "++":
        sign = -1 if (N * (N + 1) // 2) % 2 else 1
        val = schur_in_times(lam, t1) * schur_in_times(mu, t2)
    elif variant == "--":
        sign = -1 if (N * (N + 1) // 2) % 2 else 1
        val = schur_in_times(lam, b1) * schur_in_times(mu, b2)
    elif variant == "+-":
        sign = -1 if N % 2 else 1
        val = schur_in_times(lam, t1) * schur_in_times(mu, b2)
    elif variant == "-+":
        sign = -1 if N % 2 else 1
        val = schur_in_times(lam, b1) * schur_in_times(mu, t2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return sign * Poly.coerce(val) if isinstance(val, (int, Fraction)) else sign * val
