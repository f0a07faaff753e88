"""Monogenic orders O[s] and their membership/equality machinery.

An order is the O-span of the power basis 1, s, ..., s^{d-1} of an element
s that is integral over the tagged ring (O = F_q[x], or the T-integers
O_{K,T}) and separable of degree d over K.  Membership of t in O[s] is
exact linear algebra: express t in the power basis and inspect coordinate
denominators.

Equality O[s] = O[t] is mutual membership; a non-integral t is reported
with a distinguishable diagnostic rather than a silent False, since the
underlying problem presumes integrality.

The quadratic symmetric backend (O = F_q[x+y, xy] inside F_q[x, y]) gets a
dedicated membership routine: for u with the swap automorphism sigma, u is
in O[w] iff B = (u - sigma(u))/(w - sigma(w)) divides exactly and both B
and A = u - B*w rewrite in the elementary symmetric generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .bivar import BivarPoly
from .funcfield import PlaceSet, RatFunc, is_T_integer, is_T_unit
from .linalg import solve_in_span
from .tower import AlgElem, discriminant, frobenius_power, minimal_polynomial


class RingTag:
    """The coefficient ring: O = F_q[x] (places = None) or O_{K,T}."""

    __slots__ = ("places",)

    def __init__(self, places: Optional[PlaceSet] = None):
        self.places = places

    def contains(self, a: RatFunc) -> bool:
        if self.places is None:
            return a.is_polynomial()
        return is_T_integer(a, self.places)

    def is_unit(self, a: RatFunc) -> bool:
        if a.is_zero():
            return False
        if self.places is None:
            return a.is_constant()
        return is_T_unit(a, self.places)

    def __repr__(self):
        return "F_q[x]" if self.places is None else f"O_K,{self.places!r}"


POLY_RING = RingTag()


class MonOrder:
    """O[s] for an integral separable generator s."""

    def __init__(self, generator: AlgElem, ring: RingTag = POLY_RING):
        self.generator = generator
        self.ring = ring
        self.minpoly, self.d = minimal_polynomial(generator)
        for c in self.minpoly:
            if not ring.contains(c):
                raise ValueError(
                    "generator is not integral over the tagged ring "
                    f"(minimal polynomial coefficient {c!r})"
                )
        tower = generator.tower
        self._columns = []
        power = tower.from_base(1)
        for _ in range(self.d):
            self._columns.append(power.coords())
            power = power * generator

    def __repr__(self):
        return f"O[{self.generator!r}]"


def express_in_power_basis(t: AlgElem, order: MonOrder) -> Optional[Tuple[RatFunc, ...]]:
    """Coordinates c_0..c_{d-1} over K with t = sum c_i s^i, or None when
    t lies outside K(s)."""
    tower = order.generator.tower
    if t.tower is not tower:
        raise ValueError("element and order live in different towers")
    ctx = tower.base
    sol = solve_in_span(
        order._columns, t.coords(), RatFunc.of(0, ctx), RatFunc.of(1, ctx)
    )
    if sol is None:
        return None
    return tuple(sol)


def in_order(t: AlgElem, order: MonOrder) -> bool:
    coords = express_in_power_basis(t, order)
    if coords is None:
        return False
    return all(order.ring.contains(c) for c in coords)


@dataclass(frozen=True)
class OrdersEqual:
    equal: bool
    reason: str

    def __bool__(self):
        return self.equal


def orders_equal(t: AlgElem, order: MonOrder) -> OrdersEqual:
    """Decide O[t] = O[s] for the order O[s]."""
    ring = order.ring
    g, d = minimal_polynomial(t)
    if d != order.d:
        return OrdersEqual(False, f"degree mismatch: [K(t):K]={d} != {order.d}")
    if not all(ring.contains(c) for c in g):
        return OrdersEqual(False, "t is not integral over the tagged ring")
    if not in_order(t, order):
        return OrdersEqual(False, "t is outside O[s]")
    order_t = MonOrder(t, ring)
    if not in_order(order.generator, order_t):
        return OrdersEqual(False, "s is outside O[t]")
    return OrdersEqual(True, "mutual membership")


def disc_form_predicate(t: AlgElem, T: PlaceSet) -> bool:
    """t integral over O_{K,T} with discr_K(t) a T-unit."""
    ring = RingTag(T)
    g, d = minimal_polynomial(t)
    if d < 2:
        raise ValueError("predicate needs degree >= 2")
    if not all(ring.contains(c) for c in g):
        return False
    return is_T_unit(discriminant(t), T)


@dataclass(frozen=True)
class GeneratorRelation:
    """Witness of t = a * t_i^q + b with q = p^e."""

    a: RatFunc
    b: RatFunc
    q: int
    e: int
    disc_unit_ok: bool  # a^{d(d-1)} * D^{q-1} is a unit of the tagged ring
    b_in_ring: bool


def fit_generator_relation(
    t: AlgElem, t_i: AlgElem, max_e: int = 8, ring: RingTag = POLY_RING
) -> Optional[GeneratorRelation]:
    """Search q = p^e, e = 0..max_e, for a relation t = a*t_i^q + b with
    a, b in K; the smallest successful e wins (a search policy, not a
    canonical form).  Failure is a search-horizon report, not a refutation.
    """
    tower = t.tower
    if t_i.tower is not tower:
        raise ValueError("elements of different towers")
    ctx = tower.base
    zero, one = RatFunc.of(0, ctx), RatFunc.of(1, ctx)
    one_vec = tower.from_base(1).coords()
    t_vec = t.coords()
    _, d = minimal_polynomial(t_i)
    disc_i = discriminant(t_i) if d >= 2 else None
    w = t_i
    for e in range(max_e + 1):
        if e > 0:
            w = frobenius_power(w, 1)
        sol = solve_in_span([w.coords(), one_vec], t_vec, zero, one)
        if sol is not None and not sol[0].is_zero():
            a, b = sol
            q = ctx.p ** e
            ok = False
            if disc_i is not None:
                ok = ring.is_unit((a ** (d * (d - 1))) * (disc_i ** (q - 1)))
            return GeneratorRelation(a, b, q, e, ok, ring.contains(b))
    return None


# ---------------------------------------------------------------------------
# quadratic symmetric backend: O = F_q[x+y, xy] in L = F_q(x, y)
# ---------------------------------------------------------------------------

@dataclass
class SymMembership:
    contained: bool
    reason: str
    lin: Optional[BivarPoly] = None    # B in e1, e2
    const: Optional[BivarPoly] = None  # A in e1, e2


def sym_in_order(u: BivarPoly, w: BivarPoly) -> SymMembership:
    """u in O[w] for the symmetric base ring, where sigma swaps x and y.

    For nonsymmetric w (so [K(w):K] = 2) this solves u = A + B*w by applying
    sigma and eliminating: B = (u - sigma u)/(w - sigma w) must divide
    exactly and both B and A = u - B*w must be symmetric polynomials.
    """
    sw = w.swap()
    dw = w - sw
    if dw.is_zero():
        # w is in K: O[w] = O (w integral means w in O); u must be symmetric
        if not u.is_symmetric():
            return SymMembership(False, "w generates O but u is not symmetric")
        dec = u.sym_decompose()
        return SymMembership(True, "both inside the base ring", None, dec)
    du = u - u.swap()
    if du.is_zero():
        b = BivarPoly(u.ctx, {})
        a = u.sym_decompose()
        return SymMembership(True, "u symmetric", b.sym_decompose(), a)
    if du.total_degree() < dw.total_degree():
        return SymMembership(False, "degree obstruction: B would not be polynomial")
    b = du.divide_exact(dw)
    if b is None:
        return SymMembership(False, "(u - sigma u)/(w - sigma w) is not a polynomial")
    b_sym = b.sym_decompose()
    if b_sym is None:
        return SymMembership(False, "B is not symmetric")
    a = u - b * w
    a_sym = a.sym_decompose()
    if a_sym is None:
        return SymMembership(False, "A = u - B*w is not symmetric")
    return SymMembership(True, "u = A + B*w with A, B in O", b_sym, a_sym)


def sym_orders_equal(u: BivarPoly, w: BivarPoly) -> OrdersEqual:
    # mutual membership makes both difference quotients polynomial, which
    # forces equal degrees of u - sigma(u) and w - sigma(w); cheap reject
    du = u - u.swap()
    dw = w - w.swap()
    if du.is_zero() != dw.is_zero():
        return OrdersEqual(False, "one side generates O, the other does not")
    if not du.is_zero() and du.total_degree() != dw.total_degree():
        return OrdersEqual(False, "conjugate-difference degree mismatch")
    m1 = sym_in_order(u, w)
    if not m1.contained:
        return OrdersEqual(False, f"u outside O[w]: {m1.reason}")
    m2 = sym_in_order(w, u)
    if not m2.contained:
        return OrdersEqual(False, f"w outside O[u]: {m2.reason}")
    return OrdersEqual(True, "mutual membership")
