"""Rational functions over F_q(s), always kept in canonical reduced form.

Canonical form: denominator monic and nonzero, gcd(num, den) = 1, and the
zero element is 0/1.  n-th power membership and square roots are decided by
squarefree decomposition of numerator and denominator (all exponents must be
divisible) together with an n-th power test on the leading unit in F_q.
"""

from __future__ import annotations

from ..errors import ZeroInput
from .fields import FF, FieldCtx
from .poly import Poly, poly_gcd, squarefree_decomposition


class RatFunc:
    """Element of F_q(s) as a reduced fraction num/den."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        if den is None:
            den = Poly.one(num.ctx)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = num, Poly.one(num.ctx)
        elif reduce:
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num // g, den // g
            if not den.is_monic():
                scale = den.lc().inv()
                num, den = num.scale(scale), den.scale(scale)
        self.num = num
        self.den = den

    @property
    def ctx(self) -> FieldCtx:
        return self.num.ctx

    @classmethod
    def from_poly(cls, f: Poly) -> "RatFunc":
        return cls(f, Poly.one(f.ctx), reduce=False)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "RatFunc":
        return cls(Poly.zero(ctx), Poly.one(ctx), reduce=False)

    @classmethod
    def one(cls, ctx: FieldCtx) -> "RatFunc":
        return cls(Poly.one(ctx), Poly.one(ctx), reduce=False)

    @classmethod
    def gen(cls, ctx: FieldCtx) -> "RatFunc":
        return cls(Poly.gen(ctx), Poly.one(ctx), reduce=False)

    @classmethod
    def const(cls, ctx: FieldCtx, c) -> "RatFunc":
        return cls(Poly.const(ctx, c), Poly.one(ctx), reduce=False)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def sort_key(self):
        return (self.num.sort_key(), self.den.sort_key())

    def __repr__(self):
        from .grammar import format_ratfunc
        return format_ratfunc(self)

    # -- field operations -------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduce=False)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inv() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def scale(self, c: FF) -> "RatFunc":
        return RatFunc(self.num.scale(c), self.den)

    def v_infinity(self) -> int:
        """Valuation at the degree place: deg(den) - deg(num)."""
        if self.is_zero():
            raise ZeroInput("valuation of zero is undefined")
        return self.den.degree() - self.num.degree()

    def leading_unit(self) -> FF:
        """lc(num)/lc(den); den is monic so this is lc(num)."""
        if self.is_zero():
            raise ZeroInput("leading unit of zero")
        return self.num.lc()


def _canonical_sign(g: RatFunc) -> RatFunc:
    """Of g and -g, the representative whose numerator's leading coefficient
    compares least (for a prime field: the monic-leading choice when possible)."""
    if g.is_zero():
        return g
    neg = -g
    return g if g.num.lc().coeffs <= neg.num.lc().coeffs else neg


def nth_power_exponents_ok(f: RatFunc, n: int) -> bool:
    """Whether every finite place valuation of f is divisible by n."""
    for part in (f.num, f.den):
        if part.is_constant():
            continue
        for _, e in squarefree_decomposition(part):
            if e % n != 0:
                return False
    return True


def is_nth_power(f: RatFunc, n: int) -> bool:
    """Exact membership of f in (F_q(s))^n (zero counts)."""
    if f.is_zero():
        return True
    return nth_power_exponents_ok(f, n) and f.leading_unit().is_nth_power(n)


def ratfunc_sqrt(f: RatFunc):
    """g with g*g = f if f is a square in F_q(s), else None.

    Decided by squarefree decomposition of num and den (all exponents even)
    plus squareness of the leading unit; the returned representative has
    the canonically least leading coefficient (monic over a prime field).
    """
    ctx = f.ctx
    if f.is_zero():
        return RatFunc.zero(ctx)
    c = f.leading_unit()
    root_c = c.sqrt()
    if root_c is None:
        return None
    half_num = Poly.one(ctx)
    for g, e in squarefree_decomposition(f.num) if not f.num.is_constant() else []:
        if e % 2 != 0:
            return None
        half_num = half_num * g ** (e // 2)
    half_den = Poly.one(ctx)
    for g, e in squarefree_decomposition(f.den) if not f.den.is_constant() else []:
        if e % 2 != 0:
            return None
        half_den = half_den * g ** (e // 2)
    root = RatFunc(half_num.scale(root_c), half_den, reduce=False)
    return _canonical_sign(root)


def poly_subs_monomial(f: RatFunc, k: int) -> RatFunc:
    """Substitute s -> s^k in a rational function."""
    return RatFunc(f.num.compose_monomial(k), f.den.compose_monomial(k))
