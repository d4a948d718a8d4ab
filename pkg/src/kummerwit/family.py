"""The definable family C_lambda and its cardinality growth, plus the
polynomial-in-powers complement.

C_lambda collects the ring elements x for which some polynomial y satisfies
y^2 * lambda = x * (x + lambda) * (x + lambda * s^N); scaling a curve point
(x0, y0) by lambda lands (lambda*x0, lambda*y0) in that equation, so enough
multiples of a non-torsion point force the family beyond any target size.

polynomial_in_powers(f, n) returns a monic complement fbar with
f * fbar in F_q[s^n], built from the minimal polynomials of the n-th powers
of the roots of f: for each irreducible factor h of multiplicity m, the
factor q_h(s^n) (q_h the minimal polynomial of alpha^n for a root alpha of
h) is included with the least exponent k such that h^m divides q_h(s^n)^k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base_algebra.fields import FF, FieldCtx
from .base_algebra.poly import Poly, all_polys, factor, poly_lcm
from .base_algebra.ratfunc import RatFunc, ratfunc_sqrt
from .curve_ff import CurveParams, ECPoint, ec_add, is_torsion
from .errors import DistinctnessFailure, TorsionPoint, ZeroInput


@dataclass
class FamilyResult:
    lam: Poly
    N: int
    deg_bound: int
    members: list[Poly]
    exhaustive: bool
    witnesses: dict  # member -> the recovered polynomial y

    def as_record(self) -> dict:
        from .base_algebra.grammar import format_poly
        return {
            "lambda": format_poly(self.lam),
            "curve_exponent": self.N,
            "deg_bound": self.deg_bound,
            "members": [format_poly(m) for m in self.members],
            "witnesses": {format_poly(m): format_poly(y) for m, y in self.witnesses.items()},
            "exhaustive": self.exhaustive,
        }


def membership_witness(x: Poly, lam: Poly, curve: CurveParams):
    """The polynomial y with y^2*lam = x(x+lam)(x+lam*s^N), or None."""
    ctx = curve.ctx
    if lam.is_zero():
        # y^2 * 0 = x^3 forces x = 0, witnessed by y = 0
        return Poly.zero(ctx) if x.is_zero() else None
    sN = Poly.monomial(ctx, curve.N)
    rhs_poly = x * (x + lam) * (x + lam * sN)
    val = RatFunc(rhs_poly, lam)
    if val.is_zero():
        return Poly.zero(ctx)
    y = ratfunc_sqrt(val)
    if y is None or not y.is_polynomial():
        return None
    return y.num


def family_members(lam: Poly, curve: CurveParams, deg_bound: int) -> FamilyResult:
    """All ring elements of degree <= deg_bound in C_lambda, with witnesses."""
    ctx = curve.ctx
    if lam.is_zero():
        zero = Poly.zero(ctx)
        return FamilyResult(lam, curve.N, deg_bound, [zero], True, {zero: zero})
    members: list[Poly] = []
    witnesses: dict = {}
    for x in all_polys(ctx, deg_bound):
        y = membership_witness(x, lam, curve)
        if y is not None:
            members.append(x)
            witnesses[x] = y
    members.sort(key=Poly.sort_key)
    return FamilyResult(lam, curve.N, deg_bound, members, True, witnesses)


def family_grow(pt: ECPoint, curve: CurveParams, n_target: int) -> tuple[Poly, FamilyResult]:
    """Scale the multiples of a non-torsion point into the family until it
    holds at least n_target members.

    lambda is the least common multiple of the coordinate denominators of
    P, 2P, ..., n_target*P; the member bound is the largest degree of the
    scaled x-coordinates.
    """
    if n_target < 1:
        raise ValueError("n_target must be >= 1")
    if is_torsion(pt, curve):
        raise TorsionPoint("family growth needs a point outside the torsion set")
    ctx = curve.ctx
    multiples: list[ECPoint] = []
    acc = ECPoint.infinity()
    for i in range(1, n_target + 1):
        acc = ec_add(acc, pt, curve)
        if acc.is_infinity or acc in multiples:
            raise DistinctnessFailure(f"multiple {i}P collided; the point is torsion")
        multiples.append(acc)
    lam = Poly.one(ctx)
    for mp in multiples:
        lam = poly_lcm(lam, mp.x.den)
        lam = poly_lcm(lam, mp.y.den)
    scaled: list[Poly] = []
    for mp in multiples:
        sx = RatFunc.from_poly(lam) * mp.x
        assert sx.is_polynomial()
        scaled.append(sx.num)
    bound = max(max((sx.degree() for sx in scaled if not sx.is_zero()), default=0),
                0)
    result = family_members(lam, curve, bound)
    for sx in scaled:
        assert sx in result.witnesses, "scaled multiple missing from the family"
    assert len(result.members) >= n_target, "family smaller than the target size"
    return lam, result


def polynomial_in_powers(f: Poly, n: int) -> Poly:
    """Monic fbar != 0 with f * fbar in F_q[s^n]."""
    if f.is_zero():
        raise ZeroInput("f must be nonzero")
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = f.ctx
    if f.is_constant():
        return Poly.one(ctx)
    multiple = Poly.one(ctx)
    for h, mult in factor(f):
        qh = _minimal_poly_of_root_power(h, n)
        qh_n = qh.compose_monomial(n)
        # least k with h^mult dividing qh(s^n)^k
        w = _poly_valuation(qh_n, h)
        k = -(-mult // w)
        multiple = multiple * qh_n ** k
    quot, rem = divmod(multiple, f)
    assert rem.is_zero(), "complement construction must divide exactly"
    return quot.monic()


def _poly_valuation(g: Poly, h: Poly) -> int:
    v = 0
    while True:
        q, r = divmod(g, h)
        if not r.is_zero():
            return v
        v += 1
        g = q


def _minimal_poly_of_root_power(h: Poly, n: int) -> Poly:
    """Minimal polynomial over F_q of alpha^n, alpha a root of irreducible h,
    computed by linear algebra in the quotient field F_q[s]/(h)."""
    ctx = h.ctx
    d = h.degree()
    beta = Poly.gen(ctx).powmod(n, h)
    # rows: 1, beta, beta^2, ... as coefficient vectors of length d
    rows: list[list[FF]] = []
    cur = Poly.one(ctx)
    for _ in range(d + 1):
        vec = list(cur.coeffs) + [ctx.zero()] * (d - len(cur.coeffs))
        rows.append(vec)
        dependency = _solve_dependency(rows, ctx)
        if dependency is not None:
            return Poly(ctx, dependency).monic()
        cur = (cur * beta) % h
    raise AssertionError("minimal polynomial search exceeded the field degree")


def _solve_dependency(rows: list[list[FF]], ctx: FieldCtx):
    """Coefficients c_0..c_k (c_k = 1) with sum c_i rows[i] = 0, if they exist
    with the last row pivotal; Gaussian elimination over F_q."""
    k = len(rows) - 1
    d = len(rows[0])
    # solve rows[k] = sum_{i<k} x_i rows[i]
    mat = [[rows[i][j] for i in range(k)] + [rows[k][j]] for j in range(d)]
    ncols = k
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, d) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][col].inv()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(d):
            if i != r and mat[i][col]:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    # consistent iff no row has zero coefficients but nonzero rhs
    for i in range(r, d):
        if mat[i][ncols]:
            return None
    solution = [ctx.zero()] * ncols
    for row_idx, col in enumerate(pivots):
        solution[col] = mat[row_idx][ncols]
    return [-c for c in solution] + [ctx.one()]
