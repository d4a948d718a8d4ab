"""Constructive comaximality witnesses over F_q[s] with independent verifiers.

The primitive predicates are NZU (neither zero nor a unit: degree >= 1) and
CM (comaximal: an extended-gcd certificate u*f + v*g = 1).  On top of them:

- coprime_element: a monic irreducible dividing no nonzero element of a set;
- comaximal_shift: g = a*M*c making every 1 + a_i*g a nonzero non-unit,
  comaximal with a, and pairwise comaximal;
- injection_witness: the seven-element tuple (g, m, c, d, u, g', m')
  whose clauses force an injection from A into B, plus the verifier that
  rechecks every clause and reconstructs the injection;
- the addition graph (disjoint shifted union, so cardinalities add) and the
  multiplication graph (the set {beta*y + alpha*x}, so cardinalities
  multiply);
- axiom_instance_check: finite-set instances of the five arithmetic axiom
  schemes, with k modelled by canonical k-element subsets of the ring.

Builders and verifiers are deliberately separate code paths: verifiers use
only extended gcd and set operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .base_algebra.fields import FieldCtx
from .base_algebra.poly import (Poly, irreducibles_stream, poly_ext_gcd,
                                ring_elements)
from .errors import SizeMismatch, UnitA, ZeroInA


def is_nzu(f: Poly) -> bool:
    """Neither zero nor a unit: in F_q[s] exactly the polynomials of degree >= 1."""
    return not f.is_constant()


def are_comaximal(f: Poly, g: Poly) -> bool:
    """(f) + (g) = R, certified by extended gcd."""
    if f.is_zero() and g.is_zero():
        return False
    d, u, v = poly_ext_gcd(f, g)
    assert u * f + v * g == d
    return d.is_one()


def divides(f: Poly, g: Poly) -> bool:
    """f | g (everything divides zero; zero divides only zero)."""
    if f.is_zero():
        return g.is_zero()
    return (g % f).is_zero()


def coprime_element(elements: list[Poly], ctx: FieldCtx) -> Poly:
    """A monic irreducible dividing no nonzero member of the set."""
    nonzero = [a for a in elements if not a.is_zero()]
    for cand in irreducibles_stream(ctx):
        if all(not divides(cand, a) for a in nonzero):
            for a in nonzero:
                assert poly_ext_gcd(cand, a)[0].is_one()
            return cand
    raise AssertionError("unreachable: infinitely many irreducibles")


def comaximal_shift(elements: list[Poly], a: Poly, ctx: FieldCtx) -> Poly:
    """g = a*M*c with c a multiple of the squared pairwise differences and M
    a power of s of the least degree making every 1 + a_i*g nonconstant.

    Postconditions (certified by extended gcd): each 1 + a_i*g is a nonzero
    non-unit, comaximal with a, and the 1 + a_i*g are pairwise comaximal.
    """
    items = sorted(set(elements), key=Poly.sort_key)
    if any(e.is_zero() for e in items):
        raise ZeroInA("the set must not contain zero")
    if a.is_zero() or a.is_constant():
        raise UnitA("a must be neither zero nor a unit")
    one = Poly.one(ctx)
    c = one
    for i, ai in enumerate(items):
        for j, aj in enumerate(items):
            if i != j:
                c = c * (ai - aj) ** 2
    power = 0
    while True:
        g = a * Poly.monomial(ctx, power) * c
        shifted = [one + ai * g for ai in items]
        if all(is_nzu(t) for t in shifted):
            break
        power += 1
    for t in shifted:
        assert are_comaximal(a, t)
    for i in range(len(shifted)):
        for j in range(i + 1, len(shifted)):
            assert are_comaximal(shifted[i], shifted[j])
    return g


@dataclass
class InjectionWitness:
    """Witness tuple for the injection sentence over a pair of finite sets.

    disjunct is 'subset' when A is a subset of B (no construction needed)
    and 'tuple' when the seven-element construction below applies.
    """

    disjunct: str
    g: Poly | None = None
    m: Poly | None = None
    c: Poly | None = None
    d: Poly | None = None
    u: Poly | None = None
    g2: Poly | None = None
    m2: Poly | None = None

    def as_record(self) -> dict:
        from .base_algebra.grammar import format_poly
        rec = {"disjunct": self.disjunct}
        for name in ("g", "m", "c", "d", "u", "g2", "m2"):
            val = getattr(self, name)
            if val is not None:
                rec[name] = format_poly(val)
        return rec


def _first_outside(exclude: set[Poly], ctx: FieldCtx) -> Poly:
    return next(e for e in ring_elements(ctx) if e not in exclude)


def injection_witness(set_a: list[Poly], set_b: list[Poly], ctx: FieldCtx) -> InjectionWitness:
    """Build a witness that |A| <= |B| in the finite-set semantics.

    Follows the proof order: choose c, d outside A, B; u a nonzero non-unit
    multiple of all differences of A; g making the 1 + g(a_i - c) pairwise
    comaximal non-units; g' doing the same for u and the 1 + g'(b_i - d);
    m, m' by the Chinese Remainder Theorem.
    """
    a_items = sorted(set(set_a), key=Poly.sort_key)
    b_items = sorted(set(set_b), key=Poly.sort_key)
    if set(a_items) <= set(b_items):
        return InjectionWitness("subset")
    if len(a_items) > len(b_items):
        raise SizeMismatch(f"|A| = {len(a_items)} exceeds |B| = {len(b_items)}")
    one = Poly.one(ctx)
    s = Poly.gen(ctx)
    c = _first_outside(set(a_items), ctx)
    d = _first_outside(set(b_items), ctx)
    u = one
    for i, ai in enumerate(a_items):
        for j, aj in enumerate(a_items):
            if i < j:
                u = u * (ai - aj)
    if u.is_constant():
        u = u * s  # keep u a nonzero non-unit even when all differences are units
    b_images = b_items[: len(a_items)]
    g = comaximal_shift([ai - c for ai in a_items], s, ctx)
    g2 = comaximal_shift([bi - d for bi in b_images], u, ctx)
    from .base_algebra.poly import crt
    m = crt([(bi, one + g * (ai - c)) for ai, bi in zip(a_items, b_images)])
    m2 = crt([(ai, one + g2 * (bi - d)) for ai, bi in zip(a_items, b_images)])
    return InjectionWitness("tuple", g=g, m=m, c=c, d=d, u=u, g2=g2, m2=m2)


def verify_injection(w: InjectionWitness, set_a: list[Poly], set_b: list[Poly]) -> bool:
    """Independent recheck of every clause, reconstructing the injection.

    For the tuple disjunct: u != 0; c outside A; d outside B; each
    1 + g(x - c) a nonzero non-unit; pairwise comaximal; all differences of
    A divide u; and every x in A has some y in B with 1 + g(x-c) | m - y,
    1 + g'(y-d) a non-unit dividing m' - x but not u.  The proof of
    injectivity shows no y can serve two distinct x, so the matched-y sets
    must be nonempty and pairwise disjoint.
    """
    a_items = sorted(set(set_a), key=Poly.sort_key)
    b_items = sorted(set(set_b), key=Poly.sort_key)
    if w.disjunct == "subset":
        return set(a_items) <= set(b_items)
    if w.u is None or w.u.is_zero():
        return False
    if w.c in set(a_items) or w.d in set(b_items):
        return False
    one = Poly.one(w.u.ctx)
    moduli = {x: one + w.g * (x - w.c) for x in a_items}
    for t in moduli.values():
        if not is_nzu(t):
            return False
    mod_list = list(moduli.values())
    for i in range(len(mod_list)):
        for j in range(i + 1, len(mod_list)):
            if not are_comaximal(mod_list[i], mod_list[j]):
                return False
    for x1 in a_items:
        for x2 in a_items:
            if x1 != x2 and not divides(x1 - x2, w.u):
                return False
    matches: dict[Poly, list[Poly]] = {}
    for x in a_items:
        found = []
        for y in b_items:
            link = one + w.g2 * (y - w.d)
            if (divides(moduli[x], w.m - y) and is_nzu(link)
                    and divides(link, w.m2 - x) and not divides(link, w.u)):
                found.append(y)
        if not found:
            return False
        matches[x] = found
    items = list(a_items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if set(matches[items[i]]) & set(matches[items[j]]):
                return False  # a shared image would contradict injectivity
    return True


# -- finite-set graphs of addition and multiplication ---------------------------------


def disjoint_shift(f1: list[Poly], f2: list[Poly], ctx: FieldCtx) -> Poly:
    """A monomial x with F1 and F2 + x disjoint, by increasing degree."""
    s1, s2 = set(f1), set(f2)
    k = 0
    while True:
        x = Poly.monomial(ctx, k)
        if not (s1 & {b + x for b in s2}):
            return x
        k += 1


def gamma_plus_check(f1: list[Poly], f2: list[Poly], f3: list[Poly],
                     ctx: FieldCtx) -> bool:
    """Finite-set semantics of the addition graph: |F1| + |F2| = |F3|.

    The disjointifying shift always exists and is produced by
    disjoint_shift; equipotence between finite sets is size equality.
    """
    s1, s2, s3 = set(f1), set(f2), set(f3)
    x = disjoint_shift(f1, f2, ctx)
    union = s1 | {b + x for b in s2}
    assert len(union) == len(s1) + len(s2)
    return len(union) == len(s3)


@dataclass
class GammaTimesWitness:
    alpha: Poly
    beta: Poly
    product_set: list[Poly]

    def as_record(self) -> dict:
        from .base_algebra.grammar import format_poly
        return {"alpha": format_poly(self.alpha), "beta": format_poly(self.beta),
                "product_set": [format_poly(v) for v in self.product_set]}


def gamma_times_witness(f1: list[Poly], f2: list[Poly], ctx: FieldCtx) -> GammaTimesWitness:
    """alpha, beta comaximal non-units avoiding all intra-set differences,
    with the product set {beta*y + alpha*x}; its size is |F1| * |F2|."""
    s1 = sorted(set(f1), key=Poly.sort_key)
    s2 = sorted(set(f2), key=Poly.sort_key)
    if not s1 or not s2:
        raise ValueError("gamma_times_witness needs nonempty sets")
    diffs = [a - b for grp in (s1, s2) for a in grp for b in grp if a != b]
    picked = []
    for cand in irreducibles_stream(ctx):
        if all(not divides(cand, diff) for diff in diffs):
            picked.append(cand)
            if len(picked) == 2:
                break
    alpha, beta = picked
    assert is_nzu(alpha) and is_nzu(beta) and are_comaximal(alpha, beta)
    for diff in diffs:
        assert are_comaximal(alpha, diff) and are_comaximal(beta, diff)
    products = {beta * y + alpha * x for x in s1 for y in s2}
    assert len(products) == len(s1) * len(s2)
    return GammaTimesWitness(alpha, beta, sorted(products, key=Poly.sort_key))


# -- axiom instances over canonical finite sets -----------------------------------------


def delta_set(ctx: FieldCtx, k: int) -> list[Poly]:
    """The canonical k-element subset: the first k ring elements."""
    return list(islice(ring_elements(ctx), k))


def psi_holds(set_a: list[Poly], set_b: list[Poly], ctx: FieldCtx) -> bool:
    """Truth of the injection sentence on a pair of finite sets, decided by
    running the builder and the independent verifier."""
    try:
        w = injection_witness(set_a, set_b, ctx)
    except SizeMismatch:
        return False
    return verify_injection(w, set_a, set_b)


_psi_delta_cache: dict = {}


def _psi_delta(k: int, n: int, ctx: FieldCtx) -> bool:
    """psi on canonical sets, cached: the axiom loops reuse the same pairs."""
    key = (ctx.p, ctx.a, ctx.modulus, k, n)
    if key not in _psi_delta_cache:
        _psi_delta_cache[key] = psi_holds(delta_set(ctx, k), delta_set(ctx, n), ctx)
    return _psi_delta_cache[key]


@dataclass
class AxiomReport:
    entries: list[dict]

    @property
    def passed(self) -> bool:
        return all(e["passed"] for e in self.entries)

    def as_record(self) -> dict:
        return {"passed": self.passed, "entries": self.entries}


def axiom_instance_check(n: int, m: int, ctx: FieldCtx, cap: int = 8) -> AxiomReport:
    """Finite instances of the five axiom schemes at (n, m).

    Delta_k is modelled by the canonical k-element set; the order relation
    is the injection sentence, addition is the shifted disjoint union, and
    multiplication is the two-parameter product set.
    """
    if n < 0 or m < 0 or n > cap or m > cap:
        raise ValueError(f"instances must lie in [0, {cap}]")
    entries: list[dict] = []
    dn, dm = delta_set(ctx, n), delta_set(ctx, m)

    ok1 = gamma_plus_check(dn, dm, delta_set(ctx, n + m), ctx)
    entries.append({"axiom": "addition", "instance": [n, m], "passed": ok1})

    if n == 0 or m == 0:
        ok2 = n * m == 0
    else:
        ok2 = len(gamma_times_witness(dn, dm, ctx).product_set) == n * m
    entries.append({"axiom": "multiplication", "instance": [n, m], "passed": ok2})

    ok3 = True if n == m else not (_psi_delta(n, m, ctx) and _psi_delta(m, n, ctx))
    entries.append({"axiom": "distinctness", "instance": [n, m], "passed": ok3})

    ok4 = all(_psi_delta(k, n, ctx) == (k <= n) for k in range(cap + 1))
    entries.append({"axiom": "below-n-enumeration", "instance": [n], "passed": ok4})

    ok5 = all(_psi_delta(k, n, ctx) or _psi_delta(n, k, ctx) for k in range(cap + 1))
    entries.append({"axiom": "comparability", "instance": [n], "passed": ok5})
    return AxiomReport(entries)
