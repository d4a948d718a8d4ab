"""Exact arithmetic in finite fields F_{p^a}, p an odd prime.

An element of F_{p^a} is a coefficient vector of length a over F_p in the
power basis of z modulo the field modulus, stored as a tuple of ints in
[0, p).  Equality is structural, and the tuple order (first coordinate
compared first) is the canonical element order used everywhere determinism
matters.

The field context owns p, a and the modulus.  When no modulus is supplied,
the lexicographically least monic irreducible of degree a over F_p is
generated (coefficients compared low-degree first), so test vectors are
stable.  For a = 1 the modulus is the identity convention z and is unused.
"""

from __future__ import annotations

import itertools

from ..errors import CompositeP, ReducibleModulus
from .intarith import factorint, is_prime


class FieldCtx:
    """The field F_q, q = p^a, with an explicit monic irreducible modulus."""

    __slots__ = ("p", "a", "q", "modulus", "_one", "_zero")

    def __init__(self, p: int, a: int, modulus: tuple[int, ...] | None = None):
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise CompositeP(f"p = {p} is not an odd prime")
        if a < 1:
            raise ValueError(f"extension degree a = {a} must be >= 1")
        self.p = p
        self.a = a
        self.q = p ** a
        if a == 1:
            # identity convention: modulus "z", never used in arithmetic
            self.modulus = (0, 1)
        elif modulus is None:
            self.modulus = _least_irreducible(p, a)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != a + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {a}")
            if not _is_irreducible_prime_field(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
            self.modulus = modulus
        self._zero = FF(self, (0,) * a)
        self._one = FF(self, (1,) + (0,) * (a - 1))

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.a == other.a and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.a, self.modulus))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, a={self.a})"

    # -- constructors ---------------------------------------------------------

    def zero(self) -> "FF":
        return self._zero

    def one(self) -> "FF":
        return self._one

    def elem(self, coeffs) -> "FF":
        """Element from an int (prime subfield) or a coefficient sequence."""
        if isinstance(coeffs, FF):
            if coeffs.ctx is not self and coeffs.ctx != self:
                raise ValueError("element belongs to a different field")
            return coeffs
        if isinstance(coeffs, int):
            return FF(self, (coeffs % self.p,) + (0,) * (self.a - 1))
        vec = tuple(int(c) % self.p for c in coeffs)
        if len(vec) > self.a:
            raise ValueError(f"coefficient vector longer than a = {self.a}")
        vec += (0,) * (self.a - len(vec))
        return FF(self, vec)

    def elements(self):
        """All field elements in canonical order (first coordinate slowest)."""
        for vec in itertools.product(range(self.p), repeat=self.a):
            yield FF(self, vec)

    # -- raw kernels (tuples in, tuples out) -----------------------------------

    def _raw_mul(self, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        p, a = self.p, self.a
        if a == 1:
            return (u[0] * v[0] % p,)
        prod = [0] * (2 * a - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    prod[i + j] += ui * vj
        # reduce modulo the monic modulus
        mod = self.modulus
        for k in range(2 * a - 2, a - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(a):
                    prod[k - a + j] -= c * mod[j]
            prod[k] = 0
        return tuple(c % p for c in prod[:a])

    def _raw_inv(self, u: tuple[int, ...]) -> tuple[int, ...]:
        p, a = self.p, self.a
        if all(c == 0 for c in u):
            raise ZeroDivisionError("inverse of zero field element")
        if a == 1:
            return (pow(u[0], p - 2, p),)
        # extended Euclid in F_p[z] against the modulus
        r0, r1 = list(self.modulus), list(u)
        t0, t1 = [0], [1]
        while any(r1):
            q, rem = _pf_divmod(r0, r1, p)
            r0, r1 = r1, rem
            t0, t1 = t1, _pf_sub(t0, _pf_mul(q, t1, p), p)
        lc = _pf_trim(r0)[-1]
        scale = pow(lc, p - 2, p)
        inv = [c * scale % p for c in t0]
        inv += [0] * (a - len(inv))
        return tuple(inv[:a])


class FF:
    """An element of F_{p^a}: immutable coefficient tuple plus its context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def __add__(self, other: "FF") -> "FF":
        p = self.ctx.p
        return FF(self.ctx, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FF") -> "FF":
        p = self.ctx.p
        return FF(self.ctx, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FF":
        p = self.ctx.p
        return FF(self.ctx, tuple(-x % p for x in self.coeffs))

    def __mul__(self, other: "FF") -> "FF":
        return FF(self.ctx, self.ctx._raw_mul(self.coeffs, other.coeffs))

    def inv(self) -> "FF":
        return FF(self.ctx, self.ctx._raw_inv(self.coeffs))

    def __truediv__(self, other: "FF") -> "FF":
        return self * other.inv()

    def __pow__(self, n: int) -> "FF":
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, FF) and self.coeffs == other.coeffs \
            and self.ctx.p == other.ctx.p and self.ctx.modulus == other.ctx.modulus

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.modulus, self.coeffs))

    def __lt__(self, other: "FF") -> bool:
        return self.coeffs < other.coeffs

    def __repr__(self):
        if self.ctx.a == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    # -- multiplicative structure ------------------------------------------------

    def is_square(self) -> bool:
        q = self.ctx.q
        return not self or self ** ((q - 1) // 2) == self.ctx.one()

    def is_nth_power(self, n: int) -> bool:
        """Whether the element lies in (F_q^x)^n (zero counts as a power)."""
        if not self:
            return True
        q = self.ctx.q
        g = _gcd(n, q - 1)
        return self ** ((q - 1) // g) == self.ctx.one()

    def sqrt(self):
        """A square root, or None.  Tonelli-Shanks in the cyclic group F_q^x."""
        ctx = self.ctx
        if not self:
            return ctx.zero()
        if not self.is_square():
            return None
        q = ctx.q
        if q % 4 == 3:
            return self ** ((q + 1) // 4)
        # split q - 1 = 2^e * m with m odd
        m, e = q - 1, 0
        while m % 2 == 0:
            m //= 2
            e += 1
        z = next(x for x in ctx.elements() if x and not x.is_square())
        c = z ** m
        t = self ** m
        r = self ** ((m + 1) // 2)
        while t != ctx.one():
            # find least i with t^(2^i) = 1
            i, t2 = 0, t
            while t2 != ctx.one():
                t2 = t2 * t2
                i += 1
            b = c ** (1 << (e - i - 1))
            r = r * b
            c = b * b
            t = t * c
            e = i
        return r


# -- prime-field polynomial helpers (raw int lists, used for ctx setup) ---------

def _pf_trim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _pf_sub(u: list[int], v: list[int], p: int) -> list[int]:
    n = max(len(u), len(v))
    out = [((u[i] if i < len(u) else 0) - (v[i] if i < len(v) else 0)) % p for i in range(n)]
    return _pf_trim(out)


def _pf_mul(u: list[int], v: list[int], p: int) -> list[int]:
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                out[i + j] = (out[i + j] + ui * vj) % p
    return _pf_trim(out)


def _pf_divmod(u: list[int], v: list[int], p: int) -> tuple[list[int], list[int]]:
    v = _pf_trim(list(v))
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    u = list(u)
    inv_lc = pow(v[-1], p - 2, p)
    dv = len(v) - 1
    quo = [0] * max(0, len(u) - dv)
    for k in range(len(u) - 1, dv - 1, -1):
        c = u[k] % p
        if c:
            c = c * inv_lc % p
            quo[k - dv] = c
            for j in range(dv + 1):
                u[k - dv + j] = (u[k - dv + j] - c * v[j]) % p
    return _pf_trim(quo), _pf_trim(u)


def _pf_powmod(base: list[int], n: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pf_divmod(base, mod, p)[1]
    while n:
        if n & 1:
            result = _pf_divmod(_pf_mul(result, base, p), mod, p)[1]
        base = _pf_divmod(_pf_mul(base, base, p), mod, p)[1]
        n >>= 1
    return result


def _is_irreducible_prime_field(mod: tuple[int, ...], p: int) -> bool:
    """Rabin test for a monic polynomial over F_p given as a low-to-high tuple."""
    f = list(mod)
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]
    # x^(p^d) == x mod f
    h = x
    for _ in range(d):
        h = _pf_powmod(h, p, f, p)
    if _pf_sub(h, x, p):
        return False
    for ell in factorint(d):
        h = x
        for _ in range(d // ell):
            h = _pf_powmod(h, p, f, p)
        g = _pf_gcd(_pf_sub(h, x, p), f, p)
        if len(g) - 1 != 0:
            return False
    return True


def _pf_gcd(u: list[int], v: list[int], p: int) -> list[int]:
    u, v = list(u), list(v)
    while v:
        u, v = v, _pf_divmod(u, v, p)[1]
    if u:
        inv_lc = pow(u[-1], p - 2, p)
        u = [c * inv_lc % p for c in u]
    return u


def _least_irreducible(p: int, a: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree a over F_p."""
    for tail in itertools.product(range(p), repeat=a):
        cand = tuple(tail) + (1,)
        if _is_irreducible_prime_field(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {a} over F_{p}")  # unreachable


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


def field_ctx(p: int, a: int, modulus=None) -> FieldCtx:
    """Validated field context; accepts a modulus as Poly or coefficient tuple."""
    if modulus is not None and hasattr(modulus, "coeff_vectors"):
        # a Poly over the prime field: take the integer coefficient vectors
        vecs = modulus.coeff_vectors()
        if any(len(v) != 1 for v in vecs):
            raise ReducibleModulus("modulus must have prime-field coefficients")
        modulus = tuple(v[0] for v in vecs)
    return FieldCtx(p, a, modulus)
