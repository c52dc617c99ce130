"""Kernel models: the abelian kernel Z/2 + Z^(n+1) and the class-2 kernel
generated by a_{n+1}, b_{n+1} and the C_{i,n+1}, over a choice of coefficient ring."""

from __future__ import annotations

from dataclasses import dataclass

from sympy import ZZ
from sympy.polys.rings import ring as poly_ring

from .presentations import Surface
from .words import SG, X, Y, Symbol, Word, a, b, sigma


class KernelError(ValueError):
    pass


# -- coefficient rings ---------------------------------------------------------

class Ring:
    """Exact integers, integers mod 2, or integer polynomials (optionally mod 2)
    in a fixed list of symbol names."""

    KINDS = ("Z", "Z2", "ZX", "Z2X")

    def __init__(self, kind="Z", symbols=()):
        if kind not in self.KINDS:
            raise KernelError(f"unknown ring kind {kind!r}")
        self.kind = kind
        self.symbols = tuple(symbols)
        self._gens = {}
        self.poly = None
        if self.symbolic:
            if not self.symbols:
                raise KernelError("a polynomial ring needs at least one symbol")
            self.poly, *gens = poly_ring(",".join(self.symbols), ZZ)
            self._gens = dict(zip(self.symbols, gens))

    @property
    def symbolic(self):
        return self.kind in ("ZX", "Z2X")

    @property
    def mod2(self):
        return self.kind in ("Z2", "Z2X")

    def __repr__(self):
        if self.symbolic:
            return f"Ring({self.kind}, {len(self.symbols)} symbols)"
        return f"Ring({self.kind})"

    def __eq__(self, other):
        return isinstance(other, Ring) and (self.kind, self.symbols) == (other.kind, other.symbols)

    def __hash__(self):
        return hash((self.kind, self.symbols))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def gen(self, name):
        try:
            return self._gens[name]
        except KeyError:
            raise KernelError(f"symbol {name!r} is not in this ring") from None

    def __call__(self, value):
        if self.symbolic:
            if isinstance(value, str):
                value = self.gen(value)
            elif not (hasattr(value, "ring") and value.ring == self.poly):
                value = self.poly(value)
            return value.trunc_ground(2) if self.kind == "Z2X" else value
        if not isinstance(value, int):
            raise KernelError(f"{value!r} is not an integer")
        return value % 2 if self.kind == "Z2" else value

    def mod2_of(self, v):
        """Reduce an element mod 2 (used for the order-2 coordinate)."""
        if self.symbolic:
            return v.trunc_ground(2)
        return v % 2

    def is_zero(self, v):
        return v == 0

    def fmt(self, v):
        if self.symbolic:
            return str(v.as_expr()) if v else "0"
        return str(v)


Z = Ring("Z")
Z2 = Ring("Z2")


def _sign(e):
    if e not in (1, -1):
        raise KernelError(f"exponent must be +1 or -1, got {e!r}")
    return e


# -- the abelian kernel ----------------------------------------------------------

class Gamma2Context:
    """Coordinates (sg; x; y; rho_2..rho_n) of the abelianized kernel for n base strings."""

    def __init__(self, M, n, ring=Z):
        self.M = Surface.parse(M)
        if n < 1:
            raise KernelError("need n >= 1")
        self.n = n
        self.ring = ring
        self.names = ["sg", "x", "y"] + [f"r{i}" for i in range(2, n + 1)]
        self.index = {nm: k for k, nm in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, Gamma2Context) and (self.M, self.n, self.ring) == (other.M, other.n, other.ring)

    def __hash__(self):
        return hash((self.M, self.n, self.ring))

    def zero(self):
        return KernelVector(self, (self.ring.zero,) * len(self.names))

    def vector(self, **coords):
        vals = [self.ring.zero] * len(self.names)
        for nm, val in coords.items():
            if nm not in self.index:
                raise KernelError(f"unknown coordinate {nm!r}")
            vals[self.index[nm]] = self.ring(val)
        return KernelVector(self, tuple(vals))

    def rho_vector(self, i):
        """rho_i with the boundary conventions: rho_1 is 0 (torus) or 2x (Klein), rho_{n+1} is 0."""
        if i == 1:
            return self.vector(x=2) if self.M is Surface.KLEIN else self.zero()
        if i == self.n + 1:
            return self.zero()
        if 2 <= i <= self.n:
            return self.vector(**{f"r{i}": 1})
        raise KernelError(f"rho_{i} out of range for n={self.n}")

    def symbol_vector(self, sym: Symbol):
        if sym == SG:
            return self.vector(sg=1)
        if sym == X:
            return self.vector(x=1)
        if sym == Y:
            return self.vector(y=1)
        if sym.kind == "rho":
            return self.rho_vector(sym.index[0])
        raise KernelError(f"{sym} is not a kernel generator")

    def is_base(self, sym):
        if sym.kind in ("a", "b"):
            return sym.index == (1,)
        return sym.kind == "sigma" and sym.index[0] < self.n

    def is_kernel(self, sym):
        return sym in (SG, X, Y) or sym.kind == "rho"


@dataclass(frozen=True)
class KernelVector:
    ctx: Gamma2Context
    coords: tuple

    def __post_init__(self):
        c = list(self.coords)
        c[0] = self.ctx.ring.mod2_of(c[0])
        object.__setattr__(self, "coords", tuple(c))

    def __getitem__(self, name):
        return self.coords[self.ctx.index[name]]

    def _check(self, other):
        if not isinstance(other, KernelVector) or other.ctx != self.ctx:
            raise KernelError("kernel vectors from different contexts")

    def __add__(self, other):
        self._check(other)
        return KernelVector(self.ctx, tuple(u + v for u, v in zip(self.coords, other.coords)))

    def __neg__(self):
        return KernelVector(self.ctx, tuple(-u for u in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = self.ctx.ring(k)
        return KernelVector(self.ctx, tuple(k * u for u in self.coords))

    def __eq__(self, other):
        return isinstance(other, KernelVector) and other.ctx == self.ctx and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return all(u == 0 for u in self.coords)

    def to_json(self):
        return {nm: self.ctx.ring.fmt(v) for nm, v in zip(self.ctx.names, self.coords)}

    def __str__(self):
        fmt = self.ctx.ring.fmt
        parts = [f"{nm}:{fmt(v)}" for nm, v in zip(self.ctx.names, self.coords) if v != 0]
        return "(" + ", ".join(parts) + ")" if parts else "0"


def _gamma2_image(ctx, g, e, name):
    """Image of one basis coordinate under v -> g^e v g^-e."""
    vec, rv = ctx.vector, ctx.rho_vector
    klein = ctx.M is Surface.KLEIN
    if g.kind == "a":
        if name == "y":
            if klein:
                return vec(y=1, x=2 * e) + rv(2).scale(-e)
            return vec(y=1) + rv(2).scale(-e)
    elif g.kind == "b":
        if klein:
            if name == "x":
                return vec(x=-1) + rv(2)
            if name == "y":
                return vec(y=1, x=2) - rv(2)
        elif name == "x":
            return vec(x=1) + rv(2).scale(e)
    elif g.kind == "sigma":
        i = g.index[0]
        if name == f"r{i + 1}":
            return rv(i) - rv(i + 1) + rv(i + 2)
    return ctx.vector(**{name: 1})


def kv_act(g: Symbol, e, v: KernelVector, M=None, n=None):
    """v -> g^e v g^-e on the abelian kernel (e = -1 gives g^-1 v g)."""
    ctx = v.ctx
    if M is not None and Surface.parse(M) is not ctx.M or n is not None and n != ctx.n:
        raise KernelError("context mismatch")
    _sign(e)
    if not ctx.is_base(g):
        raise KernelError(f"unknown base generator {g}")
    out = ctx.zero()
    for nm, val in zip(ctx.names, v.coords):
        if val != 0:
            out = out + _gamma2_image(ctx, g, e, nm).scale(val)
    return out


def kv_act_word(w: Word, v: KernelVector, M=None, n=None):
    """w^-1 v w, applying the letters of w left to right."""
    for sym, d in w:
        e = -1 if d > 0 else 1
        for _ in range(abs(d)):
            v = kv_act(sym, e, v, M, n)
    return v


# -- the class-2 kernel -----------------------------------------------------------

class Gamma3Context:
    """Mixed group with blocks (t, s, 1): base generators a1, b1, a_i, b_i
    (t < i <= t+s) and sigma_k (k != t); kernel a_{n+1}, b_{n+1}, C_{i,n+1}."""

    def __init__(self, M, t, s, ring=Z):
        self.M = Surface.parse(M)
        if t < 1 or s < 0:
            raise KernelError("need t >= 1 and s >= 0")
        if self.M is Surface.KLEIN and ring.kind == "ZX":
            raise KernelError("Klein class-2 computations with symbols must use polynomials mod 2")
        self.t, self.s, self.n = t, s, t + s
        self.ring = ring
        self.names = ["p", "q"] + [f"c{i}" for i in range(1, self.n + 1)]
        self.index = {nm: k for k, nm in enumerate(self.names)}
        self.top = self.n + 1
        self.A, self.B = a(self.top), b(self.top)

    def __eq__(self, other):
        return isinstance(other, Gamma3Context) and (self.M, self.t, self.s, self.ring) == (
            other.M, other.t, other.s, other.ring)

    def __hash__(self):
        return hash((self.M, self.t, self.s, self.ring))

    @property
    def outer(self):
        """Strand indices of the second block."""
        return list(range(self.t + 1, self.n + 1))

    def base_generators(self):
        gens = [a(1), b(1)]
        for i in self.outer:
            gens += [a(i), b(i)]
        gens += [sigma(k) for k in range(1, self.n) if k != self.t]
        return gens

    def is_base(self, sym):
        if sym.kind in ("a", "b"):
            i = sym.index[0]
            return i == 1 or self.t < i <= self.n
        if sym.kind == "sigma":
            k = sym.index[0]
            if k == self.t and k < self.n:
                raise KernelError(f"sigma_{k} is not an element of the mixed braid group")
            return 1 <= k < self.n
        return False

    def is_kernel(self, sym):
        return sym in (self.A, self.B) or sym.kind == "C" and sym.index[1] == self.top

    def element(self, p=0, q=0, **cs):
        r = self.ring
        c = [r.zero] * self.n
        for nm, val in cs.items():
            if nm not in self.index or nm in ("p", "q"):
                raise KernelError(f"unknown coordinate {nm!r}")
            c[self.index[nm] - 2] = r(val)
        return Class2Element(self, r(p), r(q), tuple(c))

    def identity(self):
        return self.element()

    def symbol_element(self, sym):
        if sym == self.A:
            return self.element(p=1)
        if sym == self.B:
            return self.element(q=1)
        if sym.kind == "C" and sym.index[1] == self.top:
            i = sym.index[0]
            return self.identity() if i == self.top else self.element(**{f"c{i}": 1})
        raise KernelError(f"{sym} is not a kernel generator")


@dataclass(frozen=True)
class Class2Element:
    """a_{n+1}^p b_{n+1}^q prod C_{i,n+1}^{c_i}."""

    ctx: Gamma3Context
    p: object
    q: object
    c: tuple

    def coords(self):
        return (self.p, self.q) + self.c

    def __getitem__(self, name):
        return self.coords()[self.ctx.index[name]]

    def __mul__(self, other):
        return c2_mul(self, other)

    def inverse(self):
        zero = self.ctx.ring.zero
        neg_c = Class2Element(self.ctx, zero, zero, tuple(-x for x in self.c))
        inv_b = Class2Element(self.ctx, zero, -self.q, (zero,) * self.ctx.n)
        inv_a = Class2Element(self.ctx, -self.p, zero, (zero,) * self.ctx.n)
        return c2_mul(c2_mul(neg_c, inv_b), inv_a)

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        out = self.ctx.identity()
        for _ in range(k):
            out = out * self
        return out

    def same(self, other):
        """Equality under the surface's semantics (Klein: p mod 4, q exact, c mod 2)."""
        if other.ctx != self.ctx:
            raise KernelError("class-2 elements from different contexts")
        diffs = c2_differences(self, other)
        return all(d == 0 for d, _ in diffs)

    def to_json(self):
        fmt = self.ctx.ring.fmt
        return {nm: fmt(v) for nm, v in zip(self.ctx.names, self.coords())}

    def __str__(self):
        fmt = self.ctx.ring.fmt
        parts = [f"{nm}:{fmt(v)}" for nm, v in zip(self.ctx.names, self.coords()) if v != 0]
        return "(" + ", ".join(parts) + ")" if parts else "1"


def coordinate_moduli(ctx):
    """Modulus to compare each coordinate with: 0 means exact."""
    if ctx.ring.mod2:
        return [2] * len(ctx.names)
    if ctx.M is Surface.KLEIN:
        return [4, 0] + [2] * ctx.n
    return [0] * len(ctx.names)


def c2_differences(u, v):
    """(difference, modulus) per coordinate; the elements agree iff each difference vanishes."""
    out = []
    for x, y, m in zip(u.coords(), v.coords(), coordinate_moduli(u.ctx)):
        d = x - y
        if m and not u.ctx.ring.symbolic:
            d %= m
        out.append((d, m))
    return out


def c2_mul(u: Class2Element, v: Class2Element, M=None):
    ctx = u.ctx
    if v.ctx != ctx or M is not None and Surface.parse(M) is not ctx.M:
        raise KernelError("class-2 elements from different contexts")
    r = ctx.ring
    # b^q a^p' = a^(+-p') b^q C_1^(...)
    q, p2 = u.q, v.p
    if ctx.M is Surface.TORUS or r.mod2:
        moved, extra = p2, q * p2
    else:
        if r.symbolic:
            raise KernelError("Klein class-2 products need the mod 2 ring")
        odd = q % 2
        moved, extra = (-p2 if odd else p2), p2 * odd
    c = [x + y for x, y in zip(u.c, v.c)]
    c[0] = c[0] + extra
    return Class2Element(ctx, r(u.p + moved), r(q + v.q), tuple(r(x) for x in c))


def _c2_conj_once(ctx, g, e, u):
    """g^e u g^-e for one base letter."""
    r = ctx.ring
    p, q, c = u.p, u.q, list(u.c)
    n = ctx.n

    def add(idx, val):
        if idx <= n:
            c[idx - 1] = c[idx - 1] + val

    i = g.index[0]
    if g.kind == "sigma":
        cur = c[i]  # coefficient of C_{i+1}
        c[i] = r.zero
        add(i, cur)
        add(i + 1, -cur)
        add(i + 2, cur)
    elif g.kind == "a":
        # a_i^-1 B a_i = B C_i^-1 C_{i+1}
        add(i, e * q)
        add(i + 1, -e * q)
    elif ctx.M is Surface.TORUS:
        # b_i^-1 A b_i = A C_i C_{i+1}^-1
        add(i, -e * p)
        add(i + 1, e * p)
    else:
        # Klein b_i is an involution: A -> A C_i^-1 C_{i+1}, B -> B C_i C_{i+1}^-1,
        # C_j -> C_j C_i^-2 C_{i+1}^2 for j <= i
        lower = sum(c[: i - 1], r.zero)
        ci = c[i - 1]
        c[i - 1] = -ci - 2 * lower
        add(i + 1, 2 * lower + 2 * ci)
        add(i, q - p)
        add(i + 1, p - q)
    return Class2Element(ctx, r(p), r(q), tuple(r(x) for x in c))


def c2_conj(g: Symbol, e, u: Class2Element, M=None, t=None, s=None):
    """g^e u g^-e in the class-2 kernel (e = -1 gives g^-1 u g)."""
    ctx = u.ctx
    if M is not None and Surface.parse(M) is not ctx.M:
        raise KernelError("context mismatch")
    if (t is not None and t != ctx.t) or (s is not None and s != ctx.s):
        raise KernelError("context mismatch")
    _sign(e)
    if not ctx.is_base(g):
        raise KernelError(f"unknown base generator {g}")
    return _c2_conj_once(ctx, g, e, u)


def c2_conj_word(w: Word, u: Class2Element):
    """w^-1 u w."""
    for sym, d in w:
        e = -1 if d > 0 else 1
        for _ in range(abs(d)):
            u = c2_conj(sym, e, u)
    return u
