"""Collection to canonical form: kernel letters are pushed to the right end of a
word, being conjugated by each base letter they pass."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .kernels import (
    Class2Element, Gamma2Context, Gamma3Context, KernelError, KernelVector,
    c2_conj_word, c2_differences, kv_act_word,
)
from .presentations import Surface
from .words import Word, C, format_word, parse_symbol


class CollectionError(ValueError):
    pass


@dataclass
class MixedWord:
    """Entries are (base symbol, int), (kernel symbol, ring exponent) or a ready
    kernel element (KernelVector / Class2Element)."""

    entries: list = field(default_factory=list)

    def __mul__(self, other):
        return MixedWord(self.entries + other.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class CanonicalForm:
    base: Word
    kernel: object

    def to_json(self):
        return {"base": format_word(self.base), "kernel": self.kernel.to_json()}

    def __str__(self):
        return f"{format_word(self.base)} . {self.kernel}"


def _split(entry, ctx):
    if isinstance(entry, (KernelVector, Class2Element)):
        if entry.ctx != ctx:
            raise CollectionError("kernel element from another context")
        return "element", entry, None
    sym, e = entry
    if ctx.is_kernel(sym):
        return "kernel", sym, e
    if ctx.is_base(sym):
        if not isinstance(e, int):
            raise CollectionError(f"symbolic exponent on base letter {sym} is not supported")
        return "base", sym, e
    raise CollectionError(f"{sym} is neither a base nor a kernel generator here")


def collect_abelian(w: MixedWord, ctx: Gamma2Context) -> CanonicalForm:
    base, z = [], ctx.zero()
    for entry in w:
        kind, sym, e = _split(entry, ctx)
        if kind == "element":
            z = z + sym
        elif kind == "kernel":
            z = z + ctx.symbol_vector(sym).scale(e)
        else:
            z = kv_act_word(Word.gen(sym, e), z)
            base.append((sym, e))
    return CanonicalForm(Word(base), z)


def _class2_letter(ctx, sym, e):
    r = ctx.ring
    e = r(e)
    if sym == ctx.A:
        return ctx.element(p=e)
    if sym == ctx.B:
        return ctx.element(q=e)
    i = sym.index[0]
    if i == ctx.top:
        return ctx.identity()
    return ctx.element(**{f"c{i}": e})


def collect_class2(w: MixedWord, ctx: Gamma3Context) -> CanonicalForm:
    base, z = [], ctx.identity()
    for entry in w:
        try:
            kind, sym, e = _split(entry, ctx)
        except KernelError as exc:
            raise CollectionError(str(exc)) from None
        if kind == "element":
            z = z * sym
        elif kind == "kernel":
            z = z * _class2_letter(ctx, sym, e)
        else:
            z = c2_conj_word(Word.gen(sym, e), z)
            base.append((sym, e))
    return CanonicalForm(Word(base), z)


def collect(w: MixedWord, ctx):
    if isinstance(ctx, Gamma2Context):
        return collect_abelian(w, ctx)
    return collect_class2(w, ctx)


# -- comparison ------------------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    """poly == 0, exactly (modulus 0) or modulo 2 or 4."""

    poly: object
    modulus: int
    provenance: str = ""

    def to_json(self, ring):
        return {"poly": ring.fmt(self.poly), "modulus": _mod_name(self.modulus),
                "provenance": self.provenance}


def _mod_name(m):
    return "exact" if m == 0 else f"mod {m}"


def normalize(poly, modulus):
    if modulus == 2:
        return poly.trunc_ground(2)
    if modulus == 0 and poly and poly.LC < 0:
        return -poly
    return poly


def kernel_differences(u, v):
    """(difference, modulus) for each coordinate of two kernel elements."""
    if isinstance(u, KernelVector):
        mods = [2] + [2 if u.ctx.ring.mod2 else 0] * (len(u.coords) - 1)
        out = []
        for x, y, m in zip(u.coords, v.coords, mods):
            d = x - y
            if m == 2:
                d = u.ctx.ring.mod2_of(d)
            out.append((d, m))
        return out
    return c2_differences(u, v)


def canonical_equal(u: CanonicalForm, v: CanonicalForm, base_oracle=None, provenance=""):
    """Compare two canonical forms.  Concrete rings give a bool; symbolic rings give
    the list of coordinate constraints (empty when the forms agree identically)."""
    if u.kernel.ctx != v.kernel.ctx:
        raise CollectionError("incomparable contexts")
    same_base = base_oracle(u.base, v.base) if base_oracle else u.base == v.base
    if not same_base:
        raise CollectionError(f"base words differ: {format_word(u.base)} vs {format_word(v.base)}")
    ctx = u.kernel.ctx
    diffs = kernel_differences(u.kernel, v.kernel)
    if not ctx.ring.symbolic:
        return all(d == 0 for d, _ in diffs)
    out = []
    for nm, (d, m) in zip(ctx.names, diffs):
        d = normalize(d, m)
        if d != 0:
            out.append(Constraint(d, m, f"{provenance} [{nm}]".strip()))
    return out


# -- text syntax for mixed words -----------------------------------------------------

_KTOKEN = re.compile(r"^(A|B|c\d+)$")


def parse_mixed_word(text, ctx):
    """Tokens ``sym`` or ``sym^exp``.  Kernel tokens are x, y, sg, r<i> for the
    abelian kernel and A, B, c<i> for the class-2 kernel."""
    entries = []
    for tok in text.split():
        if tok == "e":
            continue
        name, _, exp = tok.partition("^")
        try:
            e = int(exp) if exp else 1
        except ValueError:
            raise CollectionError(f"bad exponent in {tok!r}") from None
        if isinstance(ctx, Gamma3Context) and _KTOKEN.match(name):
            if name == "A":
                sym = ctx.A
            elif name == "B":
                sym = ctx.B
            else:
                sym = C(int(name[1:]), ctx.top)
        else:
            sym = parse_symbol(name)
        entries.append((sym, e))
    return MixedWord(entries)


# -- ansatz application and the closed forms ---------------------------------------------

def apply_ansatz(w: Word, images) -> MixedWord:
    """Replace each base letter g by g.z_g (and g^-1 by z_g^-1 g^-1)."""
    entries = []
    for sym, d in w:
        z = images[sym]
        for _ in range(abs(d)):
            if d > 0:
                entries += [(sym, 1), z]
            else:
                entries += [_inverse(z), (sym, -1)]
    return MixedWord(entries)


def _inverse(z):
    if isinstance(z, KernelVector):
        return -z
    return z.inverse()


def frame_quantities(t, s, m, ansatz):
    """Closed forms (alpha, delta, gamma) for the C_{2} (rho_2) coordinate."""
    if t < 2:
        raise CollectionError("the closed forms need at least two strands in the first block")
    v = ansatz.value
    klein = ansatz.M is Surface.KLEIN
    alpha = 0
    for l in range(2, t):
        alpha += 2 * sum(v(f"r_{i}_{l}") for i in range(l, t))
        alpha += v(f"r_{l}_{l + 1}")
    if klein:
        delta = 2 * (v("alpha_1_2") - v("x_1_1") - v("x_1_2")) - v("alpha_1_1") + v("beta_1_2")
    else:
        delta = v("beta_1_2") + v("alpha_1_1")
    gamma = 0
    for i in range(t + 1, t + s + 1):
        if klein:
            gamma += -2 * v(f"x_{i}_1") - v(f"alpha_{i}_1") + v(f"alpha_{i}_2")
        else:
            gamma += -v(f"alpha_{i}_1")
    r = ansatz.ring
    return r(alpha), r(delta), r(gamma)
