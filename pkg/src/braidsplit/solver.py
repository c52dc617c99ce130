"""Section ansatze, constraint harvesting from lifted relations, and splitting verdicts."""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache

from . import linalg
from .collection import (
    Constraint, apply_ansatz, collect, frame_quantities, kernel_differences, normalize,
)
from .kernels import Gamma2Context, Gamma3Context, Ring
from .presentations import Surface, full_braid_presentation, surface_braid_word, surface_commutator
from .words import EMPTY, Word, a, b, invert, sigma, word


class SolverError(ValueError):
    pass


class CertificateError(RuntimeError):
    """A derivation or certificate did not check out."""


# -- ansatze ------------------------------------------------------------------------

def pretty(name):
    """r_1_2 -> r_{1,2}, alpha_3_1 -> α_{3,1}, k4 -> k4."""
    greek = {"alpha": "α", "beta": "β"}
    head, *idx = name.split("_")
    head = greek.get(head, head)
    return f"{head}_{{{','.join(idx)}}}" if idx else head


@dataclass
class SectionAnsatz:
    M: Surface
    mode: str
    params: dict
    ctx: object
    images: dict
    symbols: list
    mod2_symbols: set = field(default_factory=set)
    aliases: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.ctx.ring

    def sym(self, name):
        return self.ring.gen(name)

    def value(self, name):
        """Ring value of a symbol named in the class-2 scheme; the abelian-kernel
        ansatz maps those names onto its own symbols (or zero)."""
        name = self.aliases.get(name, name)
        if name is None or name not in self.ring.symbols:
            return self.ring.zero
        return self.ring.gen(name)

    def image_words(self):
        return {str(g): str(z) for g, z in self.images.items()}


def _gamma2_symbols(n, m):
    with_sigma = m >= 2
    names = {"a": ["k1", "k2"] + (["i0"] if with_sigma else []) + [f"i{q}" for q in range(2, n + 1)],
             "b": ["k3", "k4"] + (["j0"] if with_sigma else []) + [f"j{q}" for q in range(2, n + 1)]}
    for i in range(1, n):
        names[i] = [f"l_{i}_1", f"l_{i}_2"] + ([f"r_{i}_0"] if with_sigma else [])
        names[i] += [f"r_{i}_{q}" for q in range(2, n + 1)]
    return names


def build_ansatz(M, mode, n=None, m=None, t=None, s=None, extra_symbols=(), ring_kind=None):
    """Images g -> g.z_g with fresh symbolic kernel exponents for every base generator."""
    M = Surface.parse(M)
    if mode == "gamma2":
        if n is None or n < 2 or m is None or m < 1:
            raise SolverError("gamma2 ansatz needs n >= 2 and m >= 1")
        names = _gamma2_symbols(n, m)
        symbols = [nm for group in names.values() for nm in group] + list(extra_symbols)
        ring = Ring(ring_kind or "ZX", symbols)
        ctx = Gamma2Context(M, n, ring)
        g = ring.gen
        images = {}

        def vec(group, sg):
            coords = {"x": g(group[0]), "y": g(group[1])}
            rest = group[2:]
            if sg:
                coords["sg"] = g(rest[0])
                rest = rest[1:]
            for q, nm in zip(range(2, n + 1), rest):
                coords[f"r{q}"] = g(nm)
            return ctx.vector(**coords)

        with_sigma = m >= 2
        images[a()] = vec(names["a"], with_sigma)
        images[b()] = vec(names["b"], with_sigma)
        for i in range(1, n):
            images[sigma(i)] = vec(names[i], with_sigma)
        aliases = {"alpha_1_1": "k1", "alpha_1_2": "k2", "beta_1_1": "k3", "beta_1_2": "k4",
                   "x_1_1": None, "y_1_1": None}
        for q in range(2, n + 1):
            aliases[f"x_1_{q}"] = f"i{q}"
            aliases[f"y_1_{q}"] = f"j{q}"
        for i in range(1, n):
            aliases[f"r_{i}_1"] = None
        mod2 = {nm for nm in symbols if re.fullmatch(r"i0|j0|r_\d+_0", nm)}
        return SectionAnsatz(M, mode, {"n": n, "m": m}, ctx, images, symbols, mod2, aliases)
    if mode == "gamma3":
        if t is None or s is None or t < 1 or s < 0:
            raise SolverError("gamma3 ansatz needs t >= 1 and s >= 0")
        N = t + s
        symbols = []
        groups = {}
        outer = range(t + 1, N + 1)
        for i in [1, *outer]:
            groups[a(i)] = [f"alpha_{i}_1", f"alpha_{i}_2"] + [f"x_{i}_{k}" for k in range(1, N + 1)]
            groups[b(i)] = [f"beta_{i}_1", f"beta_{i}_2"] + [f"y_{i}_{k}" for k in range(1, N + 1)]
        for i in range(1, N):
            if i != t:
                groups[sigma(i)] = [f"s_{i}_1", f"s_{i}_2"] + [f"r_{i}_{k}" for k in range(1, N + 1)]
        for grp in groups.values():
            symbols += grp
        symbols += list(extra_symbols)
        kind = ring_kind or ("Z2X" if M is Surface.KLEIN else "ZX")
        ring = Ring(kind, symbols)
        ctx = Gamma3Context(M, t, s, ring)
        images = {}
        for gen, grp in groups.items():
            p, q, *cs = (ring.gen(nm) for nm in grp)
            images[gen] = ctx.element(p, q, **{f"c{k}": c for k, c in enumerate(cs, 1)})
        return SectionAnsatz(M, mode, {"t": t, "s": s}, ctx, images, symbols)
    raise SolverError(f"unknown ansatz mode {mode!r}")


# -- lifted relations -------------------------------------------------------------------

@dataclass(frozen=True)
class LiftedRelation:
    """lhs = rhs . corr in the extension, with corr a kernel element."""

    label: str
    lhs: Word
    rhs: Word
    corr: object = None


def gamma2_relations(M, n, m, ctx):
    M = Surface.parse(M)
    rels = [LiftedRelation(r.label, r.lhs, r.rhs)
            for r in full_braid_presentation(M, n).relations if r.label != "B8"]
    corr = (ctx.rho_vector(2) - ctx.rho_vector(1)).scale(m)
    rels.append(LiftedRelation("surface", EMPTY, invert(surface_braid_word(n)) * surface_commutator(M), corr))
    return rels


def c1j_c2j_inverse(M, j):
    """C_{1,j} C_{2,j}^-1 written in a_j and b_1."""
    w = word((a(j), -1), (b(), -1), a(j), b())
    return w if Surface.parse(M) is Surface.TORUS else invert(w)


def gamma3_relations(M, t, s, ctx=None):
    M = Surface.parse(M)
    n = t + s
    X = [1, *range(t + 1, n + 1)]
    outer = list(range(t + 1, n + 1))
    sig = [i for i in range(1, n) if i != t]
    rels = []

    def comm(label, u, v):
        u, v = Word.coerce(u), Word.coerce(v)
        rels.append(LiftedRelation(label, u * v, v * u))

    for i, j in itertools.combinations(X, 2):
        comm(f"a{i} a{j} commute", a(i), a(j))
    if M is Surface.TORUS:
        for i, j in itertools.combinations(X, 2):
            comm(f"b{i} b{j} commute", b(i), b(j))
    else:
        pairs = [(1, j) for j in outer] + list(itertools.combinations(outer, 2))
        for i, j in pairs:
            rels.append(LiftedRelation(f"b{j} b{i} b{j}^-1 = a{j}^-1 b{i} a{j}",
                                       word(b(j), b(i), (b(j), -1)), word((a(j), -1), b(i), a(j))))
    for i in sig:
        if outer and i <= n - 2:
            comm(f"a{n} s{i} commute", a(n), sigma(i))
            comm(f"b{n} s{i} commute", b(n), sigma(i))
    for i in sig:
        if i > t:
            comm(f"a1 s{i} commute", a(1), sigma(i))
            comm(f"b1 s{i} commute", b(1), sigma(i))
    for i, j in itertools.combinations(sig, 2):
        if j - i >= 2:
            comm(f"s{i} s{j} commute", sigma(i), sigma(j))
    for i in sig:
        if i + 1 in sig:
            si, sj = sigma(i), sigma(i + 1)
            rels.append(LiftedRelation(f"braid s{i} s{i + 1}", word(si, sj, si), word(sj, si, sj)))
    for i in (1, t + 1):
        if i in sig:
            si = sigma(i)
            rels.append(LiftedRelation(f"s{i} a{i} s{i}^-1 b{i} = b{i} s{i} a{i} s{i}",
                                       word(si, a(i), (si, -1), b(i)), word(b(i), si, a(i), si)))
    for i in outer[:-1]:
        si = sigma(i)
        rels.append(LiftedRelation(f"s{i}^-1 a{i + 1} = a{i} s{i}", word((si, -1), a(i + 1)), word(a(i), si)))
        rels.append(LiftedRelation(f"s{i} b{i + 1} = b{i} s{i}^-1", word(si, b(i + 1)), word(b(i), (si, -1))))
    lhs = EMPTY
    for j in outer:
        lhs = lhs * c1j_c2j_inverse(M, j)
    rhs = invert(surface_braid_word(t)) * surface_commutator(M)
    corr = None
    if ctx is not None:
        corr = ctx.element(c1=-1, c2=1) if t >= 2 else ctx.identity()
    rels.append(LiftedRelation("surface", lhs, rhs, corr))
    return rels


def lifted_relations(ansatz, m=None):
    if ansatz.mode == "gamma2":
        return gamma2_relations(ansatz.M, ansatz.params["n"], ansatz.params["m"] if m is None else m, ansatz.ctx)
    return gamma3_relations(ansatz.M, ansatz.params["t"], ansatz.params["s"], ansatz.ctx)


def _identity(ctx):
    return ctx.zero() if isinstance(ctx, Gamma2Context) else ctx.identity()


def relation_sides(ansatz, rel):
    """Kernel parts (corr . z_lhs, z_rhs) of both sides after collection."""
    ctx = ansatz.ctx
    left = collect(apply_ansatz(rel.lhs, ansatz.images), ctx)
    right = collect(apply_ansatz(rel.rhs, ansatz.images), ctx)
    if left.base != rel.lhs or right.base != rel.rhs:
        raise SolverError(f"collection changed the base word of {rel.label}")
    corr = rel.corr if rel.corr is not None else _identity(ctx)
    if isinstance(ctx, Gamma2Context):
        return corr + left.kernel, right.kernel
    return corr * left.kernel, right.kernel


def constraints_from_relator(ansatz, rel, engine=None):
    """Coordinate equations forced by a lifted relation under the ansatz."""
    try:
        lz, rz = relation_sides(ansatz, rel)
    except Exception as exc:
        raise SolverError(f"{rel.label}: {exc}") from exc
    out = []
    for nm, (d, mod) in zip(ansatz.ctx.names, kernel_differences(lz, rz)):
        d = normalize(d, mod)
        if d != 0:
            out.append(Constraint(d, mod, f"{rel.label} [{nm}]"))
    return out


@dataclass
class ConstraintSystem:
    ring: Ring
    constraints: list

    def exact(self):
        return [c for c in self.constraints if c.modulus == 0]

    def mod2(self):
        return [c for c in self.constraints if c.modulus == 2]

    def to_json(self):
        return [c.to_json(self.ring) for c in self.constraints]

    def __len__(self):
        return len(self.constraints)


def harvest(ansatz, relations=None):
    relations = lifted_relations(ansatz) if relations is None else relations
    out = []
    for rel in relations:
        out += constraints_from_relator(ansatz, rel)
    return ConstraintSystem(ansatz.ring, out)


# -- two factors ----------------------------------------------------------------------------

def linear_vector(poly):
    """Sparse coefficient map of a polynomial (monomial exponent tuple -> int)."""
    return {mon: int(c) for mon, c in poly.terms()}


@dataclass
class Fact:
    name: str
    poly: object
    combination: dict  # constraint index -> rational coefficient

    def cite(self, system):
        if self.combination is None:
            return f"{self.name}  NOT DERIVED"
        if not self.combination:
            return f"{self.name}  (holds as a polynomial identity)"
        labels = sorted({system.constraints[i].provenance for i in self.combination})
        return f"{self.name}  <=  " + "; ".join(labels)


@dataclass
class TwoFactorDerivation:
    M: Surface
    n: int
    system: ConstraintSystem
    master: object
    facts: list
    final: object
    final_combination: dict
    steps: list

    @property
    def ok(self):
        return self.final_combination is not None and all(f.combination is not None for f in self.facts)

    def trace(self):
        ring = self.system.ring
        lines = [f"master equation: {ring.fmt(self.master)} = 0  (gamma + m = alpha + delta)"]
        lines += ["lemma fact " + f.cite(self.system) for f in self.facts]
        lines += self.steps
        lines.append(f"result: {ring.fmt(self.final)} = 0")
        return lines


def _two_factor_facts(an, n):
    v, g = an.value, an.ring.gen
    r2, r3 = an.value("r_1_2"), an.value("r_1_3")
    k1, k2, k4 = g("k1"), g("k2"), g("k4")
    alpha, delta, gamma = frame_quantities(n, 0, None, an)
    tail = 2 * v("r_2_2") + v("r_2_3")
    facts = []
    if an.M is Surface.TORUS:
        facts.append(("l_{1,1} = 0", g("l_1_1")))
        facts.append(("l_{1,2} = 0", g("l_1_2")))
        facts.append(("k4 = k1", k4 - k1))
        delta_steps = [(-1, "k4 = k1")]
    else:
        facts.append(("l_{1,1} = k4 - r2", g("l_1_1") - k4 + r2))
        facts.append(("l_{1,2} = 0", g("l_1_2")))
        facts.append(("k2 = 0", k2))
        facts.append(("k4 = -k1 - 2 i2", k4 + k1 + 2 * g("i2")))
        delta_steps = [(2, "k2 = 0"), (-1, "k4 = -k1 - 2 i2")]
    if n >= 3:
        facts.append(("k4 = -r2 - 2 r3", k4 + r2 + 2 * r3))
        facts.append(("2 r_{2,2} + r_{2,3} = -r2 - 2 r3", tail + r2 + 2 * r3))
    facts.append((f"alpha = ({n}-2)(2 r_{{2,2}} + r_{{2,3}})", alpha - (n - 2) * tail))
    return facts, delta_steps, (alpha, delta, gamma)


def derive_constraints_two_factor(M, n, m=None):
    """Harvest the two-factor system (m symbolic when None) and eliminate down to m = n k4."""
    M = Surface.parse(M)
    if n < 2:
        raise SolverError("the derivation needs n >= 2")
    an = build_ansatz(M, "gamma2", n=n, m=2 if m is None else m, extra_symbols=["m"])
    ring = an.ring
    mm = ring.gen("m") if m is None else ring(m)
    system = harvest(an, gamma2_relations(M, n, mm, an.ctx))
    span = linalg.RationalSpan()
    for idx, c in enumerate(system.constraints):
        if c.modulus == 0:
            span.add(linear_vector(c.poly), idx)
    facts_raw, delta_steps, (alpha, delta, gamma) = _two_factor_facts(an, n)
    master = gamma + mm - alpha - delta
    facts = [Fact(name, poly, span.express(linear_vector(poly))) for name, poly in facts_raw]
    byname = {f.name: f.poly for f in facts}
    k4 = ring.gen("k4")
    final = mm - n * k4
    # mechanical elimination: final = master + alpha-fact + (n-2)(tail-fact - k4-fact) + delta facts
    combo = [(1, "master equation", master)]
    combo.append((1, facts_raw[-1][0], byname[facts_raw[-1][0]]))
    if n >= 3:
        combo.append((n - 2, "2 r_{2,2} + r_{2,3} = -r2 - 2 r3", byname["2 r_{2,2} + r_{2,3} = -r2 - 2 r3"]))
        combo.append((-(n - 2), "k4 = -r2 - 2 r3", byname["k4 = -r2 - 2 r3"]))
    combo += [(c, nm, byname[nm]) for c, nm in delta_steps]
    total = sum((c * p for c, _, p in combo), ring.zero)
    steps = [f"{'+' if c > 0 else '-'} {abs(c)} * [{nm}]" for c, nm, _ in combo]
    if total != final:
        steps.append(f"elimination residue: {ring.fmt(total - final)}")
    final_combo = span.express(linear_vector(final))
    return TwoFactorDerivation(M, n, system, master, facts, final if total == final else total,
                               final_combo, steps)


# -- verdicts -------------------------------------------------------------------------------

@dataclass
class Verdict:
    decision: str  # splits, does-not-split, necessary-condition-only
    certificate: dict
    constraints: list = field(default_factory=list)
    replay: object = None  # callable re-checking the certificate, when there is one

    def to_json(self):
        return {"decision": self.decision, "certificate": self.certificate,
                "constraints": self.constraints}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def integer_feasible(constraints, ring):
    """Does the exact linear part of a constraint system have an integer solution?"""
    rows, rhs, cols = [], [], {}
    for c in constraints:
        if c.modulus != 0:
            continue
        row = {}
        const = 0
        for mon, coeff in c.poly.terms():
            if sum(mon) == 0:
                const = int(coeff)
            elif sum(mon) == 1:
                row[cols.setdefault(mon, len(cols))] = int(coeff)
            else:
                raise SolverError("integer feasibility is only decided for linear systems")
        rows.append(row)
        rhs.append(-const)
    if not rows:
        return True
    A = [[row.get(j, 0) for j in range(len(cols))] for row in rows]
    if not cols:
        return all(r == 0 for r in rhs)
    diag, U, _ = linalg.smith_normal_form(A)
    ub = [sum(u * b for u, b in zip(urow, rhs)) for urow in U]
    for i, val in enumerate(ub):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if val != 0:
                return False
        elif val % d:
            return False
    return True


@lru_cache(maxsize=None)
def _two_factor_derivation(M, n):
    return derive_constraints_two_factor(M, n)


def two_factor_verdict(M, n, m):
    """Splitting of the two-block projection with block sizes (n, m)."""
    M = Surface.parse(M)
    if n < 1 or m < 1:
        raise SolverError("need n, m >= 1")
    if n == 1:
        return Verdict("splits", {"reason": "n = 1: every m is a multiple of 1",
                                  "k4": m, "multipliers": [m]})
    deriv = _two_factor_derivation(M, n)
    if not deriv.ok:
        raise CertificateError(f"derivation of m = n k4 failed for {M.value}, n={n}")
    ring = deriv.system.ring
    cert = {"necessary_condition": f"m = {n}*k4", "derivation": deriv.trace()}
    if m % n:
        cert["obstruction"] = f"m = {n}*k4 has no integer solution for m = {m} ({m} mod {n} = {m % n})"
        return Verdict("does-not-split", cert)
    k4 = m // n
    check = deriv.final.evaluate([(ring.gen("m"), m), (ring.gen("k4"), k4)])
    cert["k4"] = k4
    cert["master_check"] = f"m - {n}*k4 = {check} at m={m}, k4={k4}"
    cert["multipliers"] = [k4]
    numeric = build_ansatz(M, "gamma2", n=n, m=m)
    system = harvest(numeric)
    cert["gamma2_system_integer_feasible"] = integer_feasible(system.constraints, system.ring)
    return Verdict("splits", cert, system.to_json())


def q_last_verdict(M, sizes):
    """Projection forgetting every block but the first."""
    M = Surface.parse(M)
    sizes = list(sizes)
    if len(sizes) < 2 or any(x < 1 for x in sizes):
        raise SolverError("need at least two positive block sizes")
    n1 = sizes[0]
    reductions = []
    for i, ni in enumerate(sizes[1:], start=2):
        v = two_factor_verdict(M, n1, ni)
        reductions.append({"block": i, "sizes": [n1, ni], "decision": v.decision,
                           "detail": v.certificate.get("obstruction", v.certificate.get("k4"))})
        if v.decision == "does-not-split":
            return Verdict("does-not-split", {
                "witness_block": i,
                "reason": f"{n1} does not divide {ni}; composing a section with the projection "
                          f"onto blocks 1 and {i} would split the two-block sequence",
                "reductions": reductions})
    return Verdict("splits", {"multipliers": [ni // n1 for ni in sizes[1:]],
                              "reason": f"{n1} divides every later block size",
                              "reductions": reductions})


def nonneg_solutions(target, coeffs, limit=None):
    """All l >= 0 with sum(l_j c_j) == target (c_j > 0)."""
    out = []

    def rec(j, rest, acc):
        if limit is not None and len(out) >= limit:
            return
        if j == len(coeffs) - 1:
            if rest % coeffs[j] == 0:
                out.append(tuple(acc + [rest // coeffs[j]]))
            return
        for l in range(rest // coeffs[j] + 1):
            rec(j + 1, rest - l * coeffs[j], acc + [l])

    if coeffs:
        rec(0, target, [])
    elif target == 0:
        out.append(())
    return out


@dataclass
class LinearForm:
    sizes: list
    form: str
    integer_feasible: bool
    nonneg_feasible: bool
    witness: tuple = None
    integer_witness: tuple = None

    def to_json(self):
        return {"sizes": self.sizes, "form": self.form, "integer_feasible": self.integer_feasible,
                "nonneg_feasible": self.nonneg_feasible,
                "witness": list(self.witness) if self.witness else None,
                "integer_witness": list(self.integer_witness) if self.integer_witness else None}


def _bezout(values, target):
    """Integers l with sum(l_j v_j) == target, or None."""
    g, coeffs = 0, []
    for v in values:
        if g == 0:
            g, coeffs = v, [1]
            continue
        # extended gcd of g and v
        x0, x1, a0, a1 = 1, 0, g, v
        y0, y1 = 0, 1
        while a1:
            q = a0 // a1
            a0, a1 = a1, a0 - q * a1
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        coeffs = [c * x0 for c in coeffs] + [y0]
        g = a0
    if g == 0 or target % g:
        return None
    return tuple(c * (target // g) for c in coeffs)


def q1_linear_form(M, sizes):
    """The necessary condition n_k = n_1 k4 + sum_j n_j alpha_j for the projection forgetting the last block."""
    Surface.parse(M)
    sizes = list(sizes)
    if len(sizes) < 2 or any(x < 1 for x in sizes):
        raise SolverError("need at least two positive block sizes")
    *head, nk = sizes
    terms = [f"{head[0]}*k4"] + [f"{nj}*alpha_{j}" for j, nj in enumerate(head[1:], start=2)]
    form = f"{nk} = " + " + ".join(terms)
    integer = _bezout(head, nk)
    sols = nonneg_solutions(nk, head, limit=1)
    return LinearForm(sizes, form, integer is not None, bool(sols), sols[0] if sols else None, integer)


def q1_verdict(M, sizes):
    M = Surface.parse(M)
    lf = q1_linear_form(M, sizes)
    cert = {"linear_form": lf.to_json()}
    if lf.nonneg_feasible:
        cert["multipliers"] = list(lf.witness)
        cert["reason"] = "nonnegative solution: vector-field cross-section with these multipliers"
        return Verdict("splits", cert)
    if not lf.integer_feasible:
        g = math.gcd(*sizes[:-1])
        cert["reason"] = f"gcd{tuple(sizes[:-1])} = {g} does not divide {sizes[-1]}"
        return Verdict("does-not-split", cert)
    if len(sizes) == 3 and sizes[2] == 1 and sizes[0] >= 2 and sizes[1] >= 2:
        v = ts1_verdict(M, sizes[0], sizes[1])
        cert.update(v.certificate)
        return Verdict("does-not-split", cert, v.constraints, v.replay)
    cert["reason"] = "integer solutions exist but none is nonnegative; no construction and no obstruction known"
    return Verdict("necessary-condition-only", cert)


# -- the blocks (t, s, 1) --------------------------------------------------------------------

def bool_poly(poly, names):
    """A polynomial mod 2 as a set of multilinear monomials."""
    out = set()
    for mon, c in poly.terms():
        if int(c) % 2:
            out ^= {frozenset(names[i] for i, e in enumerate(mon) if e)}
    return frozenset(out)


def format_bool(poly):
    if not poly:
        return "0"
    terms = sorted(poly, key=lambda m: (len(m), sorted(m)))
    return " + ".join("*".join(sorted(m)) if m else "1" for m in terms)


def _lit(name):
    return frozenset([frozenset([name])])


def _ts1_groups(M, t, s):
    """The parity facts each frame quantity needs, as (label, bool poly) pairs."""
    klein = Surface.parse(M) is Surface.KLEIN
    alpha = [("r_1_2", _lit("r_1_2"))] + [(f"r_{l}_{l + 1}", _lit(f"r_{l}_{l + 1}")) for l in range(2, t)]
    delta = [("beta_1_2 + alpha_1_1", _lit("beta_1_2") ^ _lit("alpha_1_1"))]
    gamma = []
    for i in range(t + 1, t + s + 1):
        gamma.append((f"alpha_{i}_1", _lit(f"alpha_{i}_1")))
        if klein:
            gamma.append((f"alpha_{i}_2", _lit(f"alpha_{i}_2")))
    return {"α": alpha, "δ": delta, "γ": gamma}


def _pretty_poly(text):
    return re.sub(r"(alpha|beta|[a-z])_(\d+)_(\d+)", lambda mt: pretty(mt.group(0)), text)


@lru_cache(maxsize=None)
def _ts1_certificate(M, t, s):
    an = build_ansatz(M, "gamma3", t=t, s=s)
    names = an.ring.symbols
    system = harvest(an)
    labels, polys, master = [], [], None
    for c in system.constraints:
        if c.provenance == "surface [c2]":
            master = c
        elif not c.provenance.startswith("surface"):
            labels.append(c.provenance)
            polys.append(bool_poly(c.poly, names))
    el = linalg.ElimLin(polys)
    alpha, delta, gamma = frame_quantities(t, s, 1, an)
    master_bool = bool_poly(master.poly, names)
    expected = bool_poly(alpha + delta - gamma - 1, names)
    facts, trace = [], []
    for qty, group in _ts1_groups(M, t, s).items():
        shown = []
        for label, poly in group:
            zero, used = el.implies_zero(poly)
            facts.append({"fact": f"{label} ≡ 0", "poly": format_bool(poly), "derived": zero,
                          "provenance": sorted({labels[i] for i in used})})
            shown.append(_pretty_poly(label) + ("≡0" if zero else " NOT derived"))
        trace.append(f"{qty} even ({', '.join(shown)})" if shown else f"{qty} even (empty sum)")
    return an, system, el, master_bool, expected, facts, trace, labels


def replay_ts1(certificate):
    """Substitute the parity facts into the master congruence and check that 1 ≡ 0 remains."""
    span = linalg.GF2Span()
    for f in certificate["facts"]:
        if not f["derived"]:
            return False
        span.add(_parse_bool(f["poly"]))
    rest, _ = span.reduce(_parse_bool(certificate["master"]))
    return rest == frozenset([ONE_KEY])


ONE_KEY = frozenset()


def _parse_bool(text):
    out = set()
    for term in text.split("+"):
        term = term.strip()
        if term == "0":
            continue
        out ^= {ONE_KEY if term == "1" else frozenset(term.split("*"))}
    return frozenset(out)


def ts1_verdict(M, t, s):
    """Blocks (t, s, 1), t, s >= 2: the projection forgetting the last point never splits."""
    M = Surface.parse(M)
    if t < 2 or s < 2:
        raise SolverError("need t, s >= 2")
    an, system, el, master, expected, facts, trace, labels = _ts1_certificate(M, t, s)
    consistent = el.inconsistent is None
    residue, _ = el.reduce(master)
    trace = list(trace)
    trace.append(f"master congruence γ+1 ≡ α+δ (mod 2): {format_bool(master)} ≡ 0")
    trace.append(f"after substituting the parity facts: {format_bool(residue)} ≡ 0")
    cert = {
        "blocks": [t, s, 1],
        "master": format_bool(master),
        "master_matches_closed_forms": master == expected,
        "facts": facts,
        "trace": trace,
        "non_surface_system_consistent": consistent,
        "learned_linear_facts": len(el.order),
    }
    cert["replays"] = replay_ts1(cert)
    ok = cert["replays"] and residue == frozenset([ONE_KEY]) and master == expected and consistent
    if not ok:
        raise CertificateError(f"parity certificate incomplete for {M.value} ({t},{s},1)")
    constraints = [{"poly": format_bool(bool_poly(c.poly, an.ring.symbols)), "modulus": "mod 2",
                    "provenance": c.provenance} for c in system.constraints]
    return Verdict("does-not-split", cert, constraints, lambda: replay_ts1(cert))


# -- lemma regeneration ------------------------------------------------------------------------

LEMMAS = ("exp-lemma", "r-coeff-lemma", "commutator-lemma", "parity-lemma", "r-parity")


@dataclass
class LemmaReport:
    lemma: str
    surface: str
    params: dict
    checks: list  # {"claim", "holds", "provenance"}

    @property
    def ok(self):
        return bool(self.checks) and all(c["holds"] for c in self.checks)

    def to_json(self):
        return {"lemma": self.lemma, "surface": self.surface, "params": self.params,
                "ok": self.ok, "checks": self.checks}


def _exact_span(system, keep=lambda c: True):
    span = linalg.RationalSpan()
    for idx, c in enumerate(system.constraints):
        if c.modulus == 0 and keep(c):
            span.add(linear_vector(c.poly), idx)
    return span


def _span_check(system, span, claim, poly):
    combo = span.express(linear_vector(poly))
    prov = sorted({system.constraints[i].provenance for i in combo}) if combo is not None else []
    return {"claim": claim, "holds": combo is not None, "provenance": prov}


def _exp_lemma(M, n):
    if n < 2:
        raise SolverError("exp-lemma needs n >= 2")
    an = build_ansatz(M, "gamma2", n=n, m=2, extra_symbols=["m"])
    system = harvest(an, gamma2_relations(M, n, an.ring.gen("m"), an.ctx))
    span = _exact_span(system)
    facts, _, _ = _two_factor_facts(an, n)
    return [_span_check(system, span, name, poly) for name, poly in facts if not name.startswith("alpha")]


def _r_coeff_lemma(M, n):
    if n < 4:
        raise SolverError("r-coeff-lemma needs n >= 4 (a far pair of sigmas)")
    an = build_ansatz(M, "gamma2", n=n, m=2)
    system = harvest(an)
    # only the far-commutation relators are used
    span = _exact_span(system, lambda c: c.provenance.startswith("B2 "))
    out = []
    for i, j in itertools.combinations(range(1, n), 2):
        if j - i < 2:
            continue
        for who, q in ((j, i + 1), (i, j + 1)):
            if q <= n:
                out.append(_span_check(system, span, f"r_{{{who},{q}}} = 0", an.ring.gen(f"r_{who}_{q}")))
    return out


def _class2_tools(an):
    ctx, g = an.ctx, an.ring.gen

    def kern(w):
        return collect(apply_ansatz(w, an.images), ctx).kernel

    def cpow(k, e):
        return ctx.element(**{f"c{k}": e}) if 1 <= k <= ctx.n else ctx.identity()

    def prod(*xs):
        out = ctx.identity()
        for x in xs:
            out = out * x
        return out

    def r(i, k):
        return g(f"r_{i}_{k}") if 1 <= k <= ctx.n else 0

    return ctx, g, kern, cpow, prod, r


def _commutator_lemma(M, t, s):
    if t < 3:
        raise SolverError("commutator-lemma needs t >= 3 (a braid pair of sigmas)")
    an = build_ansatz(M, "gamma3", t=t, s=s)
    ctx, g, kern, cpow, prod, r = _class2_tools(an)
    E = ctx.element
    out = []
    for i, j in itertools.combinations(range(1, t), 2):
        if j - i < 2:
            continue
        zl, zr = kern(word(sigma(i), sigma(j))), kern(word(sigma(j), sigma(i)))
        ti = E(q=-g(f"s_{i}_2")) * E(p=-g(f"s_{i}_1"))
        tj = E(q=-g(f"s_{j}_2")) * E(p=-g(f"s_{j}_1"))
        rji, rij = r(j, i + 1), r(i, j + 1)
        cp = prod(cpow(i, rji), cpow(i + 1, -2 * rji), cpow(i + 2, rji),
                  cpow(j, -rij), cpow(j + 1, 2 * rij), cpow(j + 2, -rij))
        lhs, rhs = zl * zr.inverse(), prod(ti.inverse(), tj.inverse(), ti, tj) * cp.inverse()
        out.append({"claim": f"s{i} s{j} = s{j} s{i}: z_L z_R^-1 = [tau_{i}, tau_{j}] C-product^-1",
                    "holds": lhs.same(rhs), "provenance": [f"s{i} s{j} commute"]})
    for i in range(1, t - 1):
        zl = kern(word(sigma(i), sigma(i + 1), sigma(i)))
        zr = kern(word(sigma(i + 1), sigma(i), sigma(i + 1)))
        al = E(p=g(f"s_{i}_1")) * E(q=g(f"s_{i}_2"))
        be = E(p=g(f"s_{i + 1}_1")) * E(q=g(f"s_{i + 1}_2"))
        dl = prod(be.inverse(), al.inverse(), be.inverse(), al, be, al)
        rho = 2 * r(i, i + 2) + 2 * r(i + 1, i + 1) + r(i, i + 1) + r(i + 1, i + 2)
        rest = [cpow(k, r(i + 1, k) - r(i, k)) for k in range(1, ctx.n + 1) if k not in (i + 1, i + 2)]
        cp = prod(*rest, cpow(i, -r(i, i + 1) - r(i, i + 2)), cpow(i + 1, rho), cpow(i + 2, -rho),
                  cpow(i + 3, r(i + 1, i + 1) + r(i + 1, i + 2)))
        lhs, rhs = zr.inverse() * zl, dl * cp.inverse()
        out.append({"claim": f"braid s{i} s{i + 1}: z_R^-1 z_L = delta C-product^-1",
                    "holds": lhs.same(rhs), "provenance": [f"braid s{i} s{i + 1}"]})
    return out


def _parity_checks(M, t, s, names):
    an, system, el, *_ , labels = _ts1_certificate(M, t, s)
    out = []
    for nm in names(an):
        zero, used = el.implies_zero(_lit(nm))
        out.append({"claim": f"{pretty(nm)} ≡ 0 (mod 2)", "holds": zero,
                    "provenance": sorted({labels[i] for i in used})})
    return out


def _parity_names(an):
    return [nm for nm in an.ring.symbols if nm.split("_")[0] in ("alpha", "beta", "s")]


def _r_parity_names(an):
    t, s = an.params["t"], an.params["s"]
    sig = [i for i in range(1, t + s) if i != t]
    return [f"r_{i}_{i + 1}" for i in sig]


def verify_derived_lemma(lemma, M, params=None):
    """Regenerate a lemma's identities from the raw relator constraints and check them."""
    M = Surface.parse(M)
    params = dict(params or {})
    if lemma not in LEMMAS:
        raise SolverError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")
    if lemma == "exp-lemma":
        n = params.setdefault("n", 3)
        checks = _exp_lemma(M, n)
    elif lemma == "r-coeff-lemma":
        n = params.setdefault("n", 4)
        checks = _r_coeff_lemma(M, n)
    else:
        t = params.setdefault("t", 4)
        s = params.setdefault("s", 2)
        if t < 2 or s < 1:
            raise SolverError("need t >= 2, s >= 1")
        if lemma == "commutator-lemma":
            checks = _commutator_lemma(M, t, s)
        elif s < 2:
            raise SolverError("parity lemmas need s >= 2")
        elif lemma == "parity-lemma":
            checks = _parity_checks(M, t, s, _parity_names)
        else:
            checks = _parity_checks(M, t, s, _r_parity_names)
    return LemmaReport(lemma, M.value, params, checks)
