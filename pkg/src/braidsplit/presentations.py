"""Parametric presentations of surface braid groups of the torus and the Klein bottle."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .words import (
    EMPTY, SG, X, Y, Symbol, Word, WordError, a, b, C, format_word, invert,
    parse_word, rho, sigma, substitute, word,
)


class PresentationError(ValueError):
    pass


class Surface(str, Enum):
    TORUS = "T"
    KLEIN = "K"

    @classmethod
    def parse(cls, value):
        if isinstance(value, Surface):
            return value
        key = str(value).strip().lower()
        if key in ("t", "torus"):
            return cls.TORUS
        if key in ("k", "klein"):
            return cls.KLEIN
        raise PresentationError(f"unknown surface {value!r}")

    def __str__(self):
        return self.value


T = Surface.TORUS
K = Surface.KLEIN


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: Word
    rhs: Word = EMPTY

    @property
    def word(self):
        return self.lhs * invert(self.rhs)


@dataclass
class Presentation:
    surface: Surface
    family: str
    params: dict
    generators: list
    relations: list = field(default_factory=list)

    @property
    def relators(self):
        return [r.word for r in self.relations]

    def validate(self):
        gens = set(self.generators)
        for r in self.relations:
            extra = r.word.symbols() - gens
            if extra:
                names = ", ".join(sorted(str(s) for s in extra))
                raise PresentationError(f"relator {r.label} uses unlisted generators {names}")
        return self

    def family_counts(self):
        counts = {}
        for r in self.relations:
            fam = r.label.split()[0]
            counts[fam] = counts.get(fam, 0) + 1
        return counts

    def to_text(self):
        params = ",".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"surface={self.surface.value} family={self.family} params={params}"]
        lines += [format_word(w) for w in self.relators]
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {
            "surface": self.surface.value,
            "family": self.family,
            "params": dict(self.params),
            "generators": [str(g) for g in self.generators],
            "relators": [{"label": r.label, "word": format_word(r.word)} for r in self.relations],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def read_presentation_text(text):
    """Parse the header-plus-relators file format back into (header dict, relator words)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise PresentationError("empty presentation file")
    header = {}
    for part in lines[0].split():
        key, _, val = part.partition("=")
        header[key] = val
    if "surface" not in header or "family" not in header:
        raise PresentationError("header needs surface= and family=")
    params = {}
    for item in filter(None, header.get("params", "").split(",")):
        k, _, v = item.partition("=")
        params[k] = v
    header["params"] = params
    return header, [parse_word(ln) for ln in lines[1:]]


# -- small word helpers ------------------------------------------------------

def _g(sym, e=1):
    return Word.gen(sym, e)


def commutator_rel(label, u, v):
    u, v = Word.coerce(u), Word.coerce(v)
    return Relation(label, u * v, v * u)


def surface_braid_word(n):
    """sigma_1 ... sigma_{n-2} sigma_{n-1}^2 sigma_{n-2} ... sigma_1 (empty when n = 1)."""
    if n < 2:
        return EMPTY
    up = [(sigma(i), 1) for i in range(1, n - 1)]
    return Word(up + [(sigma(n - 1), 2)] + up[::-1])


def surface_commutator(M, i=1):
    """b a b^-1 a^-1 on the torus, b a^-1 b^-1 a^-1 on the Klein bottle."""
    M = Surface.parse(M)
    if M is T:
        return word(b(i), a(i), (b(i), -1), (a(i), -1))
    return word(b(i), (a(i), -1), (b(i), -1), (a(i), -1))


def cij_as_artin(i, j, n=None):
    """C_{i,j} as sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1} ... sigma_{j-1}."""
    if i < 1 or j < i or (n is not None and j > n):
        raise PresentationError(f"C{i}.{j} out of range for n={n}")
    if i == j:
        return EMPTY
    down = [(sigma(k), 1) for k in range(j - 1, i, -1)]
    return Word(down + [(sigma(i), 2)] + down[::-1])


def _rho_pair(M, i, j):
    """C_{i,j} C_{i+1,j}^-1, the twisting factor that flips on the Klein bottle."""
    return word(C(i, j), (C(i + 1, j), -1))


# -- pure braid relations -----------------------------------------------------

def _rel2(i, j):
    return Relation(f"P2 i={i} j={j}", word((a(i), -1), b(j), a(i)),
                    word(b(j), a(j), (C(i, j), -1), C(i + 1, j), (a(j), -1)))


def _rel3(i, j, k):
    lhs = word((a(i), -1), C(j, k), a(i))
    if i < j < k or j < k < i:
        return Relation(f"P3 i={i} j={j} k={k}", lhs, _g(C(j, k)))
    rhs = word(a(k), (C(i + 1, k), -1), C(i, k), (a(k), -1), C(j, k), (C(i, k), -1), C(i + 1, k))
    return Relation(f"P3 i={i} j={j} k={k}", lhs, rhs)


def _rel4(i, l, j, k, commute):
    lhs = word((C(i, l), -1), C(j, k), C(i, l))
    if commute:
        return Relation(f"P4 i={i} l={l} j={j} k={k}", lhs, _g(C(j, k)))
    rhs = word(C(i, k), (C(l + 1, k), -1), C(l, k), (C(i, k), -1), C(j, k),
               (C(l, k), -1), C(l + 1, k))
    return Relation(f"P4 i={i} l={l} j={j} k={k}", lhs, rhs)


def _rel5(M, i, N):
    prod = []
    for j in range(i + 1, N + 1):
        if M is T:
            prod += [(C(i, j), -1), (C(i + 1, j), 1)]
        else:
            prod += [(C(i, j), 1), (C(i + 1, j), -1)]
    if M is T:
        surf = word(a(i), b(i), C(1, i), (a(i), -1), (b(i), -1))
    else:
        surf = word(b(i), C(1, i), (a(i), -1), (b(i), -1), (a(i), -1))
    # oriented so that the empty-product case reads as the surface word itself
    return Relation(f"P5 i={i}", surf, Word(prod))


def _rel6(M, i, j):
    lhs = word(b(j), b(i))
    if M is T:
        return Relation(f"P6 i={i} j={j}", lhs, word(b(i), b(j)))
    return Relation(f"P6 i={i} j={j}", lhs, word(b(i), b(j), C(i, j), (C(i + 1, j), -1)))


def _rel7(M, i, j):
    lhs = word((b(i), -1), a(j), b(i))
    twist = _rho_pair(M, i, j)
    if M is K:
        twist = invert(twist)
    return Relation(f"P7 i={i} j={j}", lhs, word(a(j), b(j), twist, (b(j), -1)))


def _rel8(M, i, j, k):
    lhs = word((b(i), -1), C(j, k), b(i))
    if i < j < k or j < k < i:
        return Relation(f"P8 i={i} j={j} k={k}", lhs, _g(C(j, k)))
    twist = _rho_pair(M, i, k)
    if M is K:
        twist = invert(twist)
    rhs = word(C(i + 1, k), (C(i, k), -1), C(j, k), b(k), twist, (b(k), -1))
    return Relation(f"P8 i={i} j={j} k={k}", lhs, rhs)


def pure_braid_presentation(M, n):
    M = Surface.parse(M)
    if n < 1:
        raise PresentationError("n must be at least 1")
    gens = [s for i in range(1, n + 1) for s in (a(i), b(i))]
    gens += [C(i, j) for j in range(2, n + 1) for i in range(1, j)]
    rels = []
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    rels += [commutator_rel(f"P1 i={i} j={j}", a(i), a(j)) for i, j in pairs]
    rels += [_rel2(i, j) for i, j in pairs]
    for i in range(1, n + 1):
        for j, k in pairs:
            if i < j < k or j < k < i or j <= i < k:
                rels.append(_rel3(i, j, k))
    for i, l in pairs:
        for j, k in pairs:
            if i < l < j < k or j <= i < l < k:
                rels.append(_rel4(i, l, j, k, True))
            elif i < j <= l < k:
                rels.append(_rel4(i, l, j, k, False))
    rels += [_rel5(M, i, n) for i in range(1, n + 1)]
    rels += [_rel6(M, i, j) for i, j in pairs]
    rels += [_rel7(M, i, j) for i, j in pairs]
    for i in range(1, n + 1):
        for j, k in pairs:
            if i < j < k or j < k < i or j <= i < k:
                rels.append(_rel8(M, i, j, k))
    return Presentation(M, "pure", {"n": n}, gens, rels).validate()


def _punctured_generators(n, m):
    N = n + m
    gens = [s for i in range(n + 1, N + 1) for s in (a(i), b(i))]
    gens += [C(i, j) for j in range(n + 1, N + 1) for i in range(1, j)]
    return gens


def _punctured_pure_relations(M, n, m):
    N = n + m
    rels = []
    pairs = [(i, j) for i in range(n + 1, N + 1) for j in range(i + 1, N + 1)]
    cpairs = [(j, k) for k in range(n + 1, N + 1) for j in range(1, k)]
    rels += [commutator_rel(f"P1 i={i} j={j}", a(i), a(j)) for i, j in pairs]
    rels += [_rel2(i, j) for i, j in pairs]
    for i in range(n + 1, N):
        for j, k in cpairs:
            if i < j < k or j < k < i or j <= i < k:
                rels.append(_rel3(i, j, k))
    for i, l in cpairs:
        for j, k in cpairs:
            if i < l < j < k or j <= i < l < k:
                rels.append(_rel4(i, l, j, k, True))
            elif i <= j <= l < k:
                rels.append(_rel4(i, l, j, k, False))
    rels += [_rel5(M, i, N) for i in range(n + 1, N + 1)]
    rels += [_rel6(M, i, j) for i, j in pairs]
    rels += [_rel7(M, i, j) for i, j in pairs]
    for i in range(n + 1, N + 1):
        for j, k in cpairs:
            if i < j < k or j < k < i or j <= i < k:
                rels.append(_rel8(M, i, j, k))
    return rels


def punctured_pure_presentation(M, n, m):
    M = Surface.parse(M)
    if n < 1 or m < 1:
        raise PresentationError("need n >= 1 and m >= 1")
    return Presentation(M, "punctured-pure", {"n": n, "m": m}, _punctured_generators(n, m),
                        _punctured_pure_relations(M, n, m)).validate()


def _braid_rel(i):
    return Relation(f"B1 i={i}", word(sigma(i), sigma(i + 1), sigma(i)),
                    word(sigma(i + 1), sigma(i), sigma(i + 1)))


def _sigma_conj_a(i, j):
    lhs = word((sigma(i), -1), a(j), sigma(i))
    if j == i:
        rhs = word((sigma(i), -2), a(i + 1))
    elif j == i + 1:
        rhs = word(a(i), (sigma(i), 2))
    else:
        rhs = _g(a(j))
    return Relation(f"S3 i={i} j={j}", lhs, rhs)


def _sigma_conj_b(i, j):
    lhs = word((sigma(i), -1), b(j), sigma(i))
    if j == i:
        rhs = word(b(i + 1), (sigma(i), 2))
    elif j == i + 1:
        rhs = word((sigma(i), -2), b(i))
    else:
        rhs = _g(b(j))
    return Relation(f"S4 i={i} j={j}", lhs, rhs)


def _sigma_conj_c(i, l, j):
    lhs = word((sigma(i), -1), C(l, j), sigma(i))
    if i + 1 < l < j or l <= i < j - 1 or l < j < i:
        rhs = _g(C(l, j))
    elif i == j:
        rhs = word((C(j, j + 1), -1), C(l, j + 1))
    elif i == j - 1:
        rhs = word(C(l, j - 1), C(j - 1, j))
    else:  # l == i + 1
        rhs = word(C(l - 1, j), (C(l, j), -1), C(l + 1, j))
    return Relation(f"S5 i={i} l={l} j={j}", lhs, rhs)


def _punctured_sigma_relations(n, m):
    N = n + m
    rels = [_braid_rel(i) for i in range(n + 1, N - 1)]
    rels += [commutator_rel(f"B2 i={i} j={j}", sigma(i), sigma(j))
             for i in range(n + 1, N) for j in range(i + 2, N)]
    for i in range(n + 1, N):
        rels += [_sigma_conj_a(i, j) for j in range(n + 1, N + 1)]
        rels += [_sigma_conj_b(i, j) for j in range(n + 1, N + 1)]
        rels += [_sigma_conj_c(i, l, j) for j in range(n + 1, N + 1) for l in range(1, j)]
    rels += [Relation(f"S6 i={i}", word((C(i, i + 1), -1), (sigma(i), 2))) for i in range(n + 1, N)]
    return rels


def punctured_full_presentation(M, n, m):
    M = Surface.parse(M)
    if n < 1:
        raise PresentationError("need n >= 1")
    if m < 2:
        raise PresentationError("punctured full braid group needs m >= 2; use punctured_pure_presentation")
    gens = _punctured_generators(n, m) + [sigma(i) for i in range(n + 1, n + m)]
    rels = _punctured_pure_relations(M, n, m) + _punctured_sigma_relations(n, m)
    return Presentation(M, "punctured-full", {"n": n, "m": m}, gens, rels).validate()


def _full_relations(M, n, with_surface=True):
    rels = [_braid_rel(i) for i in range(1, n - 1)]
    rels += [commutator_rel(f"B2 i={i} j={j}", sigma(j), sigma(i))
             for i in range(1, n) for j in range(i + 2, n)]
    rels += [commutator_rel(f"B3 j={j}", a(), sigma(j)) for j in range(2, n)]
    rels += [commutator_rel(f"B4 j={j}", b(), sigma(j)) for j in range(2, n)]
    if n >= 2:
        s1 = sigma(1)
        rels.append(Relation("B5", word((b(), -1), s1, a()), word(s1, a(), s1, (b(), -1), s1)))
        rels.append(commutator_rel("B6", a(), word(s1, a(), s1)))
        if M is T:
            rels.append(commutator_rel("B7", b(), word((s1, -1), b(), (s1, -1))))
        else:
            rels.append(Relation("B7", word(b(), (s1, -1), b(), s1),
                                 word((s1, -1), b(), (s1, -1), b())))
    if with_surface:
        rels.append(Relation("B8", surface_braid_word(n), surface_commutator(M)))
    return rels


def full_braid_presentation(M, n):
    M = Surface.parse(M)
    if n < 1:
        raise PresentationError("n must be at least 1")
    gens = [a(), b()] + [sigma(i) for i in range(1, n)]
    return Presentation(M, "full", {"n": n}, gens, _full_relations(M, n)).validate()


def mixed_presentation(M, n, m):
    M = Surface.parse(M)
    if n < 1 or m < 1:
        raise PresentationError("need n >= 1 and m >= 1")
    N = n + m
    gens = _punctured_generators(n, m) + [a(), b()]
    gens += [sigma(i) for i in range(1, N) if i != n]
    if m >= 2:
        rels = _punctured_pure_relations(M, n, m) + _punctured_sigma_relations(n, m)
    else:
        rels = _punctured_pure_relations(M, n, m)
    rels = [Relation("I:" + r.label, r.lhs, r.rhs) for r in rels]
    rels += [Relation("II:" + r.label, r.lhs, r.rhs) for r in _full_relations(M, n, with_surface=False)]
    prod = []
    for j in range(n + 1, N + 1):
        prod += [(C(1, j), 1), (C(2, j), -1)]
    rels.append(Relation("II:surface", Word(prod),
                         invert(surface_braid_word(n)) * surface_commutator(M)))
    for j in range(n + 1, N + 1):
        twist = word(C(1, j), (C(2, j), -1))
        flip = twist if M is T else invert(twist)
        rels.append(Relation(f"III:2 j={j}", word((a(), -1), a(j), a()), _g(a(j))))
        rels.append(Relation(f"III:3 j={j}", word((a(), -1), b(j), a()),
                             word(b(j), a(j), (C(1, j), -1), C(2, j), (a(j), -1))))
        rels.append(Relation(f"III:4 j={j}", word((b(), -1), a(j), b()),
                             word(a(j), b(j), flip, (b(j), -1))))
        rels.append(Relation(f"III:5 j={j}", word((b(), -1), b(j), b()),
                             _g(b(j)) if M is T else word(b(j), twist)))
        for i in range(1, n):
            rels.append(Relation(f"III:6a i={i} j={j}", word((sigma(i), -1), a(j), sigma(i)), _g(a(j))))
            rels.append(Relation(f"III:6b i={i} j={j}", word((sigma(i), -1), b(j), sigma(i)), _g(b(j))))
        for i in range(1, j):
            lhs = word((a(), -1), C(i, j), a())
            if i == 1:
                rhs = word(a(j), (C(2, j), -1), C(1, j), (a(j), -1), C(2, j))
            else:
                rhs = _g(C(i, j))
            rels.append(Relation(f"III:7 i={i} j={j}", lhs, rhs))
        for i in range(1, j):
            lhs = word((b(), -1), C(i, j), b())
            if i == 1 and M is T:
                rhs = word(C(2, j), b(j), C(1, j), (C(2, j), -1), (b(j), -1))
            elif i == 1:
                rhs = word(C(2, j), b(j), C(2, j), (C(1, j), -1), (b(j), -1))
            else:
                rhs = _g(C(i, j))
            rels.append(Relation(f"III:8 i={i} j={j}", lhs, rhs))
        for i in range(1, n):
            for l in range(1, j):
                lhs = word((sigma(i), -1), C(l, j), sigma(i))
                if l == i + 1:
                    rhs = word(C(l - 1, j), (C(l, j), -1), C(l + 1, j))
                else:
                    rhs = _g(C(l, j))
                rels.append(Relation(f"III:9 i={i} l={l} j={j}", lhs, rhs))
    for j in range(n + 1, N):
        rels.append(commutator_rel(f"III:10a j={j}", a(), sigma(j)))
        rels.append(commutator_rel(f"III:10b j={j}", b(), sigma(j)))
        for i in range(1, n):
            rels.append(commutator_rel(f"III:10c i={i} j={j}", sigma(i), sigma(j)))
    return Presentation(M, "mixed", {"n": n, "m": m}, gens, rels).validate()


def rho_word(M, i, n):
    """The kernel coset rho_i, with rho_1 and rho_{n+1} replaced by their values."""
    if i == 1:
        return EMPTY if M is T else _g(X, 2)
    if i == n + 1:
        return EMPTY
    return _g(rho(i))


def quotient_gamma2_presentation(M, n, m):
    M = Surface.parse(M)
    if n < 2 or m < 1:
        raise PresentationError("need n >= 2 and m >= 1")
    has_sigma = m >= 2
    gens = [a(), b(), X, Y] + ([SG] if has_sigma else [])
    gens += [rho(i) for i in range(2, n + 1)] + [sigma(i) for i in range(1, n)]
    corr = _g(rho(2), -m) if M is T else word((rho(2), -m), (X, 2 * m))
    rels = [Relation("Q1 surface", invert(surface_braid_word(n)) * surface_commutator(M), corr)]
    rels += [Relation("Q2:" + r.label, r.lhs, r.rhs) for r in _full_relations(M, n, with_surface=False)]
    if has_sigma:
        rels.append(Relation("Q3", _g(SG, 2)))
    rhos = [rho(i) for i in range(2, n + 1)]
    pairs = [(X, Y), (a(), X)]
    pairs += [(X, r) for r in rhos] + [(Y, r) for r in rhos]
    pairs += [(a(), r) for r in rhos] + [(b(), r) for r in rhos]
    pairs += [(X, sigma(j)) for j in range(1, n)] + [(Y, sigma(j)) for j in range(1, n)]
    pairs += [(rhos[i], rhos[k]) for i in range(len(rhos)) for k in range(i + 1, len(rhos))]
    if has_sigma:
        pairs += [(SG, sigma(j)) for j in range(1, n)] + [(SG, X), (SG, Y)]
        pairs += [(SG, r) for r in rhos] + [(SG, a()), (SG, b())]
    rels += [commutator_rel(f"Q4 {u},{v}", u, v) for u, v in pairs]
    if M is T:
        rels.append(Relation("Q5", word((a(), -1), Y, a()), word(Y, rho(2))))
        rels.append(Relation("Q6", word((b(), -1), X, b()), word(X, (rho(2), -1))))
        rels.append(Relation("Q7", word((b(), -1), Y, b()), _g(Y)))
    else:
        rels.append(Relation("Q5", word((a(), -1), Y, a()), word(Y, (X, -2), rho(2))))
        rels.append(Relation("Q6", word((b(), -1), X, b()), word((X, -1), rho(2))))
        rels.append(Relation("Q7", word((b(), -1), Y, b()), word(Y, (X, 2), (rho(2), -1))))
    for i in range(1, n):
        for j in range(2, n + 1):
            lhs = word((sigma(i), -1), rho(j), sigma(i))
            if j == i + 1:
                rhs = rho_word(M, j - 1, n) * _g(rho(j), -1) * rho_word(M, j + 1, n)
            else:
                rhs = _g(rho(j))
            rels.append(Relation(f"Q8 i={i} j={j}", lhs, rhs))
    return Presentation(M, "gamma2", {"n": n, "m": m}, gens, rels).validate()


def block_boundaries(sizes):
    out, acc = [], 0
    for n_i in sizes[:-1]:
        acc += n_i
        out.append(acc)
    return out


def multi_factor_presentation(M, sizes):
    """Generating set and surface relation of the mixed group with blocks ``sizes``."""
    M = Surface.parse(M)
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise PresentationError("block sizes must be positive")
    n1, N = sizes[0], sum(sizes)
    cuts = set(block_boundaries(sizes))
    gens = [s for i in range(n1 + 1, N + 1) for s in (a(i), b(i))]
    gens += [C(i, j) for j in range(n1 + 1, N + 1) for i in range(1, j)]
    gens += [a(), b()] + [sigma(i) for i in range(1, N) if i not in cuts]
    prod = []
    for j in range(n1 + 1, N + 1):
        prod += [(C(1, j), 1), (C(2, j), -1)]
    rel = Relation("surface", invert(surface_braid_word(n1)) * surface_commutator(M), Word(prod))
    return Presentation(M, "multi", {"blocks": ",".join(map(str, sizes))}, gens, [rel]).validate()


FAMILIES = {
    "pure": lambda M, n, m: pure_braid_presentation(M, n),
    "full": lambda M, n, m: full_braid_presentation(M, n),
    "punctured-pure": punctured_pure_presentation,
    "punctured-full": punctured_full_presentation,
    "mixed": mixed_presentation,
    "gamma2": quotient_gamma2_presentation,
}


def build_presentation(family, M, n, m=1):
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise PresentationError(f"unknown family {family!r}") from None
    return builder(M, n, m)


def abelianized_relation_matrix(p: Presentation):
    col = {g: k for k, g in enumerate(p.generators)}
    rows = []
    for w in p.relators:
        row = [0] * len(col)
        for s, e in w:
            row[col[s]] += e
        rows.append(row)
    return rows


# -- homomorphism checks -------------------------------------------------------

class OracleUndecided(Exception):
    """Raised by a triviality oracle that cannot settle a word."""


@dataclass
class RelatorCheck:
    label: str
    status: str  # pass, fail or undecided
    detail: str = ""


@dataclass
class MapReport:
    checks: list

    @property
    def ok(self):
        return all(c.status == "pass" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status != "pass"]

    def to_json(self):
        return {"ok": self.ok,
                "relators": [{"label": c.label, "status": c.status, "detail": c.detail}
                             for c in self.checks]}


def verify_generator_map(src: Presentation, images, oracle):
    """Check every relator of ``src`` maps to the identity.

    ``oracle(word)`` returns True/False or raises OracleUndecided; undecided
    relators are reported as such and never count as passing.
    """
    missing = [g for g in src.generators if g not in images]
    if missing:
        raise PresentationError(f"no image for generator {missing[0]}")
    checks = []
    for rel in src.relations:
        img = substitute(rel.word, images)
        try:
            verdict = oracle(img)
        except OracleUndecided as exc:
            checks.append(RelatorCheck(rel.label, "undecided", str(exc)))
            continue
        if verdict:
            checks.append(RelatorCheck(rel.label, "pass"))
        else:
            checks.append(RelatorCheck(rel.label, "fail", f"image {format_word(img)} is not trivial"))
    return MapReport(checks)


__all__ = [
    "Surface", "T", "K", "Relation", "Presentation", "PresentationError", "WordError",
    "pure_braid_presentation", "full_braid_presentation", "punctured_pure_presentation",
    "punctured_full_presentation", "mixed_presentation", "quotient_gamma2_presentation",
    "multi_factor_presentation", "cij_as_artin", "abelianized_relation_matrix",
    "verify_generator_map", "OracleUndecided", "surface_braid_word", "surface_commutator",
    "build_presentation", "read_presentation_text", "Symbol",
]
