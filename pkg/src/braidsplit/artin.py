"""Word problem in the Artin braid group B_k.

The decision procedure is handle reduction.  An independent oracle evaluates
the Lawrence-Krammer representation, which is faithful, with exact Laurent
polynomial entries in q and t."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

import sympy

from .presentations import OracleUndecided, cij_as_artin
from .words import EMPTY, Word, invert, sigma, word

DEFAULT_STEP_LIMIT = 10**6


class ArtinError(ValueError):
    pass


class Undecided(OracleUndecided):
    """The step cap was reached before the word was decided."""


def step_limit():
    raw = os.environ.get("BRAIDSPLIT_STEP_LIMIT")
    if not raw:
        return DEFAULT_STEP_LIMIT
    try:
        limit = int(raw)
    except ValueError:
        raise ArtinError(f"BRAIDSPLIT_STEP_LIMIT must be an integer, got {raw!r}") from None
    if limit < 1:
        raise ArtinError("BRAIDSPLIT_STEP_LIMIT must be positive")
    return limit


def to_letters(w, k):
    """Signed generator indices (+i for sigma_i, -i for its inverse)."""
    out = []
    for sym, e in Word.coerce(w) if not isinstance(w, (list, tuple)) else w:
        if sym.kind != "sigma":
            raise ArtinError(f"{sym} is not an Artin generator")
        i = sym.index[0]
        if i >= k:
            raise ArtinError(f"s{i} does not exist in B_{k}")
        out += [i if e > 0 else -i] * abs(e)
    return out


def from_letters(letters):
    return Word((sigma(abs(x)), 1 if x > 0 else -1) for x in letters)


def _first_handle(w):
    """(start, end) of the handle ending leftmost, or None.

    A handle is s_i^e v s_i^-e with every letter of v of index > i; the one
    ending first contains no inner handle, so it is always safe to reduce."""
    last = {}
    for q, x in enumerate(w):
        i = abs(x)
        p = last.get(i)
        if p is not None and w[p] == -x:
            return p, q
        last[i] = q
        for j in [j for j in last if j > i]:
            del last[j]
    return None


def handle_reduce(w, k, limit=None):
    """Handle-free word equal to ``w`` in B_k; empty exactly when ``w`` is trivial.

    Raises Undecided once ``limit`` reductions (default: the configured cap)
    have been spent."""
    limit = step_limit() if limit is None else limit
    cur = to_letters(w, k)
    steps = 0
    while True:
        h = _first_handle(cur)
        if h is None:
            return from_letters(cur)
        if steps >= limit:
            raise Undecided(f"handle reduction hit the step cap ({limit}) at length {len(cur)}")
        steps += 1
        p, q = h
        e = 1 if cur[p] > 0 else -1
        i = abs(cur[p])
        middle = []
        for x in cur[p + 1:q]:
            if abs(x) == i + 1:
                d = 1 if x > 0 else -1
                # s_i^e s_{i+1}^d s_i^-e = s_{i+1}^-e s_i^d s_{i+1}^e
                middle += [-e * (i + 1), d * i, e * (i + 1)]
            else:
                middle.append(x)
        cur = cur[:p] + middle + cur[q + 1:]


def artin_is_trivial(w, k, limit=None):
    return not handle_reduce(w, k, limit)


# -- Lawrence-Krammer oracle -------------------------------------------------------
#
# Laurent polynomials are dicts {(exp_q, exp_t): int}.

def _lp_add(u, v, sign=1):
    out = dict(u)
    for m, c in v.items():
        c = out.get(m, 0) + sign * c
        if c:
            out[m] = c
        else:
            out.pop(m, None)
    return out


def _lp_mul(u, v):
    out = {}
    for (a1, b1), c1 in u.items():
        for (a2, b2), c2 in v.items():
            m = (a1 + a2, b1 + b2)
            c = out.get(m, 0) + c1 * c2
            if c:
                out[m] = c
            else:
                out.pop(m, None)
    return out


def _mat_mul(A, B):
    n = len(A)
    out = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for l in range(n):
            a_il = A[i][l]
            if not a_il:
                continue
            for j in range(n):
                if B[l][j]:
                    out[i][j] = _lp_add(out[i][j], _lp_mul(a_il, B[l][j]))
    return out


def _identity(n):
    return [[{(0, 0): 1} if i == j else {} for j in range(n)] for i in range(n)]


_Q, _T = sympy.symbols("q t")


def _lk_basis(k):
    return [(j, l) for j in range(1, k) for l in range(j + 1, k + 1)]


def _lk_sympy(k, i):
    """Matrix of sigma_i; column (j, l) is the image of the basis vector x_{j,l}."""
    basis = _lk_basis(k)
    pos = {v: n for n, v in enumerate(basis)}
    M = sympy.zeros(len(basis))
    q, t = _Q, _T
    for (j, l), col in pos.items():
        img = {}
        if i not in (j - 1, j, l - 1, l):
            img[(j, l)] = 1
        elif i == j - 1:
            img[(i, l)] = q
            img[(i, i + 1)] = q**2 - q
            img[(i + 1, l)] = 1 - q
        elif i == j and j != l - 1:
            img[(j + 1, l)] = 1
        elif i == l - 1 and i != j:
            img[(j, i)] = q
            img[(j, i + 1)] = 1 - q
            img[(i, i + 1)] = -(q**2 - q) * t
        elif i == l:
            img[(j, l + 1)] = 1
        else:  # i == j == l - 1
            img[(j, l)] = -t * q**2
        for v, c in img.items():
            M[pos[v], col] += c
    return M


def _to_laurent(expr):
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    dp = sympy.Poly(den, _Q, _T)
    if len(dp.terms()) != 1 or abs(dp.terms()[0][1]) != 1:
        raise ArtinError(f"entry {expr} is not a Laurent polynomial")
    (dq, dt), dc = dp.terms()[0]
    out = {}
    for (eq, et), c in sympy.Poly(num, _Q, _T).terms():
        out[(eq - dq, et - dt)] = int(c) * int(dc)
    return out


@lru_cache(maxsize=None)
def _lk_generator(k, i, sign):
    M = _lk_sympy(k, i)
    if sign < 0:
        M = M.inv()
    return tuple(tuple(_freeze(_to_laurent(M[r, c])) for c in range(M.cols)) for r in range(M.rows))


def _freeze(d):
    return tuple(sorted(d.items()))


def lk_matrix(w, k):
    """Lawrence-Krammer image of a sigma word in B_k (k >= 2)."""
    if k < 2:
        raise ArtinError("B_k needs k >= 2")
    n = k * (k - 1) // 2
    M = _identity(n)
    for x in to_letters(w, k):
        G = _lk_generator(k, abs(x), 1 if x > 0 else -1)
        M = _mat_mul(M, [[dict(e) for e in row] for row in G])
    return M


def lk_is_trivial(w, k):
    return lk_matrix(w, k) == _identity(k * (k - 1) // 2)


# -- the C_{i,j} identities ------------------------------------------------------------

def _ladder_up(lo, hi, e=1):
    """sigma_lo^e sigma_{lo+1}^e ... sigma_hi^e."""
    return Word((sigma(i), e) for i in range(lo, hi + 1))


def _ladder_down(hi, lo, e=1):
    return Word((sigma(i), e) for i in range(hi, lo - 1, -1))


def cij_word(i, j):
    return cij_as_artin(i, j)


def product_c1j_c2j_inverse(k, inverse=False):
    """prod_{j=2..k} C_{1,j} C_{2,j}^-1 (or C_{1,j}^-1 C_{2,j}) in Artin generators."""
    out = EMPTY
    for j in range(2, k + 1):
        c1, c2 = cij_word(1, j), cij_word(2, j)
        out = out * (invert(c1) * c2 if inverse else c1 * invert(c2))
    return out


def remark_identities(k):
    """(label, lhs, rhs) for every identity checked at k."""
    top = _ladder_up(1, k - 2) * word((sigma(k - 1), 2)) * _ladder_down(k - 2, 1)
    top_inv = _ladder_up(1, k - 2, -1) * word((sigma(k - 1), -2)) * _ladder_down(k - 2, 1, -1)
    out = [
        (f"prod C1,j C2,j^-1 (j=2..{k})", product_c1j_c2j_inverse(k), top),
        (f"prod C1,j^-1 C2,j (j=2..{k})", product_c1j_c2j_inverse(k, inverse=True), top_inv),
        (f"prod C1,j^-1 C2,j = (prod C1,j C2,j^-1)^-1 (j=2..{k})",
         product_c1j_c2j_inverse(k, inverse=True), invert(product_c1j_c2j_inverse(k))),
    ]
    for j in range(3, k + 1):
        lhs = cij_word(1, j) * invert(cij_word(2, j))
        out.append((f"C1,{j} C2,{j}^-1 conjugated form", lhs,
                    _ladder_down(j - 1, 2) * word((sigma(1), 2)) * _ladder_up(2, j - 1, -1)))
        out.append((f"C1,{j} C2,{j}^-1 ladder form", lhs,
                    _ladder_up(1, j - 2, -1) * word((sigma(j - 1), 2)) * _ladder_down(j - 2, 1)))
        lhs = invert(cij_word(1, j)) * cij_word(2, j)
        out.append((f"C1,{j}^-1 C2,{j} conjugated form", lhs,
                    _ladder_down(j - 1, 2, -1) * word((sigma(1), -2)) * _ladder_up(2, j - 1)))
        out.append((f"C1,{j}^-1 C2,{j} ladder form", lhs,
                    _ladder_up(1, j - 2) * word((sigma(j - 1), -2)) * _ladder_down(j - 2, 1, -1)))
    return out


@dataclass
class RemarkReport:
    k: int
    rows: list = field(default_factory=list)  # (label, status) with status pass/fail/undecided

    @property
    def ok(self):
        return bool(self.rows) and all(s == "pass" for _, s in self.rows)

    @property
    def undecided(self):
        return any(s == "undecided" for _, s in self.rows)

    def to_json(self):
        return {"k": self.k, "ok": self.ok, "rows": [{"identity": l, "status": s} for l, s in self.rows]}


def check_remark_cij(k, limit=None):
    """Check the product and single-j identities for C_{1,j} C_{2,j}^-1 in B_k."""
    if k < 2:
        raise ArtinError("need k >= 2")
    report = RemarkReport(k)
    for label, lhs, rhs in remark_identities(k):
        try:
            status = "pass" if artin_is_trivial(lhs * invert(rhs), k, limit) else "fail"
        except Undecided:
            status = "undecided"
        report.rows.append((label, status))
    return report
