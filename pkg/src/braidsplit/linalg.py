"""Exact linear algebra: Smith normal form over Z, row reduction over Q with
combination tracking, and elimination over GF(2) with provenance."""

from __future__ import annotations

from fractions import Fraction


# -- Smith normal form ----------------------------------------------------------------

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Return (diagonal, U, V) with U*A*V diagonal, each entry dividing the next.

    ``diagonal`` lists min(rows, cols) entries, trailing zeros included."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(map(int, r)) for r in A]
    U, V = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row dst += k * row src
        M[dst] = [x + k * y for x, y in zip(M[dst], M[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for r in M:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(M[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if M[i][j]]
            if not nz:
                return [M[i][i] for i in range(min(rows, cols))], U, V
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = M[t][t]
            done = True
            for i in range(t + 1, rows):
                if M[i][t]:
                    add_row(t, i, -(M[i][t] // p))
                    done = done and M[i][t] == 0
            for j in range(t + 1, cols):
                if M[t][j]:
                    add_col(t, j, -(M[t][j] // p))
                    done = done and M[t][j] == 0
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if M[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
    return [M[i][i] for i in range(min(rows, cols))], U, V


def matmul(A, B):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*B)] for row in A]


def determinant(A):
    """Exact determinant by fraction-free elimination (Bareiss)."""
    n = len(A)
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1] if n else 1


def abelian_invariants(rows, ncols):
    """Invariant factors of Z^ncols / (row span): the non-unit diagonal entries
    followed by one 0 per free summand."""
    if not rows:
        return [0] * ncols
    diag, _, _ = smith_normal_form(rows)
    torsion = [abs(d) for d in diag if abs(d) not in (0, 1)]
    rank = sum(1 for d in diag if d)
    return torsion + [0] * (ncols - rank)


# -- rational row reduction --------------------------------------------------------------

class RationalSpan:
    """Span of sparse vectors over Q, remembering how each pivot row was built."""

    def __init__(self):
        self.pivots = {}  # key -> (row dict, combination dict)
        self.order = []
        self.count = 0

    def _reduce(self, vec, combo):
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        combo = dict(combo)
        for key in self.order:
            c = vec.get(key)
            if not c:
                continue
            prow, pcombo = self.pivots[key]
            for k, v in prow.items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for k, v in pcombo.items():
                nv = combo.get(k, 0) - c * v
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)
        return vec, combo

    def add(self, vec, tag=None):
        tag = self.count if tag is None else tag
        self.count += 1
        vec, combo = self._reduce(vec, {tag: Fraction(1)})
        if not vec:
            return False
        key = min(vec, key=_sort_key)
        c = vec[key]
        vec = {k: v / c for k, v in vec.items()}
        combo = {k: v / c for k, v in combo.items()}
        # keep earlier pivots reduced against the new one
        for pk in self.order:
            prow, pcombo = self.pivots[pk]
            f = prow.get(key)
            if f:
                for k, v in vec.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
                for k, v in combo.items():
                    nv = pcombo.get(k, 0) - f * v
                    if nv:
                        pcombo[k] = nv
                    else:
                        pcombo.pop(k, None)
        self.pivots[key] = (vec, combo)
        self.order.append(key)
        return True

    def express(self, vec):
        """Combination {tag: coefficient} producing ``vec``, or None if outside the span."""
        rest, combo = self._reduce(vec, {})
        if rest:
            return None
        return {k: -v for k, v in combo.items()}

    @property
    def rank(self):
        return len(self.order)


def _sort_key(k):
    return (str(type(k)), k)


# -- GF(2) elimination ------------------------------------------------------------------

class GF2Span:
    """Rows are sets of column keys; provenance is the set of input tags used.
    Pivot rows are kept fully reduced, so each holds exactly one pivot key."""

    def __init__(self):
        self.pivots = {}
        self.count = 0

    def reduce(self, row, prov=frozenset()):
        row, prov = set(row), set(prov)
        for key in row & self.pivots.keys():
            prow, pprov = self.pivots[key]
            row ^= prow
            prov ^= pprov
        return frozenset(row), frozenset(prov)

    def add(self, row, tag=None):
        tag = self.count if tag is None else tag
        self.count += 1
        row, prov = self.reduce(row, {tag})
        if not row:
            return False
        key = min(row, key=_sort_key)
        for pk, (prow, pprov) in list(self.pivots.items()):
            if key in prow:
                self.pivots[pk] = (prow ^ row, pprov ^ prov)
        self.pivots[key] = (row, prov)
        return True

    def contains(self, row):
        rest, prov = self.reduce(row)
        return (not rest), prov

    @property
    def rank(self):
        return len(self.pivots)


# -- boolean polynomial systems over GF(2) ------------------------------------------------
#
# A polynomial is a frozenset of monomials, a monomial a frozenset of variable
# names (the empty monomial is 1).  Since v^2 = v for v in {0, 1}, every
# polynomial is multilinear.

ONE = frozenset()


def _mono_key(m):
    return (-len(m), tuple(sorted(m)))


def bool_substitute(poly, var, rhs):
    out = set()
    for m in poly:
        if var in m:
            rest = m - {var}
            for r in rhs:
                out ^= {rest | r}
        else:
            out ^= {m}
    return frozenset(out)


class ElimLin:
    """Repeatedly linearize, harvest the linear consequences, and substitute them
    back.  ``substitutions`` maps each eliminated variable to its value (a
    polynomial in the surviving variables) together with the input tags used."""

    def __init__(self, polys, tags=None):
        tags = list(range(len(polys))) if tags is None else list(tags)
        self.current = [(p, frozenset([t])) for p, t in zip(polys, tags) if p]
        self.substitutions = {}
        self.order = []
        self.inconsistent = None
        self._run()

    def _run(self):
        while True:
            span = GF2Span()
            for i, (p, _) in enumerate(self.current):
                span.add(frozenset(_mono_key(m) for m in p), i)
            linear = [(row, prov) for key, (row, prov) in span.pivots.items() if -key[0] <= 1]
            if not linear:
                return
            row, prov = min(linear, key=lambda rp: sorted(rp[0]))
            used = frozenset().union(*(self.current[i][1] for i in prov))
            monos = [frozenset(k[1]) for k in row]
            if monos == [ONE]:
                self.inconsistent = used
                return
            var = min(v for m in monos for v in m)
            rhs = frozenset(m for m in monos if m != frozenset([var]))
            self._eliminate(var, rhs, used)

    def _eliminate(self, var, rhs, used):
        cur = []
        for p, tags in self.current:
            if any(var in m for m in p):
                p = bool_substitute(p, var, rhs)
                tags = tags | used
            if p:
                cur.append((p, tags))
        self.current = cur
        for v, (r, t) in list(self.substitutions.items()):
            if any(var in m for m in r):
                self.substitutions[v] = (bool_substitute(r, var, rhs), t | used)
        self.substitutions[var] = (rhs, used)
        self.order.append(var)

    def reduce(self, poly):
        """Normal form of ``poly`` under the learned substitutions, with the tags used."""
        used = frozenset()
        for var, (rhs, tags) in self.substitutions.items():
            if any(var in m for m in poly):
                poly = bool_substitute(poly, var, rhs)
                used |= tags
        return poly, used

    def implies_zero(self, poly):
        rest, used = self.reduce(poly)
        return (not rest), used
