import random

import pytest

from braidsplit.kernels import (
    Gamma2Context, Gamma3Context, KernelError, c2_conj, c2_mul, kv_act, kv_act_word,
)
from braidsplit.words import a, b, sigma, word


def test_abelian_action_examples():
    T = Gamma2Context("T", 2)
    assert kv_act(a(1), -1, T.vector(y=1)) == T.vector(y=1, r2=1)
    assert kv_act(sigma(1), -1, T.vector(r2=1)) == T.vector(r2=-1)
    K = Gamma2Context("K", 2)
    assert kv_act(b(1), -1, K.vector(x=1)) == K.vector(x=-1, r2=1)
    assert kv_act(sigma(1), -1, K.vector(r2=1)) == K.vector(x=2, r2=-1)


def test_abelian_action_invertible():
    for M in "TK":
        for n in range(2, 5):
            ctx = Gamma2Context(M, n)
            gens = [a(1), b(1)] + [sigma(i) for i in range(1, n)]
            for nm in ctx.names:
                v = ctx.vector(**{nm: 1})
                for g in gens:
                    assert kv_act(g, 1, kv_act(g, -1, v)) == v
                    assert kv_act(g, -1, kv_act(g, 1, v)) == v


def test_abelian_action_is_linear():
    rng = random.Random(1)
    for M in "TK":
        ctx = Gamma2Context(M, 4)
        gens = [a(1), b(1), sigma(1), sigma(2), sigma(3)]
        for _ in range(200):
            u = ctx.vector(**{nm: rng.randint(-5, 5) for nm in ctx.names})
            v = ctx.vector(**{nm: rng.randint(-5, 5) for nm in ctx.names})
            w = word(*[(rng.choice(gens), rng.choice([1, -1])) for _ in range(5)])
            assert kv_act_word(w, u + v) == kv_act_word(w, u) + kv_act_word(w, v)


def test_abelian_rejects_unknown_generator():
    ctx = Gamma2Context("T", 2)
    with pytest.raises(KernelError):
        kv_act(a(2), 1, ctx.vector(x=1))
    with pytest.raises(KernelError):
        kv_act(a(1), 2, ctx.vector(x=1))


# rewriting oracle in the letters A, B with a central C
RULES = {
    "T": {(1, 1): (1, 1, 1), (1, -1): (-1, 1, -1), (-1, 1): (1, -1, -1), (-1, -1): (-1, -1, 1)},
    "K": {(1, 1): (-1, 1, 1), (1, -1): (1, 1, -1), (-1, 1): (-1, -1, 1), (-1, -1): (1, -1, -1)},
}


def rewrite(M, letters):
    """Sort a word in A, B into A^p B^q C^c using B^e A^d = A^d' B^e C^c'."""
    letters, c = list(letters), 0
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            (g1, e1), (g2, e2) = letters[k], letters[k + 1]
            if g1 == "B" and g2 == "A":
                d, e, dc = RULES[M][(e1, e2)]
                letters[k:k + 2] = [("A", d), ("B", e)]
                c += dc
                changed = True
    p = sum(e for g, e in letters if g == "A")
    q = sum(e for g, e in letters if g == "B")
    return p, q, c


def spell(p, q):
    return [("A", 1 if p > 0 else -1)] * abs(p) + [("B", 1 if q > 0 else -1)] * abs(q)


def test_class2_product_matches_rewriting():
    rng = random.Random(5)
    for M in "TK":
        ctx = Gamma3Context(M, 2, 1)
        for _ in range(300):
            p1, q1, c1, p2, q2, c2 = (rng.randint(-3, 3) for _ in range(6))
            u, v = ctx.element(p1, q1, c1=c1), ctx.element(p2, q2, c1=c2)
            p, q, c = rewrite(M, spell(p1, q1) + spell(p2, q2))
            assert c2_mul(u, v).same(ctx.element(p, q, c1=c + c1 + c2)), (M, u, v)


def test_class2_examples():
    T = Gamma3Context("T", 2, 0)
    B, A = T.element(q=1), T.element(p=1)
    assert (B * A).same(T.element(1, 1, c1=1))
    K = Gamma3Context("K", 2, 0)
    B, A = K.element(q=1), K.element(p=1)
    assert (B * A).same(K.element(-1, 1, c1=1))
    # Klein compares p mod 4 and the C coordinates mod 2
    assert K.element(p=4, c2=2).same(K.identity())
    assert not K.element(p=2).same(K.identity())


def test_class2_group_axioms():
    rng = random.Random(11)
    for M in "TK":
        ctx = Gamma3Context(M, 2, 2)

        def rand():
            return ctx.element(rng.randint(-4, 4), rng.randint(-4, 4),
                               **{f"c{i}": rng.randint(-3, 3) for i in range(1, ctx.n + 1)})
        for _ in range(1000):
            u, v, w = rand(), rand(), rand()
            assert ((u * v) * w).same(u * (v * w))
            assert (u * u.inverse()).same(ctx.identity())
            assert (u.inverse() * u).same(ctx.identity())


def test_conjugation_examples():
    T = Gamma3Context("T", 2, 1)
    # a_i^-1 B a_i = B C_i^-1 C_{i+1}
    assert c2_conj(a(1), -1, T.element(q=1)).same(T.element(q=1, c1=-1, c2=1))
    # b_i^-1 A b_i = A C_i C_{i+1}^-1
    assert c2_conj(b(1), -1, T.element(p=1)).same(T.element(p=1, c1=1, c2=-1))
    with pytest.raises(KernelError):
        c2_conj(sigma(2), 1, T.element(p=1))


def test_conjugation_is_automorphism():
    rng = random.Random(2)
    for M in "TK":
        ctx = Gamma3Context(M, 2, 2)
        gens = ctx.base_generators()

        def rand():
            return ctx.element(rng.randint(-4, 4), rng.randint(-4, 4),
                               **{f"c{i}": rng.randint(-3, 3) for i in range(1, ctx.n + 1)})
        for _ in range(300):
            u, v, g, e = rand(), rand(), rng.choice(gens), rng.choice([1, -1])
            assert c2_conj(g, e, u * v).same(c2_conj(g, e, u) * c2_conj(g, e, v)), (M, g, e)
            assert c2_conj(g, -e, c2_conj(g, e, u)).same(u)


def test_context_validation():
    with pytest.raises(KernelError):
        Gamma3Context("T", 0, 1)
    with pytest.raises(KernelError):
        Gamma2Context("T", 0)
