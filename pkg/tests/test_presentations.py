import itertools

import pytest

from braidsplit import linalg
from braidsplit.artin import artin_is_trivial
from braidsplit.kernels import Gamma2Context, kv_act_word
from braidsplit.presentations import (
    PresentationError, abelianized_relation_matrix, build_presentation, cij_as_artin,
    full_braid_presentation, mixed_presentation, multi_factor_presentation,
    punctured_full_presentation, punctured_pure_presentation, pure_braid_presentation,
    quotient_gamma2_presentation, read_presentation_text, verify_generator_map,
)
from braidsplit.words import EMPTY, format_word, sigma, word


def texts(p):
    return [format_word(w) for w in p.relators]


def test_pure_single_string():
    assert texts(pure_braid_presentation("T", 1)) == ["a1 b1 a1^-1 b1^-1"]
    assert texts(pure_braid_presentation("K", 1)) == ["b1 a1^-1 b1^-1 a1^-1"]


def test_pure_counts():
    for n in range(1, 5):
        p = pure_braid_presentation("T", n)
        assert len(p.generators) == 2 * n + n * (n - 1) // 2
    # one relator per index tuple of each family at n = 3
    counts = pure_braid_presentation("T", 3).family_counts()
    assert counts == {"P1": 3, "P2": 3, "P3": 6, "P4": 2, "P5": 3, "P6": 3, "P7": 3, "P8": 6}


def test_full_surface_relators():
    assert "s1^2 a1 b1 a1^-1 b1^-1" in texts(full_braid_presentation("T", 2))
    assert "s1^2 a1 b1 a1 b1^-1" in texts(full_braid_presentation("K", 2))
    p = full_braid_presentation("T", 1)
    assert [str(g) for g in p.generators] == ["a1", "b1"]
    assert texts(p) == ["a1 b1 a1^-1 b1^-1"]


def test_punctured_pure():
    assert texts(punctured_pure_presentation("T", 2, 1)) == ["a3 b3 C1.3 a3^-1 b3^-1"]
    assert texts(punctured_pure_presentation("K", 2, 1)) == ["b3 C1.3 a3^-1 b3^-1 a3^-1"]
    assert len(punctured_pure_presentation("T", 2, 2).generators) == 9


def test_punctured_full():
    assert "s2^-1 b3 s2 b2^-1 s2^2" in texts(punctured_full_presentation("K", 1, 2))
    assert "s3 s4 s3 s4^-1 s3^-1 s4^-1" in texts(punctured_full_presentation("T", 2, 3))
    with pytest.raises(PresentationError):
        punctured_full_presentation("T", 1, 1)


def test_mixed():
    rel = {r.label: format_word(r.word) for r in mixed_presentation("T", 2, 2).relations}
    assert rel["II:surface"] == "C1.3 C2.3^-1 C1.4 C2.4^-1 a1 b1 a1^-1 b1^-1 s1^2"
    rel = {r.label: format_word(r.word) for r in mixed_presentation("K", 2, 2).relations}
    assert rel["II:surface"] == "C1.3 C2.3^-1 C1.4 C2.4^-1 a1 b1 a1 b1^-1 s1^2"
    assert "a1^-1 a2 a1 a2^-1" in texts(mixed_presentation("T", 1, 2))


def test_mixed_surface_relation_meaning():
    # relator = prod C1j C2j^-1 . (s1^2)^-1 [surface commutator] ... read back as lhs = rhs
    for M, comm in (("T", "b1 a1 b1^-1 a1^-1"), ("K", "b1 a1^-1 b1^-1 a1^-1")):
        r = next(r for r in mixed_presentation(M, 2, 2).relations if r.label == "II:surface")
        assert format_word(r.lhs) == "C1.3 C2.3^-1 C1.4 C2.4^-1"
        assert format_word(r.rhs) == "s1^-2 " + comm


def test_quotient_gamma2():
    rel = {r.label: format_word(r.word) for r in quotient_gamma2_presentation("T", 2, 3).relations}
    assert rel["Q1 surface"] == "s1^-2 b1 a1 b1^-1 a1^-1 r2^3"
    rel = {r.label: format_word(r.word) for r in quotient_gamma2_presentation("K", 2, 3).relations}
    assert rel["Q1 surface"] == "s1^-2 b1 a1^-1 b1^-1 a1^-1 x^-6 r2^3"
    for M in "TK":
        assert "sg^2" in texts(quotient_gamma2_presentation(M, 3, 2))
    # m = 1 drops the sign generator
    p = quotient_gamma2_presentation("T", 2, 1)
    assert all("sg" not in t for t in texts(p))


def test_cij_as_artin():
    assert cij_as_artin(1, 2) == word((sigma(1), 2))
    assert cij_as_artin(1, 3) == word(sigma(2), (sigma(1), 2), sigma(2))
    assert cij_as_artin(4, 4) == EMPTY
    with pytest.raises(PresentationError):
        cij_as_artin(2, 5, n=4)


def test_every_relator_uses_listed_generators():
    for M in "TK":
        for fam in ("pure", "full", "punctured-pure", "punctured-full", "mixed", "gamma2"):
            for n, m in itertools.product(range(1, 4), range(1, 4)):
                try:
                    p = build_presentation(fam, M, n, m)
                except PresentationError:
                    continue
                gens = set(p.generators)
                for w in p.relators:
                    assert w.symbols() <= gens, (fam, M, n, m, format_word(w))


def test_text_format_round_trip():
    p = mixed_presentation("K", 2, 2)
    header, relators = read_presentation_text(p.to_text())
    assert [format_word(w) for w in relators] == texts(p)
    assert header["surface"] == "K" and header["family"] == p.family


def test_abelianized_matrix_rows():
    p = full_braid_presentation("T", 2)
    rows = abelianized_relation_matrix(p)
    gens = [str(g) for g in p.generators]
    surface = rows[[i for i, r in enumerate(p.relations) if "s1^2" in format_word(r.word)][0]]
    assert surface[gens.index("s1")] == 2 and sum(map(abs, surface)) == 2
    assert abelianized_relation_matrix(pure_braid_presentation("T", 1)) == [[0, 0]]


def test_abelianization_invariants_grid():
    for M in "TK":
        for n in range(1, 4):
            for m in (2, 3):
                p = punctured_full_presentation(M, n, m)
                inv = linalg.abelian_invariants(abelianized_relation_matrix(p), len(p.generators))
                assert inv == [2] + [0] * (n + 1), (M, n, m, inv)


def test_pure_relators_trivial_in_gamma2_quotient():
    # every pure relator acts trivially on the abelianized kernel of the full group
    for M in "TK":
        for n in range(2, 5):
            ctx = Gamma2Context(M, n)
            basis = [ctx.vector(**{nm: 1}) for nm in ctx.names]
            for rel in full_braid_presentation(M, n).relations:
                if rel.label == "B8":
                    continue
                for v in basis:
                    assert kv_act_word(rel.lhs, v) == kv_act_word(rel.rhs, v), (M, n, rel.label)


def test_verify_generator_map_identity_and_negative_control():
    p = full_braid_presentation("T", 3)
    sig_only = type(p)(p.surface, "braid-only", {"n": 3}, [g for g in p.generators if g.kind == "sigma"],
                       [r for r in p.relations if r.label.startswith(("B1", "B2"))])
    ident = {g: word(g) for g in sig_only.generators}
    report = verify_generator_map(sig_only, ident, lambda w: artin_is_trivial(w, 3))
    assert report.ok
    # inclusion of B_3 into B_4 on the sigma generators
    report = verify_generator_map(sig_only, ident, lambda w: artin_is_trivial(w, 4))
    assert report.ok
    bad = {sigma(1): word(sigma(1)), sigma(2): word((sigma(1), -1))}
    report = verify_generator_map(sig_only, bad, lambda w: artin_is_trivial(w, 3))
    assert not report.ok
    assert any(c.label.startswith("B1") for c in report.failures())


def test_verify_generator_map_reports_undecided():
    from braidsplit.artin import Undecided
    p = full_braid_presentation("T", 3)
    sig_only = type(p)(p.surface, "braid-only", {"n": 3}, [g for g in p.generators if g.kind == "sigma"],
                       [r for r in p.relations if r.label.startswith("B1")])

    def never(w):
        raise Undecided("cap")

    report = verify_generator_map(sig_only, {g: word(g) for g in sig_only.generators}, never)
    assert not report.ok
    assert all(c.status == "undecided" for c in report.checks)


def test_multi_factor_generators():
    p = multi_factor_presentation("T", [2, 3, 1])
    names = {str(g) for g in p.generators}
    assert {"s1", "s3", "s4"} <= names and "s2" not in names and "s5" not in names
    assert [r.label for r in p.relations] == ["surface"]
