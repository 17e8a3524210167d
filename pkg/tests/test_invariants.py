import pytest

from frobclose.config import Config
from frobclose.errors import ContainmentError, MultiplicityNotCertified
from frobclose.ideal_ops import IdealHandle, ideal, maximal_ideal
from frobclose.invariants import (
    INFINITE,
    QUANTITIES,
    colength,
    invariant_record,
    is_regular_sequence,
    multiplicity,
    quotient_length,
)

from oracles import colength_by_rank


def I(ring, text):
    return ideal(ring, text)


def with_relations(ring, gens):
    return list(gens) + list(ring.defining)


def test_colength_examples(hyp4, quintic):
    q = I(hyp4, "y^2, z^2")
    assert colength(q) == 16 == colength_by_rank(with_relations(hyp4, q.gens), 3, 5)
    assert colength(maximal_ideal(hyp4)) == 1
    q2 = I(quintic, "x^2, y^2")
    assert colength(q2) == 20 == 5 * 2 * 2
    assert colength_by_rank(with_relations(quintic, q2.gens), 3, 2) == 20
    assert colength(I(hyp4, "y^2")) == INFINITE


def test_quotient_length_examples(quintic):
    q1 = I(quintic, "x, y")
    assert quotient_length(q1, I(quintic, "x, y, z^2")) == 3
    assert quotient_length(q1, q1) == 0
    with pytest.raises(ContainmentError):
        quotient_length(I(quintic, "x, y, z^2"), q1)


def test_multiplicity_examples(hyp4, quintic, sr4):
    m = multiplicity(hyp4, hyp4.parse_list("y^2, z^2"))
    assert (m.value, m.tag) == (16, "cm_exact")
    m = multiplicity(quintic, quintic.parse_list("x, y"))
    assert (m.value, m.tag) == (5, "cm_exact")
    gens = sr4.parse_list("x+z, y+w")
    m = multiplicity(sr4, gens)
    assert m.value == 2 and m.method == "lech" and m.tag.startswith("lech(")
    with pytest.raises(MultiplicityNotCertified):
        multiplicity(sr4, gens, "cm_exact")


def test_sr_lech_lengths_by_brute_force(sr4):
    a, b = sr4.parse_list("x+z, y+w")
    for n in (1, 2, 4):
        gens = [a**n, b**n] + list(sr4.defining)
        assert colength(IdealHandle(sr4, [a**n, b**n])) == colength_by_rank(gens, 4, 2)
    # two planes glued at a point: a_n = 2n^2 + 1
    assert [colength(IdealHandle(sr4, [a**n, b**n])) for n in (1, 2, 4)] == [2 * n * n + 1 for n in (1, 2, 4)]


def test_lech_and_cm_agree(hyp4, quintic, regular2):
    for ring, text in ((hyp4, "y^2, z^2"), (hyp4, "y, z"), (quintic, "x, y"), (regular2, "x, y^2")):
        gens = ring.parse_list(text)
        assert multiplicity(ring, gens, "lech", 8).value == multiplicity(ring, gens, "cm_exact").value


def test_multiplicity_scaling(hyp4, sr4, regular2):
    for ring, text in ((hyp4, "y, z"), (sr4, "x+z, y+w"), (regular2, "x+y, y^2")):
        gens = ring.parse_list(text)
        d = len(gens)
        e1 = multiplicity(ring, gens).value
        e2 = multiplicity(ring, [g**2 for g in gens]).value
        assert e2 == 2**d * e1


def test_regular_sequence_detection(hyp4, sr4):
    assert is_regular_sequence(hyp4, hyp4.parse_list("y^2, z^2"))
    assert not is_regular_sequence(sr4, sr4.parse_list("x+z, y+w"))
    assert not is_regular_sequence(hyp4, hyp4.parse_list("y, y"))


def test_invariant_record_hyp4(hyp4):
    rec = invariant_record(hyp4, hyp4.parse_list("y^2, z^2"))
    assert (rec.mult, rec.len_q, rec.len_qflim, rec.surplus_f) == (16, 16, 15, 1)
    assert rec.len_qF_over_q == 1 and rec.surplus_buchsbaum == 0
    assert rec.certified and rec.chain_ok()
    d = rec.to_dict()
    assert set(QUANTITIES) <= set(d)


def test_invariant_record_quintic_q1(quintic):
    rec = invariant_record(quintic, quintic.parse_list("x, y"))
    assert rec.mult == 5 and rec.len_qF == 2 and rec.surplus_f == 3
    assert rec.len_qF_over_q == 3


def test_invariant_record_regular_all_zero(regular2):
    for text in ("x, y", "x^2, y^3", "x+y, x*y"):
        rec = invariant_record(regular2, regular2.parse_list(text))
        assert all(rec.quantity(q) == 0 for q in QUANTITIES)


def test_cm_detection_consistency(hyp4, quintic):
    for ring, text in ((hyp4, "y^2, z^2"), (hyp4, "x+y, z"), (quintic, "x^2, y^2")):
        rec = invariant_record(ring, ring.parse_list(text))
        assert rec.mult_method == "cm_exact"
        assert rec.len_q == rec.mult == rec.len_qlim


def test_invariant_record_sr(sr4):
    rec = invariant_record(sr4, sr4.parse_list("x+z, y+w"))
    assert rec.len_q == 3 and rec.len_qlim == 1 and rec.mult == 2
    assert rec.surplus_buchsbaum == 1 and rec.surplus_f == 1
    assert rec.chain_ok()


def test_unknown_quantity(hyp4):
    rec = invariant_record(hyp4, hyp4.parse_list("y, z"), Config())
    with pytest.raises(ValueError):
        rec.quantity("volume")
