import pytest
from hypothesis import given, strategies as st

import oracles
from cylskew.partitions import partitions_of
from cylskew.qsym import (QSymFunc, composition_from_code, compositions_of, coproduct_f,
                          f_to_m, is_symmetric, m_to_f, parse_qsym, refinements,
                          to_symmetric)
from cylskew.symfunc import SymFunc, schur, schur_to_fundamental, schur_to_monomial

BOWTIE_M = parse_qsym("M22 + 2M211 + 2M121 + 2M112 + 4M1111")


def test_compositions():
    assert [len(compositions_of(n)) for n in range(6)] == [1, 1, 2, 4, 8, 16]
    assert set(compositions_of(4)) == set(oracles.compositions(4))
    assert set(refinements((2, 1))) == {(2, 1), (1, 1, 1)}
    assert composition_from_code(4, 0) == (4,)
    assert composition_from_code(4, 0b111) == (1, 1, 1, 1)
    assert composition_from_code(4, 0b010) == (2, 2)


def test_f_to_m():
    assert f_to_m(parse_qsym("F31")) == parse_qsym("M31 + M211 + M121 + M1111")
    assert f_to_m(parse_qsym("F1")) == parse_qsym("M1")
    assert f_to_m(parse_qsym("F211 + F121")) == parse_qsym("M211 + M121 + 2M1111")


def test_m_to_f():
    assert m_to_f(BOWTIE_M) == parse_qsym("F22 + F211 + 2F121 + F112 - F1111")
    assert m_to_f(parse_qsym("M1")) == parse_qsym("F1")


@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.tuples(st.sampled_from(compositions_of(n)), st.integers(-3, 3)), max_size=5)))
def test_m_f_roundtrip(terms):
    f = QSymFunc("F", dict(terms))
    assert m_to_f(f_to_m(f)) == f


def test_symmetry():
    assert not is_symmetric(parse_qsym("M211 + M121 + 2M1111"))
    assert is_symmetric(BOWTIE_M)
    assert is_symmetric(QSymFunc("M", {}))
    assert to_symmetric(BOWTIE_M) == SymFunc("monomial", {(2, 2): 1, (2, 1, 1): 2, (1, 1, 1, 1): 4})
    assert to_symmetric(parse_qsym("M21 + M12")) == SymFunc("monomial", {(2, 1): 1})
    with pytest.raises(ValueError, match="not symmetric"):
        to_symmetric(parse_qsym("M21"))


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(list(partitions_of(n)))))
def test_schur_functions_are_symmetric(lam):
    m = f_to_m(schur_to_fundamental(schur(lam)))
    assert is_symmetric(m)
    assert to_symmetric(m) == schur_to_monomial(schur(lam))


def test_coproduct_f():
    got = coproduct_f(parse_qsym("F2"))
    assert got == {((), (2,)): 1, ((2,), ()): 1, ((1,), (1,)): 1}
    got = coproduct_f(parse_qsym("F11"))
    assert got == {((), (1, 1)): 1, ((1,), (1,)): 1, ((1, 1), ()): 1}


def test_text_forms():
    f = parse_qsym("F[1,2] - 2*F[3]")
    assert str(f) == "-2*F[3] + F[1,2]"
    assert parse_qsym(str(f)) == f
    assert f.to_json()["terms"] == [[[3], -2], [[1, 2], 1]]
    with pytest.raises(ValueError):
        parse_qsym("s[2]")
