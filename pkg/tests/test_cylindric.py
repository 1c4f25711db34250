import json

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from cylskew.cylindric import (CylindricShape, ShapeError, canonicalize, coproduct_witness,
                               cyl_schur_decompose, cyl_schur_expand, cylindric_schur,
                               errorterm_failure, expand_gk, expand_ribbons, format_shape,
                               gk_terms, gk_to_schur, gw_invariant, hook_expansion, hook_shape,
                               independence_check, is_cylindric_ribbon, is_skew, is_toric,
                               iter_ribbons, iter_shapes, iter_shapes_box, min_negative_vars,
                               new_shape, oracle_monomial, parse_shape, postnikov_check,
                               raise_origin, ribbon_decomposition, shape_cells, shape_json,
                               to_poset, verify_errorterm)
from cylskew.partitions import SkewShape, conjugate, lift, partitions_in_box
from cylskew.posets import (OrientedPoset, are_isomorphic, is_skew_shape_poset, k_po,
                            recognize_cylindric_components)
from cylskew.qsym import to_symmetric
from cylskew.symfunc import (SymFunc, lr_coefficient, monomial_to_schur, parse_symfunc,
                             restrict_vars, schur_to_monomial, skew_to_schur)

BIG_SHAPE = new_shape(3, 4, (3, 3), 2, (2, 1))
BOWTIE = new_shape(2, 2, (1,), 1, (1,))
BOWTIE_S = parse_symfunc("s[2,2] + s[2,1,1] - s[1,1,1,1]")


def shapes_up_to(k_max, nk_max, cells):
    return [c for k in range(1, k_max + 1) for nk in range(1, nk_max + 1)
            for c in iter_shapes(k, nk, cells)]


def test_new_shape_validation():
    assert BIG_SHAPE.outer == (4, 4, 4, 4, 2, 1, 1)
    assert BIG_SHAPE.size() == 17
    assert new_shape(2, 3, (3, 1), 0, (1,)).outer == (3, 1)
    cases = [((0, 3, (), 0, ()), "cylinder"), ((2, 2, (3,), 0, ()), "lam-in-box"),
             ((2, 2, (2, 2), 0, (3,)), "mu-columns"), ((2, 2, (1,), -1, ()), "winding"),
             ((2, 2, (1,), 0, (2,)), "mu-in-outer"), ((2, 2, (2, 2), 0, (1, 1, 1)), "mu-columns")]
    for args, name in cases:
        with pytest.raises(ShapeError) as info:
            new_shape(*args)
        assert info.value.invariant == name


def test_text_forms():
    assert parse_shape("k=3,nk=4;lam=3,3;d=2;mu=2,1") == BIG_SHAPE
    assert format_shape(BIG_SHAPE) == "k=3,nk=4;lam=3,3;d=2;mu=2,1"
    assert parse_shape(json.dumps(shape_json(BIG_SHAPE))) == BIG_SHAPE
    assert parse_shape("k=2,nk=2;d=1") == new_shape(2, 2, (), 1, ())
    with pytest.raises(ValueError):
        parse_shape("nk=2;lam=1")


def test_canonicalize():
    c = new_shape(3, 4, (3, 3), 3, (4, 3, 2, 1))
    assert canonicalize(c) == BIG_SHAPE
    assert canonicalize(new_shape(3, 3, (3, 3, 1), 1, (2, 1))) == (3, 3, (3, 3, 1), 1, (2, 1))
    assert raise_origin(BIG_SHAPE) == c
    assert set(shape_cells(c)) != set() and c.size() == BIG_SHAPE.size()


def test_canonical_shapes_are_complete():
    """Brute force over many windings finds no canonical shape the generator missed."""
    for k in (1, 2, 3):
        for nk in (1, 2, 3):
            found = set(iter_shapes(k, nk, 7))
            for d in range(0, 9):
                for lam in partitions_in_box(k, nk):
                    outer = lift(lam, k + nk, k, d)
                    for mu in oracles.subpartitions(outer, sum(outer) - 7):
                        try:
                            c = new_shape(k, nk, lam, d, mu)
                        except ShapeError:
                            continue
                        assert canonicalize(c) in found


def test_origin_invariance():
    for c in shapes_up_to(3, 3, 6):
        up = raise_origin(c)
        if up is not None:
            assert expand_ribbons(up) == expand_ribbons(c)
            assert set(map(lambda x: x, oracle_monomial(up).coeffs)) == set(oracle_monomial(c).coeffs)


def test_toric():
    assert is_toric(new_shape(2, 3, (3, 1), 0, (1,)))
    assert not is_toric(hook_shape(4, 3))
    rows = {}
    for _, r in shape_cells(BIG_SHAPE):
        rows[r % 3] = rows.get(r % 3, 0) + 1
    assert is_toric(BIG_SHAPE) == all(v <= 4 for v in rows.values())


def test_skew_and_ribbons():
    assert is_skew(new_shape(2, 3, (3, 1), 0, (1,)))
    assert not is_skew(hook_shape(4, 3))
    assert is_cylindric_ribbon(hook_shape(4, 3))
    assert is_cylindric_ribbon(BOWTIE) and is_toric(BOWTIE) and not is_skew(BOWTIE)
    # a single column wraps but is still the column skew shape
    assert is_skew(hook_shape(4, 1))


def test_skewness_matches_poset_recognition():
    for c in shapes_up_to(3, 3, 7):
        if c.k < 2:
            continue
        p = to_poset(c)
        assert recognize_cylindric_components(p)
        assert is_skew(c) == is_skew_shape_poset(p)


def test_to_poset_examples():
    p = to_poset(BOWTIE)
    bowtie = OrientedPoset(4, [(0, 2, True), (1, 3, True), (0, 3, False), (1, 2, False)])
    assert are_isomorphic(p, bowtie)
    skew = new_shape(2, 3, (3, 1), 0, (1,))
    square = to_poset(skew)
    # cells (2,1), (3,1) in a row and (1,2) on its own
    assert square.n == 3 and [e.strict for e in square.edges()] == [False]
    hook = to_poset(hook_shape(4, 3))
    minimal = [x for x in range(hook.n) if not hook.below[x]]
    maximal = [x for x in range(hook.n) if not any(hook.below[y] >> x & 1 for y in range(hook.n))]
    assert len(minimal) == 1 and len(maximal) == 1
    for n in range(3, 7):
        column = new_shape(n, 1, (1,) * n, 0, ())
        assert are_isomorphic(to_poset(hook_shape(n - 1, 1)), to_poset(column))
    with pytest.raises(ValueError):
        to_poset(hook_shape(1, 3))


def test_poset_generating_function_matches_expansion():
    for c in shapes_up_to(3, 3, 6):
        if c.k < 2:
            continue
        assert monomial_to_schur(to_symmetric(k_po(to_poset(c)))) == expand_ribbons(c)


def test_oracle_examples():
    assert oracle_monomial(BOWTIE) == SymFunc("monomial", {(2, 2): 1, (2, 1, 1): 2,
                                                          (1, 1, 1, 1): 4})
    hook = parse_symfunc("s[3,1,1,1,1] - s[2,1,1,1,1,1] + s[1,1,1,1,1,1,1]")
    assert oracle_monomial(hook_shape(4, 3)) == schur_to_monomial(hook)
    with pytest.raises(ValueError):
        oracle_monomial(BIG_SHAPE)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(shapes_up_to(3, 3, 6)))
def test_oracle_matches_plane_tableaux(c):
    expected = oracles.cylindric_monomial(c.k, c.nk, c.outer, c.mu)
    assert oracle_monomial(c).coeffs == expected


SIGNED_ROWS = [
    ((0, 0, 0, 0), (7, 5, 4, 4), (7, 5, 4, 4), 0),
    ((-1, 0, 0, 1), (0, 5, 4, 11), (8, 5, 4, 3), 5),
    ((-1, 0, 1, 0), (0, 5, 11, 4), (9, 5, 3, 3), 4),
    ((-1, 1, 0, 0), (0, 12, 4, 4), (11, 3, 3, 3), 3),
    ((0, -1, 0, 1), (7, -2, 4, 11), (8, 8, 4, 0), 4),
    ((0, -1, 1, 0), (7, -2, 11, 4), (9, 8, 3, 0), 3),
    ((1, -1, 0, 0), (14, -2, 4, 4), (14, 3, 3, 0), 2),
    ((-1, -1, 1, 1), (0, -2, 11, 11), (9, 9, 2, 0), 4),
    ((-1, -1, 0, 2), (0, -2, 4, 18), (15, 3, 2, 0), 5),
    ((-1, -1, 2, 0), (0, -2, 18, 4), (16, 2, 2, 0), 4),
]


def test_gk_table():
    got = {t.r: t for t in gk_terms(BIG_SHAPE)}
    assert set(got) == {row[0] for row in SIGNED_ROWS}
    for r, shifted, tau, delta in SIGNED_ROWS:
        t = got[r]
        assert t.shifted == shifted and t.normal == tau and t.delta == delta
        assert t.sign == (-1) ** delta
        assert t.shape == SkewShape(conjugate(tuple(x for x in tau if x)), (2, 1))


def test_gk_small_cases():
    c = new_shape(2, 3, (3, 1), 0, (1,))
    assert expand_gk(c) == [(1, SkewShape((3, 1), (1,)))]
    hooks = expand_gk(hook_shape(4, 3))
    assert sorted(hooks) == sorted([(1, SkewShape((3, 1, 1, 1, 1), ())),
                                    (-1, SkewShape((2, 1, 1, 1, 1, 1), ())),
                                    (1, SkewShape((1,) * 7, ()))])


def test_expansion_examples():
    assert expand_ribbons(BOWTIE) == BOWTIE_S
    assert expand_ribbons(hook_shape(4, 3)) == hook_expansion(4, 3)
    c = new_shape(2, 3, (3, 1), 0, (1,))
    assert expand_ribbons(c) == skew_to_schur(((3, 1), (1,)))
    assert gk_to_schur(expand_gk(BIG_SHAPE)) == expand_ribbons(BIG_SHAPE)


def test_identity_chain():
    a = expand_ribbons(new_shape(3, 3, (3, 3, 1), 1, (2, 1)))
    b = expand_ribbons(new_shape(3, 3, (3, 2, 2), 1, (2, 1)))
    c = expand_ribbons(new_shape(3, 3, (1,), 2, (2, 1)))
    assert a == b == c


def test_gw_invariants():
    assert gw_invariant((), 0, (1,), (1,), 2, 4) == lr_coefficient((), (1,), (1,)) == 0
    assert gw_invariant((2, 1), 0, (1,), (1, 1), 2, 4) == 1
    assert gw_invariant((2, 2), 0, (1,), (1,), 2, 4) == 0
    with pytest.raises(ValueError):
        gw_invariant((3,), 0, (), (), 2, 4)
    for lam in partitions_in_box(2, 2):
        for mu in partitions_in_box(2, 2):
            try:
                c = new_shape(2, 2, lam, 1, mu)
            except ShapeError:
                continue
            f = restrict_vars(expand_ribbons(c), 2)
            for nu in partitions_in_box(2, 2):
                v = gw_invariant(lam, 1, mu, nu, 2, 4)
                assert v >= 0 and v == f[nu]


def test_postnikov():
    assert postnikov_check(new_shape(2, 3, (3, 1), 0, (1,)))
    assert postnikov_check(hook_shape(4, 3))
    assert restrict_vars(expand_ribbons(hook_shape(4, 3)), 4) == 0
    assert postnikov_check(BIG_SHAPE, bound=17)


def test_hooks():
    assert hook_expansion(4, 3) == parse_symfunc(
        "s[3,1,1,1,1] - s[2,1,1,1,1,1] + s[1,1,1,1,1,1,1]")
    for n in range(2, 7):
        assert hook_expansion(n - 1, 1) == SymFunc("schur", {(1,) * n: 1})


def test_ribbon_decomposition_examples():
    box, ok = ribbon_decomposition(hook_shape(4, 3))
    assert ok and box == 0
    box, ok = ribbon_decomposition(BOWTIE)
    assert ok and box == SymFunc("schur", {(2, 2): 1})
    with pytest.raises(ValueError):
        ribbon_decomposition(BIG_SHAPE)


def test_min_negative_vars():
    assert min_negative_vars(new_shape(2, 3, (3, 1), 0, (1,))) is None
    assert min_negative_vars(BOWTIE) == 4
    assert min_negative_vars(hook_shape(4, 3)) == 6


def test_coproduct_witness():
    w = coproduct_witness(BOWTIE)
    assert w == ((), 1, -1, 1)
    assert coproduct_witness(BIG_SHAPE) is not None
    with pytest.raises(ValueError):
        coproduct_witness(new_shape(2, 3, (3, 1), 0, (1,)))


def test_cylindric_schur_expansion():
    res = cyl_schur_expand(BOWTIE)
    assert res.ok and res.text() == "cs[/1] + cs[2,2/0]"
    assert res.terms == {((), 1): 1, ((2, 2), 0): 1}
    c = new_shape(2, 3, (3, 1), 0, (1,))
    res = cyl_schur_expand(c)
    assert res.ok and res.terms == {nu: v for nu, v in
                                    ((((2, 1), 0), 1), (((3,), 0), 1))}
    assert cylindric_schur((), 1, 4, 3) == hook_expansion(4, 3)
    bad = cyl_schur_decompose(parse_symfunc("s[1,1,1,1] - s[2,2]"), 2, 2)
    assert not bad.ok and bad.failure


def test_cylindric_schur_on_ribbons():
    for c in iter_ribbons(6):
        res = cyl_schur_expand(c)
        assert res.ok
        assert res.terms.get(((), 1), 0) >= 1 or c.nk == 1 or c.k == 1


def test_errorterm_small():
    assert verify_errorterm(2, 2, 2) == []
    assert verify_errorterm(1, 3, 2) == []
    assert errorterm_failure(new_shape(2, 3, (3, 1), 0, (1,))) is None


def test_independence():
    assert independence_check(2, 2, 4)
    assert independence_check(3, 3, 6)
    assert independence_check(1, 1, 0)


def test_shape_enumeration():
    assert all(c.size() == 0 and c.d == 0 for c in iter_shapes(2, 2, 0))
    assert all(is_cylindric_ribbon(c) for c in iter_ribbons(5))
    assert {c.n for c in iter_ribbons(5)} == {2, 3, 4, 5}
    assert all(c.d <= 2 for c in iter_shapes_box(2, 2, 2))
