"""Pivotal axioms, form spaces, and the definition-level indicator."""

import dataclasses
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fsind.constructors import (
    CayleyTable,
    cyclic_table,
    group_algebra,
    group_involution,
    q8_table,
    s3_table,
    scheme_to_grouplike,
    SchemeSpec,
)
from fsind.documents import document_from_dict
from fsind.constructors import builtin_document
from fsind.linalg import Matrix, det
from fsind.pivotal import (
    MissingComultiplication,
    MissingData,
    ModuleRep,
    NotCentralCharacter,
    conjugate_module,
    direct_sum,
    dual_module,
    fs_indicator,
    hom_space,
    invariant_form_space,
    pivotal_from_character,
    regular_module,
    resolve_involution,
    span_contains_invertible,
    transposition_on_forms,
    twist_algebra,
    validate_algebra_involution,
    validate_module,
    validate_pivotal,
)
from fsind.scalars import RATIONAL, cyclotomic_field

F = Fraction


def load(name):
    return document_from_dict(builtin_document(name), name=name)


def rat(x):
    return RATIONAL.coerce(x)


def count_involutions(ct: CayleyTable):
    """#{x : x^2 = e} straight off the Cayley table."""
    e = ct.identity()
    return sum(1 for i in range(ct.order) if ct.table[i][i] == e)


# --- validation --------------------------------------------------------------

def test_group_algebras_validate_clean():
    for name in ("C2", "C3", "S3", "D4", "Q8"):
        doc = load(name)
        assert validate_pivotal(doc.algebra) == []
        for V in doc.modules.values():
            assert validate_module(doc.algebra, V) == []


def test_shifted_s_is_caught():
    A = group_algebra(cyclic_table(3), RATIONAL)
    shift = Matrix(RATIONAL, [[rat(1) if (i - 1) % 3 == j else rat(0)
                               for j in range(3)] for i in range(3)])
    bad = validate_pivotal(dataclasses.replace(A, S=shift))
    assert any("anti-map" in v for v in bad)


def test_broken_module_action_is_caught():
    doc = load("S3")
    std = doc.modules["std"]
    rows = [list(r) for r in std.action[1].rows]
    rows[0][0] = rows[0][0] + 1
    mats = list(std.action)
    mats[1] = Matrix(doc.algebra.tag, rows)
    bad = validate_module(doc.algebra, ModuleRep("std", 2, tuple(mats)))
    assert bad


def test_involution_validation():
    ct = cyclic_table(3)
    A = group_algebra(ct, RATIONAL)
    inv = group_involution(ct, [0, 2, 1], RATIONAL)
    assert validate_algebra_involution(A, inv) == []
    # swapping the identity with a generator is not an algebra map
    T = Matrix(RATIONAL, [[rat(v) for v in row]
                          for row in ((0, 1, 0), (1, 0, 0), (0, 0, 1))])
    assert validate_algebra_involution(A, T)


# --- form spaces and the indicator -------------------------------------------

def test_s3_standard_module_report():
    doc = load("S3")
    rep = fs_indicator(doc.algebra, doc.modules["std"])
    assert rep.nu == rat(1)
    assert (rep.dim_bil, rep.dim_plus, rep.dim_minus) == (1, 1, 0)
    assert rep.end_dim == 1 and rep.abs_simple and rep.self_dual
    assert rep.canonical_form == Matrix(
        RATIONAL, [[rat(1), F(-1, 2)], [F(-1, 2), rat(1)]])


def test_q8_twodim_is_skew():
    doc = load("Q8")
    tag = doc.algebra.tag
    rep = fs_indicator(doc.algebra, doc.modules["twodim"])
    assert rep.nu == tag.coerce(-1)
    assert (rep.dim_bil, rep.dim_plus, rep.dim_minus) == (1, 0, 1)
    assert rep.canonical_form == Matrix(
        tag, [[tag.zero(), tag.one()], [tag.coerce(-1), tag.zero()]])


def test_c3_character_not_self_dual_until_twisted():
    doc = load("C3-inv")
    A = doc.algebra
    chi1 = doc.modules["chi1"]
    plain = fs_indicator(A, chi1)
    assert plain.nu == A.tag.zero()
    assert plain.dim_bil == 0 and not plain.self_dual
    twisted = fs_indicator(A, chi1, twist="inv")
    assert twisted.nu == A.tag.one() and twisted.self_dual


def test_regular_module_indicator_counts_involutions():
    for name, table in (("S3", s3_table()), ("Q8", q8_table()),
                        ("C4", cyclic_table(4))):
        doc = load(name)
        rep = fs_indicator(doc.algebra, regular_module(doc.algebra))
        assert rep.nu == doc.algebra.tag.coerce(count_involutions(table))
        assert rep.dim_bil == doc.algebra.dim


def test_trichotomy_on_builtin_simples():
    expected = {
        "C2": (1, 1),
        "C3": (1, 0, 0),
        "C4": (1, 0, 1, 0),
        "C6": (1, 0, 0, 1, 0, 0),
        "S3": (1, 1, 1),
        "D4": (1, 1, 1, 1, 1),
        "Q8": (1, 1, 1, 1, -1),
    }
    for name, nus in expected.items():
        doc = load(name)
        for V, want in zip(doc.modules.values(), nus):
            rep = fs_indicator(doc.algebra, V)
            assert rep.abs_simple
            assert rep.nu == doc.algebra.tag.coerce(want), (name, V.name)
            assert (rep.nu != doc.algebra.tag.zero()) == rep.self_dual


def test_canonical_form_transposition_eigenvector():
    # R(g)^T M^T = nu M whenever the form space is a line
    for name in ("S3", "D4", "Q8", "C4"):
        doc = load(name)
        for V in doc.modules.values():
            rep = fs_indicator(doc.algebra, V)
            if rep.canonical_form is None:
                continue
            m = rep.canonical_form
            flip = V.of_vector(doc.algebra.g).transpose() * m.transpose()
            assert flip == m.scale(rep.nu)
            assert det(m)


def test_hom_space_dimensions():
    doc = load("S3")
    A = doc.algebra
    std, sign = doc.modules["std"], doc.modules["sign"]
    assert len(hom_space(A, std, std)) == 1
    assert len(hom_space(A, std, sign)) == 0
    # hom(reg, V) is V itself
    assert len(hom_space(A, regular_module(A), std)) == 2


def test_dual_module_is_a_module_and_duality_is_reflexive():
    doc = load("S3")
    A = doc.algebra
    std = doc.modules["std"]
    dstd = dual_module(A, std)
    assert validate_module(A, dstd) == []
    assert span_contains_invertible(A.tag, hom_space(A, std, dstd))
    ddstd = dual_module(A, dstd)
    assert span_contains_invertible(A.tag, hom_space(A, std, ddstd))


def test_transposition_is_involutive_on_regular_forms():
    for name in ("S3", "D4"):
        doc = load(name)
        A = doc.algebra
        basis = invariant_form_space(A, regular_module(A))
        op = transposition_on_forms(A, basis)
        n = len(basis.forms)
        assert n == A.dim
        assert op * op == Matrix.identity(A.tag, n)


# --- functoriality -----------------------------------------------------------

def _random_invertible(tag, dim, rng):
    while True:
        rows = [[tag.coerce(rng.randint(-3, 3)) for _ in range(dim)]
                for _ in range(dim)]
        m = Matrix(tag, rows)
        if det(m):
            return m


def test_indicator_survives_base_change():
    rng = random.Random(20240817)
    for name, mod in (("S3", "std"), ("Q8", "twodim")):
        doc = load(name)
        A = doc.algebra
        V = doc.modules[mod]
        base = fs_indicator(A, V)
        for _ in range(10):
            P = _random_invertible(A.tag, V.dim, rng)
            rep = fs_indicator(A, conjugate_module(V, P))
            assert rep.nu == base.nu
            assert (rep.dim_bil, rep.dim_plus, rep.dim_minus,
                    rep.end_dim, rep.self_dual, rep.abs_simple) == \
                   (base.dim_bil, base.dim_plus, base.dim_minus,
                    base.end_dim, base.self_dual, base.abs_simple)


S3_MODULE_NAMES = ("triv", "sign", "std")


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(S3_MODULE_NAMES), st.sampled_from(S3_MODULE_NAMES))
def test_indicator_additive_on_direct_sums(left, right):
    doc = load("S3")
    A = doc.algebra
    V, W = doc.modules[left], doc.modules[right]
    both = fs_indicator(A, direct_sum(V, W))
    assert both.nu == fs_indicator(A, V).nu + fs_indicator(A, W).nu


# --- twisting ----------------------------------------------------------------

def test_twisted_algebra_is_still_pivotal():
    doc = load("C3-inv")
    At = twist_algebra(doc.algebra, "inv")
    assert validate_pivotal(At) == []


def test_resolve_involution():
    doc = load("C3-inv")
    A = doc.algebra
    assert resolve_involution(A, None) == Matrix.identity(A.tag, A.dim)
    assert resolve_involution(A, "inv") is A.involutions["inv"]
    with pytest.raises(MissingData):
        resolve_involution(A, "nope")


def test_pivotal_from_character_sign_twist():
    doc = load("S3")
    A = doc.algebra
    sign = tuple(A.tag.coerce(x) for x in (1, 1, 1, -1, -1, -1))
    At = pivotal_from_character(A, sign)
    assert validate_pivotal(At) == []
    nus = [fs_indicator(At, doc.modules[n]).nu for n in S3_MODULE_NAMES]
    assert nus == [A.tag.zero(), A.tag.zero(), A.tag.coerce(-1)]


def test_pivotal_from_character_rejects_non_characters():
    doc = load("S3")
    A = doc.algebra
    delta_r = tuple(A.tag.coerce(1 if i == 1 else 0) for i in range(6))
    with pytest.raises(NotCentralCharacter):
        pivotal_from_character(A, delta_r)


def test_pivotal_from_character_needs_comultiplication():
    spec = SchemeSpec(size=3, rank=2,
                      relations=((0, 1, 1), (1, 0, 1), (1, 1, 0)))
    A = scheme_to_grouplike(spec, RATIONAL)
    with pytest.raises(MissingComultiplication):
        pivotal_from_character(A, (1, 1))


# --- span_contains_invertible ------------------------------------------------

def test_span_invertibility_needs_the_pencil():
    # neither basis matrix is invertible but their sum is
    a = Matrix(RATIONAL, [[rat(1), rat(0)], [rat(0), rat(0)]])
    b = Matrix(RATIONAL, [[rat(0), rat(0)], [rat(0), rat(1)]])
    assert span_contains_invertible(RATIONAL, [a, b])
    assert not span_contains_invertible(RATIONAL, [a])
    assert not span_contains_invertible(RATIONAL, [])
    # rank-one spans never contain an invertible element
    c = Matrix(RATIONAL, [[rat(0), rat(1)], [rat(0), rat(0)]])
    assert not span_contains_invertible(RATIONAL, [a, c])
