"""Separability, symmetric-form, Doi, and antipode-trace cross-checks."""

import dataclasses
from fractions import Fraction

import pytest

from fsind.constructors import (
    builtin_document,
    cyclic_table,
    d4_table,
    group_algebra,
    q8_table,
    s3_table,
    scheme_to_grouplike,
    SchemeSpec,
)
from fsind.documents import document_from_dict
from fsind.formulas import (
    DegenerateTraceForm,
    IncompleteSimplesList,
    NotAbsolutelySimple,
    NotAnIntegral,
    NotSelfDual,
    NotSymmetric,
    SeparabilityIdempotent,
    ZeroValency,
    ZeroVolumeCharacter,
    doi_grouplike_indicator,
    fs_hopf_character_formula,
    fs_regular_trace_q,
    fs_via_separability,
    fs_via_symmetric,
    hopf_integral_idempotent,
    symmetric_form_data,
    trace_S_global,
    trace_S_on_image,
    validate_separability,
)
from fsind.linalg import Matrix
from fsind.pivotal import (
    GroupLikeData,
    MissingData,
    ModuleRep,
    PivotalAlgebra,
    fs_indicator,
    pivotal_from_character,
    regular_module,
    validate_module,
    validate_pivotal,
)
from fsind.scalars import RATIONAL

F = Fraction

GROUP_DOCS = ("C2", "C3", "C4", "C6", "S3", "D4", "Q8")


def load(name):
    return document_from_dict(builtin_document(name), name=name)


def count_square_roots(ct):
    """#{x : x^2 = e} straight off the Cayley table."""
    e = ct.identity()
    return sum(1 for i in range(ct.order) if ct.table[i][i] == e)


def dual_numbers():
    """k[x]/(x^2) with S = id, g = 1 and the socle trace form."""
    one, zero = RATIONAL.one(), RATIONAL.zero()
    return PivotalAlgebra(
        tag=RATIONAL, dim=2, labels=("1", "x"),
        mult={(0, 0): ((0, one),), (0, 1): ((1, one),), (1, 0): ((1, one),)},
        unit=(one, zero),
        S=Matrix.identity(RATIONAL, 2),
        g=(one, zero),
        trace_form=(zero, one),
        name="k[x]/(x^2)",
    )


# --- separability route -------------------------------------------------------

def test_hand_built_idempotent_for_c2():
    A = group_algebra(cyclic_table(2), RATIONAL)
    h = F(1, 2)
    E = SeparabilityIdempotent([((h, F(0)), (F(1), F(0))),
                                ((F(0), h), (F(0), F(1)))])
    assert validate_separability(A, E) == []
    bad = SeparabilityIdempotent([((F(1), F(0)), (F(1), F(0)))])
    assert validate_separability(A, bad)


def test_integral_idempotent_c2_terms():
    A = group_algebra(cyclic_table(2), RATIONAL)
    E = hopf_integral_idempotent(A)
    h = F(1, 2)
    assert E.terms == [((h, F(0)), (F(1), F(0))),
                       ((F(0), h), (F(0), F(1)))]


def test_integral_idempotent_validates_everywhere():
    for name in GROUP_DOCS:
        A = load(name).algebra
        E = hopf_integral_idempotent(A)
        assert validate_separability(A, E) == []


def test_non_integrals_are_rejected():
    A = group_algebra(cyclic_table(2), RATIONAL)
    with pytest.raises(NotAnIntegral):
        hopf_integral_idempotent(dataclasses.replace(
            A, integral=(F(2), F(0))))
    with pytest.raises(NotAnIntegral):
        hopf_integral_idempotent(dataclasses.replace(
            A, integral=(F(1), F(0))))
    with pytest.raises(MissingData):
        hopf_integral_idempotent(dataclasses.replace(A, integral=None))


def test_separability_route_matches_definition():
    for name in GROUP_DOCS:
        doc = load(name)
        A = doc.algebra
        E = hopf_integral_idempotent(A)
        for V in list(doc.modules.values()) + [regular_module(A)]:
            assert fs_via_separability(A, V, E) == fs_indicator(A, V).nu, \
                (name, V.name)


def test_separability_route_twisted():
    doc = load("C3-inv")
    A = doc.algebra
    E = hopf_integral_idempotent(A)
    chi1 = doc.modules["chi1"]
    assert fs_via_separability(A, chi1, E, twist="inv") == A.tag.one()
    assert fs_via_separability(A, chi1, E) == A.tag.zero()


# --- symmetric route ----------------------------------------------------------

def test_symmetric_form_data_s3():
    A = load("S3").algebra
    data = symmetric_form_data(A)
    # phi = coefficient of the identity, so the Gram matrix is the
    # permutation matrix of inversion and b_i-dual is the inverse element
    ct = s3_table()
    n = A.dim
    for i in range(n):
        inv = next(j for j in range(n) if ct.table[i][j] == ct.identity())
        assert data.dual_basis[i] == A.basis_vector(inv)
    six = A.tag.coerce(6)
    assert data.volume == tuple(six * x for x in A.unit)


def test_symmetric_route_frozen_values():
    cases = (("S3", "std", 1, 3), ("Q8", "twodim", -1, 4), ("C3", "chi1", 0, 3))
    for name, mod, nu, schur in cases:
        doc = load(name)
        A = doc.algebra
        out = fs_via_symmetric(A, doc.modules[mod])
        assert out.nu == A.tag.coerce(nu), (name, mod)
        assert out.schur == A.tag.coerce(schur), (name, mod)
        assert out.warnings == ()


def test_symmetric_route_flags_non_simple_modules():
    A = load("S3").algebra
    reg = regular_module(A)
    out = fs_via_symmetric(A, reg)
    assert out.warnings
    assert fs_via_symmetric(A, reg, check_simple=False).warnings == ()


def test_trace_form_validation():
    A = load("S3").algebra
    skew = tuple(A.tag.one() if i == 1 else A.tag.zero()
                 for i in range(A.dim))
    with pytest.raises(NotSymmetric):
        symmetric_form_data(dataclasses.replace(A, trace_form=skew))
    B = group_algebra(cyclic_table(2), RATIONAL)
    with pytest.raises(DegenerateTraceForm):
        symmetric_form_data(dataclasses.replace(B, trace_form=(F(1), F(1))))
    with pytest.raises(MissingData):
        symmetric_form_data(dataclasses.replace(B, trace_form=None))


def test_zero_volume_character():
    A = dual_numbers()
    assert validate_pivotal(A) == []
    triv = ModuleRep("triv", 1, (Matrix(RATIONAL, [[F(1)]]),
                                 Matrix(RATIONAL, [[F(0)]])))
    assert validate_module(A, triv) == []
    data = symmetric_form_data(A)
    two_x = (F(0), F(2))
    assert data.volume == two_x
    with pytest.raises(ZeroVolumeCharacter):
        fs_via_symmetric(A, triv, data)


# --- antipode traces ----------------------------------------------------------

def test_regular_trace_q_counts_square_roots():
    tables = {"C2": cyclic_table(2), "C3": cyclic_table(3),
              "C4": cyclic_table(4), "C6": cyclic_table(6),
              "S3": s3_table(), "D4": d4_table(), "Q8": q8_table()}
    expected = {"C2": 2, "C3": 1, "C4": 2, "C6": 2,
                "S3": 4, "D4": 6, "Q8": 2}
    for name in GROUP_DOCS:
        A = load(name).algebra
        count = count_square_roots(tables[name])
        assert count == expected[name]
        assert fs_regular_trace_q(A) == A.tag.coerce(count)


def test_regular_trace_q_twisted():
    A = load("C3-inv").algebra
    # tau is inversion, so every basis element satisfies S(tau(x)) g = x
    assert fs_regular_trace_q(A, twist="inv") == A.tag.coerce(3)
    assert fs_regular_trace_q(A) == A.tag.one()


def test_trace_s_on_image_frozen_values():
    s3 = load("S3")
    assert trace_S_on_image(s3.algebra, s3.modules["std"]) == \
        (s3.algebra.tag.coerce(2), s3.algebra.tag.coerce(2))
    q8 = load("Q8")
    m2 = q8.algebra.tag.coerce(-2)
    assert trace_S_on_image(q8.algebra, q8.modules["twodim"]) == (m2, m2)
    c3 = load("C3-inv")
    one = c3.algebra.tag.one()
    assert trace_S_on_image(c3.algebra, c3.modules["chi1"],
                            twist="inv") == (one, one)


def test_trace_s_on_image_preconditions():
    c3 = load("C3")
    with pytest.raises(NotSelfDual):
        trace_S_on_image(c3.algebra, c3.modules["chi1"])
    s3 = load("S3")
    with pytest.raises(NotAbsolutelySimple):
        trace_S_on_image(s3.algebra, regular_module(s3.algebra))


def test_trace_s_global():
    for name, lhs in (("S3", 4), ("D4", 6), ("Q8", 2)):
        doc = load(name)
        A = doc.algebra
        check = trace_S_global(A, list(doc.modules.values()))
        assert check.lhs == A.tag.coerce(lhs)
        assert check.equal
        assert len(check.per_module) == len(doc.modules)


def test_trace_s_global_needs_complete_list():
    doc = load("S3")
    with pytest.raises(IncompleteSimplesList):
        trace_S_global(doc.algebra, [doc.modules["triv"], doc.modules["sign"]])


# --- Doi's valency formula ------------------------------------------------------

def k3_algebra():
    spec = SchemeSpec(size=3, rank=2,
                      relations=((0, 1, 1), (1, 0, 1), (1, 1, 0)))
    return scheme_to_grouplike(spec, RATIONAL)


def test_doi_on_the_complete_graph():
    A = k3_algebra()
    assert doi_grouplike_indicator(A, (1, 2), 1) == RATIONAL.one()
    assert doi_grouplike_indicator(A, (1, -1), 1) == RATIONAL.one()
    # the identity permutation is the trivial twist
    assert doi_grouplike_indicator(A, (1, -1), 1, tau=(0, 1)) == RATIONAL.one()


def test_doi_preconditions():
    A = k3_algebra()
    with pytest.raises(MissingData):
        doi_grouplike_indicator(dataclasses.replace(A, grouplike=None),
                                (1, -1), 1)
    broken = GroupLikeData(star=A.grouplike.star, eps=(F(1), F(0)))
    with pytest.raises(ZeroValency):
        doi_grouplike_indicator(dataclasses.replace(A, grouplike=broken),
                                (1, -1), 1)
    # chi(vol) = 2 + x/2 vanishes at x = -4
    with pytest.raises(ZeroVolumeCharacter):
        doi_grouplike_indicator(A, (1, -4), 1)


# --- twisting by a central character ---------------------------------------------

def test_character_formula_matches_definition():
    doc = load("S3")
    A = doc.algebra
    sign = tuple(A.tag.coerce(x) for x in (1, 1, 1, -1, -1, -1))
    At = pivotal_from_character(A, sign)
    for V in doc.modules.values():
        assert fs_hopf_character_formula(A, V, sign) == fs_indicator(At, V).nu
        assert fs_hopf_character_formula(A, V, A.counit) == \
            fs_indicator(A, V).nu


def test_character_formula_needs_hopf_data():
    A = k3_algebra()
    triv = ModuleRep("triv", 1, (Matrix(RATIONAL, [[F(1)]]),
                                 Matrix(RATIONAL, [[F(2)]])))
    with pytest.raises(MissingData):
        fs_hopf_character_formula(A, triv, (1, 1))
