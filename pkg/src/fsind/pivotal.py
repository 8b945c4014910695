"""Pivotal algebras, their modules, and the trace-of-transposition indicator.

A pivotal algebra is (A, S, g): an anti-automorphism S and an invertible g
with S(g) = g^-1 and S^2(a) = g a g^-1. The dual of a left module V gets
the action (a.f)(v) = f(S(a) v); bilinear invariance b(a v, w) = b(v, S(a) w)
cuts out the space of invariant Gram matrices, and the indicator is the
trace of M -> R(g)^T M^T on that space (with the convention
b(v, w) = v^T M w throughout).

Twisting by an involution tau replaces S by S o tau and keeps g; all twisted
quantities route through twist_algebra so there is exactly one code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .linalg import (
    Matrix,
    NotInSpan,
    det,
    inverse,
    kernel_intersection,
    rank,
    solve_in_span,
)
from .scalars import FieldTag


class ValidationError(Exception):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class MissingData(Exception):
    pass


class MissingComultiplication(MissingData):
    pass


class NotCentralCharacter(Exception):
    pass


@dataclass(frozen=True)
class GroupLikeData:
    """Doi-style group-like structure riding on an algebra: the involution
    i -> i* with S(b_i) = b_{i*} and the valency character eps."""

    star: tuple
    eps: tuple


@dataclass
class PivotalAlgebra:
    tag: FieldTag
    dim: int
    labels: tuple
    # sparse structure constants: (i, j) -> ((k, c), ...) with b_i b_j = sum c b_k
    mult: dict
    unit: tuple
    S: Matrix
    g: tuple
    # optional coalgebra data: k -> ((i, j, c), ...) with D(b_k) = sum c b_i x b_j
    comult: dict | None = None
    counit: tuple | None = None
    integral: tuple | None = None
    trace_form: tuple | None = None
    involutions: dict = field(default_factory=dict)
    grouplike: GroupLikeData | None = None
    name: str = "A"

    # -- arithmetic helpers ------------------------------------------------

    def zero_vector(self):
        return (self.tag.zero(),) * self.dim

    def basis_vector(self, i):
        z, o = self.tag.zero(), self.tag.one()
        return tuple(o if j == i else z for j in range(self.dim))

    def multiply(self, u, v):
        out = list(self.zero_vector())
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                for k, s in self.mult.get((i, j), ()):
                    out[k] = out[k] + c * s
        return tuple(out)

    def left_mult(self, u):
        """Matrix of x -> u*x on coefficient vectors."""
        cols = [self.multiply(u, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix(self.tag, list(zip(*cols)))

    def right_mult(self, u):
        cols = [self.multiply(self.basis_vector(j), u) for j in range(self.dim)]
        return Matrix(self.tag, list(zip(*cols)))

    def apply_S(self, u):
        return self.S.apply(u)

    def g_inverse(self):
        return inverse(self.left_mult(self.g)).apply(self.unit)

    def pair(self, covector, u):
        acc = self.tag.zero()
        for a, b in zip(covector, u):
            if a and b:
                acc = acc + a * b
        return acc


@dataclass
class ModuleRep:
    name: str
    dim: int
    action: tuple  # one dim x dim Matrix per algebra basis index

    def of_vector(self, u):
        out = None
        for k, c in enumerate(u):
            if not c:
                continue
            term = self.action[k].scale(c)
            out = term if out is None else out + term
        if out is None:
            tag = self.action[0].tag
            return Matrix.zeros(tag, self.dim, self.dim)
        return out

    def character(self, u):
        return self.of_vector(u).trace()

    def character_on_basis(self):
        return tuple(m.trace() for m in self.action)


@dataclass
class FormBasis:
    module: ModuleRep
    forms: list  # Gram matrices, canonically ordered


@dataclass
class IndicatorReport:
    nu: object
    dim_bil: int
    dim_plus: int
    dim_minus: int
    end_dim: int
    self_dual: bool
    abs_simple: bool
    canonical_form: Matrix | None


# ---------------------------------------------------------------------------
# validation

def validate_pivotal(A: PivotalAlgebra):
    """All pivotal axioms on basis elements; returns a list of violations."""
    bad = []
    n = A.dim
    basis = [A.basis_vector(i) for i in range(n)]

    for i in range(n):
        if A.multiply(A.unit, basis[i]) != basis[i]:
            bad.append("unit fails on the left at index %d" % i)
        if A.multiply(basis[i], A.unit) != basis[i]:
            bad.append("unit fails on the right at index %d" % i)

    for i in range(n):
        for j in range(n):
            left = A.multiply(basis[i], basis[j])
            for k in range(n):
                if (A.multiply(left, basis[k])
                        != A.multiply(basis[i], A.multiply(basis[j], basis[k]))):
                    bad.append("associativity fails at (%d, %d, %d)" % (i, j, k))

    for i in range(n):
        for j in range(n):
            lhs = A.apply_S(A.multiply(basis[i], basis[j]))
            rhs = A.multiply(A.apply_S(basis[j]), A.apply_S(basis[i]))
            if lhs != rhs:
                bad.append("S is not an anti-map at (%d, %d)" % (i, j))

    sg = A.apply_S(A.g)
    if A.multiply(sg, A.g) != A.unit or A.multiply(A.g, sg) != A.unit:
        bad.append("S(g) is not the inverse of g")
    else:
        for i in range(n):
            lhs = A.apply_S(A.apply_S(basis[i]))
            rhs = A.multiply(A.g, A.multiply(basis[i], sg))
            if lhs != rhs:
                bad.append("S^2 != g(.)g^-1 at index %d" % i)

    for name, t in A.involutions.items():
        bad.extend("involution %r: %s" % (name, v)
                   for v in validate_algebra_involution(A, t))
    return bad


def validate_algebra_involution(A: PivotalAlgebra, T: Matrix):
    bad = []
    n = A.dim
    if T * T != Matrix.identity(A.tag, n):
        bad.append("tau^2 != id")
    basis = [A.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = T.apply(A.multiply(basis[i], basis[j]))
            rhs = A.multiply(T.apply(basis[i]), T.apply(basis[j]))
            if lhs != rhs:
                bad.append("tau is not an algebra map at (%d, %d)" % (i, j))
    if T.apply(A.g) != A.g:
        bad.append("tau(g) != g")
    if T * A.S != A.S * T:
        bad.append("tau does not commute with S")
    return bad


def validate_module(A: PivotalAlgebra, V: ModuleRep):
    bad = []
    if V.of_vector(A.unit) != Matrix.identity(A.tag, V.dim):
        bad.append("module %r: unit does not act as identity" % V.name)
    for i in range(A.dim):
        for j in range(A.dim):
            prod = A.multiply(A.basis_vector(i), A.basis_vector(j))
            if V.action[i] * V.action[j] != V.of_vector(prod):
                bad.append("module %r: action breaks at (%d, %d)"
                           % (V.name, i, j))
    return bad


# ---------------------------------------------------------------------------
# module constructions

def regular_module(A: PivotalAlgebra, name="reg"):
    return ModuleRep(name, A.dim,
                     tuple(A.left_mult(A.basis_vector(i))
                           for i in range(A.dim)))


def dual_module(A: PivotalAlgebra, V: ModuleRep):
    """Dual action in the dual basis: R*(b) = R(S(b))^T."""
    action = tuple(V.of_vector(A.apply_S(A.basis_vector(i))).transpose()
                   for i in range(A.dim))
    return ModuleRep("dual(%s)" % V.name, V.dim, action)


def direct_sum(V: ModuleRep, W: ModuleRep, name=None):
    if len(V.action) != len(W.action):
        raise MissingData("modules over different algebras")
    tag = V.action[0].tag
    z = tag.zero()
    mats = []
    for a, b in zip(V.action, W.action):
        rows = [list(r) + [z] * W.dim for r in a.rows]
        rows += [[z] * V.dim + list(r) for r in b.rows]
        mats.append(Matrix(tag, rows))
    return ModuleRep(name or "%s + %s" % (V.name, W.name),
                     V.dim + W.dim, tuple(mats))


def conjugate_module(V: ModuleRep, P: Matrix, name=None):
    """Base change: action matrices become P R P^-1."""
    pinv = inverse(P)
    return ModuleRep(name or V.name, V.dim,
                     tuple(P * m * pinv for m in V.action))


# ---------------------------------------------------------------------------
# hom and form spaces

def hom_space(A: PivotalAlgebra, V: ModuleRep, W: ModuleRep):
    """Canonical basis of {F : F R_V(b) = R_W(b) F} as dW x dV matrices."""
    dv, dw = V.dim, W.dim
    ncols = dw * dv

    def constraints():
        for i in range(A.dim):
            a, b = V.action[i], W.action[i]
            c = Matrix.zeros(A.tag, ncols, ncols)
            for r in range(dw):
                for cc in range(dv):
                    row = c.rows[r * dv + cc]
                    brow = b.rows[r]
                    for s in range(dw):
                        if brow[s]:
                            row[s * dv + cc] = row[s * dv + cc] + brow[s]
                    for t in range(dv):
                        if a.rows[t][cc]:
                            row[r * dv + t] = row[r * dv + t] - a.rows[t][cc]
            yield c

    kernel = kernel_intersection(A.tag, constraints(), ncols)
    return [Matrix.from_vec(A.tag, dw, dv, list(v)) for v in kernel]


def invariant_form_space(A: PivotalAlgebra, V: ModuleRep):
    """Gram matrices M with R(b)^T M = M R(S(b)) for every basis element."""
    d = V.dim
    ncols = d * d

    def constraints():
        for i in range(A.dim):
            a = V.action[i]
            b = V.of_vector(A.apply_S(A.basis_vector(i)))
            c = Matrix.zeros(A.tag, ncols, ncols)
            for r in range(d):
                for cc in range(d):
                    row = c.rows[r * d + cc]
                    for s in range(d):
                        if a.rows[s][r]:
                            row[s * d + cc] = row[s * d + cc] + a.rows[s][r]
                    for t in range(d):
                        if b.rows[t][cc]:
                            row[r * d + t] = row[r * d + t] - b.rows[t][cc]
            yield c

    kernel = kernel_intersection(A.tag, constraints(), ncols)
    return FormBasis(V, [Matrix.from_vec(A.tag, d, d, list(v)) for v in kernel])


def transposition_on_forms(A: PivotalAlgebra, basis: FormBasis):
    """Matrix of M -> R(g)^T M^T in the given form basis.

    That map sends b(v, w) to b(w, g v); invariance of the target is a
    consequence of the pivotal axioms, so failure to land in the span means
    the input data was inconsistent.
    """
    forms = basis.forms
    rg_t = basis.module.of_vector(A.g).transpose()
    span = [f.vec() for f in forms]
    cols = []
    for f in forms:
        image = rg_t * f.transpose()
        cols.append(solve_in_span(A.tag, span, image.vec()))
    return Matrix(A.tag, list(zip(*cols))) if cols else Matrix(A.tag, [])


# ---------------------------------------------------------------------------
# twisting

def twist_algebra(A: PivotalAlgebra, tau):
    """The same algebra with S replaced by S o tau (tau applied first)."""
    t = resolve_involution(A, tau)
    return replace(A, S=A.S * t, name="%s^tau" % A.name)


def resolve_involution(A: PivotalAlgebra, tau):
    if tau is None:
        return Matrix.identity(A.tag, A.dim)
    if isinstance(tau, str):
        if tau not in A.involutions:
            raise MissingData("no involution named %r on %s" % (tau, A.name))
        return A.involutions[tau]
    return tau


# ---------------------------------------------------------------------------
# the indicator

def span_contains_invertible(tag, mats):
    """Exact search for an invertible element of a matrix span.

    Tries the basis itself, then the pencil sum_i t^i F_i for enough values
    of t to decide whether that curve's determinant vanishes identically.
    """
    mats = list(mats)
    if not mats:
        return False
    for m in mats:
        if det(m):
            return True
    if len(mats) == 1:
        return False
    d = mats[0].nrows
    bound = d * (len(mats) - 1) + 2
    for t in range(1, bound + 1):
        combo = mats[0]
        w = 1
        for m in mats[1:]:
            w *= t
            combo = combo + m.scale(tag.coerce(w))
        if det(combo):
            return True
    return False


def fs_indicator(A: PivotalAlgebra, V: ModuleRep, twist=None):
    """Definition-level Frobenius-Schur indicator of V over (A, S, g).

    nu is the trace of the transposition on the invariant form space;
    dim_plus/dim_minus are the dimensions of its +-1 eigenspaces.
    """
    At = twist_algebra(A, twist) if twist is not None else A
    basis = invariant_form_space(At, V)
    m = len(basis.forms)
    if m:
        op = transposition_on_forms(At, basis)
        nu = op.trace()
        ident = Matrix.identity(At.tag, m)
        dim_plus = m - rank(op - ident)
        dim_minus = m - rank(op + ident)
    else:
        nu = At.tag.zero()
        dim_plus = dim_minus = 0
    ends = hom_space(At, V, V)
    self_dual = span_contains_invertible(
        At.tag, hom_space(At, V, dual_module(At, V)))
    return IndicatorReport(
        nu=nu,
        dim_bil=m,
        dim_plus=dim_plus,
        dim_minus=dim_minus,
        end_dim=len(ends),
        self_dual=self_dual,
        abs_simple=len(ends) == 1,
        canonical_form=basis.forms[0] if m == 1 else None,
    )


# ---------------------------------------------------------------------------
# pivotal structure from a central character

def pivotal_from_character(A: PivotalAlgebra, alpha):
    """(A, T_alpha, 1) with T_alpha(h) = alpha(h_1) S(h_2).

    alpha must be an algebra map satisfying the centrality condition
    alpha(h_1) h_2 = alpha(h_2) h_1; the result is again pivotal, now with
    the unit as pivotal element.
    """
    if A.comult is None:
        raise MissingComultiplication(
            "%s carries no comultiplication" % A.name)
    alpha = tuple(A.tag.coerce(a) for a in alpha)
    n = A.dim
    if A.pair(alpha, A.unit) != A.tag.one():
        raise NotCentralCharacter("alpha(1) != 1")
    for i in range(n):
        for j in range(n):
            prod = A.multiply(A.basis_vector(i), A.basis_vector(j))
            if A.pair(alpha, prod) != alpha[i] * alpha[j]:
                raise NotCentralCharacter(
                    "alpha is not multiplicative at (%d, %d)" % (i, j))
    z = A.tag.zero()
    for k in range(n):
        lhs = [z] * n
        rhs = [z] * n
        for i, j, c in A.comult.get(k, ()):
            lhs[j] = lhs[j] + c * alpha[i]
            rhs[i] = rhs[i] + c * alpha[j]
        if lhs != rhs:
            raise NotCentralCharacter(
                "centrality fails on basis element %d" % k)

    cols = []
    for k in range(n):
        col = [z] * n
        for i, j, c in A.comult.get(k, ()):
            w = c * alpha[i]
            if not w:
                continue
            for r, s in enumerate(A.S.rows):
                if s[j]:
                    col[r] = col[r] + w * s[j]
        cols.append(col)
    t_alpha = Matrix(A.tag, list(zip(*cols)))
    out = replace(A, S=t_alpha, g=A.unit, involutions={},
                  name="%s[alpha]" % A.name)
    bad = validate_pivotal(out)
    if bad:
        raise ValidationError(bad)
    return out
