"""Rota-Baxter operators, paired modules, and their general constructions.

The paired-module identity of weight lam reads, for a left action,

    P(a) . T(m) = T(P(a) . m) + T(a . T(m)) + lam T(a . m)

and with all four products mirrored for a right action.  Because actions
store the algebra index first (see `actions`), both orientations collapse
to one operator identity per algebra basis element a:

    act(P a) T = T act(P a) + T act(a) T + lam T act(a)

so every checker and construction below is written once, side-free.  The
side still matters to callers; it is carried on the ActionStructure and
stored, never inferred.

Randomized falsification draws operator entries uniformly from
{-2, -1, 0, 1, 2} with a per-trial seed string "<seed>:<trial>", so runs
are reproducible and trials are independent.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field as dataclass_field

from .exactlin import (
    DimensionError,
    FieldSpec,
    InternalError,
    Mat,
    Scalar,
    Vec,
    apply_mat,
    column,
    column_space_basis,
    identity,
    in_span,
    is_zero_mat,
    kernel_basis,
    mat,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    solve_linear,
    stack_rows,
    vec_add,
    vec_scale,
)
from .report import Checker, Report, Violation
from .structures import FinAlgebra, PreconditionError, StructureError, check_algebra
from .actions import ActionStructure, check_action

DEFAULT_SEED = "hopfrb"


def fuzz_seed() -> str:
    """Seed for randomized searches; override with HOPFRB_SEED."""
    return os.environ.get("HOPFRB_SEED", DEFAULT_SEED)


def random_operator(field: FieldSpec, n: int, seed: str, trial: int) -> Mat:
    rng = random.Random(f"{seed}:{trial}")
    return mat(field, [[rng.choice((-2, -1, 0, 1, 2)) for _ in range(n)] for _ in range(n)])


@dataclass
class RbpInstance:
    """A paired-module candidate; `verified` is filled by check_rbp_module."""

    algebra: FinAlgebra
    module: ActionStructure
    p: Mat
    t: Mat
    weight: Scalar
    name: str = ""
    verified: str = "unchecked"  # "unchecked" | "pass" | "fail"
    witness: Violation | None = dataclass_field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.module.algebra != self.algebra:
            raise StructureError(f"{self.name}: module is not over the instance algebra")
        n, m = self.algebra.dim, self.module.dim
        if len(self.p) != n or any(len(r) != n for r in self.p):
            raise DimensionError(f"{self.name}: P is not dim(A)-square")
        if len(self.t) != m or any(len(r) != m for r in self.t):
            raise DimensionError(f"{self.name}: T is not dim(M)-square")
        if self.weight.field != self.algebra.field:
            raise StructureError(f"{self.name}: weight field differs from the algebra's")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field


def check_rb_operator(a: FinAlgebra, p: Mat, lam: Scalar, instance: str = "") -> Report:
    """P(x)P(y) = P(P(x)y) + P(xP(y)) + lam P(xy) on all basis pairs."""
    ck = Checker("rb-operator", instance or a.name, weight=str(lam))
    n = a.dim
    for i in range(n):
        pi = column(p, i)
        for j in range(n):
            pj = column(p, j)
            lhs = a.mul(pi, pj)
            rhs = vec_add(
                apply_mat(p, a.mul(pi, a.basis(j))),
                apply_mat(p, a.mul(a.basis(i), pj)),
            )
            rhs = vec_add(rhs, vec_scale(lam, apply_mat(p, a.mult[i][j])))
            ck.equal_vec("rb-identity", (("x", i), ("y", j)), lhs, rhs)
    return ck.report()


def _pairing_sides(inst: RbpInstance) -> list[tuple[Mat, Mat]]:
    """(lhs, rhs) operator pairs of the paired-module identity, one per
    algebra basis element."""
    a, m, p, t, lam = inst.algebra, inst.module, inst.p, inst.t, inst.weight
    out = []
    for i in range(a.dim):
        act_i = m.matrix(a.basis(i))
        act_pi = m.matrix(column(p, i))
        lhs = mat_mul(act_pi, t)
        rhs = mat_add(
            mat_mul(t, act_pi),
            mat_add(mat_mul(t, mat_mul(act_i, t)), mat_scale(lam, mat_mul(t, act_i))),
        )
        out.append((lhs, rhs))
    return out


def check_rbp_module(inst: RbpInstance) -> Report:
    """The weight-lam identity on all basis pairs; fills inst.verified."""
    ck = Checker("rbp-module", inst.name, weight=str(inst.weight))
    for i, (lhs, rhs) in enumerate(_pairing_sides(inst)):
        ck.equal_vec(
            "pairing-identity",
            (("a", i),),
            tuple(x for row in lhs for x in row),
            tuple(x for row in rhs for x in row),
        )
    rep = ck.report()
    inst.verified = "pass" if rep.ok else "fail"
    inst.witness = rep.violations[0] if rep.violations else None
    return rep


def _require_verified(inst: RbpInstance, op: str) -> None:
    if inst.verified == "unchecked":
        check_rbp_module(inst)
    if inst.verified != "pass":
        raise PreconditionError(f"{op} needs a verified instance; {inst.name} is {inst.verified}")


def is_quasi_idempotent(t: Mat, lam: Scalar) -> bool:
    """T^2 + lam T = 0, exactly."""
    if not t:
        return True
    return is_zero_mat(mat_add(mat_mul(t, t), mat_scale(lam, t)))


def commutant_subalgebra(m: ActionStructure, t: Mat) -> tuple[Vec, ...]:
    """Basis of C_M = { a : T(a . m) = a . T(m) for all m }.

    Multiplicative closure and (for unital A) membership of the unit are
    postconditions of the theory; they are asserted, and a failure is a
    package bug."""
    a = m.algebra
    f = a.field
    rows = []
    comms = []
    for i in range(a.dim):
        act_i = m.matrix(a.basis(i))
        comms.append(mat_sub(mat_mul(t, act_i), mat_mul(act_i, t)))
    for r in range(m.dim):
        for c in range(m.dim):
            rows.append(tuple(comms[i][r][c] for i in range(a.dim)))
    basis = kernel_basis(tuple(rows), f, ncols=a.dim)
    for u in basis:
        for v in basis:
            if not in_span(a.mul(u, v), basis, f):
                raise InternalError("commutant basis is not multiplicatively closed")
    if a.unital and not in_span(a.unit, basis, f):
        raise InternalError("commutant does not contain the unit")
    return basis


@dataclass(frozen=True)
class GenericVerdict:
    """Outcome of classify_generic.

    `generic` is the classification verdict: with an A-linear T it equals
    the quasi-idempotency test (sharpened to a . (T^2 + lam T) m = 0 so
    nonunital carriers are decided exactly); without A-linearity the
    classification does not apply and `generic` is None.  `failures` counts
    randomized P trials falsifying the identity.
    """

    a_linear: bool
    quasi_idempotent: bool
    generic: bool | None
    trials: int
    failures: int
    seed: str

    def to_json(self) -> dict:
        return {
            "a_linear": self.a_linear,
            "quasi_idempotent": self.quasi_idempotent,
            "generic": self.generic,
            "trials": self.trials,
            "failures": self.failures,
            "seed": self.seed,
        }


def classify_generic(
    m: ActionStructure,
    t: Mat,
    lam: Scalar,
    trials: int = 100,
    seed: str | None = None,
) -> GenericVerdict:
    """Decide whether (M, T) pairs with every P, and fuzz the answer.

    For A-linear T the identity collapses to a . (T^2 + lam T) m = 0, which
    no longer mentions P; that exact condition is the verdict, and the
    randomized trials must agree with it uniformly (all pass, or all fail).
    Disagreement raises InternalError.
    """
    a = m.algebra
    f = a.field
    seed = fuzz_seed() if seed is None else seed
    cm = commutant_subalgebra(m, t)
    a_linear = len(cm) == a.dim
    qi = is_quasi_idempotent(t, lam)
    generic: bool | None = None
    if a_linear:
        defect = mat_add(mat_mul(t, t), mat_scale(lam, t))
        generic = all(
            is_zero_mat(mat_mul(m.matrix(a.basis(i)), defect)) for i in range(a.dim)
        )
    failures = 0
    for trial in range(trials):
        p = random_operator(f, a.dim, seed, trial)
        inst = RbpInstance(a, m, p, t, lam, name=f"fuzz:{trial}")
        if not check_rbp_module(inst).ok:
            failures += 1
    if a_linear and trials:
        expected = 0 if generic else trials
        if failures != expected:
            raise InternalError(
                f"classification and fuzzing disagree: generic={generic}, "
                f"failures={failures}/{trials}"
            )
    return GenericVerdict(a_linear, qi, generic, trials, failures, seed)


def tilde_pair(p: Mat, t: Mat, lam: Scalar) -> tuple[Mat, Mat]:
    """(-lam id - P, -lam id - T); applying it twice gives back (P, T)."""
    f = lam.field
    minus = -lam
    pt = mat_sub(mat_scale(minus, identity(f, len(p))), p) if p else ()
    tt = mat_sub(mat_scale(minus, identity(f, len(t))), t) if t else ()
    return pt, tt


def atkinson_witness(inst: RbpInstance, a_vec: Vec, m_vec: Vec) -> Vec:
    """n with P(a) . T(m) = T(n), by the factorization formula
    n = P(a) . m + a . T(m) + lam (a . m).

    Also asserts the tilde identity P~(a) . T~(m) = -T~(n).  Both are
    postconditions for a verified instance of nonzero weight, so failures
    raise InternalError.
    """
    _require_verified(inst, "atkinson_witness")
    lam = inst.weight
    if lam.is_zero:
        raise PreconditionError("atkinson_witness needs nonzero weight")
    m = inst.module
    pa = apply_mat(inst.p, a_vec)
    tm = apply_mat(inst.t, m_vec)
    am = m.apply(a_vec, m_vec)
    n = vec_add(vec_add(m.apply(pa, m_vec), m.apply(a_vec, tm)), vec_scale(lam, am))
    if m.apply(pa, tm) != apply_mat(inst.t, n):
        raise InternalError("factorization identity failed on a verified instance")
    pt, tt = tilde_pair(inst.p, inst.t, lam)
    lhs = m.apply(apply_mat(pt, a_vec), apply_mat(tt, m_vec))
    rhs = vec_scale(-inst.field.one, apply_mat(tt, n))
    if lhs != rhs:
        raise InternalError("tilde factorization identity failed on a verified instance")
    return n


def atkinson_solvable(
    a: FinAlgebra, m: ActionStructure, p: Mat, t: Mat, lam: Scalar
) -> bool:
    """Whether one n per basis pair solves both factorization equations.

    This is the hypothesis side of the factorization equivalence: for
    nonzero weight it holds exactly when (M, P, T) is a paired module.
    """
    if lam.is_zero:
        raise PreconditionError("factorization solvability needs nonzero weight")
    pt, tt = tilde_pair(p, t, lam)
    stacked = stack_rows((t, tt))
    minus_one = -a.field.one
    for i in range(a.dim):
        pa = column(p, i)
        pta = column(pt, i)
        for j in range(m.dim):
            v1 = m.apply(pa, column(t, j))
            v2 = vec_scale(minus_one, m.apply(pta, column(tt, j)))
            if solve_linear(stacked, v1 + v2, a.field) is None:
                return False
    return True


def direct_sum(instances: list[RbpInstance]) -> RbpInstance:
    """Block-diagonal T on the direct sum of the carriers; shares A, P, lam."""
    if not instances:
        raise PreconditionError("direct_sum needs at least one summand")
    first = instances[0]
    for inst in instances:
        _require_verified(inst, "direct_sum")
        if inst.algebra != first.algebra or inst.p != first.p:
            raise StructureError("direct_sum summands must share the algebra and P")
        if inst.weight != first.weight:
            raise StructureError("direct_sum summands must share the weight")
        if inst.module.side != first.module.side:
            raise StructureError("direct_sum summands must share the action side")
    a = first.algebra
    f = a.field
    dims = [inst.module.dim for inst in instances]
    total = sum(dims)
    offs = []
    run = 0
    for d in dims:
        offs.append(run)
        run += d
    act = [[[f.zero] * total for _ in range(total)] for _ in range(a.dim)]
    t = [[f.zero] * total for _ in range(total)]
    for inst, off in zip(instances, offs):
        d = inst.module.dim
        for i in range(a.dim):
            for j in range(d):
                for k in range(d):
                    act[i][off + j][off + k] = inst.module.act[i][j][k]
        for r in range(d):
            for c in range(d):
                t[off + r][off + c] = inst.t[r][c]
    module = ActionStructure(
        a,
        total,
        first.module.side,
        tuple(tuple(tuple(r) for r in plane) for plane in act),
        name="(+)".join(inst.module.name or "?" for inst in instances),
    )
    out = RbpInstance(
        a,
        module,
        first.p,
        tuple(tuple(r) for r in t),
        first.weight,
        name="(+)".join(inst.name or "?" for inst in instances),
    )
    if not check_rbp_module(out).ok:
        raise InternalError("direct sum of verified instances failed verification")
    return out


def scale_weight(inst: RbpInstance, mu: Scalar) -> RbpInstance:
    """(M, mu P, mu T) has weight lam mu; rechecked, not assumed."""
    _require_verified(inst, "scale_weight")
    out = RbpInstance(
        inst.algebra,
        inst.module,
        mat_scale(mu, inst.p),
        mat_scale(mu, inst.t),
        inst.weight * mu,
        name=f"{inst.name}*{mu}",
    )
    if not check_rbp_module(out).ok:
        raise InternalError("weight scaling failed verification")
    return out


def double_construction(
    a: FinAlgebra, p: Mat, m: ActionStructure, t: Mat, lam: Scalar
) -> tuple[FinAlgebra, ActionStructure, RbpInstance]:
    """The induced product a * b = a P(b) + P(a) b + lam ab with the
    matching action a |> m = P(a) . m + a . T(m) + lam (a . m).

    Both hypotheses (operator identity on A, paired identity on M) are
    preconditions.  The star algebra is nonunital; associativity, module
    associativity of |>, the intertwining T(a |> m) = P(a) . T(m), and the
    paired identity for the new triple are all asserted.
    """
    rep_op = check_rb_operator(a, p, lam)
    if not rep_op.ok:
        raise PreconditionError("double_construction needs the operator identity on A")
    base = RbpInstance(a, m, p, t, lam, name=f"{m.name}-base")
    if not check_rbp_module(base).ok:
        raise PreconditionError("double_construction needs a verified paired module")
    f = a.field
    n = a.dim
    star_mult = []
    for i in range(n):
        plane = []
        for j in range(n):
            v = vec_add(
                a.mul(a.basis(i), column(p, j)),
                a.mul(column(p, i), a.basis(j)),
            )
            v = vec_add(v, vec_scale(lam, a.mult[i][j]))
            plane.append(v)
        star_mult.append(tuple(plane))
    star = FinAlgebra(f, n, a.labels, tuple(star_mult), None, name=f"{a.name}-star")
    rep = check_algebra(star)
    if not rep.ok:
        raise InternalError("star product of a verified pair is not associative")
    tri_act = []
    for i in range(n):
        op = mat_add(
            m.matrix(column(p, i)),
            mat_add(mat_mul(m.matrix(a.basis(i)), t), mat_scale(lam, m.matrix(a.basis(i)))),
        )
        # rows of the action plane are indexed by module input, so transpose
        plane = tuple(tuple(op[k][j] for k in range(m.dim)) for j in range(m.dim))
        tri_act.append(plane)
    tri = ActionStructure(star, m.dim, m.side, tuple(tri_act), name=f"{m.name}-tri")
    rep = check_action(tri)
    if not rep.ok:
        raise InternalError("induced action of the star algebra is not associative")
    for i in range(n):
        lhs = mat_mul(t, tri.matrix(a.basis(i)))
        rhs = mat_mul(m.matrix(column(p, i)), t)
        if lhs != rhs:
            raise InternalError("intertwining identity failed for the induced action")
    inst = RbpInstance(star, tri, p, t, lam, name=f"{m.name}-double")
    if not check_rbp_module(inst).ok:
        raise InternalError("doubled instance failed the paired identity")
    return star, tri, inst


def idempotent_identities(inst: RbpInstance) -> Report:
    """Consequences of idempotent operators on a verified instance.

    With T^2 = T: (1 + lam) T(a . T(m)) = 0.  With P^2 = P as well:
    (1 + lam) T(P(a) . m) = 0 and (1 + lam)(P(a) . T(m) - lam T(a . m)) = 0.
    Inapplicable identities are reported skipped.
    """
    _require_verified(inst, "idempotent_identities")
    a, m, p, t, lam = inst.algebra, inst.module, inst.p, inst.t, inst.weight
    f = a.field
    ck = Checker("idempotent-identities", inst.name, weight=str(lam))
    one_plus = f.one + lam
    t_idem = (not t) or mat_mul(t, t) == t
    p_idem = (not p) or mat_mul(p, p) == p
    flat = lambda mm: tuple(x for row in mm for x in row)  # noqa: E731
    if not t_idem:
        ck.skip("T-after-T-vanishes")
        ck.skip("T-after-P-vanishes")
        ck.skip("P-T-cross-term")
        return ck.report()
    for i in range(a.dim):
        act_i = m.matrix(a.basis(i))
        v = mat_scale(one_plus, mat_mul(t, mat_mul(act_i, t)))
        ck.zero_vec("T-after-T-vanishes", (("a", i),), flat(v))
    if not p_idem:
        ck.skip("T-after-P-vanishes")
        ck.skip("P-T-cross-term")
        return ck.report()
    for i in range(a.dim):
        act_i = m.matrix(a.basis(i))
        act_pi = m.matrix(column(p, i))
        v = mat_scale(one_plus, mat_mul(t, act_pi))
        ck.zero_vec("T-after-P-vanishes", (("a", i),), flat(v))
        w = mat_scale(one_plus, mat_sub(mat_mul(act_pi, t), mat_scale(lam, mat_mul(t, act_i))))
        ck.zero_vec("P-T-cross-term", (("a", i),), flat(w))
    return ck.report()


def image_closed_under_p_action(inst: RbpInstance) -> bool:
    """T(M) is closed under the action of P(A) on every verified instance."""
    _require_verified(inst, "image_closed_under_p_action")
    a, m, t = inst.algebra, inst.module, inst.t
    img = column_space_basis(t, a.field)
    for i in range(a.dim):
        pa = column(inst.p, i)
        for v in img:
            if not in_span(m.apply(pa, v), img, a.field):
                return False
    return True
