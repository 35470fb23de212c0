"""Built-in example structures and the JSON ingestion pipeline.

Every entry is validated by its kind's full axiom checker the first time the
catalog is built; an entry that stops passing is a package bug.  The catalog
is constructed once and then read only.

Characteristic-sensitive data (anything needing 1/|G| or 1/2) is offered
through builder functions that refuse prime fields dividing the relevant
order instead of silently producing garbage.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .exactlin import (
    FieldError,
    FieldSpec,
    InternalError,
    RATIONAL,
    Vec,
    identity,
    mat,
    prime_field,
    vec,
    zeros_vec,
)
from .structures import (
    Bialgebra,
    FinAlgebra,
    FinCoalgebra,
    Functional,
    HopfAlgebra,
    WeakBialgebra,
    WeakHopfAlgebra,
    algebra_of,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_hopf,
    check_weak_bialgebra,
    check_weak_hopf,
    coalgebra_of,
)
from .actions import (
    ActionStructure,
    CoactionStructure,
    Dimodule,
    DoiHopfModule,
    HopfModule,
    WeakComoduleAlgebra,
    check_action,
    check_coaction,
    check_dimodule,
    check_doi_hopf,
    check_hopf_module,
    regular_action,
    regular_coaction,
    trivial_action,
)
from .rbcore import RbpInstance, check_rbp_module, double_construction
from .hopfrb import PairingForm, RMatrix, check_long_pairing, check_quasitriangular

KINDS = (
    "algebra",
    "bialgebra",
    "hopf",
    "weak-bialgebra",
    "weak-hopf",
    "module",
    "comodule",
    "dimodule",
    "hopf-module",
    "doi-hopf",
    "pairing",
    "rmatrix",
    "functional",
)


class CatalogError(Exception):
    """Unknown name, malformed file, or kind mismatch."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    payload: object
    note: str = ""
    # names of previously declared entries this one was assembled from,
    # keyed by role; composite kinds serialize through these
    refs: dict = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise CatalogError(f"unknown catalog kind {self.kind!r}")


# ---------------------------------------------------------------------------
# builders


def matrix_unit_algebra(n: int, field: FieldSpec = RATIONAL) -> FinAlgebra:
    """n x n matrix algebra on the basis E_rs, row-major."""
    dim = n * n
    labels = tuple(f"E{r + 1}{s + 1}" for r in range(n) for s in range(n))
    mult = []
    for r in range(n):
        for s in range(n):
            plane = []
            for t in range(n):
                for u in range(n):
                    out = [0] * dim
                    if s == t:
                        out[r * n + u] = 1
                    plane.append(vec(field, out))
            mult.append(tuple(plane))
    unit = [0] * dim
    for r in range(n):
        unit[r * n + r] = 1
    return FinAlgebra(
        field, dim, labels, tuple(mult), unit=vec(field, unit), name=f"mat{n}"
    )


def cyclic_group_algebra(n: int, field: FieldSpec = RATIONAL) -> HopfAlgebra:
    """Group algebra of Z/n with the group-like coalgebra structure."""
    labels = tuple("1" if i == 0 else ("g" if i == 1 else f"g{i}") for i in range(n))
    mult = []
    for i in range(n):
        plane = []
        for j in range(n):
            out = [0] * n
            out[(i + j) % n] = 1
            plane.append(vec(field, out))
        mult.append(tuple(plane))
    unit = vec(field, [1] + [0] * (n - 1))
    alg = FinAlgebra(field, n, labels, tuple(mult), unit=unit, name=f"c{n}")
    com = []
    for i in range(n):
        plane = []
        for j in range(n):
            out = [0] * n
            if j == i:
                out[i] = 1
            plane.append(vec(field, out))
        com.append(tuple(plane))
    coalg = FinCoalgebra(field, n, labels, tuple(com), counit=vec(field, [1] * n))
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        s[(n - i) % n][i] = 1
    return HopfAlgebra(f"c{n}", Bialgebra(f"c{n}", alg, coalg), mat(field, s))


def symmetric_group_algebra_s3(field: FieldSpec = RATIONAL) -> HopfAlgebra:
    """Group algebra of S_3, multiplication generated from permutation
    composition rather than a hand-entered table."""
    perms = sorted(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    labels = tuple("p" + "".join(str(v) for v in p) for p in perms)
    mult = []
    for p in perms:
        plane = []
        for q in perms:
            comp = tuple(p[q[i]] for i in range(3))
            out = [0] * n
            out[idx[comp]] = 1
            plane.append(vec(field, out))
        mult.append(tuple(plane))
    ident = tuple(range(3))
    unit = [0] * n
    unit[idx[ident]] = 1
    alg = FinAlgebra(field, n, labels, tuple(mult), unit=vec(field, unit), name="s3")
    com = []
    for i in range(n):
        plane = []
        for j in range(n):
            out = [0] * n
            if j == i:
                out[i] = 1
            plane.append(vec(field, out))
        com.append(tuple(plane))
    coalg = FinCoalgebra(field, n, labels, tuple(com), counit=vec(field, [1] * n))
    s = [[0] * n for _ in range(n)]
    for p in perms:
        inv = tuple(sorted(range(3), key=lambda i: p[i]))
        s[idx[inv]][idx[p]] = 1
    return HopfAlgebra("s3", Bialgebra("s3", alg, coalg), mat(field, s))


def dual_c2_hopf(field: FieldSpec = RATIONAL) -> HopfAlgebra:
    """Functions on Z/2: orthogonal idempotents de, dg; comultiplication
    dual to the group product."""
    z = zeros_vec(field, 2)
    mult = ((vec(field, [1, 0]), z), (z, vec(field, [0, 1])))
    alg = FinAlgebra(field, 2, ("de", "dg"), mult, unit=vec(field, [1, 1]), name="dual-c2")
    com = (
        (vec(field, [1, 0]), vec(field, [0, 1])),
        (vec(field, [0, 1]), vec(field, [1, 0])),
    )
    coalg = FinCoalgebra(field, 2, ("de", "dg"), com, counit=vec(field, [1, 0]))
    return HopfAlgebra("dual-c2", Bialgebra("dual-c2", alg, coalg), identity(field, 2))


def sweedler_h4(field: FieldSpec = RATIONAL) -> HopfAlgebra:
    """The 4-dimensional algebra on 1, g, x, gx with g^2 = 1, x^2 = 0,
    xg = -gx; the antipode squares to conjugation by g, not the identity."""
    if field.kind == "prime" and field.p == 2:
        raise FieldError("this structure degenerates in characteristic 2")
    one, g, x, gx = range(4)
    z = [0] * 4

    def e(i, c=1):
        out = list(z)
        out[i] = c
        return vec(field, out)

    zero = vec(field, z)
    mult = [[zero] * 4 for _ in range(4)]
    for i in range(4):
        mult[one][i] = e(i)
        mult[i][one] = e(i)
    mult[g][g] = e(one)
    mult[g][x] = e(gx)
    mult[g][gx] = e(x)
    mult[x][g] = e(gx, -1)
    mult[x][x] = zero
    mult[x][gx] = zero
    mult[gx][g] = e(x, -1)
    mult[gx][x] = zero
    mult[gx][gx] = zero
    alg = FinAlgebra(
        field, 4, ("1", "g", "x", "gx"),
        tuple(tuple(r) for r in mult), unit=e(one), name="h4",
    )
    com = [[zero] * 4 for _ in range(4)]
    com[one][one] = e(one)
    com[g][g] = e(g)
    com[x][x] = e(one)          # x (x) 1
    com[x][g] = e(x)            # g (x) x
    com[gx][gx] = e(g)          # gx (x) g
    com[gx][one] = e(gx)        # 1 (x) gx
    coalg = FinCoalgebra(
        field, 4, ("1", "g", "x", "gx"),
        tuple(tuple(r) for r in com), counit=vec(field, [1, 1, 0, 0]),
    )
    s = [[0] * 4 for _ in range(4)]
    s[one][one] = 1
    s[g][g] = 1
    s[gx][x] = -1               # S(x) = -gx
    s[x][gx] = 1                # S(gx) = x
    return HopfAlgebra("h4", Bialgebra("h4", alg, coalg), mat(field, s))


def two_point_weak_hopf(field: FieldSpec = RATIONAL) -> WeakHopfAlgebra:
    """k e1 + k e2 with Delta(ei) = ei (x) ei: commutative, genuinely weak
    since Delta(1) is not 1 (x) 1."""
    z = zeros_vec(field, 2)
    mult = ((vec(field, [1, 0]), z), (z, vec(field, [0, 1])))
    alg = FinAlgebra(field, 2, ("e1", "e2"), mult, unit=vec(field, [1, 1]), name="two-point")
    com = ((vec(field, [1, 0]), z), (z, vec(field, [0, 1])))
    coalg = FinCoalgebra(field, 2, ("e1", "e2"), com, counit=vec(field, [1, 1]))
    return WeakHopfAlgebra(
        "two-point", WeakBialgebra("two-point", alg, coalg), identity(field, 2)
    )


def pair_groupoid_weak_hopf(field: FieldSpec = RATIONAL) -> WeakHopfAlgebra:
    """Groupoid algebra of the pair groupoid on two objects: the matrix
    units e_ij with Delta(e_ij) = e_ij (x) e_ij and S(e_ij) = e_ji."""
    pairs = tuple((i, j) for i in (1, 2) for j in (1, 2))
    idx = {p: q for q, p in enumerate(pairs)}
    labels = tuple(f"e{i}{j}" for i, j in pairs)
    z = zeros_vec(field, 4)
    mult = [[z] * 4 for _ in range(4)]
    for (i, j), p in idx.items():
        for (k, l), q in idx.items():
            if j == k:
                out = [0] * 4
                out[idx[(i, l)]] = 1
                mult[p][q] = vec(field, out)
    alg = FinAlgebra(
        field, 4, labels, tuple(tuple(r) for r in mult),
        unit=vec(field, [1, 0, 0, 1]), name="pair-groupoid",
    )
    com = [[z] * 4 for _ in range(4)]
    for p in range(4):
        out = [0] * 4
        out[p] = 1
        row = list(com[p])
        row[p] = vec(field, out)
        com[p] = tuple(row)
    coalg = FinCoalgebra(field, 4, labels, tuple(com), counit=vec(field, [1, 1, 1, 1]))
    s = [[0] * 4 for _ in range(4)]
    for (i, j), p in idx.items():
        s[idx[(j, i)]][p] = 1
    return WeakHopfAlgebra(
        "pair-groupoid", WeakBialgebra("pair-groupoid", alg, coalg), mat(field, s)
    )


def dual_numbers_algebra(field: FieldSpec = RATIONAL) -> FinAlgebra:
    """k[x]/(x^2) on the basis 1, x."""
    z = zeros_vec(field, 2)
    mult = ((vec(field, [1, 0]), vec(field, [0, 1])), (vec(field, [0, 1]), z))
    return FinAlgebra(field, 2, ("1", "x"), mult, unit=vec(field, [1, 0]), name="kx-mod-x2")


def sign_action_on_dual_numbers(h: HopfAlgebra) -> ActionStructure:
    """g acts on k[x]/(x^2) by x |-> -x; a module-algebra action."""
    f = h.field
    act = (
        (vec(f, [1, 0]), vec(f, [0, 1])),
        (vec(f, [1, 0]), vec(f, [0, -1])),
    )
    return ActionStructure(algebra_of(h), 2, "left", act, name="kx-mod-x2-with-c2-action")


def triangular_rmatrix_c2(h: HopfAlgebra) -> RMatrix:
    """R = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g)/2; needs 2 invertible."""
    f = h.field
    if f.kind == "prime" and f.p == 2:
        raise FieldError("triangular structure needs 2 invertible")
    half = f.of(1) / f.of(2)
    r = (half, half, half, -half)
    return RMatrix(h, r, r)


def bicharacter_sigma_c2(h: HopfAlgebra) -> PairingForm:
    """sigma(g^a, g^b) = (-1)^(ab), the nontrivial bicharacter of Z/2."""
    return PairingForm(h, mat(h.field, [[1, 1], [1, -1]]))


def normalized_group_integral(h: HopfAlgebra) -> Vec:
    """(sum of group elements) / |G| for a group-like basis; refuses
    characteristics dividing the group order."""
    alg = algebra_of(h)
    n = alg.dim
    f = alg.field
    if f.kind == "prime" and n % f.p == 0:
        raise FieldError(f"group order {n} is not invertible in this field")
    inv = f.of(1) / f.of(n)
    return tuple(inv for _ in range(n))


# ---------------------------------------------------------------------------
# the built-in catalog


_VALIDATORS = {
    "algebra": check_algebra,
    "bialgebra": check_bialgebra,
    "hopf": check_hopf,
    "weak-bialgebra": check_weak_bialgebra,
    "weak-hopf": check_weak_hopf,
    "module": check_action,
    "comodule": check_coaction,
    "dimodule": check_dimodule,
    "hopf-module": check_hopf_module,
    "doi-hopf": check_doi_hopf,
}


def _validate(entry: CatalogEntry) -> None:
    checker = _VALIDATORS.get(entry.kind)
    if checker is not None:
        rep = checker(entry.payload)
        if not rep.ok:
            raise CatalogError(
                f"catalog entry {entry.name!r} fails {entry.kind} axioms: {rep.to_json()}"
            )
    elif entry.kind == "pairing":
        rep, _ = check_long_pairing(entry.payload.host, entry.payload)
        if not rep.ok:
            raise CatalogError(
                f"catalog entry {entry.name!r} fails the pairing axioms: {rep.to_json()}"
            )
    elif entry.kind == "rmatrix":
        rep, _ = check_quasitriangular(entry.payload.host, entry.payload)
        if not rep.ok:
            raise CatalogError(
                f"catalog entry {entry.name!r} fails the R-matrix axioms: {rep.to_json()}"
            )
    elif entry.kind == "functional":
        coalgebra_of(entry.payload.host)  # host must carry a coalgebra
    else:
        raise CatalogError(f"no validator for kind {entry.kind!r}")


@lru_cache(maxsize=1)
def _catalog() -> dict:
    entries: dict[str, CatalogEntry] = {}

    def add(name, kind, payload, note, **refs):
        entry = CatalogEntry(name, kind, payload, note, dict(refs))
        _validate(entry)
        if name in entries:
            raise CatalogError(f"duplicate catalog entry {name!r}")
        entries[name] = entry
        return payload

    mat2 = add("mat2-rational", "algebra", matrix_unit_algebra(2),
               "2x2 matrix units over the rationals")
    add("mat3-rational", "algebra", matrix_unit_algebra(3),
        "3x3 matrix units over the rationals")
    kx = add("kx-mod-x2", "algebra", dual_numbers_algebra(),
             "dual numbers: 1, x with x^2 = 0")

    c2 = add("group-algebra-c2", "hopf", cyclic_group_algebra(2),
             "group algebra of Z/2")
    c3 = add("group-algebra-c3", "hopf", cyclic_group_algebra(3),
             "group algebra of Z/3")
    add("group-algebra-s3", "hopf", symmetric_group_algebra_s3(),
        "group algebra of S_3, table generated from permutation composition")
    add("dual-group-algebra-c2", "hopf", dual_c2_hopf(),
        "functions on Z/2 with pointwise product")
    add("sweedler-h4", "hopf", sweedler_h4(),
        "4-dimensional host whose antipode is not involutive")

    tp = add("weak-two-point", "weak-hopf", two_point_weak_hopf(),
             "commutative weak host: two orthogonal idempotent group-likes")
    pg = add("weak-pair-groupoid", "weak-hopf", pair_groupoid_weak_hopf(),
             "groupoid algebra of the pair groupoid on two objects")

    add("mat2-regular-module", "module", regular_action(mat2, "left"),
        "mat2 acting on itself by left multiplication", algebra="mat2-rational")
    add("mat2-regular-right-module", "module", regular_action(mat2, "right"),
        "mat2 acting on itself by right multiplication", algebra="mat2-rational")
    add("c2-regular-module", "module", regular_action(c2.algebra, "left"),
        "Z/2 group algebra on itself, left", algebra="group-algebra-c2")
    add("c3-regular-module", "module", regular_action(c3.algebra, "left"),
        "Z/3 group algebra on itself, left", algebra="group-algebra-c3")
    c2_right = add("c2-regular-right-module", "module", regular_action(c2.algebra, "right"),
                   "Z/2 group algebra on itself, right", algebra="group-algebra-c2")
    c3_right = add("c3-regular-right-module", "module", regular_action(c3.algebra, "right"),
                   "Z/3 group algebra on itself, right", algebra="group-algebra-c3")
    pg_right = add("pair-groupoid-regular-right-module", "module",
                   regular_action(pg.algebra, "right"),
                   "pair groupoid algebra on itself, right", algebra="weak-pair-groupoid")
    add("kx-mod-x2-with-c2-action", "module", sign_action_on_dual_numbers(c2),
        "Z/2 flipping the sign of x on the dual numbers", algebra="group-algebra-c2")
    c2_triv = add("c2-trivial-module", "module", trivial_action(c2, 2, "left"),
                  "Z/2 acting through the counit on a 2-dim space",
                  algebra="group-algebra-c2")

    c2_com = add("c2-regular-comodule", "comodule", regular_coaction(c2),
                 "Z/2 group algebra coacting on itself", host="group-algebra-c2")
    c3_com = add("c3-regular-comodule", "comodule", regular_coaction(c3),
                 "Z/3 group algebra coacting on itself", host="group-algebra-c3")
    pg_com = add("pair-groupoid-self-comodule", "comodule", regular_coaction(pg),
                 "pair groupoid algebra coacting on itself", host="weak-pair-groupoid")

    sigma = add("c2-bicharacter-sigma", "pairing", bicharacter_sigma_c2(c2),
                "sign bicharacter on Z/2", host="group-algebra-c2")
    add("c2-triangular-R", "rmatrix", triangular_rmatrix_c2(c2),
        "the triangular structure on Z/2", host="group-algebra-c2")

    add("c2-trivial-dimodule", "dimodule",
        Dimodule(c2, c2_triv, c2_com, name="c2-trivial-dimodule"),
        "trivial action with the regular coaction",
        host="group-algebra-c2", module="c2-trivial-module",
        comodule="c2-regular-comodule")
    from .hopfrb import _pairing_dimodule  # shares the induced-action formula

    long_dim = _pairing_dimodule(c2, sigma.sigma, "long")
    add("c2-long-module", "module", long_dim.action,
        "action induced by the sign bicharacter", algebra="group-algebra-c2")
    add("c2-long-dimodule", "dimodule", long_dim,
        "bicharacter-induced action with the regular coaction",
        host="group-algebra-c2", module="c2-long-module",
        comodule="c2-regular-comodule")

    add("c2-regular-hopf-module", "hopf-module",
        HopfModule(c2, c2_right, c2_com, name="c2-regular-hopf-module"),
        "the regular Hopf module over Z/2",
        host="group-algebra-c2", module="c2-regular-right-module",
        comodule="c2-regular-comodule")
    add("c3-regular-hopf-module", "hopf-module",
        HopfModule(c3, c3_right, c3_com, name="c3-regular-hopf-module"),
        "the regular Hopf module over Z/3",
        host="group-algebra-c3", module="c3-regular-right-module",
        comodule="c3-regular-comodule")

    pg_wca = WeakComoduleAlgebra(pg, pg.algebra, pg_com, name="pair-groupoid-self")
    add("pair-groupoid-doi-hopf", "doi-hopf",
        DoiHopfModule(pg_wca, pg_right, pg_com, name="pair-groupoid-doi-hopf"),
        "the pair groupoid algebra over itself with its own coaction",
        host="weak-pair-groupoid", carrier="weak-pair-groupoid",
        comodule="pair-groupoid-self-comodule",
        module="pair-groupoid-regular-right-module")

    f = c2.field
    add("c2-delta-e", "functional", Functional(c2, vec(f, [1, 0])),
        "indicator of the identity on Z/2", host="group-algebra-c2")
    add("c2-delta-g", "functional", Functional(c2, vec(f, [0, 1])),
        "indicator of the generator on Z/2", host="group-algebra-c2")
    add("c2-epsilon", "functional", Functional(c2, vec(f, [1, 1])),
        "the counit of the Z/2 group algebra", host="group-algebra-c2")
    add("c2-two-delta-e", "functional", Functional(c2, vec(f, [2, 0])),
        "a scaled, non-idempotent functional", host="group-algebra-c2")

    return entries


def list_entries() -> tuple[tuple[str, str], ...]:
    """(name, kind) pairs, sorted by name."""
    return tuple(sorted((e.name, e.kind) for e in _catalog().values()))


def get(name: str) -> CatalogEntry:
    try:
        return _catalog()[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None


def get_kind(name: str, kind: str) -> CatalogEntry:
    entry = get(name)
    if entry.kind != kind:
        raise CatalogError(f"entry {name!r} has kind {entry.kind!r}, expected {kind!r}")
    return entry


# ---------------------------------------------------------------------------
# named paired-module instances for the command line and the replay suite


@lru_cache(maxsize=1)
def instances() -> dict:
    out: dict[str, RbpInstance] = {}
    f = RATIONAL

    mat2 = get("mat2-rational").payload
    left = get("mat2-regular-module").payload
    e11 = mat2.left_mult(mat2.basis(0))
    inst = RbpInstance(mat2, left, e11, e11, -f.one, name="mat2-proj")
    out["mat2-proj"] = inst

    right = get("mat2-regular-right-module").payload
    e11r = mat2.right_mult(mat2.basis(0))
    out["mat2-right-proj"] = RbpInstance(mat2, right, e11r, e11r, -f.one, name="mat2-right-proj")

    _, _, doubled = double_construction(mat2, e11, left, e11, -f.one)
    doubled.name = "doubled-mat2"
    out["doubled-mat2"] = doubled

    for label, hopf_name, module_name in (
        ("c2-integral-proj", "group-algebra-c2", "c2-regular-module"),
        ("c3-integral-proj", "group-algebra-c3", "c3-regular-module"),
    ):
        h = get(hopf_name).payload
        module = get(module_name).payload
        t = module.matrix(normalized_group_integral(h))
        out[label] = RbpInstance(h.algebra, module, t, t, -f.one, name=label)

    for inst in out.values():
        if not check_rbp_module(inst).ok:
            raise InternalError(f"built-in instance {inst.name} failed verification")
    return out


def get_instance(name: str) -> RbpInstance:
    try:
        return instances()[name]
    except KeyError:
        raise CatalogError(f"unknown instance {name!r}") from None


def list_instances() -> tuple[str, ...]:
    return tuple(sorted(instances()))


# ---------------------------------------------------------------------------
# JSON ingestion and export
#
# One JSON object per structure.  Structure constants are sparse triple
# lists {i, j, k, c}; omitted entries are zero; scalars are strings or
# integers.  Composite kinds reference previously declared entries by name.


def _parse_field(obj) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise CatalogError("field must be an object with a 'kind'")
    if obj["kind"] == "rational":
        return RATIONAL
    if obj["kind"] == "prime":
        try:
            return prime_field(int(obj["p"]))
        except (KeyError, ValueError, TypeError) as ex:
            raise CatalogError(f"bad prime field: {ex}") from None
    raise CatalogError(f"unknown field kind {obj['kind']!r}")


def _parse_tensor3(field: FieldSpec, triples, a: int, b: int, c: int, what: str):
    cells = [[[field.zero] * c for _ in range(b)] for _ in range(a)]
    for item in triples:
        try:
            i, j, k = int(item["i"]), int(item["j"]), int(item["k"])
            val = field.of(item["c"])
        except (KeyError, TypeError, ValueError) as ex:
            raise CatalogError(f"bad {what} triple {item!r}: {ex}") from None
        if not (0 <= i < a and 0 <= j < b and 0 <= k < c):
            raise CatalogError(f"{what} index out of range in {item!r}")
        cells[i][j][k] = cells[i][j][k] + val
    return tuple(tuple(tuple(r) for r in plane) for plane in cells)


def _dump_tensor3(t3) -> list:
    out = []
    for i, plane in enumerate(t3):
        for j, row in enumerate(plane):
            for k, c in enumerate(row):
                if not c.is_zero:
                    out.append({"i": i, "j": j, "k": k, "c": str(c)})
    return out


def _dump_field(f: FieldSpec) -> dict:
    if f.kind == "rational":
        return {"kind": "rational"}
    return {"kind": "prime", "p": f.p}


def load_entry(obj: dict, resolve=get, validate: bool = True) -> CatalogEntry:
    """Build and validate a CatalogEntry from one parsed JSON object.

    `resolve` maps referenced entry names to CatalogEntry values; the
    default looks them up in the built-in catalog.  `validate=False`
    skips the axiom checks so a caller can run a specific checker and
    report the witness instead of refusing here.
    """
    if not isinstance(obj, dict):
        raise CatalogError("structure file must contain a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise CatalogError(f"unknown or missing kind {kind!r}")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise CatalogError("missing entry name")
    note = obj.get("note", "loaded from file")

    if kind in ("algebra", "bialgebra", "hopf", "weak-bialgebra", "weak-hopf"):
        payload = _load_structure(obj, kind)
        entry = CatalogEntry(name, kind, payload, note)
    elif kind == "module":
        alg = algebra_of(resolve(obj["algebra"]).payload)
        dim = int(obj["dim"])
        side = obj.get("side", "left")
        act = _parse_tensor3(alg.field, obj.get("action", ()), alg.dim, dim, dim, "action")
        payload = ActionStructure(alg, dim, side, act, name=name)
        entry = CatalogEntry(name, kind, payload, note, {"algebra": obj["algebra"]})
    elif kind == "comodule":
        host = resolve(obj["host"])
        coalg = coalgebra_of(host.payload)
        dim = int(obj["dim"])
        co = _parse_tensor3(coalg.field, obj.get("coaction", ()), dim, dim, coalg.dim, "coaction")
        payload = CoactionStructure(coalg, dim, co, name=name)
        entry = CatalogEntry(name, kind, payload, note, {"host": obj["host"]})
    elif kind == "dimodule":
        host = resolve(obj["host"]).payload
        module = resolve(obj["module"]).payload
        comodule = resolve(obj["comodule"]).payload
        payload = Dimodule(host, module, comodule, name=name)
        entry = CatalogEntry(name, kind, payload, note,
                             {k: obj[k] for k in ("host", "module", "comodule")})
    elif kind == "hopf-module":
        host = resolve(obj["host"]).payload
        module = resolve(obj["module"]).payload
        comodule = resolve(obj["comodule"]).payload
        payload = HopfModule(host, module, comodule, name=name)
        entry = CatalogEntry(name, kind, payload, note,
                             {k: obj[k] for k in ("host", "module", "comodule")})
    elif kind == "doi-hopf":
        host = resolve(obj["host"]).payload
        carrier_entry = resolve(obj["carrier"])
        carrier = (algebra_of(carrier_entry.payload)
                   if carrier_entry.kind != "algebra" else carrier_entry.payload)
        comodule = resolve(obj["comodule"]).payload
        module = resolve(obj["module"]).payload
        wca = WeakComoduleAlgebra(host, carrier, comodule, name=f"{name}-carrier")
        payload = DoiHopfModule(wca, module, comodule, name=name)
        entry = CatalogEntry(name, kind, payload, note,
                             {k: obj[k] for k in ("host", "carrier", "module", "comodule")})
    elif kind == "pairing":
        host = resolve(obj["host"]).payload
        f = algebra_of(host).field
        payload = PairingForm(host, mat(f, obj["sigma"]))
        entry = CatalogEntry(name, kind, payload, note, {"host": obj["host"]})
    elif kind == "rmatrix":
        host = resolve(obj["host"]).payload
        f = algebra_of(host).field
        payload = RMatrix(host, vec(f, obj["r"]), vec(f, obj["rinv"]))
        entry = CatalogEntry(name, kind, payload, note, {"host": obj["host"]})
    else:  # functional
        host = resolve(obj["host"]).payload
        f = coalgebra_of(host).field
        payload = Functional(host, vec(f, obj["coords"]))
        entry = CatalogEntry(name, kind, payload, note, {"host": obj["host"]})
    if validate:
        _validate(entry)
    return entry


def _load_structure(obj: dict, kind: str):
    field = _parse_field(obj.get("field", {"kind": "rational"}))
    try:
        dim = int(obj["dim"])
        labels = tuple(str(x) for x in obj["basis"])
    except (KeyError, TypeError, ValueError) as ex:
        raise CatalogError(f"bad structure header: {ex}") from None
    if len(labels) != dim:
        raise CatalogError("basis label count differs from dim")
    mult = _parse_tensor3(field, obj.get("mult", ()), dim, dim, dim, "mult")
    unit = vec(field, obj["unit"]) if "unit" in obj else None
    name = obj["name"]
    alg = FinAlgebra(field, dim, labels, mult, unit=unit, name=name)
    if kind == "algebra":
        return alg
    if "comult" not in obj or "counit" not in obj:
        raise CatalogError(f"kind {kind!r} needs comult and counit")
    comult = _parse_tensor3(field, obj["comult"], dim, dim, dim, "comult")
    counit = vec(field, obj["counit"])
    coalg = FinCoalgebra(field, dim, labels, comult, counit=counit)
    antipode = mat(field, obj["antipode"]) if "antipode" in obj else None
    if kind == "bialgebra":
        return Bialgebra(name, alg, coalg)
    if kind == "hopf":
        if antipode is None:
            raise CatalogError("hopf kind needs an antipode")
        return HopfAlgebra(name, Bialgebra(name, alg, coalg), antipode)
    weak = WeakBialgebra(name, alg, coalg)
    if kind == "weak-bialgebra":
        return weak
    if antipode is None:
        raise CatalogError("weak-hopf kind needs an antipode")
    return WeakHopfAlgebra(name, weak, antipode)


def load_file(path: str, validate: bool = True) -> CatalogEntry:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as ex:
        raise CatalogError(f"cannot read {path}: {ex}") from None
    except json.JSONDecodeError as ex:
        raise CatalogError(f"{path} is not valid JSON: {ex}") from None
    return load_entry(obj, validate=validate)


def dump(entry: CatalogEntry) -> dict:
    """JSON object that load_entry reproduces the entry from."""
    out: dict = {"kind": entry.kind, "name": entry.name}
    if entry.note:
        out["note"] = entry.note
    p = entry.payload
    if entry.kind in ("algebra", "bialgebra", "hopf", "weak-bialgebra", "weak-hopf"):
        alg = algebra_of(p)
        out["field"] = _dump_field(alg.field)
        out["dim"] = alg.dim
        out["basis"] = list(alg.labels)
        out["mult"] = _dump_tensor3(alg.mult)
        if alg.unit is not None:
            out["unit"] = [str(c) for c in alg.unit]
        if entry.kind != "algebra":
            co = coalgebra_of(p)
            out["comult"] = _dump_tensor3(co.comult)
            out["counit"] = [str(c) for c in co.counit]
            s = getattr(p, "antipode", None)
            if s is not None:
                out["antipode"] = [[str(c) for c in row] for row in s]
    elif entry.kind == "module":
        out.update(entry.refs)
        out["side"] = p.side
        out["dim"] = p.dim
        out["action"] = _dump_tensor3(p.act)
    elif entry.kind == "comodule":
        out.update(entry.refs)
        out["dim"] = p.dim
        out["coaction"] = _dump_tensor3(p.co)
    elif entry.kind in ("dimodule", "hopf-module", "doi-hopf"):
        out.update(entry.refs)
    elif entry.kind == "pairing":
        out.update(entry.refs)
        out["sigma"] = [[str(c) for c in row] for row in p.sigma]
    elif entry.kind == "rmatrix":
        out.update(entry.refs)
        out["r"] = [str(c) for c in p.r]
        out["rinv"] = [str(c) for c in p.rinv]
    else:  # functional
        out.update(entry.refs)
        out["coords"] = [str(c) for c in p.coords]
    return out
