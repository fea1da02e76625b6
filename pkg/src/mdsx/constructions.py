"""Named code families and explicit deep-hole candidate vectors.

Covers evaluation codes on distinct nodes (plain, coefficient-extended, and
the full projective variant), the Roth-Lempel family, the length-(q+1)
cyclic family over GF(2^m) built from a (q+1)-th root of unity in GF(q^2),
and the vectors that tie inner-product extensions of these codes to their
deep holes.  Set conditions (no-k-subset-sums-to-delta and friends) are
computed by dynamic programming over subset size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .code import LinearCode, code_from_generator, full_code
from .covering import covering_radius
from .errors import (
    BadDims,
    BadK,
    BadU,
    DuplicateNode,
    PoleCollision,
)
from .field import (
    FieldCtx,
    FieldElement,
    Poly,
    field_new,
    minimal_poly_over_base,
    quadratic_extension,
)
from .kernels import DEFAULT_BUDGET
from .matrix import Matrix, egrs_generator, grs_generator, \
    _normalize_nodes_multipliers


# ---------------------------------------------------------------------------
# Evaluation codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrsSpec:
    """Evaluation-code parameters: distinct nodes a, nonzero multipliers v,
    dimension k, optionally with the coefficient coordinate appended."""
    a: tuple
    v: tuple
    k: int
    extended: bool = False

    def __post_init__(self):
        ctx, a, v = _normalize_nodes_multipliers(self.a, self.v)
        object.__setattr__(self, "a", tuple(a))
        object.__setattr__(self, "v", tuple(v))
        if not 1 <= self.k <= len(a):
            raise BadDims(f"need 1 <= k <= {len(a)}, got {self.k}")

    @classmethod
    def make(cls, ctx: FieldCtx, nodes, multipliers=1, k=1, extended=False):
        a = tuple(ctx.elem(x) for x in nodes)
        if isinstance(multipliers, (int, FieldElement)):
            v = tuple([ctx.elem(multipliers)] * len(a))
        else:
            v = tuple(ctx.elem(x) for x in multipliers)
        return cls(a, v, k, extended)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def ctx(self) -> FieldCtx:
        return self.a[0].ctx


def grs(spec: GrsSpec) -> LinearCode:
    return code_from_generator(grs_generator(spec.a, spec.v, spec.k))


def egrs(spec: GrsSpec) -> LinearCode:
    return code_from_generator(egrs_generator(spec.a, spec.v, spec.k))


def grs_code(ctx, nodes, multipliers, k) -> LinearCode:
    return grs(GrsSpec.make(ctx, nodes, multipliers, k))


def egrs_code(ctx, nodes, multipliers, k) -> LinearCode:
    return egrs(GrsSpec.make(ctx, nodes, multipliers, k))


def grs_dual_weights(a, v) -> tuple:
    """The column multipliers w making the w-twisted evaluation code on the
    same nodes the dual: w_i = 1 / (v_i * prod_{j != i} (a_i - a_j))."""
    _, a, v = _normalize_nodes_multipliers(a, v)
    out = []
    for i, ai in enumerate(a):
        prod = v[i]
        for j, aj in enumerate(a):
            if j != i:
                prod = prod * (ai - aj)
        out.append(prod.inv())
    return tuple(out)


def prs(ctx: FieldCtx, k: int) -> LinearCode:
    """Length q+1 evaluation code on all of GF(q) with unit multipliers and
    the coefficient coordinate; k = q+1 is the full space."""
    q = ctx.q
    if not 1 <= k <= q + 1:
        raise BadK(f"need 1 <= k <= q+1 = {q + 1}, got {k}")
    if k == q + 1:
        return full_code(ctx, q + 1)
    return egrs(GrsSpec.make(ctx, list(range(q)), 1, k, extended=True))


def roth_lempel(a, k: int, delta) -> LinearCode:
    """[n+2, k] code: Vandermonde rows on the nodes, one column supported on
    the last row, and one column (0,..,0,1,delta)^T."""
    a = list(a)
    ctx = a[0].ctx
    a = [ctx.elem(x) for x in a]
    if len({x.value for x in a}) != len(a):
        raise DuplicateNode("nodes must be pairwise distinct")
    n = len(a)
    delta = ctx.elem(delta)
    if not 4 <= k + 1 <= n:
        raise BadDims(f"need 4 <= k+1 <= n, got k = {k}, n = {n}")
    rows = []
    cur = [ctx.one] * n
    for i in range(k):
        tail_1 = ctx.one if i == k - 1 else ctx.zero
        tail_2 = delta if i == k - 1 else (
            ctx.one if i == k - 2 else ctx.zero)
        rows.append(list(cur) + [tail_1, tail_2])
        cur = [c * x for c, x in zip(cur, a)]
    return code_from_generator(Matrix(ctx, rows))


# ---------------------------------------------------------------------------
# Extension vectors
# ---------------------------------------------------------------------------

def thm7_u(a, v, k: int) -> tuple:
    """The u with G_k u^T = (0,..,0,1)^T: extending the evaluation code by
    <u, .> appends exactly the degree-(k-1) coefficient."""
    _, a, v = _normalize_nodes_multipliers(a, v)
    n = len(a)
    if not 1 <= k <= n:
        raise BadDims(f"need 1 <= k <= n = {n}, got {k}")
    w = grs_dual_weights(a, v)
    return tuple(ai ** (n - k) * wi for ai, wi in zip(a, w))


def thm12_u(a, k: int, delta) -> tuple:
    """Length n+1 vector u with G_{k,inf} u^T = (0,..,0,1,delta)^T, so the
    extension of the coefficient-extended code equals the Roth-Lempel code;
    unit multipliers assumed."""
    ctx, a, _ = _normalize_nodes_multipliers(a, 1)
    n = len(a)
    if not 1 <= k <= n:
        raise BadDims(f"need 1 <= k <= n = {n}, got {k}")
    delta = ctx.elem(delta)
    w = grs_dual_weights(a, 1)
    head = [ai ** (n + 1 - k) * wi for ai, wi in zip(a, w)]
    node_sum = sum(a, ctx.zero)
    return tuple(head + [delta - node_sum])


# ---------------------------------------------------------------------------
# Subset-sum and subset-product sets
# ---------------------------------------------------------------------------

def _distinct_elements(s):
    s = list(s)
    if not s:
        raise BadK("empty element set")
    ctx = s[0].ctx
    s = [ctx.elem(x) for x in s]
    if len({x.value for x in s}) != len(s):
        raise DuplicateNode("set elements must be pairwise distinct")
    return ctx, sorted(s, key=lambda e: e.value)


def subset_sums(s, m: int) -> set:
    """All sums over m-element subsets of s (DP over subset size)."""
    ctx, s = _distinct_elements(s)
    if not 0 <= m <= len(s):
        raise BadK(f"need 0 <= m <= {len(s)}, got {m}")
    dp = [set() for _ in range(m + 1)]
    dp[0].add(ctx.zero)
    for e in s:
        for c in range(min(m, len(dp) - 1), 0, -1):
            if dp[c - 1]:
                dp[c] |= {x + e for x in dp[c - 1]}
    return dp[m]


def nk_delta_set_check(s, k: int, delta) -> bool:
    """True iff no k-element subset of s sums to delta."""
    sums = subset_sums(s, k)
    ctx = next(iter(sums)).ctx if sums else None
    if ctx is None:
        return True
    return ctx.elem(delta) not in sums


def t_set(a, pi, m: int) -> set:
    """Reciprocals of m-fold products of (pi - a_i) over m-subsets."""
    ctx, a = _distinct_elements(a)
    pi = ctx.elem(pi)
    if any(x == pi for x in a):
        raise PoleCollision(f"pole {pi.value} collides with a node")
    if not 0 <= m <= len(a):
        raise BadK(f"need 0 <= m <= {len(a)}, got {m}")
    factors = [pi - x for x in a]
    dp = [set() for _ in range(m + 1)]
    dp[0].add(ctx.one)
    for f in factors:
        for c in range(min(m, len(dp) - 1), 0, -1):
            if dp[c - 1]:
                dp[c] |= {x * f for x in dp[c - 1]}
    return {x.inv() for x in dp[m]}


# ---------------------------------------------------------------------------
# Deep-hole candidate families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeepHoleCandidate:
    kind: str                 # monomial | pole | thm14_monomial | thm14_pole
    vector: tuple
    pi: FieldElement | None = None
    delta: FieldElement | None = None
    valid: bool = True


def deep_hole_family_rs(a, k: int, v=None) -> list[DeepHoleCandidate]:
    """Candidate deep holes of the k-dimensional evaluation code on nodes a
    (multipliers v, default 1): the degree-k monomial vector and one simple
    pole per point outside the node set.  The pole family is empty when the
    nodes exhaust the field."""
    ctx, a, v = _normalize_nodes_multipliers(a, 1 if v is None else v)
    n = len(a)
    if not 1 <= k < n:
        raise BadK(f"need 1 <= k < n = {n}, got {k}")
    out = [DeepHoleCandidate(
        "monomial", tuple(vi * (ai ** k) for ai, vi in zip(a, v)))]
    used = {x.value for x in a}
    for pv in range(ctx.q):
        if pv in used:
            continue
        pi = ctx.elem(pv)
        out.append(DeepHoleCandidate(
            "pole", tuple(vi / (ai - pi) for ai, vi in zip(a, v)), pi=pi))
    return out


def egrs_dual_code(a, k: int) -> LinearCode:
    """The dual of the coefficient-extended code on nodes a with unit
    multipliers; target of the thm14 candidates."""
    return egrs(GrsSpec.make(a[0].ctx, a, 1, k, extended=True)).dual()


def thm14_vector(kind: str, a, k: int, delta, pi=None) -> DeepHoleCandidate:
    """Length n+1 deep-hole candidate for egrs_dual_code(a, k).

    monomial kind: (w_i a_i^{n+1-k}, .., delta), valid iff -delta is not an
    (n+1-k)-subset sum of the nodes.  pole kind: (w_i/(a_i - pi), .., delta),
    valid iff delta is outside the reciprocal-product set of the pole.
    When the code's covering radius equals k, valid coincides with the
    brute-force deep-hole verdict.
    """
    ctx, a, _ = _normalize_nodes_multipliers(a, 1)
    n = len(a)
    if not 1 <= k <= n:
        raise BadDims(f"need 1 <= k <= n = {n}, got {k}")
    delta = ctx.elem(delta)
    w = grs_dual_weights(a, 1)
    m = n + 1 - k
    if kind == "monomial":
        head = [wi * (ai ** m) for ai, wi in zip(a, w)]
        valid = (-delta) not in subset_sums(a, m)
        return DeepHoleCandidate("thm14_monomial", tuple(head + [delta]),
                                 delta=delta, valid=valid)
    if kind == "pole":
        if pi is None:
            raise PoleCollision("pole kind needs a pole location")
        pi = ctx.elem(pi)
        if any(x == pi for x in a):
            raise PoleCollision(f"pole {pi.value} collides with a node")
        head = [wi / (ai - pi) for ai, wi in zip(a, w)]
        valid = delta not in t_set(a, pi, m)
        return DeepHoleCandidate("thm14_pole", tuple(head + [delta]),
                                 pi=pi, delta=delta, valid=valid)
    raise BadK(f"unknown candidate kind {kind!r}")


# ---------------------------------------------------------------------------
# Cyclic family over GF(2^m), length q+1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicSpec:
    m: int
    u: int
    beta: FieldElement           # fixed (q+1)-th root of unity in GF(q^2)
    gen_poly: Poly               # generator polynomial over GF(q)

    @property
    def q(self) -> int:
        return 2 ** self.m


def cyclic_spec(m: int, u: int) -> CyclicSpec:
    if m < 2:
        raise BadU(f"need m >= 2, got {m}")
    q = 2 ** m
    if not 1 <= u <= q // 2:
        raise BadU(f"need 1 <= u <= q/2 = {q // 2}, got {u}")
    base = field_new(2, m)
    ext = quadratic_extension(base)
    beta = ext.primitive ** (q - 1)
    g = Poly.one(base)
    for i in range(u, q // 2 + 1):
        g = g * minimal_poly_over_base(beta ** i)
    return CyclicSpec(m, u, beta, g)


def cyclic_cu(m: int, u: int) -> LinearCode:
    """Cyclic [q+1, 2u-1] code over GF(q = 2^m) whose generator polynomial
    collects the conjugate-pair roots beta^u .. beta^{q/2}."""
    spec = cyclic_spec(m, u)
    base = spec.gen_poly.ctx
    n = spec.q + 1
    coeffs = [c for c in spec.gen_poly.coeffs]
    k = n - spec.gen_poly.degree
    rows = [[0] * i + [c.value for c in coeffs] + [0] * (n - len(coeffs) - i)
            for i in range(k)]
    return code_from_generator(Matrix(base, rows))


@dataclass(frozen=True)
class CuExtensionFacts:
    q: int
    u: int
    params: tuple               # (n, k, d) of the cyclic code
    mds: bool
    ext_params: tuple           # (n, k, d) of its all-ones extension
    ext_mds: bool
    weight_counts: list | None  # extension weight enumerator (u = 2 only)
    weight_formula_ok: bool | None
    rho_dual: int
    one_is_deep_hole: bool


def cu_extension_facts(m: int, u: int,
                       budget=DEFAULT_BUDGET) -> CuExtensionFacts:
    """All-ones-extension facts for the cyclic family at u = 2 and u = q/2:
    extension parameters and MDS status, the closed-form weight enumerator
    check (u = 2), and the dual's covering radius with the all-ones vector's
    deep-hole status."""
    q = 2 ** m
    if u not in (2, q // 2):
        raise BadU(f"extension facts cover u = 2 and u = q/2, got {u}")
    c = cyclic_cu(m, u)
    d = c.min_distance(budget)
    ones = [1] * c.n
    ext = c.extend_u(ones)
    ext_d = ext.min_distance(budget)
    weight_counts = None
    formula_ok = None
    if u == 2:
        weight_counts = ext.weight_enumerator(budget)
        expected = [0] * (q + 3)
        expected[0] = 1
        expected[q] = (q + 2) * (q * q - 1) // 2
        expected[q + 2] = q * (q - 1) ** 2 // 2
        formula_ok = weight_counts == expected
    dual = c.dual()
    report = covering_radius(dual, budget)
    return CuExtensionFacts(
        q=q, u=u,
        params=(c.n, c.k, d),
        mds=(d == c.n - c.k + 1),
        ext_params=(ext.n, ext.k, ext_d),
        ext_mds=(ext_d == ext.n - ext.k + 1),
        weight_counts=weight_counts,
        weight_formula_ok=formula_ok,
        rho_dual=report.rho,
        one_is_deep_hole=(report.leader_weight(ones) == report.rho),
    )


# ---------------------------------------------------------------------------
# Brute-force twins for the DP set operations (oracles, desk scale)
# ---------------------------------------------------------------------------

def subset_sums_bruteforce(s, m: int) -> set:
    ctx, s = _distinct_elements(s)
    if not 0 <= m <= len(s):
        raise BadK(f"need 0 <= m <= {len(s)}, got {m}")
    out = set()
    for combo in combinations(s, m):
        out.add(sum(combo, ctx.zero))
    return out


def t_set_bruteforce(a, pi, m: int) -> set:
    ctx, a = _distinct_elements(a)
    pi = ctx.elem(pi)
    if any(x == pi for x in a):
        raise PoleCollision(f"pole {pi.value} collides with a node")
    if not 0 <= m <= len(a):
        raise BadK(f"need 0 <= m <= {len(a)}, got {m}")
    out = set()
    for combo in combinations(a, m):
        prod = ctx.one
        for x in combo:
            prod = prod * (pi - x)
        out.add(prod.inv())
    return out
