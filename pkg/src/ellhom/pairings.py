"""The multiplicity, elliptic, and homological pairings, and the identity
checks that support them (denominator symmetry, Euler-class equivariance,
transport between positive systems, duality, abelian Ext vanishing).

All values are exact rationals; there is no tolerance parameter anywhere.
Complex conjugation of torus characters is exponent negation throughout,
stated once here and used consistently by the elliptic pairing and duals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

from .charring import (
    CharElement,
    half_denominator,
    torus_pairing,
    weyl_act,
    weyl_denominator_full,
)
from .koszul import GradedHomology, normalize_positive_system
from .linalg import sparse_int_rank
from .rootsystem import (
    RootSystem,
    Weight,
    WeylElement,
    WeylSubgroup,
    rho_shift,
    subgroup_from_generators,
    trivial_subgroup,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairContext:
    """Everything a pairing needs: the root system, a positive system, the
    subgroup W0 normalizing the compact Cartan, and the rank condition.

    When equal_rank is false every pairing short-circuits to zero, which is
    the defining convention for groups without a compact Cartan subgroup.
    """

    rs: RootSystem
    positive_system: tuple[Weight, ...]
    w0: WeylSubgroup
    equal_rank: bool = True

    def __post_init__(self):
        object.__setattr__(
            self, "positive_system", normalize_positive_system(self.positive_system, self.rs)
        )
        for w in self.w0:
            if w.rank != self.rs.rank:
                raise ValueError("W0 element rank does not match the root system")

    @property
    def w0_order(self) -> int:
        return self.w0.order

    @property
    def w0_is_full(self) -> bool:
        return self.w0.order == self.rs.weyl_order

    def to_dict(self) -> dict:
        return {
            "series": self.rs.series,
            "rank": self.rs.rank,
            "positive_system": [list(a) for a in self.positive_system],
            "w0": [[list(row) for row in w.matrix] for w in self.w0],
            "equal_rank": self.equal_rank,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PairContext":
        from .rootsystem import build_root_system

        rs = build_root_system(data["series"], data["rank"])
        w0 = subgroup_from_generators(rs, [tuple(tuple(r) for r in m) for m in data["w0"]])
        return cls(
            rs=rs,
            positive_system=tuple(tuple(a) for a in data["positive_system"]),
            w0=w0,
            equal_rank=bool(data["equal_rank"]),
        )


def compact_context(rs: RootSystem) -> PairContext:
    """Compact preset: W0 is the full Weyl group."""
    return PairContext(
        rs=rs,
        positive_system=rs.positive_roots,
        w0=rs.weyl_group(),
        equal_rank=True,
    )


def split_rank_one_context(rs: RootSystem) -> PairContext:
    """Equal-rank preset with trivial W0, as for SL(2,R)."""
    return PairContext(
        rs=rs,
        positive_system=rs.positive_roots,
        w0=trivial_subgroup(rs),
        equal_rank=True,
    )


def unequal_rank_context(rs: RootSystem) -> PairContext:
    return PairContext(
        rs=rs,
        positive_system=rs.positive_roots,
        w0=trivial_subgroup(rs),
        equal_rank=False,
    )


def custom_context(rs: RootSystem, generators, equal_rank: bool = True) -> PairContext:
    """Context with W0 supplied as a generator list, closed and validated."""
    return PairContext(
        rs=rs,
        positive_system=rs.positive_roots,
        w0=subgroup_from_generators(rs, generators),
        equal_rank=equal_rank,
    )


def pairing_unequal_rank(ctx: PairContext, kind: str = "elliptic") -> Fraction:
    """The zero pairing for rank(G) > rank(K); records which convention
    fired so batch reports can say why a value vanished."""
    logger.debug("unequal-rank context: %s pairing short-circuits to 0", kind)
    return Fraction(0)


def _check_rank(ctx: PairContext, *elements):
    for a in elements:
        if a.rank != ctx.rs.rank:
            raise ValueError("rank mismatch between classes and context")


def multiplicity_pairing(chi_u: CharElement, chi_v: CharElement, ctx: PairContext) -> Fraction:
    """dim Hom for compact-group characters, via the Weyl integral form
    (1/|W|) * CT(D * chi_u * conj(chi_v))."""
    _check_rank(ctx, chi_u, chi_v)
    if not (ctx.equal_rank and ctx.w0_is_full):
        raise ValueError("multiplicity pairing requires a compact context (W0 = W)")
    for i in range(ctx.rs.rank):
        s = ctx.rs.simple_reflection(i)
        if weyl_act(s, chi_u) != chi_u or weyl_act(s, chi_v) != chi_v:
            raise ValueError("multiplicity pairing requires W-invariant characters")
    product = weyl_denominator_full(ctx.rs) * chi_u
    return Fraction(torus_pairing(product, chi_v), ctx.rs.weyl_order)


def elliptic_pairing(xi_u: CharElement, xi_v: CharElement, ctx: PairContext) -> Fraction:
    """(1/[W0]) * CT(Xi_U * conj(Xi_V)) on Euler classes."""
    _check_rank(ctx, xi_u, xi_v)
    if not ctx.equal_rank:
        return pairing_unequal_rank(ctx, "elliptic")
    return Fraction(torus_pairing(xi_u, xi_v), ctx.w0_order)


def homological_pairing(h_u: GradedHomology, h_v: GradedHomology, ctx: PairContext) -> Fraction:
    """(1/[W0]) * sum_{p,q} (-1)^{p+q} dim Hom_T(H_p, H_q), the Hom count
    being the coefficientwise product sum of the two torus characters."""
    if not ctx.equal_rank:
        return pairing_unequal_rank(ctx, "homological")
    if h_u.positive_system != h_v.positive_system:
        raise ValueError("positive-system mismatch between the two homologies")
    if h_u.positive_system != ctx.positive_system:
        raise ValueError("homologies are not over the context's positive system")
    total = 0
    for p, hp in enumerate(h_u.classes):
        if hp.is_zero():
            continue
        for q, hq in enumerate(h_v.classes):
            if hq.is_zero():
                continue
            term = torus_pairing(hp, hq)
            total += term if (p + q) % 2 == 0 else -term
    return Fraction(total, ctx.w0_order)


def ext_abelian_graded(nu, d: int) -> list[int]:
    """Graded Ext of the trivial module against the character nu of an
    abelian Lie algebra of dimension d, from the Koszul cochain complex
    Lambda^p(a^*) with differential (nu wedge -). Returns the list of
    dim H^p for p = 0..d."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    nu = [Fraction(x) for x in nu]
    if len(nu) != d:
        raise ValueError(f"functional has length {len(nu)}, expected {d}")
    if d == 0:
        return [1]
    scale = lcm(*(x.denominator for x in nu))
    nu_int = [int(x * scale) for x in nu]
    index = {}
    for p in range(d + 1):
        for subset in combinations(range(d), p):
            index[subset] = len(index)
    ranks = [0] * (d + 2)  # ranks[p] = rank of d_{p-1}: Lambda^{p-1} -> Lambda^p
    for p in range(d):
        rows = []
        for subset in combinations(range(d), p):
            row = {}
            for j in range(d):
                if j in subset or not nu_int[j]:
                    continue
                sgn = (-1) ** sum(1 for x in subset if x < j)
                row[index[tuple(sorted(subset + (j,)))]] = sgn * nu_int[j]
            if row:
                rows.append(row)
        ranks[p + 1] = sparse_int_rank(rows)
    return [comb(d, p) - ranks[p + 1] - ranks[p] for p in range(d + 1)]


def check_denominator_symmetry(w: WeylElement, rs: RootSystem) -> bool:
    """prod_{alpha in wR+}(1-e^alpha) = eps(w) e^{w rho - rho} prod_{alpha in R+}(1-e^alpha),
    verified by expanding both sides exactly."""
    lhs = CharElement.one(rs.rank)
    for alpha in rs.positive_roots:
        lhs = lhs - lhs.shift(w.act(alpha))
    shift = tuple(-x for x in rho_shift(w, rs))  # w*rho - rho
    rhs = (half_denominator(rs) * w.sign).shift(shift)
    return lhs == rhs


def check_antisym_i(xi: CharElement, w: WeylElement, ctx: PairContext) -> bool:
    """w(Xi) = eps(w) * Xi * e^{w rho - rho} for w in W0, checked exactly."""
    if w not in ctx.w0:
        raise ValueError("element is not in the context's W0")
    shift = tuple(-x for x in rho_shift(w, ctx.rs))
    return weyl_act(w, xi) == (xi * w.sign).shift(shift)


def antisym_transport(xi_n: CharElement, w: WeylElement, ctx: PairContext) -> CharElement:
    """Euler class with respect to n_w = w(R+) obtained from the one for n:
    Xi_{n_w} = eps(w) * Xi_n * e^{w rho - rho}."""
    _check_rank(ctx, xi_n)
    shift = tuple(-x for x in rho_shift(w, ctx.rs))
    return (xi_n * w.sign).shift(shift)


def dual_class(xi: CharElement, ctx: PairContext) -> CharElement:
    """Euler class of the dual module: (-1)^{|R+|} e^{2 rho} conj(Xi)."""
    _check_rank(ctx, xi)
    if not ctx.equal_rank:
        raise ValueError("dual classes are defined on equal-rank contexts")
    n = len(ctx.rs.positive_roots)
    two_rho = tuple(2 * x for x in ctx.rs.rho)
    return xi.conjugate().shift(two_rho, coeff=(-1) ** n)
