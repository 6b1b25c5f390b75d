"""Lie algebra homology of nilradicals by brute force, and Euler classes.

koszul_n_homology assembles the chain complex Lambda^p(n) tensor V with the
standard homology boundary

    d(x_1^...^x_p (x) v) = sum_a (-1)^{a+1} (omit x_a) (x) x_a v
                         + sum_{a<b} (-1)^{a+b+1} [x_a,x_b]^(omit both) (x) v,

splits it by torus weight, and computes exact integer ranks per weight per
degree. It is the ground-truth oracle: it uses only the module matrices and
structure constants from hwmodule, never a character-level closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .characters import weyl_dimension
from .charring import CharElement
from .hwmodule import module_for, structure_constants
from .linalg import sparse_int_rank
from .rootsystem import CapExceededError, RootSystem, Weight

DEFAULT_DIM_CAP = 2000


@dataclass(frozen=True)
class GradedHomology:
    """T-characters of H_p(n, V) for p = 0..|R+|, with the chosen n."""

    classes: tuple[CharElement, ...]
    positive_system: tuple[Weight, ...]
    rank: int

    def degree(self, p: int) -> CharElement:
        if 0 <= p < len(self.classes):
            return self.classes[p]
        return CharElement.zero(self.rank)

    def __add__(self, other: "GradedHomology") -> "GradedHomology":
        if self.positive_system != other.positive_system:
            raise ValueError("positive-system mismatch between graded homologies")
        n = max(len(self.classes), len(other.classes))
        return GradedHomology(
            classes=tuple(self.degree(p) + other.degree(p) for p in range(n)),
            positive_system=self.positive_system,
            rank=self.rank,
        )

    def scale(self, c: int) -> "GradedHomology":
        return GradedHomology(
            classes=tuple(cls * c for cls in self.classes),
            positive_system=self.positive_system,
            rank=self.rank,
        )

    def to_dict(self) -> dict:
        return {
            "degrees": [
                {"p": p, "class": cls.to_dict()} for p, cls in enumerate(self.classes)
            ],
            "positive_system": [list(a) for a in self.positive_system],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GradedHomology":
        degrees = sorted(data["degrees"], key=lambda d: d["p"])
        classes = tuple(CharElement.from_dict(d["class"]) for d in degrees)
        ps = tuple(tuple(a) for a in data["positive_system"])
        rank = classes[0].rank if classes else len(ps[0])
        return cls(classes=classes, positive_system=ps, rank=rank)


def normalize_positive_system(positive_system, rs: RootSystem) -> tuple[Weight, ...]:
    """Validate that the given roots form a positive system w(R+) closed
    under addition, and return them in a canonical sorted order."""
    ps = tuple(sorted(tuple(a) for a in positive_system))
    if len(ps) != len(rs.positive_roots):
        raise ValueError("positive system has the wrong number of roots")
    seen = set(ps)
    if len(seen) != len(ps):
        raise ValueError("positive system has repeated roots")
    for alpha in ps:
        if alpha not in rs._full_set:
            raise ValueError(f"{alpha} is not a root")
        if tuple(-x for x in alpha) in seen:
            raise ValueError("positive system contains a root and its negative")
    for a in ps:
        for b in ps:
            total = tuple(x + y for x, y in zip(a, b))
            if total in rs._full_set and total not in seen:
                raise ValueError("positive system is not closed under addition")
    return ps


def koszul_n_homology(
    lam: Weight,
    positive_system,
    rs: RootSystem,
    cap_dim: int = DEFAULT_DIM_CAP,
) -> GradedHomology:
    """Graded n-homology of the irreducible module V_lam, computed from the
    chain complex; n is spanned by the root spaces of the given system."""
    lam = tuple(lam)
    ps = normalize_positive_system(positive_system, rs)
    dim = weyl_dimension(lam, rs)
    if dim > cap_dim:
        raise CapExceededError(
            f"module too large: dim V{lam} = {dim} exceeds cap {cap_dim}"
        )
    mod = module_for(rs, lam)
    if mod.dimension != dim:
        raise AssertionError(
            f"module construction produced dimension {mod.dimension}, expected {dim}"
        )
    brackets = structure_constants(rs)
    n_roots = len(ps)
    ops = [mod.operator(alpha) for alpha in ps]
    index_of = {alpha: a for a, alpha in enumerate(ps)}
    weights = sorted(mod.mults)

    dims: dict[tuple[int, Weight], int] = {}
    ranks: dict[tuple[int, Weight], int] = {}
    homology: list[dict[Weight, int]] = [dict() for _ in range(n_roots + 1)]

    for p in range(n_roots + 1):
        # columns of the boundary map out of degree p, grouped by total weight
        blocks: dict[Weight, list[dict]] = {}
        for subset in combinations(range(n_roots), p):
            sub_weight = [0] * rs.rank
            for a in subset:
                sub_weight = [x + y for x, y in zip(sub_weight, ps[a])]
            for w in weights:
                total = tuple(x + y for x, y in zip(sub_weight, w))
                for k in range(mod.mults[w]):
                    col: dict[tuple, Fraction] = {}
                    for pos, a in enumerate(subset):
                        block = ops[a].get(w)
                        if block is None:
                            continue
                        vec = block[k]
                        tw = tuple(x + y for x, y in zip(w, ps[a]))
                        omit = subset[:pos] + subset[pos + 1:]
                        sgn = -1 if pos % 2 else 1
                        for m, cf in enumerate(vec):
                            if cf:
                                col[(omit, tw, m)] = col.get((omit, tw, m), Fraction(0)) + sgn * cf
                    for pa in range(p):
                        for pb in range(pa + 1, p):
                            a, b = subset[pa], subset[pb]
                            root_sum = tuple(x + y for x, y in zip(ps[a], ps[b]))
                            m_idx = index_of.get(root_sum)
                            if m_idx is None:
                                continue
                            rest = tuple(x for x in subset if x != a and x != b)
                            if m_idx in rest:
                                continue
                            c = brackets[(ps[a], ps[b])]
                            ins = sum(1 for x in rest if x < m_idx)
                            sgn = (-1) ** (pa + pb + ins + 1)
                            new_sub = tuple(sorted(rest + (m_idx,)))
                            key = (new_sub, w, k)
                            v = col.get(key, Fraction(0)) + sgn * c
                            if v:
                                col[key] = v
                            else:
                                col.pop(key, None)
                    dims[(p, total)] = dims.get((p, total), 0) + 1
                    if col:
                        blocks.setdefault(total, []).append(col)
        for total, cols in blocks.items():
            int_rows = []
            for col in cols:
                scale = lcm(*(v.denominator for v in col.values()))
                int_rows.append({key: int(v * scale) for key, v in col.items()})
            # the rank of the transpose equals the rank; columns become rows
            keymap: dict[tuple, int] = {}
            rows = []
            for col in int_rows:
                rows.append({keymap.setdefault(key, len(keymap)): v for key, v in col.items()})
            ranks[(p, total)] = sparse_int_rank(rows)

    for (p, total), d in dims.items():
        h = d - ranks.get((p, total), 0) - ranks.get((p + 1, total), 0)
        if h < 0:
            raise AssertionError("negative homology dimension; rank computation is wrong")
        if h:
            homology[p][total] = h
    return GradedHomology(
        classes=tuple(CharElement(rs.rank, hp) for hp in homology),
        positive_system=ps,
        rank=rs.rank,
    )


def euler_class(gh: GradedHomology) -> CharElement:
    """Alternating sum of the graded classes."""
    out = CharElement.zero(gh.rank)
    for p, cls in enumerate(gh.classes):
        out = out - cls if p % 2 else out + cls
    return out


def euler_class_closed_form(lam: Weight, rs: RootSystem) -> CharElement:
    """Closed form (-1)^{|R+|} sum_w eps(w) e^{w(lam+rho)+rho}; equals both
    the Koszul Euler class and half_denominator * weyl_character."""
    lam = tuple(lam)
    if len(lam) != rs.rank or any(x < 0 for x in lam):
        raise ValueError(f"weight {lam} must be dominant of rank {rs.rank}")
    lam_rho = tuple(x + 1 for x in lam)
    n = len(rs.positive_roots)
    sign = -1 if n % 2 else 1
    terms: dict[Weight, int] = {}
    for w in rs.weyl_group():
        mu = tuple(x + 1 for x in w.act(lam_rho))
        terms[mu] = terms.get(mu, 0) + sign * w.sign
    return CharElement(rs.rank, terms)


def kostant_homology(lam: Weight, rs: RootSystem) -> GradedHomology:
    """Per-degree closed form H_p = sum over w of length |R+|-p of
    e^{w(lam+rho)+rho}, for the standard positive system. Validated against
    koszul_n_homology by the test suite; used where the chain complex would
    blow the dimension cap."""
    lam = tuple(lam)
    if len(lam) != rs.rank or any(x < 0 for x in lam):
        raise ValueError(f"weight {lam} must be dominant of rank {rs.rank}")
    lam_rho = tuple(x + 1 for x in lam)
    n = len(rs.positive_roots)
    degrees: list[dict[Weight, int]] = [dict() for _ in range(n + 1)]
    for w in rs.weyl_group():
        mu = tuple(x + 1 for x in w.act(lam_rho))
        deg = n - w.length
        degrees[deg][mu] = degrees[deg].get(mu, 0) + 1
    return GradedHomology(
        classes=tuple(CharElement(rs.rank, d) for d in degrees),
        positive_system=tuple(sorted(rs.positive_roots)),
        rank=rs.rank,
    )
