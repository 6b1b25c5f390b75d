"""Root systems of types A-G in the fundamental-weight basis.

Every weight is an integer coordinate vector in the fundamental-weight
basis, so the Weyl vector is rho = (1,...,1), simple roots are columns of
the Cartan matrix, and all exponents used downstream (rho - w*rho,
w(lambda+rho)+rho, 2*rho) stay inside the integral weight lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .linalg import fraction_inverse, int_matrix_inverse

Weight = tuple[int, ...]

DEFAULT_MAX_RANK = 8
DEFAULT_WEYL_CAP = 10**6

VALID_RANKS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class UnsupportedTypeError(ValueError):
    """Raised for a (series, rank) pair outside the supported table."""


class CapExceededError(RuntimeError):
    """Raised when a configured size cap would be exceeded."""


def _valid_types_message(max_rank: int) -> str:
    return (
        f"valid ranks: A1..A{max_rank}, B2..B{max_rank}, C2..C{max_rank}, "
        f"D3..D{max_rank}, E6..E8, F4, G2"
    )


def cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix whose column j is the simple root alpha_j in
    fundamental-weight coordinates (Bourbaki numbering)."""
    c = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if series == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif series == "B":
        for i in range(rank - 2):
            bond(i, i + 1)
        # alpha_{rank-1} is the short root
        bond(rank - 2, rank - 1, -1, -2)
    elif series == "C":
        for i in range(rank - 2):
            bond(i, i + 1)
        # alpha_{rank-1} is the long root
        bond(rank - 2, rank - 1, -2, -1)
    elif series == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
        c[rank - 2][rank - 1] = 0
        c[rank - 1][rank - 2] = 0
    elif series == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
        for i, j in edges:
            if i < rank and j < rank:
                bond(i, j)
        bond(1, 3)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif series == "G":
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in c)


def _symmetrizer(series: str, rank: int) -> tuple[int, ...]:
    """d_i = (alpha_i, alpha_i)/2, scaled to integers, so that
    d_i * C[i][j] is a symmetric matrix."""
    if series == "B":
        return tuple([2] * (rank - 1) + [1])
    if series == "C":
        return tuple([1] * (rank - 1) + [2])
    if series == "F":
        return (2, 2, 1, 1)
    if series == "G":
        return (1, 3)
    return tuple([1] * rank)


def classical_weyl_order(series: str, rank: int) -> int:
    if series == "A":
        return factorial(rank + 1)
    if series in ("B", "C"):
        return 2**rank * factorial(rank)
    if series == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if series == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if series == "F":
        return 1152
    return 12  # G2


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as an integer matrix on weight coordinates."""

    matrix: tuple[tuple[int, ...], ...]
    length: int
    sign: int

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def act(self, mu: Weight) -> Weight:
        if len(mu) != self.rank:
            raise ValueError("rank mismatch between Weyl element and weight")
        return tuple(sum(row[j] * mu[j] for j in range(self.rank)) for row in self.matrix)


def act(w: WeylElement, mu: Weight) -> Weight:
    """Matrix-vector action of a Weyl element on a weight."""
    return w.act(mu)


@dataclass(frozen=True)
class WeylSubgroup:
    """A subgroup of W given by an explicit, closed element list."""

    elements: tuple[WeylElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return any(w.matrix == u.matrix for u in self.elements)


class RootSystem:
    """Cartan data of one simple factor, with lattice-level helpers."""

    def __init__(self, series: str, rank: int):
        self.series = series
        self.rank = rank
        self.cartan = cartan_matrix(series, rank)
        self.symmetrizer = _symmetrizer(series, rank)
        self.cartan_inv = tuple(
            tuple(row) for row in fraction_inverse(self.cartan)
        )
        self._simple_reflection_matrices = tuple(
            self._reflection_matrix(i) for i in range(rank)
        )
        self.positive_roots = self._generate_positive_roots()
        self._positive_set = frozenset(self.positive_roots)
        self.full_roots = self.positive_roots + tuple(
            tuple(-c for c in a) for a in self.positive_roots
        )
        self._full_set = frozenset(self.full_roots)
        rho2 = [0] * rank
        for a in self.positive_roots:
            rho2 = [x + y for x, y in zip(rho2, a)]
        if any(x != 2 for x in rho2):
            raise AssertionError("half sum of positive roots is not (1,...,1)")
        self.rho: Weight = tuple([1] * rank)
        self.weyl_order = classical_weyl_order(series, rank)
        # lazy caches, all keyed by immutable data
        self._weyl_group: WeylSubgroup | None = None
        self._inverse_cache: dict[tuple, WeylElement] = {}
        self._module_cache: dict[Weight, object] = {}
        self._bracket_cache = None

    # -- construction helpers -------------------------------------------------

    def _reflection_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        # s_i(mu) = mu - mu_i * alpha_i, alpha_i = column i of the Cartan matrix
        n = self.rank
        return tuple(
            tuple(int(k == j) - (self.cartan[k][i] if j == i else 0) for j in range(n))
            for k in range(n)
        )

    def _generate_positive_roots(self) -> tuple[Weight, ...]:
        simples = [self.simple_root(i) for i in range(self.rank)]
        roots = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for beta in frontier:
                for m in self._simple_reflection_matrices:
                    img = tuple(
                        sum(m[k][j] * beta[j] for j in range(self.rank))
                        for k in range(self.rank)
                    )
                    if img not in roots:
                        roots.add(img)
                        new.append(img)
            frontier = new
        positive = []
        for beta in roots:
            coords = self.root_coords(beta)
            if all(x >= 0 for x in coords):
                if any(x.denominator != 1 for x in coords):
                    raise AssertionError("non-integral root coordinates")
                positive.append(beta)
        if 2 * len(positive) != len(roots):
            raise AssertionError("positive system does not split the roots in half")
        positive.sort(key=lambda b: (self.height(b), tuple(-x for x in self.root_coords(b))))
        return tuple(positive)

    # -- lattice helpers -------------------------------------------------------

    def simple_root(self, i: int) -> Weight:
        return tuple(self.cartan[k][i] for k in range(self.rank))

    def root_coords(self, mu: Weight) -> tuple[Fraction, ...]:
        """Coordinates of mu in the simple-root basis (rational in general)."""
        return tuple(
            sum(self.cartan_inv[i][j] * mu[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def height(self, mu: Weight) -> Fraction:
        return sum(self.root_coords(mu), Fraction(0))

    def in_positive_root_lattice(self, mu: Weight) -> bool:
        coords = self.root_coords(mu)
        return all(x.denominator == 1 and x >= 0 for x in coords)

    def inner(self, lam: Weight, mu: Weight) -> Fraction:
        """W-invariant bilinear form, normalized so (alpha_i,alpha_i) = 2*d_i."""
        x = self.root_coords(mu)
        return sum(
            (Fraction(self.symmetrizer[j]) * lam[j]) * x[j] for j in range(self.rank)
        )

    def is_root(self, mu: Weight) -> bool:
        return mu in self._full_set

    def is_positive_root(self, mu: Weight) -> bool:
        return mu in self._positive_set

    # -- Weyl elements ---------------------------------------------------------

    def element_from_matrix(self, matrix) -> WeylElement:
        """Wrap an integer matrix as a WeylElement; the length is the
        inversion count #{alpha > 0 : w(alpha) < 0}.

        Membership in W itself (not just Aut(R), which can be larger by
        diagram automorphisms) is certified by walking m*rho back to the
        dominant chamber and requiring the word to reproduce m: rho is
        regular, so W acts simply transitively on its orbit."""
        matrix = tuple(tuple(int(v) for v in row) for row in matrix)
        inv = 0
        for alpha in self.positive_roots:
            img = tuple(
                sum(matrix[k][j] * alpha[j] for j in range(self.rank))
                for k in range(self.rank)
            )
            if img not in self._full_set:
                raise ValueError("matrix does not permute the roots")
            if img not in self._positive_set:
                inv += 1
        mu = tuple(
            sum(matrix[k][j] for j in range(self.rank)) for k in range(self.rank)
        )  # m * rho
        word = []
        while True:
            i = next((i for i, x in enumerate(mu) if x < 0), None)
            if i is None:
                break
            alpha = self.simple_root(i)
            mu = tuple(x - mu[i] * a for x, a in zip(mu, alpha))
            word.append(i)
        rebuilt = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        for i in reversed(word):
            s = self._simple_reflection_matrices[i]
            rebuilt = tuple(
                tuple(sum(s[r][k] * rebuilt[k][c] for k in range(self.rank)) for c in range(self.rank))
                for r in range(self.rank)
            )
        if mu != self.rho or rebuilt != matrix:
            raise ValueError("matrix permutes the roots but does not lie in the Weyl group")
        return WeylElement(matrix=matrix, length=inv, sign=(-1) ** inv)

    def identity_element(self) -> WeylElement:
        eye = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        return WeylElement(matrix=eye, length=0, sign=1)

    def simple_reflection(self, i: int) -> WeylElement:
        return WeylElement(matrix=self._simple_reflection_matrices[i], length=1, sign=-1)

    def compose(self, w1: WeylElement, w2: WeylElement) -> WeylElement:
        n = self.rank
        prod = tuple(
            tuple(sum(w1.matrix[i][k] * w2.matrix[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return self.element_from_matrix(prod)

    def inverse(self, w: WeylElement) -> WeylElement:
        cached = self._inverse_cache.get(w.matrix)
        if cached is None:
            cached = self.element_from_matrix(int_matrix_inverse(w.matrix))
            self._inverse_cache[w.matrix] = cached
        return cached

    def from_word(self, word) -> WeylElement:
        w = self.identity_element()
        for i in word:
            w = self.compose(w, self.simple_reflection(i))
        return w

    def weyl_group(self, cap: int = DEFAULT_WEYL_CAP) -> WeylSubgroup:
        if self._weyl_group is None:
            self._weyl_group = enumerate_weyl_group(self, cap=cap)
        return self._weyl_group

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "positive_roots": [list(a) for a in self.positive_roots],
            "rho": list(self.rho),
            "weyl_order": self.weyl_order,
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.series}{self.rank})"


@lru_cache(maxsize=None)
def _cached_root_system(series: str, rank: int) -> RootSystem:
    return RootSystem(series, rank)


def build_root_system(series: str, rank: int, max_rank: int = DEFAULT_MAX_RANK) -> RootSystem:
    """Construct the root system of the given type, or reject it."""
    series = str(series).upper()
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise UnsupportedTypeError(f"unsupported type/rank: {series}{rank}; rank must be an integer") from None
    lo_hi = VALID_RANKS.get(series)
    if lo_hi is None:
        raise UnsupportedTypeError(
            f"unsupported type/rank: {series}{rank}; {_valid_types_message(max_rank)}"
        )
    lo, hi = lo_hi
    if rank < lo or rank > (hi if hi is not None else max_rank) or rank > max_rank:
        raise UnsupportedTypeError(
            f"unsupported type/rank: {series}{rank}; {_valid_types_message(max_rank)}"
        )
    return _cached_root_system(series, rank)


def parse_type(token: str, max_rank: int = DEFAULT_MAX_RANK) -> RootSystem:
    """Parse a combined type token like 'A2' or 'G2'."""
    token = token.strip()
    if not token or not token[0].isalpha():
        raise UnsupportedTypeError(f"unsupported type/rank: {token!r}; {_valid_types_message(max_rank)}")
    return build_root_system(token[0], token[1:] or -1, max_rank=max_rank)


def enumerate_weyl_group(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> WeylSubgroup:
    """Breadth-first closure of the simple reflections; the full W."""
    predicted = classical_weyl_order(rs.series, rs.rank)
    if predicted > cap:
        raise CapExceededError(
            f"group too large: |W({rs.series}{rs.rank})| = {predicted} exceeds cap {cap}"
        )
    gens = [rs._simple_reflection_matrices[i] for i in range(rs.rank)]
    identity = rs.identity_element()
    seen = {identity.matrix: identity}
    frontier = [identity]
    depth = 0
    while frontier:
        depth += 1
        new = []
        for w in frontier:
            for g in gens:
                n = rs.rank
                prod = tuple(
                    tuple(sum(w.matrix[i][k] * g[k][j] for k in range(n)) for j in range(n))
                    for i in range(n)
                )
                if prod not in seen:
                    elem = WeylElement(matrix=prod, length=depth, sign=(-1) ** depth)
                    seen[prod] = elem
                    new.append(elem)
        frontier = new
    if len(seen) != predicted:
        raise AssertionError(
            f"enumerated {len(seen)} Weyl elements, expected {predicted}"
        )
    elements = sorted(seen.values(), key=lambda w: (w.length, w.matrix))
    return WeylSubgroup(elements=tuple(elements))


def subgroup_from_generators(rs: RootSystem, generators, cap: int = DEFAULT_WEYL_CAP) -> WeylSubgroup:
    """Close a generator list into a subgroup of W, validating as we go."""
    gens = [rs.element_from_matrix(g.matrix if isinstance(g, WeylElement) else g) for g in generators]
    identity = rs.identity_element()
    seen = {identity.matrix: identity}
    frontier = [identity]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                prod = rs.compose(w, g)
                if prod.matrix not in seen:
                    if len(seen) >= cap:
                        raise CapExceededError(f"group too large: subgroup closure exceeds cap {cap}")
                    seen[prod.matrix] = prod
                    new.append(prod)
        frontier = new
    elements = sorted(seen.values(), key=lambda w: (w.length, w.matrix))
    return WeylSubgroup(elements=tuple(elements))


def trivial_subgroup(rs: RootSystem) -> WeylSubgroup:
    return WeylSubgroup(elements=(rs.identity_element(),))


def rho_shift(w: WeylElement, rs: RootSystem) -> Weight:
    """rho - w*rho, computed as the sum of R+ \\cap (-w R+), i.e. of the
    positive roots sent negative by w^{-1}. Always in the root lattice."""
    winv = rs.inverse(w)
    total = [0] * rs.rank
    for alpha in rs.positive_roots:
        if winv.act(alpha) not in rs._positive_set:
            total = [x + y for x, y in zip(total, alpha)]
    return tuple(total)
