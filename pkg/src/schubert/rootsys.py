"""Finite crystallographic root systems with exact integer arithmetic.

Everything downstream (Weyl groups, Demazure operators, cohomology
verifiers) sits on the data built here.  Simple roots are numbered 1..n in
the Bourbaki convention; see the README for the per-family tables.  The
Cartan matrix is stored as ``C[i][j] = <alpha_j, alpha_i_vee>`` so that the
fundamental-weight coordinates of ``alpha_j`` are exactly column ``j``.

Weights live in fundamental-weight coordinates (``fw[i] = <lam,
alpha_i_vee>``), which makes coroot pairings O(1) lookups.  Root
coordinates are recovered through the inverse Cartan matrix with
``fractions.Fraction``; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "CartanType",
    "Weight",
    "Root",
    "RootSystem",
    "build",
]

_FAMILIES = {"A", "B", "C", "D", "E", "F", "G"}

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_EXCEPTIONAL_ROOT_COUNTS = {("E", 6): 72, ("E", 7): 126, ("E", 8): 240,
                            ("F", 4): 48, ("G", 2): 12}

_EXCEPTIONAL_WEYL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040,
                            ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}


@dataclass(frozen=True)
class CartanType:
    """Family letter plus rank, e.g. D4.  Validates on construction."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} out of range for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in _FAMILIES or not text[1:].isdigit():
            raise ValueError(f"cannot parse Cartan type from {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    @property
    def simply_laced(self) -> bool:
        return self.family in ("A", "D", "E")

    @property
    def root_count(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1)
        if self.family in ("B", "C"):
            return 2 * n * n
        if self.family == "D":
            return 2 * n * (n - 1)
        return _EXCEPTIONAL_ROOT_COUNTS[(self.family, n)]

    @property
    def weyl_order(self) -> int:
        n = self.rank
        fact = 1
        for k in range(2, n + 2):
            fact *= k
        if self.family == "A":
            return fact  # (n+1)!
        n_fact = fact // (n + 1)
        if self.family in ("B", "C"):
            return (2 ** n) * n_fact
        if self.family == "D":
            return (2 ** (n - 1)) * n_fact
        return _EXCEPTIONAL_WEYL_ORDERS[(self.family, n)]

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    fw: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.fw, other.fw)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.fw, other.fw)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fw))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.fw))

    __rmul__ = __mul__

    @property
    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.fw)

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.fw)

    def __repr__(self) -> str:
        return f"Weight{self.fw}"


@dataclass(frozen=True)
class Root:
    """A root together with both coordinate views and length data.

    coords are the (integer) simple-root coordinates; weight is the same
    vector in fundamental-weight coordinates.  d is half the squared length
    in the normalization where short simple roots have d = 1.
    """

    coords: tuple[int, ...]
    weight: Weight
    positive: bool
    height: int
    d: int
    is_long: bool
    is_short: bool

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), -self.weight,
                    not self.positive, -self.height, self.d,
                    self.is_long, self.is_short)

    def __repr__(self) -> str:
        return f"Root{self.coords}"


def _cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix with C[i][j] = <alpha_j, alpha_i_vee>, 0-based."""
    n = ct.rank
    if ct.family == "E":
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
    elif ct.family == "D":
        edges = [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    else:
        edges = [(k, k + 1) for k in range(1, n)]
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for a, b in edges:
        c[a - 1][b - 1] = -1
        c[b - 1][a - 1] = -1
    # one asymmetric edge per non-simply-laced family
    if ct.family == "B":
        c[n - 1][n - 2] = -2        # <alpha_{n-1}, alpha_n_vee>, alpha_n short
    elif ct.family == "C":
        c[n - 2][n - 1] = -2        # <alpha_n, alpha_{n-1}_vee>, alpha_n long
    elif ct.family == "F":
        c[2][1] = -2                # <alpha_2, alpha_3_vee>
    elif ct.family == "G":
        c[0][1] = -3                # <alpha_2, alpha_1_vee>
    return tuple(tuple(row) for row in c)


def _symmetrizers(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Smallest positive integers d with d_i C[i][j] = d_j C[j][i]."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                queue.append(j)
    if any(x is None for x in d):
        raise ValueError("Dynkin diagram is not connected")
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _invert_rational(mat: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)]
         + [Fraction(1 if i == k else 0) for k in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(a[i][n + j] for j in range(n)) for i in range(n))


class RootSystem:
    """Immutable root-system data for one Cartan type.

    Build through :func:`build`, which caches instances per type.  All
    attributes are fixed after construction; the private dict attributes
    are memo tables only.
    """

    def __init__(self, ct: CartanType):
        self.ct = ct
        self.rank = ct.rank
        self.cartan = _cartan_matrix(ct)
        self.d = _symmetrizers(self.cartan)
        self._inv_cartan = _invert_rational(self.cartan)
        # (alpha_i, alpha_j) up to overall scale; symmetric by construction
        self._gram = tuple(tuple(self.d[i] * self.cartan[i][j] for j in range(ct.rank))
                           for i in range(ct.rank))
        self.rho = Weight((1,) * ct.rank)
        self.fundamental_weights = tuple(
            Weight(tuple(1 if k == i else 0 for k in range(ct.rank)))
            for i in range(ct.rank))
        self._build_roots()
        self._root_coord_cache: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
        self._bruhat_cache: dict[tuple, bool] = {}
        self._w0 = None

    # -- construction -----------------------------------------------------

    def _build_roots(self) -> None:
        n = self.rank
        cartan = self.cartan
        seen: set[tuple[int, ...]] = set()
        frontier = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(n):
                    pair = sum(cartan[i][j] * c[j] for j in range(n))
                    img = tuple(c[k] - pair if k == i else c[k] for k in range(n))
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        if len(seen) != self.ct.root_count:
            raise AssertionError(
                f"{self.ct}: generated {len(seen)} roots, expected {self.ct.root_count}")

        max_d = max(self.d)
        roots = []
        for c in seen:
            pos = all(x >= 0 for x in c)
            neg = all(x <= 0 for x in c)
            if not (pos or neg) or (pos and neg):
                raise AssertionError(f"root {c} is neither positive nor negative")
            dd = self._d_of(c)
            fw = Weight(tuple(sum(cartan[i][j] * c[j] for j in range(n))
                              for i in range(n)))
            roots.append(Root(c, fw, pos, sum(c), dd,
                              dd == max_d, dd == 1))
        positives = sorted((r for r in roots if r.positive),
                           key=lambda r: (r.height, r.coords))
        self.positive_roots: tuple[Root, ...] = tuple(positives)
        self.roots: tuple[Root, ...] = tuple(positives) + tuple(-r for r in positives)
        self.simple_roots: tuple[Root, ...] = tuple(
            self._root_by_coords(tuple(1 if k == i else 0 for k in range(n)))
            for i in range(n))
        self._by_fw = {r.weight.fw: r for r in self.roots}

        dominant = [r for r in self.roots if r.weight.is_dominant]
        if not 1 <= len(dominant) <= 2:
            raise AssertionError(f"{self.ct}: {len(dominant)} dominant roots")
        self.highest_root: Root = max(dominant, key=lambda r: r.height)
        shorts = [r for r in dominant if r.is_short]
        self.highest_short_root: Root = max(shorts, key=lambda r: r.height)

    def _d_of(self, coords: Sequence[int]) -> int:
        n = self.rank
        g = self._gram
        tot = 0
        for i in range(n):
            if coords[i]:
                for j in range(n):
                    if coords[j]:
                        tot += coords[i] * coords[j] * g[i][j]
        if tot % 2:
            raise AssertionError("odd squared length")
        return tot // 2

    def _root_by_coords(self, coords: tuple[int, ...]) -> Root:
        for r in self.roots:
            if r.coords == coords:
                return r
        raise KeyError(coords)

    # -- weights ----------------------------------------------------------

    def weight(self, fw: Iterable[int]) -> Weight:
        fw = tuple(int(x) for x in fw)
        if len(fw) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(fw)}")
        return Weight(fw)

    def zero(self) -> Weight:
        return Weight((0,) * self.rank)

    def weight_from_root_coords(self, coords: Iterable[int]) -> Weight:
        coords = tuple(int(x) for x in coords)
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        n = self.rank
        return Weight(tuple(sum(self.cartan[i][j] * coords[j] for j in range(n))
                            for i in range(n)))

    def root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        """Coordinates of lam in the simple-root basis (rational, exact)."""
        cached = self._root_coord_cache.get(lam.fw)
        if cached is None:
            n = self.rank
            inv = self._inv_cartan
            cached = tuple(sum(inv[i][j] * lam.fw[j] for j in range(n))
                           for i in range(n))
            self._root_coord_cache[lam.fw] = cached
        return cached

    def height(self, lam: Weight) -> Fraction:
        return sum(self.root_coords(lam), Fraction(0))

    def root_of(self, lam: Weight) -> Root | None:
        return self._by_fw.get(lam.fw)

    # -- pairings and reflections -----------------------------------------

    def pairing(self, lam: Weight, i: int) -> int:
        """<lam, alpha_i_vee> for the i-th simple root, i in 1..rank."""
        self._check_index(i)
        return lam.fw[i - 1]

    def pairing_root(self, lam: Weight, beta: Root) -> int:
        """<lam, beta_vee> for an arbitrary root beta."""
        total = Fraction(0)
        for j, c in enumerate(beta.coords):
            if c:
                total += Fraction(c * self.d[j], beta.d) * lam.fw[j]
        if total.denominator != 1:
            raise AssertionError(f"non-integral coroot pairing {total}")
        return int(total)

    def reflect(self, lam: Weight, beta: Root) -> Weight:
        """s_beta(lam) = lam - <lam, beta_vee> beta."""
        return lam - self.pairing_root(lam, beta) * beta.weight

    def reflect_simple(self, lam: Weight, i: int) -> Weight:
        self._check_index(i)
        return lam - lam.fw[i - 1] * self.simple_roots[i - 1].weight

    def dominance_leq(self, mu: Weight, lam: Weight) -> bool:
        """mu <= lam iff lam - mu is a nonnegative integer sum of simple roots."""
        diff = self.root_coords(lam - mu)
        return all(x.denominator == 1 and x >= 0 for x in diff)

    def dominant_representative(self, lam: Weight) -> Weight:
        """The unique dominant weight in the Weyl orbit of lam."""
        cur = lam
        while True:
            for i, a in enumerate(cur.fw):
                if a < 0:
                    cur = cur - a * self.simple_roots[i].weight
                    break
            else:
                return cur

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple-root index {i} out of range 1..{self.rank}")

    @property
    def simply_laced(self) -> bool:
        return self.ct.simply_laced

    def __repr__(self) -> str:
        return f"RootSystem({self.ct})"


@lru_cache(maxsize=None)
def _build_cached(ct: CartanType) -> RootSystem:
    return RootSystem(ct)


def build(ct: CartanType | str) -> RootSystem:
    """Build (or fetch the cached) root system for the given Cartan type."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _build_cached(ct)
