"""Root systems of finite Cartan type, in exact integer arithmetic.

Roots are stored in simple-root coordinates and coweights in simple-coroot
coordinates; every pairing routes through the Cartan matrix, so nothing here
ever touches floating point.  Node numbering follows the standard Bourbaki
labeling for each series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

# min/max admissible rank per series (max None = unbounded)
_RANK_RULES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}

_EXCEPTIONAL_POSITIVE = {
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
}


@dataclass(frozen=True)
class CartanType:
    """A finite Cartan type such as A2 or B3."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_RULES:
            raise ValueError(
                f"unknown Cartan series {self.series!r}: expected one of A..G"
            )
        lo, hi = _RANK_RULES[self.series]
        if not isinstance(self.rank, int) or self.rank < lo or (
            hi is not None and self.rank > hi
        ):
            raise ValueError(
                f"invalid rank {self.rank} for series {self.series} "
                f"(allowed: {lo}{'..' + str(hi) if hi else ' and up'})"
            )

    @classmethod
    def parse(cls, name: str) -> "CartanType":
        m = re.fullmatch(r"([A-Ga-g])(\d+)", name.strip())
        if not m:
            raise ValueError(f"cannot parse Cartan type {name!r} (expected e.g. 'A2')")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"

    def positive_root_count(self) -> int:
        n = self.rank
        if self.series == "A":
            return n * (n + 1) // 2
        if self.series in ("B", "C"):
            return n * n
        if self.series == "D":
            return n * (n - 1)
        return _EXCEPTIONAL_POSITIVE[(self.series, n)]

    def weyl_order(self) -> int:
        n = self.rank
        if self.series == "A":
            return factorial(n + 1)
        if self.series in ("B", "C"):
            return 2**n * factorial(n)
        if self.series == "D":
            return 2 ** (n - 1) * factorial(n)
        return _EXCEPTIONAL_ORDERS[(self.series, n)]


@dataclass(frozen=True)
class ParabolicSubset:
    """A set of simple-root node indices (1-based, CLI numbering).

    The empty set is the Borel case; the full set is the whole group and is
    rejected by degree-level operations since there are no curve classes left.
    """

    indices: tuple = ()

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if any(not isinstance(j, int) or j < 1 for j in idx):
            raise ValueError("parabolic node indices must be 1-based positive integers")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, indices) -> "ParabolicSubset":
        return cls(tuple(indices))

    @classmethod
    def parse(cls, text: str) -> "ParabolicSubset":
        text = (text or "").strip()
        if not text:
            return cls()
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError:
            raise ValueError(f"cannot parse parabolic node list {text!r}") from None

    @classmethod
    def full(cls, rank: int) -> "ParabolicSubset":
        return cls(tuple(range(1, rank + 1)))

    def free_nodes(self, rank: int) -> tuple:
        return tuple(i for i in range(1, rank + 1) if i not in self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, j):
        return j in self.indices

    def __str__(self):
        return "{" + ",".join(str(j) for j in self.indices) + "}"


def _cartan_matrix(series, n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def bond(i, j):
        a[i][j] = -1
        a[j][i] = -1

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B":
            a[n - 1][n - 2] = -2  # last node carries the short root
        if series == "C":
            a[n - 2][n - 1] = -2  # last node carries the long root
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        spine = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(spine, spine[1:]):
            bond(i, j)
        bond(1, 3)
    elif series == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        a[2][1] = -2
    elif series == "G":
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(a):
    """Smallest positive integers d with d[i]*a[i][j] symmetric."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(a[i][j], a[j][i])
                    stack.append(j)
    mult = 1
    for x in d:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _check_positive_definite(a, d):
    """Symmetric Gaussian elimination; all pivots positive iff the
    symmetrized Cartan matrix is positive definite."""
    n = len(a)
    m = [[Fraction(d[i] * a[i][j]) for j in range(n)] for i in range(n)]
    for k in range(n):
        if m[k][k] <= 0:
            raise ValueError("Cartan data does not have a positive definite symmetrization")
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            if f:
                for c in range(k, n):
                    m[r][c] -= f * m[k][c]


class RootSystem:
    """Positive roots, coroots and reflection tables for a finite Cartan type.

    Immutable after construction; all derived data is precomputed with
    deterministic orderings (roots graded by height, lexicographic within a
    height), so downstream output is reproducible byte for byte.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan = _cartan_matrix(cartan_type.series, cartan_type.rank)
        self.symmetrizer = _symmetrizer(self.cartan)
        _check_positive_definite(self.cartan, self.symmetrizer)

        self.positive_roots, self.positive_coroots = self._close_roots()
        expected = cartan_type.positive_root_count()
        if len(self.positive_roots) != expected:
            raise RuntimeError(
                f"root closure for {cartan_type} produced {len(self.positive_roots)} "
                f"positive roots, expected {expected}"
            )
        self.npos = len(self.positive_roots)
        self.nroots = 2 * self.npos
        self._index = {}
        for g, r in enumerate(self.positive_roots):
            self._index[r] = g
            self._index[tuple(-x for x in r)] = g + self.npos
        self._simple_global = tuple(
            self._index[self._basis(i0)] for i0 in range(self.rank)
        )
        self.identity_perm = tuple(range(self.nroots))
        self._reflection_perms = [None] * self.npos
        self.simple_perms = tuple(
            self.reflection_perm(self._simple_global[i0]) for i0 in range(self.rank)
        )
        self._parabolic_roots = {}

    # -- construction ------------------------------------------------------

    def _basis(self, i0):
        return tuple(1 if j == i0 else 0 for j in range(self.rank))

    def _close_roots(self):
        a = self.cartan
        n = self.rank
        found = {}
        frontier = []
        for i0 in range(n):
            r = self._basis(i0)
            found[r] = r  # a simple root is its own coroot in these coordinates
            frontier.append(r)
        while frontier:
            new = []
            for r in frontier:
                cor = found[r]
                for i0 in range(n):
                    pr = sum(a[i0][j] * r[j] for j in range(n) if r[j])
                    if pr == 0:
                        continue
                    img = list(r)
                    img[i0] -= pr
                    img = tuple(img)
                    if img in found or any(x < 0 for x in img):
                        continue
                    pc = sum(a[k][i0] * cor[k] for k in range(n) if cor[k])
                    icor = list(cor)
                    icor[i0] -= pc
                    found[img] = tuple(icor)
                    new.append(img)
            frontier = new
        order = sorted(found, key=lambda root: (sum(root), root))
        roots = tuple(order)
        coroots = tuple(found[r] for r in order)
        for r, c in zip(roots, coroots):
            if self.pairing(r, c) != 2:
                raise RuntimeError(f"coroot normalization failed for root {r}")
        return roots, coroots

    # -- lookups -----------------------------------------------------------

    def root_vector(self, g):
        if g < self.npos:
            return self.positive_roots[g]
        return tuple(-x for x in self.positive_roots[g - self.npos])

    def signed_coroot(self, g):
        if g < self.npos:
            return self.positive_coroots[g]
        return tuple(-x for x in self.positive_coroots[g - self.npos])

    def positive_index(self, alpha) -> int:
        g = self._index.get(tuple(alpha))
        if g is None or g >= self.npos:
            raise ValueError(f"{tuple(alpha)} is not a positive root of {self.cartan_type}")
        return g

    def coroot(self, alpha):
        return self.positive_coroots[self.positive_index(alpha)]

    def reflection_perm(self, g):
        """Permutation of the full root list induced by the reflection in the
        g-th positive root."""
        if not 0 <= g < self.npos:
            raise ValueError("reflection index out of range")
        perm = self._reflection_perms[g]
        if perm is None:
            alpha = self.positive_roots[g]
            cov = self.positive_coroots[g]
            images = []
            for h in range(self.nroots):
                r = self.root_vector(h)
                c = self.pairing(r, cov)
                images.append(
                    self._index[tuple(r[j] - c * alpha[j] for j in range(self.rank))]
                )
            perm = tuple(images)
            self._reflection_perms[g] = perm
        return perm

    def pairing(self, root, coweight) -> int:
        if len(root) != self.rank or len(coweight) != self.rank:
            raise ValueError("vector length must equal the rank")
        a = self.cartan
        total = 0
        for i, c in enumerate(coweight):
            if c:
                row = a[i]
                total += c * sum(row[j] * root[j] for j in range(self.rank) if root[j])
        return total

    # -- parabolic structure -------------------------------------------------

    def check_parabolic(self, parabolic: ParabolicSubset):
        for j in parabolic.indices:
            if not 1 <= j <= self.rank:
                raise ValueError(
                    f"parabolic node {j} out of range for {self.cartan_type}"
                )

    def parabolic_root_indices(self, parabolic: ParabolicSubset):
        """Indices of positive roots supported on the parabolic nodes."""
        cached = self._parabolic_roots.get(parabolic.indices)
        if cached is None:
            inside = set(parabolic.indices)
            cached = tuple(
                g
                for g, r in enumerate(self.positive_roots)
                if all(r[j] == 0 or (j + 1) in inside for j in range(self.rank))
            )
            self._parabolic_roots[parabolic.indices] = cached
        return cached

    def parabolic_components(self, parabolic: ParabolicSubset):
        """Connected components of the parabolic nodes in the Dynkin diagram."""
        nodes = set(parabolic.indices)
        comps = []
        left = sorted(nodes)
        seen = set()
        for start in left:
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in nodes:
                    if j not in seen and self.cartan[i - 1][j - 1] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def highest_root_in(self, component):
        """Root of maximal height supported on a connected node set, with its
        coroot.  Uniqueness of the maximum is asserted."""
        comp = set(component)
        best = []
        best_h = -1
        for g, r in enumerate(self.positive_roots):
            if all(r[j] == 0 or (j + 1) in comp for j in range(self.rank)):
                h = sum(r)
                if h > best_h:
                    best, best_h = [g], h
                elif h == best_h:
                    best.append(g)
        if len(best) != 1:
            raise RuntimeError(f"highest root of component {component} is not unique")
        g = best[0]
        return self.positive_roots[g], self.positive_coroots[g]


def build_root_system(cartan_type) -> RootSystem:
    """Construct the root system for a CartanType (or a string like 'A2')."""
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)
    return RootSystem(cartan_type)


def pairing(rs: RootSystem, root, coweight) -> int:
    """Pairing of a root-space vector with a coweight-space vector."""
    return rs.pairing(root, coweight)


def reflect_coweight(rs: RootSystem, alpha, lam):
    """Reflect a coweight in a positive root: lam - <alpha, lam> alpha^v."""
    g = rs.positive_index(alpha)
    cov = rs.positive_coroots[g]
    c = rs.pairing(rs.positive_roots[g], lam)
    return tuple(lam[k] - c * cov[k] for k in range(rs.rank))
