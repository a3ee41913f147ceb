"""Curve-class lattices for flag varieties.

Degrees on G/P are lifted to the Borel level by reducing into the fundamental
alcove of the affine Weyl group of the Levi.  Orientation convention used
throughout: effective degrees have nonnegative coordinates, the reduced lift
has nonnegative coroot coefficients, and the alcove condition is
<alpha, lam> in {-1, 0} for every positive root alpha of the Levi.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .root_system import ParabolicSubset, RootSystem

# Largest Weyl group order at each rank (E-series at 6..8), used only for the
# runaway guard on the alcove walk.
_MAX_ORDER_AT_RANK = {1: 2, 2: 12, 3: 48, 4: 1152, 5: 3840, 6: 51840,
                      7: 2903040, 8: 696729600}


@dataclass(frozen=True)
class CurveClass:
    """An integer coweight with the parabolic context whose H_2 it refines.

    `lam` holds the simple-coroot coefficients; the degree coordinates of the
    underlying class of H_2(G/P) are the coefficients at nodes outside the
    parabolic.
    """

    rs: RootSystem
    parabolic: ParabolicSubset
    lam: tuple

    @property
    def degree(self) -> tuple:
        return tuple(
            self.lam[i - 1] for i in self.parabolic.free_nodes(self.rs.rank)
        )


@dataclass(frozen=True)
class AlcoveSpec:
    """Simple walls of the fundamental domain for the Levi's affine action.

    Linear walls <alpha_j, .> = 0 for each parabolic node j, and one affine
    wall <theta, .> = -1 per connected component, theta the component's
    highest root.  A lattice point lies in the domain iff every pairing with
    a positive Levi root is -1 or 0, which the simple walls already enforce.
    """

    rs: RootSystem
    parabolic: ParabolicSubset
    affine_walls: tuple  # ((theta, theta_coroot), ...) per component

    @classmethod
    def for_parabolic(cls, rs: RootSystem, parabolic: ParabolicSubset) -> "AlcoveSpec":
        rs.check_parabolic(parabolic)
        walls = tuple(
            rs.highest_root_in(comp) for comp in rs.parabolic_components(parabolic)
        )
        return cls(rs, parabolic, walls)

    def first_violation(self, lam):
        """First violated simple wall, or None when lam is inside."""
        rs = self.rs
        for j in self.parabolic.indices:
            alpha = rs.positive_roots[rs._simple_global[j - 1]]
            if rs.pairing(alpha, lam) > 0:
                return ("linear", j)
        for k, (theta, _) in enumerate(self.affine_walls):
            if rs.pairing(theta, lam) < -1:
                return ("affine", k)
        return None

    def contains(self, lam) -> bool:
        """Full membership test over every positive Levi root."""
        rs = self.rs
        for g in rs.parabolic_root_indices(self.parabolic):
            if rs.pairing(rs.positive_roots[g], lam) not in (-1, 0):
                return False
        return True


def _require_degree_context(rs, parabolic):
    rs.check_parabolic(parabolic)
    free = parabolic.free_nodes(rs.rank)
    if not free:
        raise ValueError("the full parabolic has no curve classes (H_2 = 0)")
    return free


def _as_degree(degree, free):
    degree = tuple(int(x) for x in degree)
    if len(degree) != len(free):
        raise ValueError(
            f"degree vector has {len(degree)} coordinates, expected {len(free)}"
        )
    return degree


def is_effective(rs: RootSystem, parabolic: ParabolicSubset, degree) -> bool:
    """True iff every degree coordinate is nonnegative."""
    free = _require_degree_context(rs, parabolic)
    return all(x >= 0 for x in _as_degree(degree, free))


def _step_ceiling(rs, parabolic, degree):
    order = 1
    for comp in rs.parabolic_components(parabolic):
        order *= _MAX_ORDER_AT_RANK.get(len(comp), 2 ** len(comp) * 10**6)
    height = 1 + max((sum(r) for r in rs.positive_roots), default=1)
    return order * (1 + sum(abs(x) for x in degree) * height)


def peterson_lift(rs: RootSystem, parabolic: ParabolicSubset, degree) -> CurveClass:
    """The unique coweight over the given degree with all Levi pairings in
    {-1, 0}, found by walking into the fundamental alcove.

    Every reflection step fixes the coordinates at the free nodes, so the
    result restricts back to the input degree.
    """
    free = _require_degree_context(rs, parabolic)
    degree = _as_degree(degree, free)
    lam = [0] * rs.rank
    for i, d in zip(free, degree):
        lam[i - 1] = d
    if any(degree):
        alcove = AlcoveSpec.for_parabolic(rs, parabolic)
        ceiling = _step_ceiling(rs, parabolic, degree)
        steps = 0
        while (hit := alcove.first_violation(lam)) is not None:
            steps += 1
            if steps > ceiling:
                raise RuntimeError(
                    f"alcove walk for {rs.cartan_type}, J={parabolic}, d={degree} "
                    f"exceeded {ceiling} steps"
                )
            kind, which = hit
            if kind == "linear":
                g = rs._simple_global[which - 1]
                alpha = rs.positive_roots[g]
                cov = rs.positive_coroots[g]
                c = rs.pairing(alpha, lam)
            else:
                theta, cov = alcove.affine_walls[which]
                c = rs.pairing(theta, lam) + 1
            for k in range(rs.rank):
                lam[k] -= c * cov[k]
        if not alcove.contains(lam):
            raise RuntimeError("alcove walk terminated outside the domain")
    lam = tuple(lam)
    if all(x >= 0 for x in degree) and any(x < 0 for x in lam):
        raise RuntimeError(
            f"effective degree {degree} lifted to a non-effective coweight {lam}"
        )
    return CurveClass(rs, parabolic, lam)


def derived_parabolic(rs: RootSystem, parabolic: ParabolicSubset, lam) -> ParabolicSubset:
    """Parabolic nodes whose simple root pairs to zero with an alcove-reduced
    coweight.  Rejects coweights that are not alcove-reduced."""
    rs.check_parabolic(parabolic)
    lam = tuple(lam)
    if not AlcoveSpec.for_parabolic(rs, parabolic).contains(lam):
        raise ValueError(f"{lam} is not alcove-reduced for J={parabolic}")
    return ParabolicSubset.of(
        j
        for j in parabolic.indices
        if rs.pairing(rs.positive_roots[rs._simple_global[j - 1]], lam) == 0
    )


def push_degree(rs: RootSystem, parabolic: ParabolicSubset, lam) -> tuple:
    """Degree coordinates of a coweight at the nodes outside the parabolic."""
    rs.check_parabolic(parabolic)
    return tuple(lam[i - 1] for i in parabolic.free_nodes(rs.rank))


def flag_dimension(rs: RootSystem, parabolic: ParabolicSubset) -> int:
    """Complex dimension of G/P: the number of positive roots off the Levi."""
    rs.check_parabolic(parabolic)
    return rs.npos - len(rs.parabolic_root_indices(parabolic))


def hom_dimension(rs: RootSystem, parabolic: ParabolicSubset, degree) -> int:
    """Dimension of the space of degree-d maps P^1 -> G/P: dim G/P plus the
    anticanonical pairing, evaluated through the alcove-reduced lift."""
    free = _require_degree_context(rs, parabolic)
    degree = _as_degree(degree, free)
    if any(x < 0 for x in degree):
        raise ValueError(f"degree {degree} is not effective")
    lam = peterson_lift(rs, parabolic, degree).lam
    inside = set(rs.parabolic_root_indices(parabolic))
    dim = 0
    total = 0
    for g, alpha in enumerate(rs.positive_roots):
        if g not in inside:
            dim += 1
            total += rs.pairing(alpha, lam)
    return dim + total


def is_generic_levi_semistable(rs: RootSystem, parabolic: ParabolicSubset, degree) -> bool:
    """Whether a generic degree-d map pulls the Levi bundle back to a
    semistable bundle: the lift must pair to zero with every parabolic node."""
    free = _require_degree_context(rs, parabolic)
    degree = _as_degree(degree, free)
    if any(x < 0 for x in degree):
        raise ValueError(f"degree {degree} is not effective")
    lam = peterson_lift(rs, parabolic, degree).lam
    return all(
        rs.pairing(rs.positive_roots[rs._simple_global[j - 1]], lam) == 0
        for j in parabolic.indices
    )


def enumerate_alcove_lifts(rs, parabolic, degree, window=6):
    """Brute-force search for lattice lifts of a degree satisfying the alcove
    condition, with the parabolic-direction coefficients confined to
    [-window, window].  Independent of the alcove walk; used as its oracle."""
    free = _require_degree_context(rs, parabolic)
    degree = _as_degree(degree, free)
    alcove = AlcoveSpec.for_parabolic(rs, parabolic)
    base = [0] * rs.rank
    for i, d in zip(free, degree):
        base[i - 1] = d
    hits = []
    slots = list(parabolic.indices)
    for combo in iter_product(range(-window, window + 1), repeat=len(slots)):
        lam = base[:]
        for j, c in zip(slots, combo):
            lam[j - 1] = c
        if alcove.contains(lam):
            hits.append(tuple(lam))
    return hits
