"""Gromov-Witten invariants and quantum products of G/P through the Borel
engine.

A G/P invariant at an effective degree equals a Borel invariant: lift the
degree into the alcove, lift each coset to its minimal representative, and
multiply the last one by the longest element of the derived parabolic.  All
G/P products are assembled from those invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as iter_product

from .degrees import (
    CurveClass,
    derived_parabolic,
    flag_dimension,
    is_effective,
    peterson_lift,
    push_degree,
)
from .quantum import BOREL, QClass, classical_product, gw_invariant, quantum_product
from .root_system import ParabolicSubset, RootSystem
from .weyl import WeylElement, enumerate_min_reps, longest_element, min_coset_rep


@dataclass(frozen=True)
class ComparisonData:
    """Everything needed to move one degree's invariants to the Borel level."""

    d_B: CurveClass
    j_prime: ParabolicSubset
    w_prime: WeylElement
    d_pprime: tuple

    def __post_init__(self):
        if not set(self.j_prime.indices) <= set(self.d_B.parabolic.indices):
            raise RuntimeError("derived parabolic escaped the original one")


def comparison_data(rs: RootSystem, parabolic: ParabolicSubset, degree) -> ComparisonData:
    """Lift a degree and package the derived parabolic, its longest element
    and the pushed degree."""
    if not is_effective(rs, parabolic, degree):
        raise ValueError(f"degree {tuple(degree)} is not effective")
    lift = peterson_lift(rs, parabolic, degree)
    jp = derived_parabolic(rs, parabolic, lift.lam)
    return ComparisonData(
        d_B=lift,
        j_prime=jp,
        w_prime=longest_element(rs, jp),
        d_pprime=push_degree(rs, jp, lift.lam),
    )


def class_lift(rs: RootSystem, parabolic: ParabolicSubset, w: WeylElement) -> WeylElement:
    """Index map of the Schubert-class pullback: the minimal representative."""
    return min_coset_rep(w, parabolic)


def class_pushforward(rs: RootSystem, parabolic: ParabolicSubset, w: WeylElement):
    """Index map of the Schubert-class pushforward: the coset representative
    when w factors as (minimal rep) * (longest Levi element), else None."""
    rs.check_parabolic(parabolic)
    rep = min_coset_rep(w, parabolic)
    if w.length == rep.length + longest_element(rs, parabolic).length:
        return rep
    return None


def _c1_pairing(rs, parabolic, lam):
    inside = set(rs.parabolic_root_indices(parabolic))
    return sum(
        rs.pairing(alpha, lam)
        for g, alpha in enumerate(rs.positive_roots)
        if g not in inside
    )


def anticanonical_pairing(rs: RootSystem, parabolic: ParabolicSubset, degree) -> int:
    """(c_1(G/P), d), evaluated through the alcove-reduced lift."""
    lam = peterson_lift(rs, parabolic, degree).lam
    return _c1_pairing(rs, parabolic, lam)


def parabolic_gw_invariant(rs: RootSystem, parabolic: ParabolicSubset, classes, degree) -> int:
    """Genus-zero small invariant of G/P, computed at the Borel level.

    Coset classes may be given by any representatives; they are normalized to
    minimal ones.  Returns 0 for non-effective degrees and on grading failure.
    """
    rs.check_parabolic(parabolic)
    classes = [min_coset_rep(w, parabolic) for w in classes]
    if len(classes) < 3:
        raise ValueError("an invariant needs at least three classes")
    if not is_effective(rs, parabolic, degree):
        return 0
    cd = comparison_data(rs, parabolic, degree)
    lam = cd.d_B.lam
    if any(x < 0 for x in lam):
        raise RuntimeError(f"lift of effective degree {tuple(degree)} is not effective")
    if sum(w.length for w in classes) != flag_dimension(rs, parabolic) + _c1_pairing(
        rs, parabolic, lam
    ):
        return 0
    lifted = classes[:-1] + [classes[-1] * cd.w_prime]
    return gw_invariant(rs, lifted, lam)


def parabolic_quantum_product(
    rs: RootSystem, parabolic: ParabolicSubset, u: WeylElement, v: WeylElement
) -> QClass:
    """Quantum product of two G/P Schubert classes in the coset basis.

    The degree sum is finite: only effective degrees whose anticanonical
    pairing is at most l(u) + l(v) can contribute, by the grading.
    """
    rs.check_parabolic(parabolic)
    free = parabolic.free_nodes(rs.rank)
    if not free:
        raise ValueError("the full parabolic has no quantum parameters")
    u = min_coset_rep(u, parabolic)
    v = min_coset_rep(v, parabolic)
    basis = enumerate_min_reps(rs, parabolic)
    by_len = {}
    for w in basis:
        by_len.setdefault(w.length, []).append(w)
    dim = flag_dimension(rs, parabolic)
    bound = u.length + v.length
    w_o = longest_element(rs, ParabolicSubset.full(rs.rank))
    r = len(free)
    weights = []
    for t in range(r):
        unit = tuple(1 if s == t else 0 for s in range(r))
        wt = anticanonical_pairing(rs, parabolic, unit)
        if wt < 1:
            raise RuntimeError("anticanonical weight must be positive")
        weights.append(wt)
    terms = {}
    for d in iter_product(*(range(bound // wt + 1) for wt in weights)):
        c1d = anticanonical_pairing(rs, parabolic, d)
        if c1d > bound:
            continue
        target = dim + c1d - bound
        if target < 0 or target > dim:
            continue
        cd = comparison_data(rs, parabolic, d)
        lam = cd.d_B.lam
        for w in by_len.get(target, ()):
            val = gw_invariant(rs, [u, v, w * cd.w_prime], lam)
            if val:
                if val < 0:
                    raise RuntimeError("negative Gromov-Witten invariant")
                dual = min_coset_rep(w_o * w, parabolic)
                key = (dual, d)
                terms[key] = terms.get(key, 0) + val
    return QClass(rs, parabolic, terms)


def parabolic_star(a: QClass, b: QClass) -> QClass:
    """Bilinear extension of the coset-basis product."""
    a._compatible(b)
    rs = a.rs
    out = QClass.zero(rs, a.parabolic)
    for (x, dx), cx in a.terms.items():
        for (y, dy), cy in b.terms.items():
            piece = parabolic_quantum_product(rs, a.parabolic, x, y).shift(
                tuple(p + q for p, q in zip(dx, dy))
            )
            out = out + piece.scale(cx * cy)
    return out


def classical_parabolic_invariant(rs: RootSystem, parabolic: ParabolicSubset, classes) -> int:
    """Degree-zero triple intersection number of G/P, by an independent route:
    classical Borel products followed by the coset pushforward."""
    if len(classes) != 3:
        raise ValueError("the classical oracle takes exactly three classes")
    u, v, w = (min_coset_rep(x, parabolic) for x in classes)
    w_p = longest_element(rs, parabolic)

    def times(qc, y):
        out = QClass.zero(rs, BOREL)
        for (x, d), c in qc.terms.items():
            out = out + classical_product(rs, x, y).shift(d).scale(c)
        return out

    total = times(times(classical_product(rs, u, v), w), w_p)
    pushed = {}
    for (x, _), c in total.terms.items():
        img = class_pushforward(rs, parabolic, x)
        if img is not None:
            pushed[img] = pushed.get(img, 0) + c
    point = min_coset_rep(longest_element(rs, ParabolicSubset.full(rs.rank)), parabolic)
    return pushed.get(point, 0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ConsistencyReport:
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def as_dicts(self):
        return [
            {"name": e.name, "passed": e.passed, "detail": e.detail}
            for e in self.entries
        ]


def check_comparison_consistency(
    rs: RootSystem, parabolic: ParabolicSubset, degree
) -> ConsistencyReport:
    """Self-consistency audit at one degree: permutation symmetry of the
    invariants, factorization through the derived parabolic, and (at degree
    zero) agreement with the classical intersection oracle.

    Non-effective degrees yield an empty, trivially passing report.
    """
    rs.check_parabolic(parabolic)
    if not is_effective(rs, parabolic, degree):
        return ConsistencyReport(())
    degree = tuple(int(x) for x in degree)
    cd = comparison_data(rs, parabolic, degree)
    basis = enumerate_min_reps(rs, parabolic)
    target = flag_dimension(rs, parabolic) + _c1_pairing(rs, parabolic, cd.d_B.lam)
    triples = [
        (a, b, c)
        for a in basis
        for b in basis
        for c in basis
        if a.length + b.length + c.length == target
    ]
    entries = []

    bad = 0
    for trip in triples:
        vals = {
            parabolic_gw_invariant(rs, parabolic, perm, degree)
            for perm in permutations(trip)
        }
        if len(vals) > 1:
            bad += 1
    entries.append(
        CheckResult(
            "permutation-symmetry",
            bad == 0,
            f"{len(triples)} graded triples, {bad} asymmetric",
        )
    )

    relift = peterson_lift(rs, cd.j_prime, cd.d_pprime)
    stable = (
        relift.lam == cd.d_B.lam
        and derived_parabolic(rs, cd.j_prime, relift.lam) == cd.j_prime
    )
    bad = 0
    for trip in triples:
        at_p = parabolic_gw_invariant(rs, parabolic, trip, degree)
        at_pp = parabolic_gw_invariant(rs, cd.j_prime, trip, cd.d_pprime)
        if at_p != at_pp:
            bad += 1
    entries.append(
        CheckResult(
            "derived-parabolic-factorization",
            stable and bad == 0,
            f"lift stable: {stable}; {len(triples)} triples, {bad} mismatched",
        )
    )

    if not any(degree):
        bad = 0
        for trip in triples:
            if parabolic_gw_invariant(
                rs, parabolic, trip, degree
            ) != classical_parabolic_invariant(rs, parabolic, trip):
                bad += 1
        entries.append(
            CheckResult(
                "classical-degree-zero",
                bad == 0,
                f"{len(triples)} triples, {bad} mismatched",
            )
        )

    return ConsistencyReport(tuple(entries))
