"""Weyl group elements, coset representatives and longest elements.

An element is stored as the permutation it induces on the full root list.
That makes length, descent tests and composition cheap and gives a canonical
hashable key.  Reduced words are recovered on demand by peeling the smallest
right descent, so the stored word never depends on how an element was built.
"""

from __future__ import annotations

import re
from weakref import WeakKeyDictionary

from .root_system import ParabolicSubset, RootSystem

# Default cap on |W| for full enumeration: covers the classical types up to
# rank 6 plus F4, G2 and E6.  E7 and E8 are refused with a clear message.
DEFAULT_MAX_WEYL_ORDER = 60_000


class EnumerationBoundError(RuntimeError):
    """Raised when a Weyl group is too large to enumerate."""


class WeylElement:
    __slots__ = ("rs", "perm", "_word", "_length", "_hash")

    def __init__(self, rs: RootSystem, perm: tuple):
        self.rs = rs
        self.perm = perm
        self._word = None
        self._length = None
        self._hash = None

    @property
    def length(self) -> int:
        if self._length is None:
            npos = self.rs.npos
            self._length = sum(1 for g in range(npos) if self.perm[g] >= npos)
        return self._length

    @property
    def word(self) -> tuple:
        """Canonical reduced word (smallest right descent peeled first)."""
        if self._word is None:
            rs = self.rs
            npos = rs.npos
            simple_g = rs._simple_global
            p = self.perm
            rev = []
            while True:
                i0 = next(
                    (k for k in range(rs.rank) if p[simple_g[k]] >= npos), None
                )
                if i0 is None:
                    break
                rev.append(i0 + 1)
                s = rs.simple_perms[i0]
                p = tuple(p[s[g]] for g in range(len(p)))
            rev.reverse()
            self._word = tuple(rev)
        return self._word

    def _common(self, other: "WeylElement") -> RootSystem:
        if self.rs is other.rs or self.rs.cartan == other.rs.cartan:
            return self.rs
        raise ValueError("elements belong to different root systems")

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        rs = self._common(other)
        p, q = self.perm, other.perm
        return WeylElement(rs, tuple(p[q[g]] for g in range(len(q))))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for g, h in enumerate(self.perm):
            inv[h] = g
        return WeylElement(self.rs, tuple(inv))

    def act(self, coweight) -> tuple:
        """Image of a coweight vector; integer in, integer out."""
        rs = self.rs
        if len(coweight) != rs.rank:
            raise ValueError("coweight length must equal the rank")
        out = [0] * rs.rank
        for i0, c in enumerate(coweight):
            if c:
                cor = rs.signed_coroot(self.perm[rs._simple_global[i0]])
                for k in range(rs.rank):
                    out[k] += c * cor[k]
        return tuple(out)

    def is_right_descent(self, i: int) -> bool:
        """True iff multiplying by s_i on the right shortens the element."""
        g = self.rs._simple_global[i - 1]
        return self.perm[g] >= self.rs.npos

    def is_identity(self) -> bool:
        return self.perm == self.rs.identity_perm

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.perm == other.perm
            and (self.rs is other.rs or self.rs.cartan == other.rs.cartan)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.perm)
        return self._hash

    def __repr__(self):
        return f"<W {format_word(self.word)}>"


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, rs.identity_perm)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"generator index {i} out of range for {rs.cartan_type}")
    return WeylElement(rs, rs.simple_perms[i - 1])


def reflection(rs: RootSystem, alpha) -> WeylElement:
    """Reflection in a positive root, as a group element."""
    return WeylElement(rs, rs.reflection_perm(rs.positive_index(alpha)))


def from_word(rs: RootSystem, word) -> WeylElement:
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w


def parse_word(text: str) -> tuple:
    """Parse "e" or a concatenation like "s1s2s1" into generator indices."""
    text = text.strip()
    if text in ("e", ""):
        return ()
    if not re.fullmatch(r"(s\d+)+", text):
        raise ValueError(f"cannot parse Weyl word {text!r} (expected 'e' or e.g. 's1s2')")
    return tuple(int(m) for m in re.findall(r"s(\d+)", text))


def format_word(word) -> str:
    return "".join(f"s{i}" for i in word) if word else "e"


def min_coset_rep(w: WeylElement, parabolic: ParabolicSubset) -> WeylElement:
    """Minimal-length element of the coset w*W_J."""
    rs = w.rs
    rs.check_parabolic(parabolic)
    while True:
        j = next((j for j in parabolic.indices if w.is_right_descent(j)), None)
        if j is None:
            return w
        w = w * simple_reflection(rs, j)


_longest_cache = WeakKeyDictionary()


def longest_element(rs: RootSystem, parabolic: ParabolicSubset) -> WeylElement:
    """Longest element of the standard parabolic subgroup, by greedy ascent."""
    rs.check_parabolic(parabolic)
    per_rs = _longest_cache.setdefault(rs, {})
    w = per_rs.get(parabolic.indices)
    if w is None:
        w = identity(rs)
        while True:
            j = next(
                (j for j in parabolic.indices if not w.is_right_descent(j)), None
            )
            if j is None:
                break
            w = w * simple_reflection(rs, j)
        per_rs[parabolic.indices] = w
    return w


def _check_enumerable(rs, max_order):
    bound = DEFAULT_MAX_WEYL_ORDER if max_order is None else max_order
    order = rs.cartan_type.weyl_order()
    if order > bound:
        raise EnumerationBoundError(
            f"|W({rs.cartan_type})| = {order} exceeds the enumeration bound {bound}; "
            f"pass a larger max_order to force it"
        )


def enumerate_min_reps(rs: RootSystem, parabolic: ParabolicSubset, max_order=None):
    """All minimal coset representatives for W/W_J, graded by length.

    With the empty parabolic this enumerates the whole Weyl group.  Minimal
    representatives are closed under removing a left descent, so a BFS by
    left multiplication that keeps only representatives finds all of them.
    """
    rs.check_parabolic(parabolic)
    _check_enumerable(rs, max_order)
    inside = parabolic.indices
    e = identity(rs)
    out = [e]
    level = [e]
    seen = {e.perm}
    while level:
        nxt = []
        for u in level:
            lu = u.length
            for i in range(1, rs.rank + 1):
                v = simple_reflection(rs, i) * u
                if v.perm in seen or v.length != lu + 1:
                    continue
                if any(v.is_right_descent(j) for j in inside):
                    continue
                seen.add(v.perm)
                nxt.append(v)
        nxt.sort(key=lambda w: w.word)
        out.extend(nxt)
        level = nxt
    return out


def enumerate_subgroup(rs: RootSystem, parabolic: ParabolicSubset, max_order=None):
    """All elements of the standard parabolic subgroup W_J, graded by length."""
    rs.check_parabolic(parabolic)
    bound = DEFAULT_MAX_WEYL_ORDER if max_order is None else max_order
    e = identity(rs)
    out = [e]
    level = [e]
    seen = {e.perm}
    while level:
        nxt = []
        for u in level:
            lu = u.length
            for j in parabolic.indices:
                v = simple_reflection(rs, j) * u
                if v.perm in seen or v.length != lu + 1:
                    continue
                seen.add(v.perm)
                nxt.append(v)
        if len(seen) > bound:
            raise EnumerationBoundError(
                f"W_J for J={parabolic} exceeds the enumeration bound {bound}"
            )
        nxt.sort(key=lambda w: w.word)
        out.extend(nxt)
        level = nxt
    return out
