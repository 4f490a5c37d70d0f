"""Total self-maps of a finite state set {0..n-1} and their algebra."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DegreeCapError, DegreeMismatchError
from .stateset import StateSet

# Accident guard on the degree-taking constructors below (identity, cycles,
# singulars, constants, enumeration); raise it for bigger experiments.
# Derived automata (determinizations and the like) are exempt: their state
# counts legitimately grow past any fixed input degree.
MAX_DEGREE = 12


def _check_degree_cap(n: int) -> None:
    if n > MAX_DEGREE:
        raise DegreeCapError(
            f"degree {n} exceeds cap {MAX_DEGREE} "
            "(raise atomata.transformations.MAX_DEGREE to override)"
        )


class Transformation:
    """A total map t: {0..n-1} -> {0..n-1}, stored as the tuple (t(0),...,t(n-1)).

    Values are immutable and hashable; equality is entrywise at equal degree.
    """

    __slots__ = ("n", "map")

    def __init__(self, map: Sequence[int]):
        entries = tuple(map)
        n = len(entries)
        if n < 1:
            raise ValueError("transformation degree must be positive")
        for q in entries:
            if not 0 <= q < n:
                raise ValueError(f"entry {q} out of range for degree {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "map", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Transformation is immutable")

    def __call__(self, q: int) -> int:
        return self.map[q]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Transformation)
            and self.n == other.n
            and self.map == other.map
        )

    def __hash__(self) -> int:
        return hash(self.map)

    def image(self) -> StateSet:
        return StateSet(self.n, self.map)

    def coimage(self) -> StateSet:
        return self.image().complement()

    def rank(self) -> int:
        return len(set(self.map))

    def is_permutation(self) -> bool:
        return self.rank() == self.n

    def __repr__(self) -> str:
        return f"Transformation({list(self.map)})"

    def __str__(self) -> str:
        return notation(self)


def identity(n: int) -> Transformation:
    _check_degree_cap(n)
    return Transformation(range(n))


def make_cycle(n: int, elems: Sequence[int]) -> Transformation:
    """The cycle (i1,...,ik): each listed element maps to the next, others fixed."""
    _check_degree_cap(n)
    elems = list(elems)
    if len(elems) < 2:
        raise ValueError("a cycle needs at least two elements")
    if len(set(elems)) != len(elems):
        raise ValueError(f"cycle elements must be pairwise distinct: {elems}")
    m = list(range(n))
    for i, q in enumerate(elems):
        if not 0 <= q < n:
            raise ValueError(f"cycle element {q} out of range for degree {n}")
        m[q] = elems[(i + 1) % len(elems)]
    return Transformation(m)


def make_transposition(n: int, i: int, j: int) -> Transformation:
    if i == j:
        raise ValueError("a transposition swaps two distinct elements")
    return make_cycle(n, (i, j))


def make_singular(n: int, i: int, j: int) -> Transformation:
    """(i -> j): i maps to j, everything else is fixed.  i == j gives the identity."""
    _check_degree_cap(n)
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"indices ({i},{j}) out of range for degree {n}")
    m = list(range(n))
    m[i] = j
    return Transformation(m)


def make_constant(n: int, j: int) -> Transformation:
    """(Q -> j): every element maps to j."""
    _check_degree_cap(n)
    if not 0 <= j < n:
        raise ValueError(f"index {j} out of range for degree {n}")
    return Transformation([j] * n)


def compose(s: Transformation, t: Transformation) -> Transformation:
    """s ∘ t, the map i ↦ s(t(i))."""
    if s.n != t.n:
        raise DegreeMismatchError(f"degree mismatch: {s.n} vs {t.n}")
    return Transformation(tuple(s.map[q] for q in t.map))


def image(t: Transformation) -> StateSet:
    return t.image()


def coimage(t: Transformation) -> StateSet:
    return t.coimage()


def is_permutation(t: Transformation) -> bool:
    return t.is_permutation()


def apply_to_set(t: Transformation, s: StateSet) -> StateSet:
    """Pointwise image {t(q) : q in s}; the empty set maps to the empty set."""
    if t.n != s.n:
        raise DegreeMismatchError(f"degree mismatch: {t.n} vs {s.n}")
    return StateSet(t.n, (t.map[q] for q in s))


def preimage_of_set(t: Transformation, s: StateSet) -> StateSet:
    """{q : t(q) in s}, the maximal set mapped into s."""
    if t.n != s.n:
        raise DegreeMismatchError(f"degree mismatch: {t.n} vs {s.n}")
    return StateSet(t.n, (q for q in range(t.n) if t.map[q] in s))


def is_preimage(t: Transformation, p: StateSet) -> bool:
    """Whether p = t^{-1}(S) for some S.

    Uses the round-trip identity p = t^{-1}(t(p)), which holds exactly for
    preimage sets; O(n) instead of scanning all 2^n candidate S.
    """
    return preimage_of_set(t, apply_to_set(t, p)) == p


def inverse(t: Transformation) -> Transformation:
    if not t.is_permutation():
        raise ValueError(f"{t} is not a permutation; no inverse")
    m = [0] * t.n
    for q, v in enumerate(t.map):
        m[v] = q
    return Transformation(m)


def decompose_singular_perm(t: Transformation) -> tuple[Transformation, Transformation]:
    """Factor a rank-(n-1) transformation as alpha ∘ pi.

    alpha is singular, pi is a permutation.  Exactly one image value of t is
    hit twice; the larger element of that colliding pair is sent by pi to
    the unique coimage element, and alpha folds it back.  Taking the larger
    element (rather than an arbitrary one) makes the output deterministic.
    """
    n = t.n
    if t.rank() != n - 1:
        raise ValueError(f"rank {t.rank()} != {n - 1}; cannot decompose {t}")
    seen: dict[int, int] = {}
    pair = None
    for q in range(n):
        v = t.map[q]
        if v in seen:
            pair = (seen[v], q)
        else:
            seen[v] = q
    assert pair is not None
    p_j, p_n = pair  # colliding pair, smaller stays in the transversal
    (q_n,) = t.coimage().members()  # unique missing image value
    pi = list(t.map)
    pi[p_n] = q_n
    alpha = make_singular(n, q_n, t.map[p_j])
    return alpha, Transformation(pi)


def notation(t: Transformation) -> str:
    """Standard notation when the map is a cycle, singular, or constant.

    Falls back to the explicit map "[t(0) t(1) ...]".
    """
    n = t.n
    moved = [q for q in range(n) if t.map[q] != q]
    if not moved:
        if n == 1:
            return "(Q->0)"
        return "[" + " ".join(str(v) for v in t.map) + "]"
    if len(set(t.map)) == 1:
        return f"(Q->{t.map[0]})"
    if len(moved) == 1 and t.map[moved[0]] not in moved:
        return f"({moved[0]}->{t.map[moved[0]]})"
    # cycle check: follow from the smallest moved element
    start = moved[0]
    cyc = [start]
    q = t.map[start]
    while q != start and len(cyc) <= n:
        cyc.append(q)
        q = t.map[q]
    if q == start and sorted(cyc) == sorted(moved):
        return "(" + ",".join(str(x) for x in cyc) + ")"
    return "[" + " ".join(str(v) for v in t.map) + "]"


def all_transformations(n: int) -> Iterable[Transformation]:
    """All n^n transformations of degree n, in lexicographic map order."""
    import itertools

    _check_degree_cap(n)
    for m in itertools.product(range(n), repeat=n):
        yield Transformation(m)
