"""Arc presentations: validation, symmetries, dual, and the lift-pair search."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class InvalidPresentationError(ValueError):
    """Raised when a list of arcs is not a single-component arc presentation.

    ``problems`` lists one message per violated invariant.
    """

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class Arc(NamedTuple):
    page: int
    lo: int
    hi: int

    @property
    def bindings(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def other_end(self, b: int) -> int:
        return self.hi if b == self.lo else self.lo


def find_problems(arcs: Sequence[Arc]) -> list[str]:
    """Return every invariant violation of ``arcs`` (empty when valid)."""
    problems = []
    n = len(arcs)
    if n < 2:
        return [f"need at least 2 arcs, got {n}"]
    for idx, a in enumerate(arcs):
        if not 1 <= a.page <= n:
            problems.append(f"arc {idx}: page {a.page} outside 1..{n}")
        if not a.lo < a.hi:
            problems.append(f"arc {idx}: binding ({a.lo}, {a.hi}) needs lo < hi")
        for b in (a.lo, a.hi):
            if not 1 <= b <= n:
                problems.append(f"arc {idx}: binding index {b} outside 1..{n}")
    seen: dict[int, int] = {}
    for idx, a in enumerate(arcs):
        if a.page in seen:
            problems.append(f"arc {idx}: duplicate page {a.page} (also arc {seen[a.page]})")
        else:
            seen[a.page] = idx
    counts = {b: 0 for b in range(1, n + 1)}
    for a in arcs:
        for b in (a.lo, a.hi):
            counts[b] = counts.get(b, 0) + 1
    for b in sorted(counts):
        if counts[b] != 2:
            problems.append(f"binding index {b} occurs {counts[b]} times, expected 2")
    if problems:
        return problems
    cycles = _count_cycles(arcs)
    if cycles != 1:
        problems.append(f"arcs form {cycles} cycles, expected 1")
    return problems


def _count_cycles(arcs: Sequence[Arc]) -> int:
    parent = {b: b for a in arcs for b in a.bindings}

    def root(b):
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        return b

    for a in arcs:
        parent[root(a.lo)] = root(a.hi)
    return len({root(b) for b in parent})


@dataclass(frozen=True)
class ArcPresentation:
    """A validated arc presentation with ``n`` arcs.

    Arcs keep their input order; ``n`` is both the number of pages and
    the number of binding indices.
    """

    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(Arc(*map(int, a)) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        problems = find_problems(arcs)
        if problems:
            raise InvalidPresentationError(problems)

    @property
    def n(self) -> int:
        return len(self.arcs)

    def arc_on_page(self, page: int) -> Arc:
        for a in self.arcs:
            if a.page == page:
                return a
        raise KeyError(page)

    def arcs_at(self, b: int) -> tuple[Arc, Arc]:
        """The two arcs meeting binding index ``b``, ordered by page."""
        found = sorted((a for a in self.arcs if b in a.bindings), key=lambda a: a.page)
        return found[0], found[1]

    def key(self) -> tuple[tuple[int, int, int], ...]:
        """Canonical form: arcs sorted as (page, lo, hi) triples."""
        return tuple(sorted(self.arcs))

    def canonical(self) -> "ArcPresentation":
        return ArcPresentation(self.key())

    def cycle(self) -> list[tuple[int, Arc]]:
        """Walk the knot once: ``(start binding, arc)`` pairs in order.

        The walk starts at binding 1 along its lower-page arc.
        """
        start = 1
        arc = self.arcs_at(start)[0]
        out = []
        b = start
        while True:
            out.append((b, arc))
            b = arc.other_end(b)
            if b == start:
                return out
            first, second = self.arcs_at(b)
            arc = second if first == arc else first


def validate(arcs: Iterable) -> ArcPresentation:
    """Build an :class:`ArcPresentation`, raising with every violated invariant."""
    return ArcPresentation(tuple(Arc(*a) for a in arcs))


def dual(ap: ArcPresentation) -> ArcPresentation:
    """Exchange the roles of pages and binding indices.

    Binding ``b`` becomes the arc on page ``b`` whose bindings are the
    pages of the two arcs meeting at ``b``. Applying it twice is the
    identity.
    """
    arcs = []
    for b in range(1, ap.n + 1):
        p, q = ap.arcs_at(b)
        arcs.append(Arc(b, p.page, q.page))
    return ArcPresentation(tuple(arcs))


def rotate_pages(ap: ArcPresentation, r: int = 1) -> ArcPresentation:
    n = ap.n
    return ArcPresentation(tuple(Arc((a.page - 1 + r) % n + 1, a.lo, a.hi) for a in ap.arcs))


def reverse_pages(ap: ArcPresentation) -> ArcPresentation:
    n = ap.n
    return ArcPresentation(tuple(Arc(n + 1 - a.page, a.lo, a.hi) for a in ap.arcs))


def reverse_bindings(ap: ArcPresentation) -> ArcPresentation:
    n = ap.n
    return ArcPresentation(tuple(Arc(a.page, n + 1 - a.hi, n + 1 - a.lo) for a in ap.arcs))


def symmetry_orbit(ap: ArcPresentation) -> list[ArcPresentation]:
    """All canonical presentations reachable by the listed symmetries.

    Members are page rotations, page reversal, binding reversal and the
    dual of each combination, deduplicated by canonical form and sorted
    by it, so the result is deterministic. ``ap.canonical()`` is always
    a member.
    """
    seen = {}
    for r in range(ap.n):
        rotated = rotate_pages(ap, r)
        for flip_pages in (False, True):
            a1 = reverse_pages(rotated) if flip_pages else rotated
            for flip_bindings in (False, True):
                a2 = reverse_bindings(a1) if flip_bindings else a1
                for member in (a2, dual(a2)):
                    seen.setdefault(member.key(), member.canonical())
    return [seen[k] for k in sorted(seen)]


class LiftPair(NamedTuple):
    presentation: ArcPresentation
    lifted: Arc  # on page 1, bindings (a, b) with 1 < a < b < n
    partner: Arc  # bindings (b, n)


def lift_pair_in(ap: ArcPresentation) -> LiftPair | None:
    """Check ``ap`` itself (no symmetries) for a liftable arc pair."""
    n = ap.n
    if n < 4:
        return None
    low = ap.arc_on_page(1)
    a, b = low.bindings
    if not 1 < a < b < n:
        return None
    for arc in ap.arcs:
        if arc.bindings == (b, n):
            return LiftPair(ap, low, arc)
    return None


def find_lift_pair(ap: ArcPresentation) -> LiftPair | None:
    """Search the symmetry orbit for an arc ``l`` on page 1 and a partner ``l'``.

    ``l`` has bindings ``(a, b)`` with ``1 < a < b < n`` and ``l'`` has
    bindings ``(b, n)``. Returns ``None`` when no orbit member qualifies,
    which is the expected outcome for presentations of (n+1, n)-torus
    knots and for every presentation with fewer than four arcs.
    """
    if ap.n < 4:
        return None
    for member in symmetry_orbit(ap):
        found = lift_pair_in(member)
        if found is not None:
            return found
    return None


# ------------------------------------------------------------------ meta


@dataclass(frozen=True)
class KnotMeta:
    """Name, crossing number and class of the knot a presentation represents.

    ``knot_class`` is ``"general"``, ``"nonalternating_prime"`` or
    ``"torus"``; ``torus_n`` is set only for the (n+1, n)-torus class.
    """

    name: str
    crossing_number: int
    knot_class: str = "general"
    torus_n: int | None = None

    def __post_init__(self):
        if self.crossing_number < 1:
            raise ValueError("crossing_number must be positive")
        if self.knot_class not in ("general", "nonalternating_prime", "torus"):
            raise ValueError(f"unknown knot class {self.knot_class!r}")
        if self.knot_class == "torus":
            if self.torus_n is None or self.torus_n < 2:
                raise ValueError("torus class needs n >= 2")
            if self.crossing_number != self.torus_n**2 - 1:
                raise ValueError(
                    f"(n+1,n)-torus knot with n={self.torus_n} has crossing number "
                    f"{self.torus_n**2 - 1}, not {self.crossing_number}"
                )
        elif self.torus_n is not None:
            raise ValueError("torus_n is only meaningful for the torus class")

    @classmethod
    def torus(cls, name: str, n: int) -> "KnotMeta":
        return cls(name, n * n - 1, "torus", n)

    @property
    def is_nonalternating_prime(self) -> bool:
        # (n+1, n)-torus knots with n >= 3 are prime and non-alternating
        if self.knot_class == "torus":
            return self.torus_n >= 3
        return self.knot_class == "nonalternating_prime"
