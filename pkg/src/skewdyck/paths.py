"""Brute-force enumeration of skew Dyck path families.

Ground truth for everything else in the package: words over typed steps are
generated depth-first, filtered by the forbidden-adjacency rules, and
aggregated into exact count tables refined by length, end level, last-step
class and colored-edge count.

Families:

* ``bounded``   - up / down-black / down-red steps, level >= 0 everywhere,
                  the pairs (up, red) and (red, up) forbidden.
* ``dual``      - up-black / up-blue / down steps, level >= 0 everywhere,
                  the pairs (down, blue) and (blue, down) forbidden.
* ``unbounded`` - same steps and rules as ``bounded`` but the level may go
                  negative.

Last-step classes are named after the step that leads into a state:
``f``/``g``/``h`` = up / down-black / down-red for the primal families,
``a``/``b``/``c`` = up-black / down / up-blue for the dual family.  The
empty path sits in the ``f`` (resp. ``a``) class, consistent with the seed
of the level recursions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import WPoly

BRUTE_FORCE_CAP = 16

BOUNDED = "bounded"
DUAL = "dual"
UNBOUNDED = "unbounded"

FAMILIES = (BOUNDED, DUAL, UNBOUNDED)

# step letters, in canonical (lexicographic generation) order
_PRIMAL_STEPS = ("U", "D", "R")  # up, down-black, down-red
_DUAL_STEPS = ("u", "d", "B")  # up-black, down, up-blue


@dataclass(frozen=True)
class FamilySpec:
    name: str
    steps: tuple  # canonical order
    incr: dict  # step -> level increment
    forbidden: frozenset  # adjacent (prev, next) pairs
    classes: tuple  # class label per step, same order as steps
    empty_class: str
    colored: str  # the marked step (red / blue)
    floor: bool  # prefix levels must stay >= 0


_SPECS = {
    BOUNDED: FamilySpec(
        name=BOUNDED,
        steps=_PRIMAL_STEPS,
        incr={"U": 1, "D": -1, "R": -1},
        forbidden=frozenset({("U", "R"), ("R", "U")}),
        classes=("f", "g", "h"),
        empty_class="f",
        colored="R",
        floor=True,
    ),
    DUAL: FamilySpec(
        name=DUAL,
        steps=_DUAL_STEPS,
        incr={"u": 1, "d": -1, "B": 1},
        forbidden=frozenset({("d", "B"), ("B", "d")}),
        classes=("a", "b", "c"),
        empty_class="a",
        colored="B",
        floor=True,
    ),
    UNBOUNDED: FamilySpec(
        name=UNBOUNDED,
        steps=_PRIMAL_STEPS,
        incr={"U": 1, "D": -1, "R": -1},
        forbidden=frozenset({("U", "R"), ("R", "U")}),
        classes=("f", "g", "h"),
        empty_class="f",
        colored="R",
        floor=False,
    ),
}


def family_spec(family):
    try:
        return _SPECS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass(frozen=True)
class PathWord:
    """A finite sequence of typed steps in one of the three families."""

    steps: tuple
    family: str

    def __post_init__(self):
        spec = family_spec(self.family)
        for s in self.steps:
            if s not in spec.steps:
                raise ValueError(f"step {s!r} not in family {self.family}")

    def __len__(self):
        return len(self.steps)

    @property
    def end_level(self):
        spec = family_spec(self.family)
        return sum(spec.incr[s] for s in self.steps)

    @property
    def last_class(self):
        spec = family_spec(self.family)
        if not self.steps:
            return spec.empty_class
        return spec.classes[spec.steps.index(self.steps[-1])]

    @property
    def colored_count(self):
        spec = family_spec(self.family)
        return sum(1 for s in self.steps if s == spec.colored)

    def word(self):
        return "".join(self.steps)


def is_valid(word):
    """Check the forbidden-adjacency rules and (where required) the level floor.

    The empty path lives in the up-step layer, so the adjacency rules treat
    the start of a word as if an up step preceded it.  This only bites for
    the unbounded family (an initial red step is excluded, matching the
    state diagram's seed); in the floored families an initial red step is
    already below the axis.
    """
    spec = family_spec(word.family)
    level = 0
    prev = spec.steps[0]
    for s in word.steps:
        if prev is not None and (prev, s) in spec.forbidden:
            return False
        level += spec.incr[s]
        if spec.floor and level < 0:
            return False
        prev = s
    return True


def _check_cap(n, cap):
    if n > cap:
        raise ValueError(f"length {n} exceeds the brute-force cap {cap}")


def enumerate_paths(family, n, end_level=None, cap=BRUTE_FORCE_CAP):
    """All valid words of length n, in lexicographic step order."""
    _check_cap(n, cap)
    spec = family_spec(family)
    out = []
    steps = []

    def rec(level, prev, remaining):
        if remaining == 0:
            if end_level is None or level == end_level:
                out.append(PathWord(tuple(steps), family))
            return
        for s in spec.steps:
            if (prev, s) in spec.forbidden:
                continue
            nl = level + spec.incr[s]
            if spec.floor and nl < 0:
                continue
            if end_level is not None and abs(nl - end_level) > remaining - 1:
                continue
            steps.append(s)
            rec(nl, s, remaining - 1)
            steps.pop()

    rec(0, spec.steps[0], n)
    return out


class CountTable:
    """Exact counts indexed by (length, end level, last-step class, color count).

    ``count(n, j, cls=None, k=None)`` sums over any index passed as None.
    """

    def __init__(self, family, max_length):
        self.family = family
        self.max_length = max_length
        self.entries = {}

    def add(self, n, j, cls, k, amount=1):
        key = (n, j, cls, k)
        self.entries[key] = self.entries.get(key, 0) + amount

    def count(self, n, j, cls=None, k=None):
        total = 0
        for (en, ej, ec, ek), v in self.entries.items():
            if en != n or ej != j:
                continue
            if cls is not None and ec != cls:
                continue
            if k is not None and ek != k:
                continue
            total += v
        return total

    def wpoly(self, n, j, cls=None):
        """Counts at (n, j) as a polynomial in the color marker w."""
        by_k = {}
        for (en, ej, ec, ek), v in self.entries.items():
            if en == n and ej == j and (cls is None or ec == cls):
                by_k[ek] = by_k.get(ek, 0) + v
        if not by_k:
            return WPoly()
        top = max(by_k)
        return WPoly([Fraction(by_k.get(k, 0)) for k in range(top + 1)])

    def levels(self, n):
        return sorted({ej for (en, ej, _, _) in self.entries if en == n})

    def coefficients(self, j, cls=None, k=None):
        """[count(0, j), count(1, j), ...] up to max_length."""
        return [self.count(n, j, cls=cls, k=k) for n in range(self.max_length + 1)]


def count_table(family, max_length, cap=BRUTE_FORCE_CAP):
    """Full refined table from depth-first enumeration (no words stored)."""
    _check_cap(max_length, cap)
    spec = family_spec(family)
    table = CountTable(family, max_length)
    cls_of = dict(zip(spec.steps, spec.classes))

    def rec(n, level, prev, cls, reds):
        table.add(n, level, cls, reds)
        if n == max_length:
            return
        for s in spec.steps:
            if (prev, s) in spec.forbidden:
                continue
            nl = level + spec.incr[s]
            if spec.floor and nl < 0:
                continue
            rec(n + 1, nl, s, cls_of[s], reds + (1 if s == spec.colored else 0))

    rec(0, 0, spec.steps[0], spec.empty_class, 0)
    return table


_GLYPHS = {"U": "/", "D": "\\", "R": "r", "u": "/", "B": "b", "d": "\\"}


def render_ascii(word):
    """Deterministic grid rendering; colored steps get their own glyph."""
    spec = family_spec(word.family)
    levels = [0]
    for s in word.steps:
        levels.append(levels[-1] + spec.incr[s])
    lo, hi = min(levels), max(levels)
    if not word.steps:
        return "-"
    height = hi - lo
    grid = [[" "] * len(word.steps) for _ in range(max(height, 1))]
    for i, s in enumerate(word.steps):
        row_level = max(levels[i], levels[i + 1])  # the cell the edge occupies
        row = hi - row_level
        grid[row][i] = _GLYPHS[s]
    lines = ["".join(r).rstrip() for r in grid]
    baseline = "-" * len(word.steps)
    return "\n".join(lines + [baseline])


def reverse_dual(word):
    """Reversal duality: a bounded primal word ending at level 0 maps to a
    dual word by reversing and swapping step roles (U<->d, D<->u, R->B)."""
    if word.family != BOUNDED:
        raise ValueError("reverse_dual expects a bounded primal word")
    swap = {"U": "d", "D": "u", "R": "B"}
    return PathWord(tuple(swap[s] for s in reversed(word.steps)), DUAL)
