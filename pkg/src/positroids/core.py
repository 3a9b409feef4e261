"""Positroid combinatorics on the cyclically ordered ground set {1, ..., n}.

A positroid can be recorded in three interchangeable forms:

* a decorated permutation: a permutation of {1, ..., n} whose fixed points
  each carry a color +1 or -1,
* a Grassmann necklace: a cyclic sequence I_1, ..., I_n of k-subsets obeying
  a step rule (I_{i+1} is I_i with i swapped out, or I_i unchanged),
* the explicit family of its bases.

This module holds the value types, the shifted cyclic and Gale orders, the
bijection between decorated permutations and necklaces, and basis enumeration
from a necklace via Gale bounds.  Everything is an immutable value and every
function is pure.  Ground sets are capped at 64 elements so subsets fit in a
single machine word.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

MAX_GROUND_SET = 64


class PositroidError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(PositroidError, ValueError):
    """Malformed or inconsistent input data."""


class PreconditionError(PositroidError, ValueError):
    """Structurally valid input outside an operation's domain."""


class InvalidNecklaceError(ValidationError):
    """A subset sequence that is not a Grassmann necklace.

    Carries the full list of violations, not just the first one found.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"not a Grassmann necklace: {lines}")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"ground set size must be a positive integer, got {n!r}")
    if n > MAX_GROUND_SET:
        raise ValidationError(f"ground set size {n} exceeds the cap of {MAX_GROUND_SET}")


def _check_element(i: int, n: int, what: str = "element") -> None:
    if not isinstance(i, int) or not 1 <= i <= n:
        raise ValidationError(f"{what} {i!r} is out of range 1..{n}")


def succ(i: int, n: int) -> int:
    """Clockwise neighbor of i on the n-cycle (n wraps to 1)."""
    return i % n + 1


def pred(i: int, n: int) -> int:
    """Counterclockwise neighbor of i on the n-cycle (1 wraps to n)."""
    return (i - 2) % n + 1


def cyclic_key(x: int, t: int, n: int) -> int:
    """Rank of x in the order t < t+1 < ... < t-1, as an int in 0..n-1."""
    return (x - t) % n


def cyclic_lt(a: int, b: int, t: int, n: int) -> bool:
    """Strict comparison in the shifted cyclic order starting at t.

    The order reads t < t+1 < ... < n < 1 < ... < t-1, so every element is
    comparable and t is the minimum.
    """
    _check_n(n)
    for v, what in ((a, "left operand"), (b, "right operand"), (t, "start")):
        _check_element(v, n, what)
    return (a - t) % n < (b - t) % n


@dataclass(frozen=True)
class Subset:
    """Subset of {1, ..., n}, stored as a bitmask (bit i-1 holds element i)."""

    n: int
    mask: int

    def __post_init__(self):
        _check_n(self.n)
        if not isinstance(self.mask, int) or self.mask < 0 or self.mask >> self.n:
            raise ValidationError(f"mask {self.mask!r} does not fit in a {self.n}-element ground set")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "Subset":
        _check_n(n)
        mask = 0
        for e in elements:
            _check_element(e, n, "element")
            mask |= 1 << (e - 1)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "Subset":
        _check_n(n)
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def __contains__(self, e: int) -> bool:
        return isinstance(e, int) and 1 <= e <= self.n and bool(self.mask >> (e - 1) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def add(self, e: int) -> "Subset":
        _check_element(e, self.n)
        return Subset(self.n, self.mask | 1 << (e - 1))

    def discard(self, e: int) -> "Subset":
        _check_element(e, self.n)
        return Subset(self.n, self.mask & ~(1 << (e - 1)))

    def _same_ground(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected a Subset, got {type(other).__name__}")
        if other.n != self.n:
            raise ValidationError(f"mixed ground sets: n={self.n} vs n={other.n}")

    def __or__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.n, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.n, self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.n, self.mask & ~other.mask)

    def issubset(self, other: "Subset") -> bool:
        self._same_ground(other)
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return f"Subset.of({self.n}, {list(self.members)})"

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.members) + "}"


def _gale_key_direct(n: int, t: int, mask: int) -> tuple[int, ...]:
    return tuple(sorted((p + 1 - t) % n for p in range(n) if mask >> p & 1))


@lru_cache(maxsize=None)
def _gale_key_cached(n: int, t: int, mask: int) -> tuple[int, ...]:
    return _gale_key_direct(n, t, mask)


def _gale_key(n: int, t: int, mask: int) -> tuple[int, ...]:
    # Small ground sets dominate (exhaustive sweeps re-ask for the same keys
    # constantly); beyond 16 elements the cache would just balloon.
    if n <= 16:
        return _gale_key_cached(n, t, mask)
    return _gale_key_direct(n, t, mask)


def gale_leq(a: Subset, b: Subset, t: int) -> bool:
    """Gale partial order at starting point t: componentwise <=_t comparison.

    Both subsets are sorted increasingly in the shifted order starting at t
    and compared position by position.  Only equal-size subsets of the same
    ground set are comparable.
    """
    if not isinstance(a, Subset) or not isinstance(b, Subset):
        raise TypeError("gale_leq expects Subset operands")
    a._same_ground(b)
    _check_element(t, a.n, "start")
    ka = _gale_key(a.n, t, a.mask)
    kb = _gale_key(b.n, t, b.mask)
    if len(ka) != len(kb):
        raise ValidationError(f"Gale order compares equal-size subsets, got sizes {len(ka)} and {len(kb)}")
    return all(x <= y for x, y in zip(ka, kb))


def gale_extremum(d: Subset, t: int, direction: str = "max") -> int:
    """Largest or smallest member of d in the shifted order starting at t."""
    if direction not in ("max", "min"):
        raise ValidationError(f"direction must be 'max' or 'min', got {direction!r}")
    _check_element(t, d.n, "start")
    if len(d) == 0:
        raise PreconditionError("the empty set has no Gale extremum")
    pick = max if direction == "max" else min
    return pick(d.members, key=lambda x: (x - t) % d.n)


def in_cyclic_interval(x: int, a: int, b: int, n: int) -> bool:
    """True when x lies strictly inside the clockwise open interval (a, b).

    Reading clockwise from a, the interval collects everything after a and
    before b.  Endpoints a and b must differ.
    """
    if a == b:
        raise ValidationError("open cyclic interval needs distinct endpoints")
    return x != a and (x - a) % n < (b - a) % n


@dataclass(frozen=True)
class DecoratedPermutation:
    """Permutation of {1, ..., n} with a +1/-1 color on each fixed point.

    A -1 fixed point marks a coloop (in every basis), a +1 fixed point a loop
    (in no basis).  `images` is the one-line notation; `colors` is a sorted
    tuple of (fixed point, color) pairs covering exactly the fixed points.
    """

    images: tuple[int, ...]
    colors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, images: Iterable[int], colors: Mapping[int, int] | None = None) -> "DecoratedPermutation":
        images = tuple(images)
        n = len(images)
        _check_n(n)
        seen = set()
        for pos, v in enumerate(images, start=1):
            _check_element(v, n, f"image at position {pos}")
            if v in seen:
                raise ValidationError(f"image {v} repeats at position {pos}; not a permutation")
            seen.add(v)
        fixed = {i for i in range(1, n + 1) if images[i - 1] == i}
        colors = dict(colors or {})
        for i, c in colors.items():
            if i not in fixed:
                raise ValidationError(f"color given for {i}, which is not a fixed point")
            if c not in (-1, 1):
                raise ValidationError(f"color of {i} must be +1 or -1, got {c!r}")
        missing = fixed - colors.keys()
        if missing:
            raise ValidationError(f"fixed points {sorted(missing)} are missing colors")
        return cls(images, tuple(sorted(colors.items())))

    @classmethod
    def identity(cls, n: int, color: int = 1) -> "DecoratedPermutation":
        return cls.of(range(1, n + 1), {i: color for i in range(1, n + 1)})

    @property
    def n(self) -> int:
        return len(self.images)

    def image(self, i: int) -> int:
        _check_element(i, self.n)
        return self.images[i - 1]

    def inverse(self) -> tuple[int, ...]:
        """One-line notation of the inverse permutation."""
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return tuple(inv)

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.colors)

    def color(self, i: int) -> int:
        for j, c in self.colors:
            if j == i:
                return c
        raise ValidationError(f"{i} is not a fixed point")

    def with_color(self, i: int, color: int) -> "DecoratedPermutation":
        if color not in (-1, 1):
            raise ValidationError(f"color must be +1 or -1, got {color!r}")
        self.color(i)  # raises when i is not fixed
        updated = {j: c for j, c in self.colors}
        updated[i] = color
        return DecoratedPermutation(self.images, tuple(sorted(updated.items())))

    def __repr__(self) -> str:
        return f"DecoratedPermutation({format_perm(self)!r})"


def loop_coloop_status(p: DecoratedPermutation, i: int) -> str:
    """Classify element i as 'loop', 'coloop', or 'neither'.

    Loops are +1 fixed points, coloops are -1 fixed points; everything else
    is in some basis but not all of them.
    """
    _check_element(i, p.n)
    if p.image(i) != i:
        return "neither"
    return "coloop" if p.color(i) == -1 else "loop"


@dataclass(frozen=True)
class GrassmannNecklace:
    """Cyclic sequence I_1, ..., I_n of k-subsets obeying the step rule.

    The step rule: if i is in I_i then I_{i+1} = (I_i minus i) plus one
    element, otherwise I_{i+1} = I_i.  Indices are cyclic, so entry(n+1) is
    entry(1).  Construct through validate_necklace (or necklace_of) unless
    the sequence is already known to be valid.
    """

    entries: tuple[Subset, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return len(self.entries[0])

    def entry(self, r: int) -> Subset:
        """Entry I_r, with r read cyclically (any integer works)."""
        return self.entries[(r - 1) % self.n]

    def __repr__(self) -> str:
        return f"GrassmannNecklace({format_necklace(self)!r})"


@dataclass(frozen=True)
class NecklaceViolation:
    index: int
    clause: str
    detail: str

    def __str__(self) -> str:
        return f"entry {self.index}: [{self.clause}] {self.detail}"


def necklace_violations(entries: Sequence[Subset]) -> list[NecklaceViolation]:
    """All step-rule and shape violations of a candidate necklace."""
    out = []
    if len(entries) == 0:
        return [NecklaceViolation(0, "shape", "no entries")]
    n = entries[0].n
    for idx, e in enumerate(entries, start=1):
        if not isinstance(e, Subset):
            raise TypeError(f"entry {idx} is not a Subset")
        if e.n != n:
            out.append(NecklaceViolation(idx, "shape", f"ground set n={e.n} differs from n={n}"))
    if out:
        return out
    if len(entries) != n:
        out.append(NecklaceViolation(0, "shape", f"{len(entries)} entries for ground set of size {n}"))
        return out
    k = len(entries[0])
    for idx, e in enumerate(entries, start=1):
        if len(e) != k:
            out.append(NecklaceViolation(idx, "size", f"size {len(e)} differs from size {k} of entry 1"))
    for i in range(1, n + 1):
        cur = entries[i - 1]
        nxt = entries[i % n]
        if i not in cur:
            if nxt != cur:
                out.append(NecklaceViolation(i, "step", f"{i} is absent from I_{i} but I_{succ(i, n)} != I_{i}"))
        else:
            dropped = cur.discard(i)
            if not dropped.issubset(nxt):
                out.append(NecklaceViolation(i, "step", f"I_{succ(i, n)} loses more than element {i} from I_{i}"))
            elif len(nxt - dropped) != 1:
                out.append(NecklaceViolation(i, "step", f"I_{succ(i, n)} must add exactly one element to I_{i} minus {i}"))
    return out


def validate_necklace(entries: Sequence[Subset]) -> GrassmannNecklace:
    """Check the step rule and wrap the entries, or raise with all violations."""
    bad = necklace_violations(entries)
    if bad:
        raise InvalidNecklaceError(bad)
    return GrassmannNecklace(tuple(entries))


def necklace_step(entry: Subset, i: int, image: int) -> Subset:
    """Successor entry under the step rule when the permutation sends i to image."""
    if i not in entry:
        return entry
    return entry.discard(i).add(image)


def necklace_of(p: DecoratedPermutation) -> GrassmannNecklace:
    """Grassmann necklace of a decorated permutation.

    Entry I_r collects the i that arrive from the left reading clockwise
    from r (i strictly before its preimage in the order starting at r),
    together with all -1 fixed points.
    """
    n = p.n
    inv = p.inverse()
    coloop_mask = 0
    for i, c in p.colors:
        if c == -1:
            coloop_mask |= 1 << (i - 1)
    entries = []
    for r in range(1, n + 1):
        mask = coloop_mask
        for i in range(1, n + 1):
            if p.images[i - 1] != i and (i - r) % n < (inv[i - 1] - r) % n:
                mask |= 1 << (i - 1)
        entries.append(Subset(n, mask))
    return GrassmannNecklace(tuple(entries))


def perm_of(necklace: GrassmannNecklace) -> DecoratedPermutation:
    """Decorated permutation of a Grassmann necklace (inverse of necklace_of).

    Read off the steps: when I_{i+1} swaps i for j the permutation sends i
    to j; when the entry repeats, i is a fixed point, colored -1 when i sits
    in I_i (coloop) and +1 otherwise (loop).
    """
    n = necklace.n
    images = [0] * n
    colors = {}
    for i in range(1, n + 1):
        cur = necklace.entry(i)
        nxt = necklace.entry(i + 1)
        if i not in cur:
            images[i - 1] = i
            colors[i] = 1
            continue
        gained = nxt - cur.discard(i)
        if len(gained) != 1:
            raise InvalidNecklaceError([NecklaceViolation(i, "step", "entry does not follow the step rule")])
        j = gained.members[0]
        images[i - 1] = j
        if j == i:
            colors[i] = -1
    return DecoratedPermutation.of(tuple(images), colors)


def bases_of(necklace: GrassmannNecklace) -> "BasisFamily":
    """All k-subsets lying Gale-above every necklace entry.

    H is a basis exactly when I_t <=_t H for each starting point t; the
    necklace entries are the Gale minima of the family they cut out.
    """
    from itertools import combinations

    n, k = necklace.n, necklace.k
    bounds = [_gale_key(n, t, necklace.entry(t).mask) for t in range(1, n + 1)]
    found = []
    for combo in combinations(range(n), k):
        mask = 0
        for p in combo:
            mask |= 1 << p
        ok = True
        for t in range(1, n + 1):
            key = _gale_key(n, t, mask)
            low = bounds[t - 1]
            for x, y in zip(low, key):
                if x > y:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(Subset(n, mask))
    return BasisFamily(n, k, frozenset(found))


@dataclass(frozen=True)
class BasisFamily:
    """Family of k-subsets of {1, ..., n}, the bases of a rank-k matroid.

    A real family is nonempty; the empty value exists only as a sentinel for
    minor operations that kill every basis (build it with BasisFamily.empty).
    """

    n: int
    k: int
    bases: frozenset[Subset]

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> "BasisFamily":
        _check_n(n)
        collected = set()
        k = None
        for s in sets:
            sub = s if isinstance(s, Subset) else Subset.of(n, s)
            if sub.n != n:
                raise ValidationError(f"basis {sub} lives on n={sub.n}, expected n={n}")
            if k is None:
                k = len(sub)
            elif len(sub) != k:
                raise ValidationError(f"basis {sub} has size {len(sub)}, expected {k}")
            collected.add(sub)
        if k is None:
            raise ValidationError("a basis family needs at least one basis")
        return cls(n, k, frozenset(collected))

    @classmethod
    def empty(cls, n: int, k: int) -> "BasisFamily":
        _check_n(n)
        if not 0 <= k <= n:
            raise ValidationError(f"rank {k} out of range for n={n}")
        return cls(n, k, frozenset())

    @property
    def is_empty(self) -> bool:
        return not self.bases

    def sorted_bases(self) -> list[Subset]:
        return sorted(self.bases, key=lambda s: s.members)

    def __contains__(self, s: Subset) -> bool:
        return s in self.bases

    def __len__(self) -> int:
        return len(self.bases)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.sorted_bases())

    def __repr__(self) -> str:
        return f"BasisFamily.of({self.n}, {[list(s.members) for s in self.sorted_bases()]})"


# ---------------------------------------------------------------------------
# Text and object forms.
#
# Decorated permutation: comma-separated images, every fixed point suffixed
# with its sign, e.g. "8,1,4,2,5+,7,3,6".  Necklace: entries joined by
# semicolons, each a comma-separated increasing subset, e.g. "1,2;2,3;1,3".
# Basis families use the necklace separator.  Whitespace is ignored.

_PERM_TOKEN = re.compile(r"(\d+)([+-])?\Z")


def format_perm(p: DecoratedPermutation) -> str:
    toks = []
    for i, v in enumerate(p.images, start=1):
        if v == i:
            toks.append(f"{v}+" if p.color(i) == 1 else f"{v}-")
        else:
            toks.append(str(v))
    return ",".join(toks)


def parse_perm(text: str) -> DecoratedPermutation:
    s = "".join(text.split())
    if not s:
        raise ValidationError("empty decorated permutation")
    toks = s.split(",")
    n = len(toks)
    if n > MAX_GROUND_SET:
        raise ValidationError(f"{n} images exceed the ground set cap of {MAX_GROUND_SET}")
    images = []
    colors = {}
    seen = {}
    for pos, tok in enumerate(toks, start=1):
        m = _PERM_TOKEN.match(tok)
        if not m:
            raise ValidationError(f"token {pos}: {tok!r} is not an image with an optional sign")
        v = int(m.group(1))
        sign = m.group(2)
        if not 1 <= v <= n:
            raise ValidationError(f"token {pos}: image {v} is out of range 1..{n}")
        if v in seen:
            raise ValidationError(f"token {pos}: image {v} already used at token {seen[v]}")
        seen[v] = pos
        if v == pos:
            if sign is None:
                raise ValidationError(f"token {pos}: fixed point {v} needs a + or - sign")
            colors[pos] = 1 if sign == "+" else -1
        elif sign is not None:
            raise ValidationError(f"token {pos}: sign on {v}, which is not a fixed point here")
        images.append(v)
    return DecoratedPermutation.of(tuple(images), colors)


def format_subset(s: Subset) -> str:
    return ",".join(str(e) for e in s.members)


def parse_subset(text: str, n: int) -> Subset:
    s = "".join(text.split())
    if not s:
        return Subset.empty(n)
    try:
        elements = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise ValidationError(f"subset {text!r} has a non-integer entry") from None
    return Subset.of(n, elements)


def format_necklace(necklace: GrassmannNecklace) -> str:
    return ";".join(format_subset(e) for e in necklace.entries)


def parse_necklace(text: str) -> GrassmannNecklace:
    """Parse and validate a semicolon-joined necklace; n is the entry count."""
    s = "".join(text.split())
    parts = s.split(";")
    n = len(parts)
    if n > MAX_GROUND_SET:
        raise ValidationError(f"{n} entries exceed the ground set cap of {MAX_GROUND_SET}")
    entries = []
    for idx, part in enumerate(parts, start=1):
        try:
            entries.append(parse_subset(part, n))
        except ValidationError as e:
            raise ValidationError(f"entry {idx}: {e}") from None
    return validate_necklace(entries)


def format_bases(family: BasisFamily) -> str:
    return ";".join(format_subset(s) for s in family.sorted_bases())


def parse_bases(text: str, n: int | None = None) -> BasisFamily:
    s = "".join(text.split())
    if not s:
        raise ValidationError("empty basis family")
    parts = s.split(";")
    if n is None:
        biggest = 0
        for part in parts:
            for tok in part.split(","):
                if tok:
                    try:
                        biggest = max(biggest, int(tok))
                    except ValueError:
                        raise ValidationError(f"basis list has a non-integer entry {tok!r}") from None
        if biggest == 0:
            raise ValidationError("cannot infer the ground set size; pass n explicitly")
        n = biggest
    return BasisFamily.of(n, [parse_subset(part, n) for part in parts])


def perm_to_obj(p: DecoratedPermutation) -> dict:
    return {
        "n": p.n,
        "perm": list(p.images),
        "col": {str(i): c for i, c in p.colors},
    }


def necklace_to_obj(necklace: GrassmannNecklace) -> dict:
    return {
        "n": necklace.n,
        "k": necklace.k,
        "entries": [list(e.members) for e in necklace.entries],
    }


def bases_to_obj(family: BasisFamily) -> dict:
    return {
        "n": family.n,
        "k": family.k,
        "bases": [list(s.members) for s in family.sorted_bases()],
    }
