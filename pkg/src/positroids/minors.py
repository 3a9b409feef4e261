"""Single-element contraction and restriction of positroids.

Both minors act directly on the decorated permutation through a walk around
the cycle that re-routes images past the chosen element j, and on the
Grassmann necklace through an entrywise swap formula.  The two routes agree:
the necklace of the permutation-level minor equals the necklace-level minor.

Contraction walks clockwise from j+1 carrying a displaced image; restriction
walks counterclockwise from j-1.  Newly created fixed points are loops (+1)
under contraction and coloops (-1) under restriction: contraction removes j
from the ground set's bases so a re-routed point lands outside every basis,
while restriction preserves rank so the point must stay inside all of them.

Degenerate inputs (contracting a loop, deleting a coloop) have no positroid
minor of the expected rank on the same ground set; by convention they return
the identity permutation with all fixed points colored +1, flagged degenerate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    DecoratedPermutation,
    GrassmannNecklace,
    PreconditionError,
    Subset,
    _check_element,
    cyclic_lt,
    format_perm,
    gale_extremum,
    in_cyclic_interval,
    necklace_of,
    perm_to_obj,
    pred,
    succ,
)


class MinorKind(enum.Enum):
    CONTRACTION = "contraction"
    RESTRICTION = "restriction"


class CaseLabel(enum.Enum):
    """Label of one commuting square in a minor trace.

    Contraction: Case1 is the square at j itself, Case2 the untouched region
    past the preimage of j, Case3 the terminal square at that preimage, and
    Case4a/4b/4c split the walked region (new fixed point, pass-through,
    carry).  The R- labels are the mirrored restriction cases.
    """

    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4A = "Case4a"
    CASE4B = "Case4b"
    CASE4C = "Case4c"
    R_START = "R-start"
    R_PASS = "R-pass"
    R_END = "R-end"
    R_A = "R-a"
    R_B = "R-b"
    R_C = "R-c"


def _require_nonloop(necklace: GrassmannNecklace, j: int) -> None:
    # j is a loop exactly when it is missing from its own entry
    if j not in necklace.entry(j):
        raise PreconditionError(f"{j} is a loop; the contracted necklace is undefined")


def _require_noncoloop(necklace: GrassmannNecklace, j: int) -> None:
    # j is a coloop exactly when it survives into the entry after its own
    if j in necklace.entry(j + 1):
        raise PreconditionError(f"{j} is a coloop; the restricted necklace is undefined")


def contraction_swap(necklace: GrassmannNecklace, j: int, a: int) -> int:
    """Element of I_a that j replaces in the contracted entry K_a.

    Equals j itself when j already sits in I_a (the entry is unchanged);
    otherwise it is the largest element of I_a minus I_j in the shifted
    order starting at a.  Requires j not a loop.
    """
    _check_element(j, necklace.n)
    _check_element(a, necklace.n)
    _require_nonloop(necklace, j)
    entry = necklace.entry(a)
    if j in entry:
        return j
    return gale_extremum(entry - necklace.entry(j), a, "max")


def restriction_swap(necklace: GrassmannNecklace, j: int, a: int) -> int:
    """Element that replaces j in the restricted entry K_a.

    Equals j itself when j is absent from I_a (the entry is unchanged);
    otherwise it is the smallest element of I_{j+1} minus I_a in the shifted
    order starting at a.  Requires j not a coloop.
    """
    _check_element(j, necklace.n)
    _check_element(a, necklace.n)
    _require_noncoloop(necklace, j)
    entry = necklace.entry(a)
    if j not in entry:
        return j
    return gale_extremum(necklace.entry(j + 1) - entry, a, "min")


def contract_necklace(necklace: GrassmannNecklace, j: int) -> GrassmannNecklace:
    """Entrywise contraction: swap j into every entry.

    The result lives on the same ground set with j present in every entry;
    dropping j from each entry gives the necklace of the contracted matroid
    on the remaining elements.  Requires j not a loop.
    """
    _check_element(j, necklace.n)
    _require_nonloop(necklace, j)
    entries = []
    for a in range(1, necklace.n + 1):
        entry = necklace.entry(a)
        if j in entry:
            entries.append(entry)
        else:
            out = gale_extremum(entry - necklace.entry(j), a, "max")
            entries.append(entry.discard(out).add(j))
    return GrassmannNecklace(tuple(entries))


def restrict_necklace(necklace: GrassmannNecklace, j: int) -> GrassmannNecklace:
    """Entrywise restriction: swap j out of every entry.

    The result lives on the same ground set with j in no entry; it is the
    necklace of the matroid with j deleted.  Requires j not a coloop.
    """
    _check_element(j, necklace.n)
    _require_noncoloop(necklace, j)
    pool = necklace.entry(j + 1)
    entries = []
    for a in range(1, necklace.n + 1):
        entry = necklace.entry(a)
        if j not in entry:
            entries.append(entry)
        else:
            inc = gale_extremum(pool - entry, a, "min")
            entries.append(entry.discard(j).add(inc))
    return GrassmannNecklace(tuple(entries))


def _rebuild_colors(p: DecoratedPermutation, mu: list[int], j: int, new_color: int) -> dict[int, int]:
    colors = {}
    for i in range(1, p.n + 1):
        if mu[i - 1] != i:
            continue
        if i == j:
            colors[i] = 1
        elif p.image(i) == i:
            colors[i] = p.color(i)
        else:
            colors[i] = new_color
    return colors


def _walk(p: DecoratedPermutation, j: int, forward: bool) -> list[int]:
    """Image list of the minor permutation for a non-fixed j.

    Carries the displaced image q around the cycle (clockwise when
    contracting, counterclockwise when restricting), swapping it into place
    wherever the branch test fires, until q comes to rest at the preimage
    of j.  Positions outside the walk keep their images.
    """
    n = p.n
    mu = list(p.images)
    mu[j - 1] = j
    q = p.image(j)
    a = succ(j, n) if forward else pred(j, n)
    while p.image(a) != j:
        pa = p.image(a)
        if forward:
            t = succ(a, n)
            branch = q == a or (cyclic_lt(q, pa, t, n) and cyclic_lt(pa, j, t, n))
        else:
            branch = q == a or (cyclic_lt(pa, q, a, n) and cyclic_lt(j, pa, a, n))
        if branch:
            mu[a - 1] = q
            q = pa
        a = succ(a, n) if forward else pred(a, n)
    mu[a - 1] = q
    return mu


def is_degenerate(p: DecoratedPermutation, j: int, kind: MinorKind) -> bool:
    """True when the minor falls back to the identity convention."""
    if p.image(j) != j:
        return False
    bad = 1 if kind is MinorKind.CONTRACTION else -1
    return p.color(j) == bad


def contract(p: DecoratedPermutation, j: int) -> DecoratedPermutation:
    """Contract element j of the positroid of p.

    The result lives on the same ground set with j turned into a loop; its
    bases are the bases of p through j, with j removed.  Contracting a
    coloop just recolors it.  Contracting a loop is degenerate and returns
    the identity with all fixed points +1.
    """
    _check_element(j, p.n)
    if p.image(j) == j:
        if p.color(j) == -1:
            return p.with_color(j, 1)
        return DecoratedPermutation.identity(p.n, 1)
    mu = _walk(p, j, forward=True)
    return DecoratedPermutation.of(tuple(mu), _rebuild_colors(p, mu, j, 1))


def restrict(p: DecoratedPermutation, j: int) -> DecoratedPermutation:
    """Delete element j of the positroid of p.

    The result lives on the same ground set with j turned into a loop; its
    bases are the bases of p avoiding j.  Deleting a loop changes nothing.
    Deleting a coloop is degenerate and returns the identity with all fixed
    points +1.
    """
    _check_element(j, p.n)
    if p.image(j) == j:
        if p.color(j) == 1:
            return p
        return DecoratedPermutation.identity(p.n, 1)
    mu = _walk(p, j, forward=False)
    return DecoratedPermutation.of(tuple(mu), _rebuild_colors(p, mu, j, -1))


@dataclass(frozen=True)
class MinorResult:
    perm: DecoratedPermutation
    degenerate: bool


def apply_minor(p: DecoratedPermutation, j: int, kind: MinorKind) -> MinorResult:
    """Contract or restrict, reporting whether the convention fallback fired."""
    op = contract if kind is MinorKind.CONTRACTION else restrict
    return MinorResult(op(p, j), is_degenerate(p, j, kind))


def classify_square(
    p: DecoratedPermutation,
    necklace: GrassmannNecklace,
    j: int,
    a: int,
    kind: MinorKind = MinorKind.CONTRACTION,
) -> CaseLabel:
    """Label the commuting square at position a of the minor trace at j.

    The necklace must be necklace_of(p), passed in so repeated calls do not
    recompute it.  Requires j not fixed (fixed j has no walk to classify).
    """
    n = p.n
    _check_element(j, n)
    _check_element(a, n)
    if p.image(j) == j:
        raise PreconditionError(f"{j} is a fixed point; there is no walk to classify")
    inv_j = p.inverse()[j - 1]
    if kind is MinorKind.CONTRACTION:
        if a == j:
            return CaseLabel.CASE1
        if a == inv_j:
            return CaseLabel.CASE3
        if in_cyclic_interval(a, inv_j, j, n):
            return CaseLabel.CASE2
        t = succ(a, n)
        if cyclic_lt(j, contraction_swap(necklace, j, a), t, n):
            return CaseLabel.CASE4A
        if cyclic_lt(j, p.image(a), t, n):
            return CaseLabel.CASE4B
        return CaseLabel.CASE4C
    if a == j:
        return CaseLabel.R_START
    if a == inv_j:
        return CaseLabel.R_END
    if in_cyclic_interval(a, j, inv_j, n):
        return CaseLabel.R_PASS
    if restriction_swap(necklace, j, succ(a, n)) == a:
        return CaseLabel.R_A
    if cyclic_lt(p.image(a), j, a, n):
        return CaseLabel.R_B
    return CaseLabel.R_C


@dataclass(frozen=True)
class SquareRow:
    """One column of a minor trace: the square between positions a and a+1."""

    a: int
    entry: Subset
    minor_entry: Subset
    image: int
    minor_image: int
    swap: int
    case: CaseLabel


@dataclass(frozen=True)
class MinorTrace:
    kind: MinorKind
    j: int
    source: DecoratedPermutation
    result: DecoratedPermutation
    rows: tuple[SquareRow, ...]


def trace_minor(p: DecoratedPermutation, j: int, kind: MinorKind) -> MinorTrace:
    """Full square-by-square account of a minor at a non-fixed j.

    Row a records the original entry I_a and image, the minor entry K_a and
    image, the swapped element bridging I_a to K_a, and the case label.  The
    minor images read off the rows reproduce contract(p, j) or restrict(p, j)
    exactly, and consecutive rows satisfy the necklace step rule.
    """
    _check_element(j, p.n)
    if p.image(j) == j:
        raise PreconditionError(f"{j} is a fixed point; there is no walk to trace")
    necklace = necklace_of(p)
    if kind is MinorKind.CONTRACTION:
        minor_necklace = contract_necklace(necklace, j)
        result = contract(p, j)
        swap = contraction_swap
    else:
        minor_necklace = restrict_necklace(necklace, j)
        result = restrict(p, j)
        swap = restriction_swap
    rows = tuple(
        SquareRow(
            a,
            necklace.entry(a),
            minor_necklace.entry(a),
            p.image(a),
            result.image(a),
            swap(necklace, j, a),
            classify_square(p, necklace, j, a, kind),
        )
        for a in range(1, p.n + 1)
    )
    return MinorTrace(kind, j, p, result, rows)


def _cell(s: Subset) -> str:
    if len(s) == 0:
        return "{}"
    if s.n <= 9:
        return "".join(str(e) for e in s.members)
    return ",".join(str(e) for e in s.members)


def render_trace(trace: MinorTrace) -> str:
    """Plain-text diagram of a trace.

    Four rows: original entries with their images on the arrows, the swapped
    elements, minor entries with minor images on the arrows, case labels.
    The final arrow wraps around to the first column.
    """
    rows = trace.rows
    tops = [_cell(r.entry) for r in rows]
    bots = [_cell(r.minor_entry) for r in rows]
    top_arr = [f"-{r.image}->" for r in rows]
    bot_arr = [f"-{r.minor_image}->" for r in rows]
    swaps = [str(r.swap) for r in rows]
    cases = [r.case.value for r in rows]
    widths = [max(len(t), len(b), len(s), len(c)) for t, b, s, c in zip(tops, bots, swaps, cases)]
    arrows = [max(len(t), len(b)) for t, b in zip(top_arr, bot_arr)]

    def line(cells, arr=None):
        parts = []
        for i, c in enumerate(cells):
            parts.append(c.center(widths[i]))
            parts.append((arr[i] if arr else "").center(arrows[i]))
        return " ".join(parts).rstrip()

    header = (
        f"{trace.kind.value} at j={trace.j}: "
        f"{format_perm(trace.source)} => {format_perm(trace.result)}"
    )
    return "\n".join(
        [header, line(tops, top_arr), line(swaps), line(bots, bot_arr), line(cases)]
    )


def trace_to_obj(trace: MinorTrace) -> dict:
    return {
        "kind": trace.kind.value,
        "j": trace.j,
        "source": perm_to_obj(trace.source),
        "result": perm_to_obj(trace.result),
        "rows": [
            {
                "a": r.a,
                "entry": list(r.entry.members),
                "minor_entry": list(r.minor_entry.members),
                "image": r.image,
                "minor_image": r.minor_image,
                "swap": r.swap,
                "case": r.case.value,
            }
            for r in trace.rows
        ],
    }
