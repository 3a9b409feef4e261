"""Brute-force ground truth for minors, plus the exhaustive verifier.

Everything here works on explicit basis families by set arithmetic, with no
reliance on the walk algorithms or the necklace swap formulas, so it serves
as an independent check of both.  Sizes are desk-scale: enumeration walks
all n! * 2^(fixed points) decorated permutations, so n is capped.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product

from .core import (
    BasisFamily,
    DecoratedPermutation,
    GrassmannNecklace,
    PreconditionError,
    Subset,
    ValidationError,
    _check_element,
    _check_n,
    _gale_key,
    bases_of,
    format_perm,
    loop_coloop_status,
    necklace_of,
    necklace_step,
    perm_of,
    succ,
)
from .minors import (
    MinorKind,
    contract,
    contract_necklace,
    contraction_swap,
    is_degenerate,
    restrict,
    restrict_necklace,
    restriction_swap,
)

ENUMERATION_CAP = 10

BOTH_KINDS = frozenset({MinorKind.CONTRACTION, MinorKind.RESTRICTION})


def oracle_contract(family: BasisFamily, j: int) -> BasisFamily:
    """Bases through j, with j removed from each.

    Empty when j is a loop; the sentinel empty family is returned rather
    than raising, since callers probing arbitrary j expect it.
    """
    _check_element(j, family.n)
    kept = frozenset(h.discard(j) for h in family.bases if j in h)
    k = max(family.k - 1, 0)
    if not kept:
        return BasisFamily.empty(family.n, k)
    return BasisFamily(family.n, k, kept)


def oracle_delete(family: BasisFamily, j: int) -> BasisFamily:
    """Bases avoiding j.  Empty (sentinel) when j is a coloop."""
    _check_element(j, family.n)
    kept = frozenset(h for h in family.bases if j not in h)
    if not kept:
        return BasisFamily.empty(family.n, family.k)
    return BasisFamily(family.n, family.k, kept)


def oracle_necklace(family: BasisFamily) -> GrassmannNecklace:
    """Entrywise Gale minimum of the family, one entry per starting point."""
    if family.is_empty:
        raise PreconditionError("the empty family has no necklace")
    n = family.n
    entries = []
    for t in range(1, n + 1):
        best = min(family.bases, key=lambda h: _gale_key(n, t, h.mask))
        entries.append(best)
    return GrassmannNecklace(tuple(entries))


def is_positroid(family: BasisFamily) -> bool:
    """Whether the family is exactly cut out by its own Gale minima."""
    if family.is_empty:
        raise PreconditionError("the empty family is not classified")
    return bases_of(oracle_necklace(family)).bases == family.bases


def check_matroid(family: BasisFamily) -> bool:
    """Basis exchange: for bases A, B and x in A-B some y in B-A fixes A-x+y."""
    if family.is_empty:
        raise PreconditionError("the empty family is not classified")
    masks = frozenset(h.mask for h in family.bases)
    for a in masks:
        for b in masks:
            need = a & ~b
            while need:
                xbit = need & -need
                need ^= xbit
                stripped = a ^ xbit
                free = b & ~a
                found = False
                while free:
                    ybit = free & -free
                    free ^= ybit
                    if stripped | ybit in masks:
                        found = True
                        break
                if not found:
                    return False
    return True


def enumerate_decorated_perms(n: int, cap: int = ENUMERATION_CAP):
    """All decorated permutations of {1..n}, lex by images then colors."""
    _check_n(n)
    if n > cap:
        raise ValidationError(f"n={n} exceeds the enumeration cap of {cap}")
    for images in permutations(range(1, n + 1)):
        fixed = [i for i in range(1, n + 1) if images[i - 1] == i]
        for signs in product((-1, 1), repeat=len(fixed)):
            yield DecoratedPermutation.of(images, dict(zip(fixed, signs)))


@dataclass
class VerificationReport:
    n: int
    kind: str
    instances_checked: int
    degenerate_skipped: int
    mismatches: int
    check_failures: dict[str, int]
    first_failure: str | None
    elapsed: float

    def summary(self) -> str:
        status = "ok" if self.mismatches == 0 else f"FAIL, {self.mismatches} mismatches"
        return (
            f"n={self.n} kind={self.kind}: {self.instances_checked} instances checked, "
            f"{self.degenerate_skipped} degenerate skipped, {status}, {self.elapsed:.2f}s"
        )

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "instances_checked": self.instances_checked,
            "degenerate_skipped": self.degenerate_skipped,
            "mismatches": self.mismatches,
            "check_failures": dict(self.check_failures),
            "first_failure": self.first_failure,
            "elapsed": self.elapsed,
        }


def _check_squares(p, necklace, minor_necklace, result, j, kind):
    """Square commutation along the whole trace.

    Each square must satisfy the step rule, and exactly one of its two
    commuting patterns: the carried swap descends (top image equals the next
    swap, bottom image equals this one, sides flipped for restriction), or
    the square is inert (images equal, swaps equal).
    """
    failures = []
    n = p.n
    for a in range(1, n + 1):
        if necklace_step(minor_necklace.entry(a), a, result.image(a)) != minor_necklace.entry(a + 1):
            failures.append("commutation")
            break
    swap = contraction_swap if kind is MinorKind.CONTRACTION else restriction_swap
    for a in range(1, n + 1):
        here = swap(necklace, j, a)
        there = swap(necklace, j, succ(a, n))
        if kind is MinorKind.CONTRACTION:
            carried = p.image(a) == there and result.image(a) == here
        else:
            carried = p.image(a) == here and result.image(a) == there
        inert = result.image(a) == p.image(a) and here == there
        if carried == inert:
            failures.append("square-pattern")
            break
    return failures


def _verify_instance(p, necklace, family, j, kind):
    """Run every oracle comparison for one (perm, j, kind) instance.

    Returns (degenerate, failure tags).  Degenerate instances only assert
    the identity convention; everything else is checked against the brute
    force route and the structural expectations (j becomes a loop, rank
    drops by one under contraction and holds under restriction).
    """
    failures = []
    n, k = family.n, family.k
    if kind is MinorKind.CONTRACTION:
        result = contract(p, j)
        if is_degenerate(p, j, kind):
            if result != DecoratedPermutation.identity(n, 1):
                failures.append("convention")
            return True, failures
        oracle_family = oracle_contract(family, j)
        result_necklace = necklace_of(result)
        if bases_of(result_necklace).bases != oracle_family.bases:
            failures.append("oracle")
        minor_necklace = contract_necklace(necklace, j)
        through = BasisFamily(n, k, frozenset(h for h in family.bases if j in h))
        if oracle_necklace(through) != minor_necklace:
            failures.append("necklace-formula")
        stripped = GrassmannNecklace(tuple(e.discard(j) for e in minor_necklace.entries))
        if result_necklace != stripped:
            failures.append("necklace-agreement")
        if necklace_of(result.with_color(j, -1)) != minor_necklace:
            failures.append("color-flip")
        if p.image(j) == j:
            if result != p.with_color(j, 1):
                failures.append("convention")
        else:
            failures.extend(_check_squares(p, necklace, minor_necklace, result, j, kind))
        if not is_positroid(oracle_family):
            failures.append("closure")
        if loop_coloop_status(result, j) != "loop" or result_necklace.k != k - 1:
            failures.append("structure")
    else:
        result = restrict(p, j)
        if is_degenerate(p, j, kind):
            if result != DecoratedPermutation.identity(n, 1):
                failures.append("convention")
            return True, failures
        oracle_family = oracle_delete(family, j)
        result_necklace = necklace_of(result)
        if bases_of(result_necklace).bases != oracle_family.bases:
            failures.append("oracle")
        minor_necklace = restrict_necklace(necklace, j)
        avoiding = BasisFamily(n, k, frozenset(h for h in family.bases if j not in h))
        if oracle_necklace(avoiding) != minor_necklace:
            failures.append("necklace-formula")
        if result_necklace != minor_necklace:
            failures.append("necklace-agreement")
        if p.image(j) == j:
            if result != p:
                failures.append("convention")
        else:
            failures.extend(_check_squares(p, necklace, minor_necklace, result, j, kind))
        if not is_positroid(oracle_family):
            failures.append("closure")
        if loop_coloop_status(result, j) != "loop" or result_necklace.k != k:
            failures.append("structure")
    return False, failures


def _sweep(n, kind_values, stride, offset):
    """One worker's share of the sweep: perms whose index hits the offset."""
    kinds = sorted((MinorKind(v) for v in kind_values), key=lambda kk: kk.value)
    instances = 0
    degenerate = 0
    mismatches = 0
    check_failures: dict[str, int] = {}
    first_key = None
    first_msg = None

    def record(key, msg, tags):
        nonlocal mismatches, first_key, first_msg
        mismatches += 1
        for tag in tags:
            check_failures[tag] = check_failures.get(tag, 0) + 1
        if first_key is None or key < first_key:
            first_key = key
            first_msg = msg
    for idx, p in enumerate(enumerate_decorated_perms(n)):
        if idx % stride != offset:
            continue
        necklace = necklace_of(p)
        if perm_of(necklace) != p:
            record((idx, 0, ""), f"n={n} perm={format_perm(p)}: round-trip", ["round-trip"])
        family = bases_of(necklace)
        if oracle_necklace(family) != necklace:
            record((idx, 0, ""), f"n={n} perm={format_perm(p)}: min-recovery", ["min-recovery"])
        for j in range(1, n + 1):
            for kind in kinds:
                skipped, fails = _verify_instance(p, necklace, family, j, kind)
                if skipped:
                    degenerate += 1
                else:
                    instances += 1
                if fails:
                    record(
                        (idx, j, kind.value),
                        f"n={n} perm={format_perm(p)} j={j} kind={kind.value}: {', '.join(fails)}",
                        fails,
                    )
    return {
        "instances": instances,
        "degenerate": degenerate,
        "mismatches": mismatches,
        "check_failures": check_failures,
        "first_key": first_key,
        "first_msg": first_msg,
    }


def _sweep_star(args):
    return _sweep(*args)


def verify_all(n: int, kinds=BOTH_KINDS, jobs: int = 1) -> VerificationReport:
    """Exhaustively compare both minor routes against the oracle for size n.

    Sweeps every decorated permutation of {1..n} and every j, checking the
    permutation walk and the necklace swap formula against brute-force set
    arithmetic, plus round trips, square commutation, positroid closure, and
    the degenerate conventions.  jobs > 1 splits the sweep across processes;
    results are merged deterministically.
    """
    kinds = frozenset(kinds)
    if not kinds or not kinds <= BOTH_KINDS:
        raise ValidationError("kinds must be a nonempty subset of {contraction, restriction}")
    if not isinstance(jobs, int) or jobs < 1:
        raise ValidationError(f"jobs must be a positive integer, got {jobs!r}")
    kind_values = tuple(sorted(kk.value for kk in kinds))
    start = time.perf_counter()
    if jobs == 1:
        parts = [_sweep(n, kind_values, 1, 0)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_star, [(n, kind_values, jobs, off) for off in range(jobs)]))
    elapsed = time.perf_counter() - start
    check_failures: dict[str, int] = {}
    for part in parts:
        for tag, cnt in part["check_failures"].items():
            check_failures[tag] = check_failures.get(tag, 0) + cnt
    firsts = [(part["first_key"], part["first_msg"]) for part in parts if part["first_key"] is not None]
    first_msg = min(firsts)[1] if firsts else None
    return VerificationReport(
        n=n,
        kind="both" if len(kinds) == 2 else next(iter(kinds)).value,
        instances_checked=sum(part["instances"] for part in parts),
        degenerate_skipped=sum(part["degenerate"] for part in parts),
        mismatches=sum(part["mismatches"] for part in parts),
        check_failures=check_failures,
        first_failure=first_msg,
        elapsed=elapsed,
    )
