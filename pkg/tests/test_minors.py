"""Contraction and restriction: walks, necklace formulas, traces, conventions."""

import pytest

from positroids import (
    CaseLabel,
    DecoratedPermutation,
    MinorKind,
    PreconditionError,
    apply_minor,
    bases_of,
    classify_square,
    contract,
    contract_necklace,
    contraction_swap,
    format_necklace,
    format_perm,
    is_degenerate,
    necklace_of,
    necklace_step,
    oracle_contract,
    oracle_delete,
    parse_perm,
    render_trace,
    restrict,
    restrict_necklace,
    restriction_swap,
    trace_minor,
    trace_to_obj,
    validate_necklace,
)

PERM = "6,1,4,8,2,7,3,5"
PERM_NECKLACE = "1,2,3,5;2,3,5,6;1,3,5,6;1,4,5,6;1,5,6,8;1,2,6,8;1,2,7,8;1,2,3,8"

CONTRACT_J = 3
CONTRACT_K = "1,2,3,5;2,3,5,6;1,3,5,6;1,3,5,6;1,3,5,6;1,3,6,8;1,3,7,8;1,2,3,8"
CONTRACT_SWAPS = [3, 3, 3, 4, 8, 2, 2, 3]
CONTRACT_RESULT = "6,1,3+,4+,8,7,2,5"
CONTRACT_CASES = ["Case2", "Case2", "Case1", "Case4a", "Case4c", "Case4c", "Case3", "Case2"]

RESTRICT_J = 5
RESTRICT_K = "1,2,3,6;2,3,6,8;1,3,6,8;1,4,6,8;1,2,6,8;1,2,6,8;1,2,7,8;1,2,3,8"
RESTRICT_SWAPS = [6, 8, 8, 8, 2, 5, 5, 5]
RESTRICT_RESULT = "8,1,4,2,5+,7,3,6"
RESTRICT_CASES = ["R-c", "R-c", "R-b", "R-c", "R-start", "R-pass", "R-pass", "R-end"]


@pytest.fixture(scope="module")
def perm():
    return parse_perm(PERM)


@pytest.fixture(scope="module")
def necklace(perm):
    return necklace_of(perm)


def test_source_necklace(necklace):
    assert format_necklace(necklace) == PERM_NECKLACE


class TestSwaps:
    def test_contraction_swap_row(self, necklace):
        assert [contraction_swap(necklace, CONTRACT_J, a) for a in range(1, 9)] == CONTRACT_SWAPS

    def test_restriction_swap_row(self, necklace):
        assert [restriction_swap(necklace, RESTRICT_J, a) for a in range(1, 9)] == RESTRICT_SWAPS

    def test_contraction_swap_is_j_inside(self, necklace):
        # wherever j already sits in the entry, nothing moves
        for a in range(1, 9):
            if CONTRACT_J in necklace.entry(a):
                assert contraction_swap(necklace, CONTRACT_J, a) == CONTRACT_J

    def test_restriction_swap_is_j_outside(self, necklace):
        for a in range(1, 9):
            if RESTRICT_J not in necklace.entry(a):
                assert restriction_swap(necklace, RESTRICT_J, a) == RESTRICT_J

    def test_swap_preconditions(self):
        loop = necklace_of(DecoratedPermutation.of((1, 3, 2), {1: 1}))
        with pytest.raises(PreconditionError):
            contraction_swap(loop, 1, 2)
        coloop = necklace_of(DecoratedPermutation.of((1, 3, 2), {1: -1}))
        with pytest.raises(PreconditionError):
            restriction_swap(coloop, 1, 2)


class TestNecklaceMinors:
    def test_contract_necklace_golden(self, necklace):
        k = contract_necklace(necklace, CONTRACT_J)
        assert format_necklace(k) == CONTRACT_K
        validate_necklace(k.entries)
        assert all(CONTRACT_J in e for e in k.entries)

    def test_restrict_necklace_golden(self, necklace):
        k = restrict_necklace(necklace, RESTRICT_J)
        assert format_necklace(k) == RESTRICT_K
        validate_necklace(k.entries)
        assert all(RESTRICT_J not in e for e in k.entries)

    def test_degenerate_inputs_rejected(self):
        loop = necklace_of(DecoratedPermutation.of((1, 3, 2), {1: 1}))
        with pytest.raises(PreconditionError):
            contract_necklace(loop, 1)
        coloop = necklace_of(DecoratedPermutation.of((1, 3, 2), {1: -1}))
        with pytest.raises(PreconditionError):
            restrict_necklace(coloop, 1)

    def test_routes_agree_on_golden(self, perm, necklace):
        # necklace of the contracted permutation = contracted necklace minus j
        k = contract_necklace(necklace, CONTRACT_J)
        dropped = [e.discard(CONTRACT_J) for e in k.entries]
        assert list(necklace_of(contract(perm, CONTRACT_J)).entries) == dropped
        # restriction is even more direct
        assert necklace_of(restrict(perm, RESTRICT_J)) == restrict_necklace(necklace, RESTRICT_J)


class TestPermMinors:
    def test_contract_golden(self, perm):
        out = contract(perm, CONTRACT_J)
        assert format_perm(out) == CONTRACT_RESULT
        assert out.images == (6, 1, 3, 4, 8, 7, 2, 5)
        assert out.color(3) == 1 and out.color(4) == 1

    def test_restrict_golden(self, perm):
        out = restrict(perm, RESTRICT_J)
        assert format_perm(out) == RESTRICT_RESULT
        assert out.color(5) == 1

    def test_two_element_swap(self):
        # the smallest case where restriction must create a coloop
        p = parse_perm("2,1")
        assert format_perm(contract(p, 1)) == "1+,2+"
        assert format_perm(restrict(p, 1)) == "1+,2-"
        assert format_perm(contract(p, 2)) == "1+,2+"
        assert format_perm(restrict(p, 2)) == "1-,2+"

    def test_contract_coloop_recolors_only(self):
        p = DecoratedPermutation.of((1, 3, 2), {1: -1})
        out = contract(p, 1)
        assert out == p.with_color(1, 1)
        assert not is_degenerate(p, 1, MinorKind.CONTRACTION)

    def test_contract_loop_is_degenerate(self):
        p = DecoratedPermutation.of((1, 3, 2), {1: 1})
        assert contract(p, 1) == DecoratedPermutation.identity(3, 1)
        assert is_degenerate(p, 1, MinorKind.CONTRACTION)

    def test_restrict_loop_is_noop(self):
        p = DecoratedPermutation.of((1, 3, 2), {1: 1})
        assert restrict(p, 1) == p
        assert not is_degenerate(p, 1, MinorKind.RESTRICTION)

    def test_restrict_coloop_is_degenerate(self):
        p = DecoratedPermutation.of((1, 3, 2), {1: -1})
        assert restrict(p, 1) == DecoratedPermutation.identity(3, 1)
        assert is_degenerate(p, 1, MinorKind.RESTRICTION)

    def test_apply_minor_flags(self):
        p = DecoratedPermutation.of((1, 3, 2), {1: 1})
        out = apply_minor(p, 1, MinorKind.CONTRACTION)
        assert out.degenerate and out.perm == DecoratedPermutation.identity(3, 1)
        out = apply_minor(p, 1, MinorKind.RESTRICTION)
        assert not out.degenerate and out.perm == p
        out = apply_minor(p, 2, MinorKind.CONTRACTION)
        assert not out.degenerate

    def test_minor_turns_j_into_loop(self, perm):
        for j in range(1, 9):
            for op in (contract, restrict):
                out = op(perm, j)
                assert out.image(j) == j and out.color(j) == 1


class TestClassification:
    def test_contraction_cases_golden(self, perm, necklace):
        got = [classify_square(perm, necklace, CONTRACT_J, a).value for a in range(1, 9)]
        assert got == CONTRACT_CASES

    def test_restriction_cases_golden(self, perm, necklace):
        got = [
            classify_square(perm, necklace, RESTRICT_J, a, MinorKind.RESTRICTION).value
            for a in range(1, 9)
        ]
        assert got == RESTRICT_CASES

    def test_default_kind_is_contraction(self, perm, necklace):
        assert classify_square(perm, necklace, 3, 4) is CaseLabel.CASE4A

    def test_fixed_j_rejected(self):
        p = DecoratedPermutation.of((1, 3, 2), {1: 1})
        with pytest.raises(PreconditionError):
            classify_square(p, necklace_of(p), 1, 2)


class TestTraces:
    def test_contraction_trace_rows(self, perm):
        trace = trace_minor(perm, CONTRACT_J, MinorKind.CONTRACTION)
        assert trace.j == CONTRACT_J and trace.kind is MinorKind.CONTRACTION
        assert format_perm(trace.result) == CONTRACT_RESULT
        assert ";".join(",".join(map(str, r.entry.members)) for r in trace.rows) == PERM_NECKLACE
        assert ";".join(",".join(map(str, r.minor_entry.members)) for r in trace.rows) == CONTRACT_K
        assert [r.swap for r in trace.rows] == CONTRACT_SWAPS
        assert [r.image for r in trace.rows] == list(perm.images)
        assert [r.minor_image for r in trace.rows] == list(trace.result.images)
        assert [r.case.value for r in trace.rows] == CONTRACT_CASES

    def test_restriction_trace_rows(self, perm):
        trace = trace_minor(perm, RESTRICT_J, MinorKind.RESTRICTION)
        assert format_perm(trace.result) == RESTRICT_RESULT
        assert ";".join(",".join(map(str, r.minor_entry.members)) for r in trace.rows) == RESTRICT_K
        assert [r.swap for r in trace.rows] == RESTRICT_SWAPS
        assert [r.case.value for r in trace.rows] == RESTRICT_CASES

    def test_rows_satisfy_step_rule(self, perm):
        for kind in MinorKind:
            j = CONTRACT_J if kind is MinorKind.CONTRACTION else RESTRICT_J
            trace = trace_minor(perm, j, kind)
            rows = trace.rows
            for a in range(8):
                nxt = rows[(a + 1) % 8]
                assert necklace_step(rows[a].entry, a + 1, rows[a].image) == nxt.entry
                assert necklace_step(rows[a].minor_entry, a + 1, rows[a].minor_image) == nxt.minor_entry

    def test_render_contains_all_rows(self, perm):
        text = render_trace(trace_minor(perm, CONTRACT_J, MinorKind.CONTRACTION))
        lines = text.splitlines()
        assert len(lines) == 5
        assert lines[0].startswith("contraction at j=3:")
        assert CONTRACT_RESULT in lines[0]
        assert "1235" in lines[1] and "-6->" in lines[1]
        assert "Case4a" in lines[4]

    def test_trace_to_obj(self, perm):
        obj = trace_to_obj(trace_minor(perm, RESTRICT_J, MinorKind.RESTRICTION))
        assert obj["kind"] == "restriction" and obj["j"] == RESTRICT_J
        assert obj["result"]["perm"] == [8, 1, 4, 2, 5, 7, 3, 6]
        assert obj["rows"][0] == {
            "a": 1,
            "entry": [1, 2, 3, 5],
            "minor_entry": [1, 2, 3, 6],
            "image": 6,
            "minor_image": 8,
            "swap": 6,
            "case": "R-c",
        }

    def test_fixed_j_rejected(self):
        p = DecoratedPermutation.of((1, 3, 2), {1: -1})
        with pytest.raises(PreconditionError):
            trace_minor(p, 1, MinorKind.CONTRACTION)


def test_composed_minors_commute_with_oracle():
    # contract 3 then delete 5 along both routes
    p = parse_perm(PERM)
    family = bases_of(necklace_of(p))
    step1 = oracle_contract(family, 3)
    step2 = oracle_delete(step1, 5)
    walked = restrict(contract(p, 3), 5)
    assert bases_of(necklace_of(walked)).bases == step2.bases
