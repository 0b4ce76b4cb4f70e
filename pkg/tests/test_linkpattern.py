from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from springer_sing.errors import (
    DegenerateArcError,
    DuplicateEndpointError,
    EndpointRangeError,
    IncomparableError,
    MalformedTextError,
    NotMaximalError,
    ParseError,
    PatternError,
)
from springer_sing.linkpattern import (
    LinkPattern,
    add_arc,
    arc_statistics,
    bridges,
    completion,
    con,
    concatenate,
    contract_arc,
    count_maximal,
    count_patterns,
    crossings,
    delete_arcs,
    enumerate_patterns,
    format_pattern,
    is_maximal,
    leq,
    maximal_completion,
    omega_o,
    parse,
    projection,
    rank_matrix,
    rho,
    shift,
    tau_star,
)

P = parse
NINE = "n=9 (2,6)(3,8)(4,5)"


@st.composite
def patterns(draw, max_n: int = 10):
    n = draw(st.integers(0, max_n))
    pts = draw(st.permutations(range(1, n + 1)))
    k = draw(st.integers(0, n // 2))
    return LinkPattern(n, tuple((pts[2 * i], pts[2 * i + 1]) for i in range(k)))


# ---------------------------------------------------------------------------
# parsing

def test_parse_nine_point_pattern():
    s = P(NINE)
    assert s.n == 9 and s.arcs == ((2, 6), (3, 8), (4, 5))


def test_parse_empty_and_default_n():
    assert P("n=3") == LinkPattern(3, ())
    assert P("(2,3)(4,5)").n == 5
    assert P("(4,5)(2,3) n=6") == P("n=6 (2,3)(4,5)")


@pytest.mark.parametrize("text, exc", [
    ("(2,6)(2,7)", DuplicateEndpointError),
    ("(0,3) n=4", EndpointRangeError),
    ("n=2 (1,5)", EndpointRangeError),
    ("(3,3)", DegenerateArcError),
    ("(1,2", MalformedTextError),
    ("(1;2)", MalformedTextError),
])
def test_parse_errors_are_distinct(text, exc):
    with pytest.raises(exc):
        P(text)
    assert issubclass(exc, ParseError)


@given(patterns())
def test_format_parse_round_trip(s):
    assert P(format_pattern(s)) == s
    assert P(str(s)) == s


def test_round_trip_exhaustive_small():
    for n in range(0, 9):
        for k in range(n // 2 + 1):
            for s in enumerate_patterns(n, k):
                assert P(format_pattern(s)) == s


# ---------------------------------------------------------------------------
# statistics

@pytest.mark.parametrize("text, c, b", [
    (NINE, 1, 1),
    ("n=4", 0, 0),
    ("(1,4)(2,5) n=5", 1, 2),
    ("(1,2)", 0, 0),
])
def test_crossings_and_bridges(text, c, b):
    s = P(text)
    assert crossings(s) == c and bridges(s) == b


@given(patterns())
def test_per_arc_statistics_sum_to_totals(s):
    st_ = arc_statistics(s)
    assert sum(st_.right.values()) == sum(st_.left.values()) == crossings(s)
    assert sum(st_.arc_bridges.values()) == sum(st_.point_bridges.values()) == bridges(s)


# ---------------------------------------------------------------------------
# rank matrix and order

def test_rank_matrix_small_example():
    r = rank_matrix(P("(1,4)(2,5) n=5"))
    nonzero = {(i, j): r[i, j] for i in range(1, 6) for j in range(1, 6) if r[i, j]}
    assert nonzero == {(1, 4): 1, (1, 5): 2, (2, 5): 1}


def test_rank_matrix_entries_nine_points():
    r = rank_matrix(P(NINE))
    assert (r[2, 6], r[4, 5], r[2, 8]) == (2, 1, 3)
    assert rank_matrix(P("n=5")).array.sum() == 0


@given(patterns())
def test_rank_matrix_corner_is_k(s):
    if s.n >= 2:
        assert rank_matrix(s)[1, s.n] == s.k


@given(patterns())
def test_rank_matrix_is_monotone(s):
    r = rank_matrix(s).array
    n = s.n
    for i in range(n):
        for j in range(i + 1, n):
            if i > 0:
                assert r[i - 1, j] >= r[i, j]
            if j + 1 < n:
                assert r[i, j + 1] >= r[i, j]


def test_leq_examples():
    assert leq(P("(1,5)(2,6) n=6"), P("(1,6)(2,5) n=6"))
    assert not leq(P("(1,6)(2,5) n=6"), P("(1,5)(2,6) n=6"))
    with pytest.raises(IncomparableError):
        leq(P("(1,2) n=4"), P("(1,2)(3,4)"))


def test_order_axioms_exhaustive():
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            ps = list(enumerate_patterns(n, k))
            for a in ps:
                assert leq(a, a)
                for b in ps:
                    if a != b and leq(a, b):
                        assert not leq(b, a)
                        assert crossings(a) + bridges(a) > crossings(b) + bridges(b)
                        for c in ps:
                            if leq(b, c):
                                assert leq(a, c)


def test_omega_o_is_unique_minimum():
    for n in range(1, 9):
        for k in range(n // 2 + 1):
            w = omega_o(n, k)
            ps = list(enumerate_patterns(n, k))
            assert w in ps
            assert all(leq(w, s) for s in ps)
            assert [s for s in ps if all(leq(s, u) for u in ps)] == [w]


# ---------------------------------------------------------------------------
# surgery

def test_projection_examples():
    s = P("(1,7)(2,6)(4,5) n=7")
    assert projection(s, 1, 6).pattern == P("(2,6)(4,5) n=6")
    assert projection(s, 1, 7).pattern == s
    p = projection(P(NINE), 4, 5)
    assert p.pattern == P("(1,2)") and p.offset == 3


def test_delete_and_add():
    assert delete_arcs(P("(2,3)(4,5) n=6"), [(2, 3)]) == P("(4,5) n=6")
    assert add_arc(P("(4,5) n=6"), 1, 6) == P("(1,6)(4,5)")
    with pytest.raises(PatternError):
        add_arc(P("(2,3) n=4"), 2, 4)


def test_shift_examples():
    assert shift(P("(1,2)"), 1, 3) == P("(2,3) n=3")
    assert shift(con(2), 4, 8) == P("(5,8)(6,7) n=8")
    s = P("(1,3) n=4")
    assert shift(s, 0, 5) == LinkPattern(5, s.arcs)


def test_concatenation_examples():
    assert concatenate(con(1), con(1)) == P("(1,2)(3,4)")
    s = P("(2,3) n=4")
    assert concatenate(s, LinkPattern.empty(3)) == LinkPattern(7, s.arcs)
    # a block decomposition of a pattern in I_{18,6}
    blocks = concatenate(P("(2,3) n=4"), P("(1,4)(2,3) n=6"), P("(1,6)(2,3)(4,5) n=8"))
    assert blocks == P("(2,3)(5,8)(6,7)(11,16)(12,13)(14,15) n=18")
    arcs = shift(con(1), 1, 18).arcs + shift(con(2), 4, 18).arcs + shift(P("(1,6)(2,3)(4,5)"), 10, 18).arcs
    assert LinkPattern(18, arcs) == blocks


def test_maximal_completion_examples():
    assert maximal_completion(P("(2,6)(4,5) n=6"), "right") == P("(2,6)(3,7)(4,5) n=7")
    assert maximal_completion(P("(2,3) n=4"), "left") == P("(1,2)(3,4) n=5")
    s = P("(2,3) n=6")
    assert completion(s, 1, 2) == maximal_completion(maximal_completion(s, "left"), "right", 2)
    assert completion(s, 1, 2) == maximal_completion(maximal_completion(s, "right", 2), "left")


def test_contract_arc_examples():
    assert contract_arc(P("(2,3)(4,5) n=6"), (2, 3)) == P("(2,3) n=4")
    assert contract_arc(P("(1,2)"), (1, 2)) == LinkPattern(0, ())
    assert contract_arc(P(NINE), (4, 5)) == P("(2,4)(3,6) n=7")


def _order_matrix(ps):
    """Entry (a, b) is leq(ps[a], ps[b]), computed from stacked rank matrices."""
    r = np.stack([rank_matrix(s).array.ravel() for s in ps]).astype(np.int16)
    return np.all(r[:, None, :] <= r[None, :, :], axis=2)


def test_order_matrix_matches_leq():
    ps = list(enumerate_patterns(6, 2))
    m = _order_matrix(ps)
    assert all(m[x, y] == leq(a, b) for x, a in enumerate(ps) for y, b in enumerate(ps))


def test_completion_preserves_and_reflects_order():
    for n in range(1, 9):
        for k in range(n // 2 + 1):
            if 2 * k >= n:
                continue
            ps = list(enumerate_patterns(n, k))
            base = _order_matrix(ps)
            for side in ("left", "right"):
                assert np.array_equal(base, _order_matrix([maximal_completion(s, side) for s in ps]))


def test_contraction_preserves_and_reflects_order():
    for n in range(2, 9):
        for k in range(1, n // 2 + 1):
            ps = list(enumerate_patterns(n, k))
            for i in range(1, n):
                having = [s for s in ps if (i, i + 1) in s]
                if not having:
                    continue
                small = [contract_arc(s, (i, i + 1)) for s in having]
                if small[0].n == 0:
                    continue
                assert np.array_equal(_order_matrix(having), _order_matrix(small))


# ---------------------------------------------------------------------------
# maximal patterns

def test_maximal_examples():
    s = P("(2,3)(4,5) n=6")
    assert is_maximal(s) and tau_star(s) == {2, 4} and rho(s) == 4
    assert not is_maximal(P("(1,4)(2,5) n=5"))
    with pytest.raises(NotMaximalError):
        rho(P("(1,4)(2,5) n=5"))


@pytest.mark.parametrize("text, r", [
    ("n=5", 2),
    ("(1,2) n=3", 2),
    ("(2,3) n=3", 2),
    ("(1,4)(2,3)", 2),
    ("(1,2)(3,4)", 2),
    ("(2,3) n=4", 3),
])
def test_rho_cases(text, r):
    assert rho(P(text)) == r


# ---------------------------------------------------------------------------
# enumeration

def test_enumeration_counts():
    assert count_patterns(6, 2) == 45 == len(list(enumerate_patterns(6, 2)))
    for n in range(0, 9):
        assert len(list(enumerate_patterns(n, 0))) == 1
        for k in range(n // 2 + 1):
            ps = list(enumerate_patterns(n, k))
            assert len(ps) == len(set(ps)) == count_patterns(n, k)
            assert count_patterns(n, k) == math.factorial(n) // (2 ** k * math.factorial(k) * math.factorial(n - 2 * k))
            mx = list(enumerate_patterns(n, k, maximal_only=True))
            assert mx == [s for s in ps if is_maximal(s)]
            assert len(mx) == count_maximal(n, k) == math.comb(n, k) - (math.comb(n, k - 1) if k else 0)


def test_enumeration_counts_up_to_twelve():
    for n in (11, 12):
        for k in range(n // 2 + 1):
            want = math.factorial(n) // (2 ** k * math.factorial(k) * math.factorial(n - 2 * k))
            assert sum(1 for _ in enumerate_patterns(n, k)) == want


def test_listed_part_of_i52():
    listed = {P(t + " n=5") for t in (
        "(1,2)(3,4) (1,2)(3,5) (1,2)(4,5) (1,3)(2,4) (1,3)(2,5) (1,3)(4,5) "
        "(1,4)(2,3) (1,4)(2,5) (1,4)(3,5) (1,5)(2,3) (1,5)(2,4) (1,5)(3,4)").split()}
    everything = set(enumerate_patterns(5, 2))
    assert len(listed) == 12 and listed < everything
    assert everything - listed == {s for s in everything if s.is_fixed(1)}


def test_enumeration_is_sorted():
    ps = list(enumerate_patterns(7, 3))
    assert ps == sorted(ps)


def test_con_blocks_are_maximal():
    for k in range(0, 5):
        c = con(k)
        assert is_maximal(c) and c.n == 2 * k and c.arcs == tuple((i, 2 * k + 1 - i) for i in range(1, k + 1))
