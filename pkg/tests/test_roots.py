from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import (interlace_by_sorted_roots, poly_from_roots,
                     sign_changes_on_grid)
from zpoly import (BRAID, TYPE_B, IntPolynomial, InterlaceKind, build_tables,
                   certify_roots, conjecture_sweep, count_negative_real_roots,
                   interlaces, is_log_concave, is_negative_real_rooted,
                   isolate_roots, qvec_family, squarefree_part,
                   uniform_family, z_family)

# distinct small negative integer roots
neg_root_sets = st.sets(st.integers(-20, -1), min_size=1, max_size=5)


def test_squarefree_examples():
    assert squarefree_part(IntPolynomial([1, 2, 1])).coeffs == (1, 1)
    p = IntPolynomial([1, 3, 1])
    assert squarefree_part(p).coeffs == (1, 3, 1)
    assert squarefree_part(IntPolynomial([0, 0, 0, 1])).coeffs == (0, 1)
    with pytest.raises(ValueError):
        squarefree_part(IntPolynomial())


def test_count_examples():
    assert count_negative_real_roots(IntPolynomial([1, 3, 1])) == (2, 2)
    assert count_negative_real_roots(IntPolynomial([1, 0, 1])) == (0, 0)
    assert count_negative_real_roots(IntPolynomial([1, 3, 3, 1])) == (1, 3)
    with pytest.raises(ValueError):
        count_negative_real_roots(IntPolynomial([0, 1]))


def test_rooted_examples():
    assert is_negative_real_rooted(IntPolynomial([1, 3, 1]))
    assert not is_negative_real_rooted(IntPolynomial([1, 1, 1]))
    assert is_negative_real_rooted(IntPolynomial([1]))
    assert not is_negative_real_rooted(IntPolynomial([1, -3, 1]))  # positive roots


@given(neg_root_sets, st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_count_against_grid_oracle(roots, rep):
    # repeat one root to exercise multiplicity counting
    multiset = sorted(roots) + [max(roots)] * (rep - 1)
    p = poly_from_roots(multiset)
    distinct, with_mult = count_negative_real_roots(p)
    assert distinct == len(roots)
    assert with_mult == len(multiset)
    lo = min(multiset) - 1
    assert sign_changes_on_grid(squarefree_part(p).coeffs, lo, 0,
                                steps=800) == len(roots)


def test_isolation_examples():
    p = IntPolynomial([1, 3, 1])
    iso = isolate_roots(p)
    assert len(iso) == 2
    r1 = Fraction(-2618, 1000)
    r2 = Fraction(-382, 1000)
    assert iso[0][0] < r1 < iso[0][1]
    assert iso[1][0] < r2 < iso[1][1]
    assert isolate_roots(IntPolynomial([1, 1]))[0][0] < -1 <= isolate_roots(
        IntPolynomial([1, 1]))[0][1]
    iso = isolate_roots(IntPolynomial([1, 2]))
    assert iso[0][0] < Fraction(-1, 2) <= iso[0][1]
    with pytest.raises(ValueError, match="Sturm counts"):
        isolate_roots(IntPolynomial([1, 0, 1]))


def test_certificate_structure():
    p = poly_from_roots([-1, -2, -5])
    cert = certify_roots(p)
    assert cert.chain[0] == cert.squarefree
    # chain[1] is the derivative up to a positive content factor
    deriv = cert.squarefree.derivative()
    ratio = deriv.coeffs[-1] / cert.chain[1].coeffs[-1]
    assert ratio > 0
    assert cert.chain[1] * ratio == deriv
    # each interval holds exactly one sign change of the square-free part
    for lo, hi in cert.isolating:
        slo = cert.squarefree(lo)
        shi = cert.squarefree(hi)
        assert slo != 0 and (slo > 0) != (shi > 0)
    # intervals sorted and pairwise disjoint
    for (a, b), (c, d) in zip(cert.isolating, cert.isolating[1:]):
        assert b <= c


@given(neg_root_sets)
@settings(max_examples=60, deadline=None)
def test_isolation_separates_known_roots(roots):
    p = poly_from_roots(sorted(roots))
    iso = isolate_roots(p)
    assert len(iso) == len(roots)
    for (lo, hi), r in zip(iso, sorted(roots)):
        assert lo < r <= hi


def test_interlace_examples():
    v = interlaces(IntPolynomial([1, 3, 1]), IntPolynomial([1, 2]))
    assert v.kind is InterlaceKind.STRICT
    v = interlaces(IntPolynomial([1, 2, 1]), IntPolynomial([1, 1]))
    assert v.kind is InterlaceKind.WEAK
    v = interlaces(IntPolynomial([1, 6, 6, 1]), IntPolynomial([1, 3, 1]))
    assert v.kind is InterlaceKind.STRICT


def test_interlace_errors():
    with pytest.raises(ValueError):
        interlaces(IntPolynomial([1, 3, 1]), IntPolynomial([1, 3, 1]))
    with pytest.raises(ValueError):
        interlaces(IntPolynomial([1, 1, 1]), IntPolynomial([1, 1]))


def test_interlace_none_with_witness():
    f = poly_from_roots([-1, -4, -5])
    g = poly_from_roots([-2, -3])
    v = interlaces(f, g)
    assert v.kind is InterlaceKind.NONE
    assert v.witness is not None


@given(st.sets(st.integers(-12, -1), min_size=2, max_size=5), st.data())
@settings(max_examples=80, deadline=None)
def test_interlace_against_root_oracle(f_roots, data):
    f_sorted = sorted(f_roots)
    g_roots = [data.draw(st.integers(f_sorted[i], f_sorted[i + 1]),
                         label=f"g{i}")
               for i in range(len(f_sorted) - 1)]
    jitter = data.draw(st.booleans(), label="scramble")
    if jitter and len(g_roots) >= 2:
        g_roots[0], g_roots[-1] = g_roots[-1] - 1, g_roots[0]
    expected = interlace_by_sorted_roots(f_sorted, sorted(g_roots))
    v = interlaces(poly_from_roots(f_sorted), poly_from_roots(g_roots))
    assert v.kind.value == expected


def test_interlace_with_repeated_roots():
    cases = [
        ([-2, -1, -1], [-3, -1], "none"),
        ([-3, -1, -1], [-2, -1], "weak"),
        ([-2, -2, -1], [-2, -2], "weak"),
        ([-3, -2, -1], [-2, -2], "weak"),
        ([-5, -1, -1], [-2, -1], "weak"),
        ([-3, -2, -2, -1], [-2, -2, -1], "weak"),
        ([-4, -2, -2], [-3, -1], "none"),
    ]
    for f_roots, g_roots, expected in cases:
        assert interlace_by_sorted_roots(f_roots, g_roots) == expected, \
            (f_roots, g_roots)
        v = interlaces(poly_from_roots(f_roots), poly_from_roots(g_roots))
        assert v.kind.value == expected, (f_roots, g_roots)


def test_strict_implies_trivial_gcd():
    from zpoly.roots import _rat_gcd
    f = poly_from_roots([-1, -3, -7])
    g = poly_from_roots([-2, -5])
    assert interlaces(f, g).kind is InterlaceKind.STRICT
    assert len(_rat_gcd(list(f.coeffs), list(g.coeffs))) == 1


def test_log_concave():
    assert is_log_concave(IntPolynomial([1, 3, 1]))
    assert not is_log_concave(IntPolynomial([1, 1, 2]))
    assert is_log_concave(IntPolynomial([1]))
    assert not is_log_concave(IntPolynomial([1, -1, 1]))


def test_sweep_families():
    for family, dmax in ((qvec_family(2), 10), (uniform_family(1), 12),
                         (BRAID, 12), (TYPE_B, 8)):
        rows = conjecture_sweep(family, dmax)
        assert len(rows) == dmax
        for row in rows:
            assert row["negative_real_rooted"], (family, row)
            assert row["interlace"] in ("strict", "weak"), (family, row)


def test_sweep_report_fields():
    rows = conjecture_sweep(qvec_family(2), 3, include_certificates=True)
    for row in rows:
        assert set(row) >= {"family", "d", "negative_real_rooted",
                            "interlace", "max_coeff_digits", "millis"}
        assert row["family"] == "qvec:2"
        assert "certificate" in row


def test_sweep_parallel_matches_serial():
    serial = conjecture_sweep(BRAID, 6)
    parallel = conjecture_sweep(BRAID, 6, threads=2)
    strip = lambda rows: [{k: v for k, v in r.items() if k != "millis"}
                          for r in rows]
    assert strip(serial) == strip(parallel)


def test_qvec_gap_property():
    # the stronger property behind the q-family proof: exactly one root of
    # Z_{d-1} strictly between consecutive roots of Z_d, and alpha_i < q*alpha_{i+1}
    from zpoly.roots import (_isolate, _squarefree, _sturm_chain, _count_in,
                             _variations_at, _halve)
    for q in (2, 3):
        tables = build_tables(qvec_family(q), 10)
        for d in range(2, 11):
            zd = list(z_family(tables, d).coeffs)
            zp = list(z_family(tables, d - 1).coeffs)
            chain_d = _sturm_chain(_squarefree(zd))
            chain_p = _sturm_chain(_squarefree(zp))
            iso = [(lo, hi, _variations_at(chain_d, lo), _variations_at(chain_d, hi))
                   for lo, hi in _isolate(chain_d, _squarefree(zd))]
            # refine until no Z_{d-1} root sits inside a Z_d interval and the
            # scaled-gap inequality hi_i <= q * lo_{i+1} is certified
            for k in range(len(iso)):
                for _ in range(512):
                    lo, hi, _, _ = iso[k]
                    if _count_in(chain_p, lo, hi) == 0:
                        break
                    iso[k] = _halve(chain_d, iso[k])
                else:
                    raise AssertionError("refinement cap hit")
            for k in range(len(iso) - 1):
                for _ in range(512):
                    if iso[k][1] <= q * iso[k + 1][0]:
                        break
                    iso[k] = _halve(chain_d, iso[k])
                    iso[k + 1] = _halve(chain_d, iso[k + 1])
                else:
                    raise AssertionError("gap inequality not certified")
                gap_roots = _count_in(chain_p, iso[k][1], iso[k + 1][0])
                assert gap_roots == 1, (q, d, k)
