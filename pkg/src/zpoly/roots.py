"""Exact decision procedures for root questions about Z-polynomials:
negative-real-rootedness, isolating-interval certificates, interlacing, and
log-concavity.

Sturm chains are kept as primitive integer polynomials: each pseudo-remainder
is divided by its content (a positive rational factor never changes a sign),
which stops the coefficient blowup that plain rational chains suffer at
degree 20-40.  All interval endpoints are dyadic rationals.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .families import NiceFamily, WhitneyTables, build_tables, z_family
from .polyarith import IntPolynomial, RatPolynomial

_REFINE_CAP = 512


# --- primitive integer polynomial helpers (low degree first, no trailing 0s)


def _strip(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _primitive(cs):
    """Divide by the content; sign of the polynomial is preserved."""
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            return list(cs)
    if g == 0:
        return []
    return [c // g for c in cs]


def _derivative(cs):
    return [i * c for i, c in enumerate(cs)][1:]


def _neg_prem_primitive(f, g):
    """Primitive part of -(f mod g), with the sign of the true rational
    remainder.  Each reduction step multiplies the running remainder by the
    leading coefficient of g; the accumulated sign is compensated at the end
    so Sturm sign counting stays exact."""
    r = list(f)
    lg = g[-1]
    dg = len(g) - 1
    sign = 1
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        k = len(r) - 1 - dg
        r = [c * lg for c in r]
        for i, gc in enumerate(g):
            r[i + k] -= lr * gc
        _strip(r)
        if lg < 0:
            sign = -sign
    r = _primitive(r)
    if sign > 0:
        r = [-c for c in r]
    return r


def _sturm_chain(cs):
    """Sturm chain of a (square-free) integer polynomial."""
    chain = [_primitive(list(cs))]
    d = _strip(_derivative(chain[0]))
    if d:
        chain.append(_primitive(d))
        while True:
            nxt = _neg_prem_primitive(chain[-2], chain[-1])
            if not nxt:
                break
            chain.append(nxt)
    return chain


def _sign_at(cs, num: int, den: int) -> int:
    """Sign of p(num/den) with den > 0: integer Horner on den^deg * p."""
    value = 0
    power = 1
    for c in reversed(cs):
        value = value * num + c * power
        power *= den
    return (value > 0) - (value < 0)


def _variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain, point: Fraction) -> int:
    num, den = point.numerator, point.denominator
    return _variations([_sign_at(cs, num, den) for cs in chain])


def _variations_at_neg_inf(chain) -> int:
    return _variations([(1 if cs[-1] > 0 else -1) * (-1) ** (len(cs) - 1) for cs in chain])


def _count_in(chain, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots in (lo, hi]."""
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def _rat_gcd(f, g):
    """Primitive gcd of two integer polynomials (positive leading coeff)."""
    a, b = _primitive(list(f)), _primitive(list(g))
    while b:
        a, b = b, _neg_prem_primitive(a, b)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a

def _exact_div(f, h):
    """f / h for integer polynomials with h | f; result has integer coeffs."""
    out = []
    r = [Fraction(c) for c in f]
    dh = len(h) - 1
    lead = Fraction(h[-1])
    while len(r) - 1 >= dh and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dh:
            break
        q = r[-1] / lead
        k = len(r) - 1 - dh
        out.append((k, q))
        for i, hc in enumerate(h):
            r[i + k] -= q * hc
    while r and r[-1] == 0:
        r.pop()
    if r:
        raise ValueError("division is not exact")
    deg = max(k for k, _ in out) if out else 0
    cs = [Fraction(0)] * (deg + 1)
    for k, q in out:
        cs[k] = q
    assert all(c.denominator == 1 for c in cs)
    return [int(c) for c in cs]


def _squarefree(cs):
    g = _rat_gcd(cs, _derivative(cs))
    if len(g) == 1:
        out = _primitive(list(cs))
    else:
        out = _exact_div(cs, g)
        out = _primitive(out)
    if out and out[-1] < 0:
        out = [-c for c in out]
    return out


# --- public surface


@dataclass(frozen=True)
class SturmCertificate:
    """Certificate of root locations: the square-free part, its Sturm chain,
    and disjoint dyadic intervals (lo, hi] each holding exactly one root."""
    squarefree: RatPolynomial
    chain: tuple
    isolating: tuple


class InterlaceKind(Enum):
    STRICT = "strict"
    WEAK = "weak"
    NONE = "none"


@dataclass(frozen=True)
class InterlaceVerdict:
    """Outcome of an interlacing test.  witness is the 0-based position in
    the merged root order where the alternation broke (None unless NONE)."""
    kind: InterlaceKind
    witness: int | None = None

    def __bool__(self):
        return self.kind is not InterlaceKind.NONE


def squarefree_part(p: IntPolynomial) -> RatPolynomial:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    return RatPolynomial(_squarefree(list(p.coeffs)))


def count_negative_real_roots(p: IntPolynomial) -> tuple:
    """(distinct, with multiplicity) count of roots in (-inf, 0).

    Requires p(0) != 0; repeated gcd deflation recovers multiplicities.
    """
    if p.is_zero() or p.coefficient(0) == 0:
        raise ValueError("polynomial must not vanish at 0")
    distinct = None
    total = 0
    cs = list(p.coeffs)
    while len(cs) > 1:
        sf = _squarefree(cs)
        chain = _sturm_chain(sf)
        cnt = _variations_at_neg_inf(chain) - _variations_at(chain, Fraction(0))
        if distinct is None:
            distinct = cnt
        total += cnt
        cs = _rat_gcd(cs, _derivative(cs))
    return (distinct or 0, total)


def is_negative_real_rooted(p: IntPolynomial) -> bool:
    """True iff all deg(p) roots (with multiplicity) are negative reals."""
    if p.degree == 0:
        return True
    _, with_mult = count_negative_real_roots(p)
    return with_mult == p.degree


def _cauchy_bound(cs) -> int:
    lead = abs(cs[-1])
    worst = max(abs(c) for c in cs[:-1]) if len(cs) > 1 else 0
    return 1 + -(-worst // lead)


def _isolate(chain, sf) -> list:
    """Disjoint dyadic intervals (lo, hi], one distinct root each, covering
    (-B, 0); Sturm-count guided bisection."""
    total = _variations_at_neg_inf(chain) - _variations_at(chain, Fraction(0))
    if total == 0:
        return []
    bound = Fraction(-_cauchy_bound(sf))
    v_lo = _variations_at(chain, bound)
    v_hi = _variations_at(chain, Fraction(0))
    assert v_lo - v_hi == total
    out = []
    stack = [(bound, Fraction(0), v_lo, v_hi)]
    while stack:
        lo, hi, vl, vh = stack.pop()
        k = vl - vh
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vm = _variations_at(chain, mid)
        stack.append((lo, mid, vl, vm))
        stack.append((mid, hi, vm, vh))
    out.sort()
    return out


def certify_roots(p: IntPolynomial) -> SturmCertificate:
    """Isolate all roots of p, which must be distinct negative reals
    (after squarefree reduction); errors report the Sturm count otherwise."""
    if p.is_zero() or p.coefficient(0) == 0:
        raise ValueError("polynomial must not vanish at 0")
    sf = _squarefree(list(p.coeffs))
    chain = _sturm_chain(sf)
    deg = len(sf) - 1
    total = _variations_at_neg_inf(chain) - _variations_at(chain, Fraction(0))
    if total != deg:
        raise ValueError(
            f"expected {deg} distinct negative real roots, Sturm counts {total}")
    intervals = _isolate(chain, sf)
    return SturmCertificate(
        squarefree=RatPolynomial(sf),
        chain=tuple(RatPolynomial(cs) for cs in chain),
        isolating=tuple(intervals),
    )


def isolate_roots(p: IntPolynomial) -> list:
    """Isolating intervals for the distinct roots of p; see certify_roots."""
    return list(certify_roots(p).isolating)


def _halve(chain, interval):
    """Shrink an isolating interval by one bisection step."""
    lo, hi, vl, vh = interval
    mid = (lo + hi) / 2
    vm = _variations_at(chain, mid)
    if vl - vm == 1:
        return (lo, mid, vl, vm)
    return (mid, hi, vm, vh)


def _with_variations(chain, intervals):
    return [(lo, hi, _variations_at(chain, lo), _variations_at(chain, hi))
            for lo, hi in intervals]


def _overlaps(a, b) -> bool:
    return max(a[0], b[0]) < min(a[1], b[1])


def interlaces(f: IntPolynomial, g: IntPolynomial) -> InterlaceVerdict:
    """Decide whether the roots of g separate the roots of f.

    Requires deg f = deg g + 1 and both inputs negative-real-rooted.  Shared
    roots are factored out by gcd and the deflated pair decided; any shared
    root downgrades a success to WEAK.
    """
    if g.is_zero() or f.degree != g.degree + 1:
        raise ValueError("need deg f = deg g + 1 with g nonzero")
    if not is_negative_real_rooted(f) or not is_negative_real_rooted(g):
        raise ValueError("interlacing requires negative-real-rooted inputs")
    h = _rat_gcd(list(f.coeffs), list(g.coeffs))
    if len(h) > 1:
        sub = interlaces(IntPolynomial(_exact_div(list(f.coeffs), h)),
                         IntPolynomial(_exact_div(list(g.coeffs), h)))
        if sub.kind is InterlaceKind.NONE:
            return sub
        return InterlaceVerdict(InterlaceKind.WEAK)
    if g.degree == 0:
        # one root of f, nothing to separate; multiplicity is impossible here
        return InterlaceVerdict(InterlaceKind.STRICT)

    sf_f = _squarefree(list(f.coeffs))
    sf_g = _squarefree(list(g.coeffs))
    f_multiple = len(sf_f) - 1 != f.degree
    g_multiple = len(sf_g) - 1 != g.degree
    chain_f = _sturm_chain(sf_f)
    chain_g = _sturm_chain(sf_g)
    iso_f = _with_variations(chain_f, _isolate(chain_f, sf_f))
    iso_g = _with_variations(chain_g, _isolate(chain_g, sf_g))

    # refine until no f-interval overlaps a g-interval
    steps = 0
    i = j = 0
    while i < len(iso_f) and j < len(iso_g):
        a, b = iso_f[i], iso_g[j]
        if _overlaps(a, b):
            if a[1] - a[0] >= b[1] - b[0]:
                iso_f[i] = _halve(chain_f, a)
            else:
                iso_g[j] = _halve(chain_g, b)
            steps += 1
            if steps > _REFINE_CAP * (len(iso_f) + len(iso_g)):
                raise RuntimeError("interval refinement failed to separate roots")
            continue
        if a[1] <= b[0]:
            i += 1
        else:
            j += 1

    merged = sorted([(iv[0], iv[1], "f") for iv in iso_f]
                    + [(iv[0], iv[1], "g") for iv in iso_g])
    labels = [lab for _, _, lab in merged]
    expected = ["f" if k % 2 == 0 else "g" for k in range(len(labels))]
    if labels != expected:
        witness = next(k for k in range(len(labels)) if labels[k] != expected[k])
        return InterlaceVerdict(InterlaceKind.NONE, witness)
    if f_multiple or g_multiple:
        # a repeated root with trivial gcd cannot satisfy the inequalities:
        # the doubled root would need a matching root of the other polynomial
        which = iso_f if f_multiple else iso_g
        multiple_part = _rat_gcd(list(f.coeffs) if f_multiple else list(g.coeffs),
                                 _derivative(list(f.coeffs) if f_multiple else list(g.coeffs)))
        mchain = _sturm_chain(_squarefree(multiple_part))
        witness = next(
            (k for k, iv in enumerate(which) if _count_in(mchain, iv[0], iv[1])),
            0)
        offset = next(k for k, (_, _, lab) in enumerate(merged)
                      if lab == ("f" if f_multiple else "g"))
        return InterlaceVerdict(InterlaceKind.NONE, offset + 2 * witness)
    return InterlaceVerdict(InterlaceKind.STRICT)


def is_log_concave(p: IntPolynomial) -> bool:
    """Nonnegative coefficients with c_i^2 >= c_{i-1} c_{i+1} throughout."""
    cs = p.coeffs
    if any(c < 0 for c in cs):
        return False
    return all(cs[i] * cs[i] >= cs[i - 1] * cs[i + 1] for i in range(1, len(cs) - 1))


# ---------------------------------------------------------------------------
# conjecture sweep


def _sweep_cell(args):
    family_str, d, z_coeffs, z_prev_coeffs, want_cert = args
    start = time.perf_counter()
    zd = IntPolynomial(z_coeffs)
    rooted = is_negative_real_rooted(zd)
    verdict = None
    if z_prev_coeffs is not None and rooted:
        zprev = IntPolynomial(z_prev_coeffs)
        if is_negative_real_rooted(zprev):
            verdict = interlaces(zd, zprev).kind.value
        else:
            verdict = "none"
    elif z_prev_coeffs is not None:
        verdict = "none"
    row = {
        "family": family_str,
        "d": d,
        "negative_real_rooted": rooted,
        "interlace": verdict,
        "max_coeff_digits": max(len(str(abs(c))) for c in z_coeffs),
        "millis": (time.perf_counter() - start) * 1000.0,
    }
    if want_cert or not rooted or verdict == "none":
        try:
            cert = certify_roots(zd)
            row["certificate"] = {
                "isolating": [[str(lo), str(hi)] for lo, hi in cert.isolating],
            }
        except ValueError as exc:
            row["certificate"] = {"error": str(exc)}
    return row


def conjecture_sweep(family: NiceFamily, d_max: int,
                     tables: WhitneyTables | None = None,
                     threads: int | None = None,
                     include_certificates: bool = False) -> list:
    """For d = 1..d_max check negative-real-rootedness of Z_d and the
    interlacing of (Z_d, Z_{d-1}); one report row per d, failures carry an
    isolating-interval certificate.

    threads > 1 fans the independent d-cells out to a process pool
    (ZPOLY_THREADS is read by the CLI, not here).
    """
    if tables is None:
        tables = build_tables(family, d_max)
    if d_max > tables.d_max:
        raise ValueError("d_max exceeds precomputed table range")
    zs = [z_family(tables, d) for d in range(d_max + 1)]
    jobs = [(str(family), d, zs[d].coeffs,
             zs[d - 1].coeffs if d >= 1 else None,
             include_certificates)
            for d in range(1, d_max + 1)]
    if threads and threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_sweep_cell, jobs))
    return [_sweep_cell(job) for job in jobs]
