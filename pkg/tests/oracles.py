"""Slow, independent reference implementations used as test oracles.

Everything here is deliberately naive (direct definitions, brute-force
enumeration) and shares no code path with the library internals it checks.
"""

from fractions import Fraction
from itertools import product

from zpoly import IntPolynomial


# --- poset oracles on lists of frozensets ordered by inclusion


def lattice_as_sets(lat):
    return [frozenset(lat.flat_elements(i)) for i in range(lat.n)]


def mobius_naive(sets):
    """mu(bottom, F) straight from the defining recursion."""
    bottom = min(sets, key=len)
    memo = {}

    def mu(F):
        if F == bottom:
            return 1
        if F in memo:
            return memo[F]
        val = -sum(mu(G) for G in sets if G < F or (len(G) < len(F) and G <= F))
        memo[F] = val
        return val

    return {F: mu(F) for F in sets}


def _ranks_by_chains(members):
    ranks = {}
    for F in sorted(members, key=len):
        below = [G for G in members if G != F and G <= F]
        ranks[F] = 1 + max((ranks[G] for G in below), default=-1)
    return ranks


def chi_naive(members):
    """Characteristic polynomial coefficients of an interval, low to high."""
    ranks = _ranks_by_chains(members)
    top_rank = max(ranks.values())
    mu = mobius_naive(list(members))
    coeffs = [0] * (top_rank + 1)
    for F in members:
        coeffs[top_rank - ranks[F]] += mu[F]
    return coeffs


def kl_naive_sets(members):
    """P(t) coefficients by the defining properties: build
    R = sum_{F > bottom} chi([bottom, F]) P([F, top]) and read the tail."""
    members = sorted(members, key=len)
    ranks = _ranks_by_chains(members)
    rk = max(ranks.values())
    if rk == 0:
        return [1]
    bottom = members[0]
    R = [0] * (rk + 1)
    for F in members:
        if F == bottom:
            continue
        lower = [G for G in members if G <= F]
        upper = [G for G in members if F <= G]
        chi = chi_naive(lower)
        pf = kl_naive_sets(upper)
        for i, a in enumerate(chi):
            for j, b in enumerate(pf):
                R[i + j] += a * b
    coeffs = [1]
    for i in range(1, (rk + 1) // 2):
        coeffs.append(R[rk - i])
    return coeffs


def kl_naive(lat):
    return IntPolynomial(kl_naive_sets(lattice_as_sets(lat)))


def z_naive(lat):
    """Z(t) directly from its definition, with naive-oracle P's."""
    sets = lattice_as_sets(lat)
    out = [0] * (lat.rk_total + 1)
    for i, F in enumerate(sets):
        upper = [G for G in sets if F <= G]
        for j, c in enumerate(kl_naive_sets(upper)):
            out[lat.ranks[i] + j] += c
    return IntPolynomial(out)


def chain_count_naive(lat, profile):
    """Multichain count by brute-force iteration over flat tuples."""
    sets = lattice_as_sets(lat)
    coranks = [lat.rk_total - lat.ranks[i] for i in range(lat.n)]
    layers = [[sets[i] for i in range(lat.n) if coranks[i] == c] for c in profile]
    count = 0
    for chain in product(*layers):
        if all(chain[j] <= chain[j + 1] for j in range(len(chain) - 1)):
            count += 1
    return count


# --- combinatorial number oracles


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [p[i] + [first]] + p[i + 1:]
        yield p + [[first]]


def stirling2_by_enumeration(n, k):
    """Count set partitions of an n-set into k blocks, directly."""
    if n == 0:
        return 1 if k == 0 else 0
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == k)


def stirling1_by_polynomial(n, k):
    """Coefficient of t^k in t(t-1)...(t-n+1), multiplied out term by term."""
    coeffs = [1]
    for i in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c
            nxt[j] += -i * c
        coeffs = nxt
    return coeffs[k] if 0 <= k < len(coeffs) else 0


def narayana_by_dyck_paths(n, k):
    """Number of Dyck paths of semilength n with exactly k peaks."""
    def paths(ups, downs, height):
        if ups == 0 and downs == 0:
            yield ""
            return
        if ups > 0:
            for p in paths(ups - 1, downs, height + 1):
                yield "U" + p
        if downs > 0 and height > 0:
            for p in paths(ups, downs - 1, height - 1):
                yield "D" + p

    return sum(1 for p in paths(n, n, 0) if p.count("UD") == k)


def gaussian_by_product(n, k, q):
    """q-binomial via the product formula, evaluated exactly."""
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


# --- root-counting oracles


def sign_changes_on_grid(coeffs, lo, hi, steps=400):
    """Sign changes of the polynomial on a rational grid over [lo, hi];
    equals the root count when the roots are simple and the grid separates
    them."""
    p = IntPolynomial(coeffs)
    lo, hi = Fraction(lo), Fraction(hi)
    step = (hi - lo) / steps
    prev = 0
    changes = 0
    x = lo
    for _ in range(steps + 1):
        v = p(x)
        s = (v > 0) - (v < 0)
        if s != 0:
            if prev != 0 and s != prev:
                changes += 1
            prev = s
        x += step
    return changes


def poly_from_roots(roots):
    """Integer polynomial with the given roots: product of (t - r)."""
    p = IntPolynomial([1])
    for r in roots:
        p = p * IntPolynomial([-r, 1])
    return p


def interlace_by_sorted_roots(f_roots, g_roots):
    """Verdict from known root multisets: 'strict' | 'weak' | 'none'."""
    a = sorted(f_roots)
    b = sorted(g_roots)
    assert len(a) == len(b) + 1
    if not all(a[i] <= b[i] <= a[i + 1] for i in range(len(b))):
        return "none"
    strict = all(a[i] < b[i] < a[i + 1] for i in range(len(b)))
    return "strict" if strict else "weak"


# --- symmetric function oracle (Pieri rule)


def pieri_multiply(mu, r):
    """s_mu * h_r as the list of shapes nu with nu/mu a horizontal strip."""
    mu = list(mu)
    n = len(mu)
    padded = mu + [0]

    def rec(i, remaining, prefix):
        if i == n + 1:
            if remaining == 0:
                yield tuple(x for x in prefix if x > 0)
            return
        lo = padded[i]
        hi = lo + remaining if i == 0 else min(mu[i - 1], lo + remaining)
        for v in range(lo, hi + 1):
            yield from rec(i + 1, remaining - (v - lo), prefix + [v])

    yield from rec(0, r, [])


def schur_expand_h_by_pieri(parts):
    """Expand h_lambda in the Schur basis by repeated Pieri multiplication."""
    state = {(): 1}
    for r in parts:
        if r == 0:
            continue
        nxt = {}
        for mu, c in state.items():
            for nu in pieri_multiply(mu, r):
                nxt[nu] = nxt.get(nu, 0) + c
        state = nxt
    return state
