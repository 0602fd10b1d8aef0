"""Fast big-integer engine for the four contraction-closed families: braid,
type-B reflection arrangement, uniform U_{m,d}, and the full vector matroid
over F_q.

Whitney tables W_d(k) / w_d(k) are filled from the families' counting
formulas; Kazhdan-Lusztig coefficients then come from the linear recursion
over coranks, never touching a lattice.  Everything cross-validates against
the lattice-based computations at small rank.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .klz import enumerate_index_tuples, t_index
from .matroid import (ExplicitFlats, GraphSpec, LinearVectors, MatroidSpec,
                      UniformSpec)
from .polyarith import (IntPolynomial, RatPolynomial, TruncatedSeries,
                        series_exp, series_inv, series_log, series_sqrt_inv)


def binomial(n: int, k: int) -> int:
    """C(n, k), 0 outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, 0 outside the triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind:
    t(t-1)...(t-n+1) = sum_k s(n,k) t^k.  0 outside the triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return stirling1_signed(n - 1, k - 1) - (n - 1) * stirling1_signed(n - 1, k)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """q-binomial coefficient by the q-Pascal recurrence
    C_q(n,k) = C_q(n-1,k-1) + q^k C_q(n-1,k); 0 outside the triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return gaussian_binomial(n - 1, k - 1, q) + q ** k * gaussian_binomial(n - 1, k, q)


def narayana(n: int, k: int) -> int:
    """Narayana number N(n, k) = C(n,k) C(n,k-1) / n; 0 out of range."""
    if not 1 <= k <= n:
        return 0
    num = binomial(n, k) * binomial(n, k - 1)
    assert num % n == 0
    return num // n


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, q + 1):
        if p * p > q:
            return True  # q itself is prime
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


@dataclass(frozen=True)
class NiceFamily:
    """One of the four contraction-closed families.

    kind is 'braid', 'typeb', 'uniform' (param = m >= 1) or 'qvec'
    (param = prime power q >= 2).
    """
    kind: str
    param: int | None = None

    def __post_init__(self):
        if self.kind in ("braid", "typeb"):
            if self.param is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        elif self.kind == "uniform":
            if self.param is None or self.param < 1:
                raise ValueError("uniform family needs m >= 1")
        elif self.kind == "qvec":
            if self.param is None or not _is_prime_power(self.param):
                raise ValueError("qvec family needs a prime power q >= 2")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    def __str__(self):
        if self.param is None:
            return self.kind
        return f"{self.kind}:{self.param}"


BRAID = NiceFamily("braid")
TYPE_B = NiceFamily("typeb")


def uniform_family(m: int) -> NiceFamily:
    return NiceFamily("uniform", m)


def qvec_family(q: int) -> NiceFamily:
    return NiceFamily("qvec", q)


def parse_family(text: str) -> NiceFamily:
    """Parse 'braid', 'typeb', 'uniform:m', 'qvec:q'."""
    kind, _, param = text.strip().lower().partition(":")
    if param:
        return NiceFamily(kind, int(param))
    return NiceFamily(kind)


@dataclass
class WhitneyTables:
    """Precomputed W_d(k) (flat counts by corank) and w_d(k) (characteristic
    polynomial coefficients) for 0 <= k <= d <= d_max."""
    family: NiceFamily
    d_max: int
    W: list
    w: list
    _kl: list = field(default_factory=list, repr=False)

    def W_val(self, d: int, k: int) -> int:
        if 0 <= k <= d <= self.d_max:
            return self.W[d][k]
        return 0

    def w_val(self, d: int, k: int) -> int:
        if 0 <= k <= d <= self.d_max:
            return self.w[d][k]
        return 0


def build_tables(family: NiceFamily, d_max: int) -> WhitneyTables:
    """Fill the Whitney tables from the family's counting formulas."""
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    kind, p = family.kind, family.param
    W = []
    w = []
    for d in range(d_max + 1):
        if kind == "braid":
            Wrow = [stirling2(d + 1, k + 1) for k in range(d + 1)]
            wrow = [stirling1_signed(d + 1, k + 1) for k in range(d + 1)]
        elif kind == "typeb":
            Wrow = [sum(2 ** (j - k) * binomial(d, j) * stirling2(j, k)
                        for j in range(k, d + 1))
                    for k in range(d + 1)]
            wrow = [(-1) ** (d - k) * sum((-2) ** (d - j) * binomial(j, k) * stirling1_signed(d, j)
                                          for j in range(k, d + 1))
                    for k in range(d + 1)]
        elif kind == "uniform":
            Wrow = [1 if k == 0 else binomial(d + p, k + p) for k in range(d + 1)]
            wrow = []
            for k in range(d + 1):
                if k > 0 or d == 0:
                    wrow.append((-1) ** (d - k) * binomial(d + p, k + p))
                else:
                    wrow.append(sum((-1) ** (d + j) * binomial(d + p, d + j)
                                    for j in range(p + 1)))
        else:  # qvec
            Wrow = [gaussian_binomial(d, k, p) for k in range(d + 1)]
            wrow = [(-1) ** (d - k) * p ** comb(d - k, 2) * gaussian_binomial(d, k, p)
                    for k in range(d + 1)]
        W.append(Wrow)
        w.append(wrow)
    return WhitneyTables(family, d_max, W, w)


def _kl_coeffs(tables: WhitneyTables, d: int) -> tuple:
    """Coefficient tuple of P_d(t), memoized over ranks 0..d.

    c_d(i) = sum_k W_d(k) c_k(k-i) - sum_k W_d(k) c_k(i-d+k) for 2i < d,
    with k running over coranks 0..d-1 and c_k(j) = 0 out of range.
    """
    if d > tables.d_max:
        raise ValueError(f"d={d} exceeds table range d_max={tables.d_max}")
    memo = tables._kl
    while len(memo) <= d:
        n = len(memo)
        if n == 0:
            memo.append((1,))
            continue
        W = tables.W[n]
        coeffs = [1]
        for i in range(1, (n + 1) // 2):
            total = 0
            for k in range(n):
                ck = memo[k]
                j1 = k - i
                if 0 <= j1 < len(ck):
                    total += W[k] * ck[j1]
                j2 = i - n + k
                if 0 <= j2 < len(ck):
                    total -= W[k] * ck[j2]
            coeffs.append(total)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        memo.append(tuple(coeffs))
    return memo[d]


def kl_family(tables: WhitneyTables, d: int) -> IntPolynomial:
    """P_d(t) by the corank-indexed linear recursion; no lattice involved."""
    return IntPolynomial(_kl_coeffs(tables, d))


def z_family(tables: WhitneyTables, d: int) -> IntPolynomial:
    """Z_d(t) = sum_k W_d(k) t^{d-k} P_k(t)."""
    if d > tables.d_max:
        raise ValueError(f"d={d} exceeds table range d_max={tables.d_max}")
    out = [0] * (d + 1)
    for k in range(d + 1):
        Wdk = tables.W[d][k]
        for j, c in enumerate(_kl_coeffs(tables, k)):
            out[d - k + j] += Wdk * c
    return IntPolynomial(out)


def p_from_z_inversion(tables: WhitneyTables, d: int) -> IntPolynomial:
    """P_d(t) = sum_k w_d(k) t^{d-k} Z_k(t): the inverse half of the
    transform between the P and Z generating sequences."""
    out = [0] * (d + 1)
    for k in range(d + 1):
        wdk = tables.w[d][k]
        if wdk == 0:
            continue
        zk = z_family(tables, k)
        for j, c in enumerate(zk.coeffs):
            out[d - k + j] += wdk * c
    return IntPolynomial(out)


def whitney_multi_family(tables: WhitneyTables, d: int, profile) -> int:
    """Multi-indexed Whitney number of the rank-d family member:
    W_d(i_r,...,i_1) = prod_j W_{i_{j+1}}(i_j) with i_{r+1} = d.

    The profile is corank-major, [i_r, ..., i_1], as everywhere else.
    """
    chain = [int(i) for i in reversed(list(profile))] + [d]
    total = 1
    for j in range(len(chain) - 1):
        total *= tables.W_val(chain[j + 1], chain[j])
        if total == 0:
            return 0
    return total


def kl_closed_family(tables: WhitneyTables, d: int, i: int) -> int:
    """c_d(i) as the signed sum over index tuples of products of table
    entries W_{a_{t_{j+1}(S)}+a_j}(a_{t_j(S)}+a_{j-1})."""
    if i < 1:
        raise ValueError("closed formula applies for i >= 1")
    total = 0
    for tup in enumerate_index_tuples(i, d):
        a, s, r = tup.a, tup.subset, tup.r
        term = tup.sign
        for j in range(1, r + 1):
            term *= tables.W_val(a[t_index(j + 1, s, r)] + a[j],
                                 a[t_index(j, s, r)] + a[j - 1])
            if term == 0:
                break
        total += term
    return total


def q_shift_check(q: int, d_max: int) -> bool:
    """Exactly verify Z_d(t) = Z_{d-1}(qt) + t Z_{d-1}(t) for 1 <= d <= d_max
    in the F_q vector-matroid family."""
    if q < 2 or d_max < 1:
        raise ValueError("need q >= 2 and d_max >= 1")
    tables = build_tables(qvec_family(q), d_max)
    for d in range(1, d_max + 1):
        zd = z_family(tables, d)
        zprev = z_family(tables, d - 1)
        scaled = IntPolynomial([c * q ** j for j, c in enumerate(zprev.coeffs)])
        if zd != scaled + zprev.shift(1):
            return False
    return True


# ---------------------------------------------------------------------------
# truncated generating-series identities


def series_identity_check(family: NiceFamily, order: int) -> bool:
    """Verify, to the given order in u with exact rational-polynomial
    coefficients, the exponential generating-function identities of the braid
    and type-B families:

      * the closed forms of g_k (EGF of w_d(k)) and G_k (EGF of W_d(k)),
      * P(t,u) = sum_k t^{-k} Z_k(t) g_k(tu) and
        Z(t,u) = sum_k t^{-k} P_k(t) G_k(tu).
    """
    if order > 16:
        raise ValueError("order capped at 16")
    if family.kind not in ("braid", "typeb"):
        raise ValueError("series identities are implemented for braid and typeb")
    tables = build_tables(family, order)
    N = order

    one = TruncatedSeries.constant(N, 1)
    tu = TruncatedSeries.u_monomial(N, RatPolynomial((0, 1)), 1)

    if family.kind == "braid":
        log1tu = series_log(one + tu)
        inv1tu = series_inv(one + tu)
        exp_tu = series_exp(tu)
        expm1 = exp_tu - 1

        def g_closed(k):
            return inv1tu * (log1tu ** k) * Fraction(1, factorial(k))

        def G_closed(k):
            return exp_tu * (expm1 ** k) * Fraction(1, factorial(k))
    else:
        two_tu = tu * 2
        log2tu = series_log(one + two_tu)
        sqrtinv = series_sqrt_inv(one + two_tu)
        exp_tu = series_exp(tu)
        expm1_2 = series_exp(two_tu) - 1

        def g_closed(k):
            return sqrtinv * (log2tu ** k) * Fraction(1, 2 ** k * factorial(k))

        def G_closed(k):
            return exp_tu * (expm1_2 ** k) * Fraction(1, 2 ** k * factorial(k))

    def egf(column) -> TruncatedSeries:
        polys = []
        for d in range(N + 1):
            c = Fraction(column(d), factorial(d))
            polys.append(RatPolynomial([Fraction(0)] * d + [c]) if c else RatPolynomial())
        return TruncatedSeries(N, polys)

    g_series = []
    G_series = []
    for k in range(N + 1):
        gk = g_closed(k)
        Gk = G_closed(k)
        if gk != egf(lambda d, k=k: tables.w_val(d, k)):
            return False
        if Gk != egf(lambda d, k=k: tables.W_val(d, k)):
            return False
        g_series.append(gk)
        G_series.append(Gk)

    def poly_series(poly_of_d) -> TruncatedSeries:
        polys = []
        for d in range(N + 1):
            p = poly_of_d(d)
            polys.append(RatPolynomial([Fraction(c, factorial(d)) for c in p.coeffs]))
        return TruncatedSeries(N, polys)

    P_series = poly_series(lambda d: kl_family(tables, d))
    Z_series = poly_series(lambda d: z_family(tables, d))

    rhs_P = TruncatedSeries.constant(N, 0)
    rhs_Z = TruncatedSeries.constant(N, 0)
    for k in range(N + 1):
        zk = RatPolynomial(z_family(tables, k).coeffs)
        pk = RatPolynomial(kl_family(tables, k).coeffs)
        rhs_P = rhs_P + (g_series[k] * zk).divide_t_power(k)
        rhs_Z = rhs_Z + (G_series[k] * pk).divide_t_power(k)
    return P_series == rhs_P and Z_series == rhs_Z


# ---------------------------------------------------------------------------
# lattice realizations for cross-validation


def lattice_spec(family: NiceFamily, d: int) -> MatroidSpec:
    """A matroid spec whose lattice of flats realizes the rank-d member."""
    if d < 0:
        raise ValueError("rank must be nonnegative")
    kind, p = family.kind, family.param
    if kind == "braid":
        nv = d + 1
        return GraphSpec(nv, tuple((u, v) for u in range(nv) for v in range(u + 1, nv)))
    if kind == "typeb":
        vectors = []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            vectors.append(tuple(e))
        for i in range(d):
            for j in range(i + 1, d):
                for sgn in (-1, 1):
                    e = [0] * d
                    e[i] = 1
                    e[j] = sgn
                    vectors.append(tuple(e))
        return LinearVectors(tuple(vectors))
    if kind == "uniform":
        return UniformSpec(p, d)
    return ExplicitFlats(*qvec_flats(p, d))


def qvec_flats(q: int, d: int):
    """(ground size, flats) of the matroid of all nonzero vectors of F_q^d,
    with flats the subspaces.  Implemented for prime q (vector arithmetic is
    mod q); the Whitney tables cover general prime powers."""
    if any(q % p == 0 for p in range(2, q)) or q < 2:
        raise ValueError("lattice realization needs q prime")
    if d == 0:
        return 0, (frozenset(),)
    vectors = []
    for code in range(1, q ** d):
        v = []
        c = code
        for _ in range(d):
            v.append(c % q)
            c //= q
        vectors.append(tuple(v))
    index = {v: i for i, v in enumerate(vectors)}

    def span_closure(subspace: frozenset, extra) -> frozenset:
        # subspace is a set of vectors closed under the field operations
        # (zero omitted); adding a vector spans q^k new combinations
        members = set(subspace) | {extra}
        changed = True
        while changed:
            changed = False
            for a in list(members):
                for b in list(members):
                    for c in range(1, q):
                        s = tuple((x + c * y) % q for x, y in zip(a, b))
                        if any(s) and s not in members:
                            members.add(s)
                            changed = True
        return frozenset(members)

    subspaces = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for sub in frontier:
            for v in vectors:
                if v not in sub:
                    bigger = span_closure(sub, v)
                    if bigger not in subspaces:
                        subspaces.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    flats = tuple(frozenset(index[v] for v in sub) for sub in subspaces)
    return len(vectors), flats
