"""The invariant partial-permutation algebra and its n-free coefficients.

k_{Lambda Delta}^Gamma counts pairs (x, y) of G-partial permutations of
types Lambda, Delta whose product is one fixed element z of type Gamma
with support {1..|Gamma|}.  The count does not depend on the ambient n,
and the finite-n structure coefficients are recovered from them as

    c_{Lambda Delta}^Gamma(n) = sum_j k_{Lambda Delta}^{Gamma^j} binom(n - |Gamma|, j)

for proper families, where Gamma^j adds j extra 1-parts at the identity
class.  structure_polynomial packages that right-hand side.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .center import DEFAULT_CLASS_CAP, c_coeff
from .errors import GuardrailExceeded, NotProper
from .partial import (
    canonical_partial_representative,
    enumerate_partial_class,
    pp_multiply,
)
from .partitions import union as part_union
from .wreath import PartitionFamily, iter_class

__all__ = [
    "gamma_j",
    "k_coeff",
    "k_coeff_oracle",
    "expand_product_semigroup",
    "PolynomialInN",
    "structure_polynomial",
    "verify_polynomiality",
    "properize",
]

ORACLE_MAX_TOTAL_SIZE = 5
ORACLE_MAX_GROUP_ORDER = 3


def gamma_j(gamma, j):
    """Gamma^j: the family with j extra 1-parts at the identity class."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if j == 0:
        return gamma
    entries = dict(gamma.entries)
    entries[0] = part_union(entries.get(0, ()), (1,) * j)
    return PartitionFamily(entries.items(), kind=gamma.kind)


def properize(fam):
    """Split off the 1-parts at the identity class: (proper part, count)."""
    return fam.strip_ones()


def _family_weight(fam, G):
    # abelian G only: the product of all cycle products is an invariant
    # of the type (classes are singletons), and it is multiplicative
    # under the semigroup product
    acc = 0
    mul = G.mul
    for c, parts in fam.entries:
        g = G.classes[c][0]
        for _ in parts:
            acc = mul[acc][g]
    return acc


@lru_cache(maxsize=None)
def _x_stream(lam, s, G):
    """All partial permutations of type lam with support inside {1..s},
    precompiled to flat 0-based arrays (omega, omega^-1, labels, and a
    support-membership mask) extended by fixed points off the support."""
    out = []
    for sup in combinations(range(s), lam.size):
        for omega, labels in iter_class(lam, sup, G):
            ox = list(range(s))
            xlab = [0] * s
            insupp = [False] * s
            for i in sup:
                ox[i] = omega[i]
                xlab[i] = labels[i]
                insupp[i] = True
            oxinv = [0] * s
            for i in range(s):
                oxinv[ox[i]] = i
            out.append((tuple(ox), tuple(oxinv), tuple(xlab), tuple(insupp)))
    return tuple(out)


@lru_cache(maxsize=None)
def k_coeff(lam, delta, gamma, G):
    """Universal coefficient k_{lam delta}^gamma (n-independent)."""
    s = gamma.size
    if not (max(lam.size, delta.size) <= s <= lam.size + delta.size):
        return 0
    if G.is_abelian:
        wl = _family_weight(lam, G)
        wd = _family_weight(delta, G)
        if G.mul[wl][wd] != _family_weight(gamma, G):
            return 0
    z = canonical_partial_representative(gamma, G)
    zomega = [z.omega[i + 1] - 1 for i in range(s)]
    zlab = [z.labels[i + 1] for i in range(s)]
    zoinv = [0] * s
    for i in range(s):
        zoinv[zomega[i]] = i
    mul, inv = G.mul, G.inv
    cls_of = G.class_of
    dsize = delta.size
    dcounter = {}
    for c, parts in delta.entries:
        for p in parts:
            dcounter[(c, p)] = dcounter.get((c, p), 0) + 1
    rng = range(s)
    total = 0
    for ox, oxinv, xlab, insupp in _x_stream(lam, s, G):
        # solve y = x~^{-1} z~ inside the symmetric algebra of the
        # support of z: omega_y = omega_z o omega_x^{-1} read left to
        # right, label_i = xlab(omega_x(omega_z^{-1}(i)))^{-1} * zlab(i)
        oy = [zomega[oxinv[i]] for i in rng]
        ylab = [mul[inv[xlab[ox[zoinv[i]]]]][zlab[i]] for i in rng]
        # mandatory support: points where y acts, plus the points of z
        # not covered by x (the factor y must supply those)
        mand = [oy[i] != i or ylab[i] != 0 or not insupp[i] for i in rng]
        mlen = sum(mand)
        e = dsize - mlen
        if e < 0:
            continue
        # type of y restricted to the mandatory set, plus e trivial
        # 1-parts, must be exactly delta
        tm = {}
        seen = [False] * s
        for start in rng:
            if not mand[start] or seen[start]:
                continue
            seen[start] = True
            acc = ylab[start]
            length = 1
            j = oy[start]
            while j != start:
                seen[j] = True
                acc = mul[acc][ylab[j]]
                length += 1
                j = oy[j]
            key = (cls_of[acc], length)
            tm[key] = tm.get(key, 0) + 1
        if e:
            tm[(0, 1)] = tm.get((0, 1), 0) + e
        if tm == dcounter:
            total += comb(s - mlen, e)
    return total


def expand_product_semigroup(lam, delta, n, G):
    """Brute-force product of the two class sums inside P^G_n: a dict
    {partial permutation: coefficient} over all |C_lam| * |C_delta| pairs."""
    if lam.size + delta.size > ORACLE_MAX_TOTAL_SIZE:
        raise GuardrailExceeded(
            "|lam|+|delta|=%d exceeds oracle guardrail %d"
            % (lam.size + delta.size, ORACLE_MAX_TOTAL_SIZE))
    if G.order > ORACLE_MAX_GROUP_ORDER:
        raise GuardrailExceeded(
            "|G|=%d exceeds oracle guardrail %d" % (G.order, ORACLE_MAX_GROUP_ORDER))
    ys = list(enumerate_partial_class(delta, n, G))
    acc = {}
    for x in enumerate_partial_class(lam, n, G):
        for y in ys:
            p = pp_multiply(x, y, G)
            acc[p] = acc.get(p, 0) + 1
    return acc


def k_coeff_oracle(lam, delta, gamma, G, n=None):
    """Independent brute-force value of k_{lam delta}^gamma: expand the
    full product in P^G_n and read the coefficient of the canonical
    element of C_{gamma;n}.  Any n >= |lam|+|delta| gives the same
    answer; that stability is itself a testable claim."""
    if n is None:
        n = lam.size + delta.size
    acc = expand_product_semigroup(lam, delta, n, G)
    if gamma.size > n:
        return 0
    z = canonical_partial_representative(gamma, G)
    return acc.get(z, 0)


class PolynomialInN:
    """c_{lam delta}^gamma as a function of n, in binomial form
    sum_j k_j binom(n - base, j) with exact integer k_j."""

    __slots__ = ("gamma", "base_size", "binom_coeffs", "min_n")

    def __init__(self, gamma, base_size, binom_coeffs, min_n):
        self.gamma = gamma
        self.base_size = base_size
        self.binom_coeffs = {j: k for j, k in sorted(binom_coeffs.items()) if k}
        self.min_n = min_n

    @property
    def degree(self):
        return max(self.binom_coeffs, default=-1)

    def evaluate(self, n):
        if n < self.min_n:
            raise ValueError("polynomial only defined for n >= %d" % self.min_n)
        g = self.base_size
        return sum(k * comb(n - g, j) for j, k in self.binom_coeffs.items())

    def monomial(self):
        """Exact rational coefficients (c_0, c_1, ...) with
        c(n) = sum_i c_i n^i."""
        deg = self.degree
        if deg < 0:
            return (Fraction(0),)
        out = [Fraction(0)] * (deg + 1)
        g = self.base_size
        for j, k in self.binom_coeffs.items():
            # binom(n-g, j) = prod_{i=0..j-1} (n - g - i) / j!
            poly = [Fraction(1)]
            for i in range(j):
                shift = Fraction(-(g + i))
                nxt = [Fraction(0)] * (len(poly) + 1)
                for d, cf in enumerate(poly):
                    nxt[d] += cf * shift
                    nxt[d + 1] += cf
                poly = nxt
            scale = Fraction(k, factorial(j))
            for d, cf in enumerate(poly):
                out[d] += cf * scale
        return tuple(out)

    def latex(self):
        if not self.binom_coeffs:
            return "0"
        parts = []
        for j, k in self.binom_coeffs.items():
            if j == 0:
                parts.append(str(k))
            else:
                coef = "" if k == 1 else "%d " % k
                parts.append(r"%s\binom{n-%d}{%d}" % (coef, self.base_size, j))
        return " + ".join(parts)

    def to_json(self):
        return {
            "gamma": self.gamma.to_json(),
            "binomial": {str(j): k for j, k in self.binom_coeffs.items()},
            "monomial": [[str(c.numerator), str(c.denominator)] for c in self.monomial()],
            "degree": self.degree,
            "latex": self.latex(),
        }

    def __repr__(self):
        return "PolynomialInN(%s)" % self.latex()


def structure_polynomial(lam, delta, gamma, G):
    """Theorem-form polynomial for c_{lam delta}^gamma(n); all three
    families must be proper (no 1-parts at the identity class)."""
    for name, fam in (("lam", lam), ("delta", delta), ("gamma", gamma)):
        if not fam.is_proper():
            raise NotProper("%s=%r has 1-parts at the identity class" % (name, fam))
    jmax = lam.size + delta.size - gamma.size
    coeffs = {}
    for j in range(max(jmax, -1) + 1):
        coeffs[j] = k_coeff(lam, delta, gamma_j(gamma, j), G)
    min_n = max(lam.size, delta.size, gamma.size)
    return PolynomialInN(gamma, gamma.size, coeffs, min_n)


def verify_polynomiality(lam, delta, gamma, G, n_range, cap=DEFAULT_CLASS_CAP):
    """Evaluate the polynomial against direct center computation for
    each n; returns {"rows": [...], "all_match": bool}."""
    poly = structure_polynomial(lam, delta, gamma, G)
    rows = []
    ok = True
    for n in n_range:
        predicted = poly.evaluate(n)
        direct = c_coeff(lam.pad(n), delta.pad(n), gamma.pad(n), n, G, cap)
        match = predicted == direct
        ok = ok and match
        rows.append({"n": n, "predicted": predicted, "direct": direct, "match": match})
    return {
        "lam": lam.to_json(),
        "delta": delta.to_json(),
        "gamma": gamma.to_json(),
        "polynomial": poly.to_json(),
        "rows": rows,
        "all_match": ok,
    }
