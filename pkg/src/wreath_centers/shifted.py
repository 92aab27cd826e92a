"""Shifted symmetric functions on |G^*| alphabets and the pointwise
verification of the isomorphism with the invariant algebra.

Power sums live on one alphabet per conjugacy class of G; the basis
change P_r(c) = sum_gamma conj(gamma(c)) P_r(gamma) moves them to one
alphabet per irreducible character.  Irreducible character values of
G wr S_n come out of Hall inner products, which reduce per alphabet to
ordinary symmetric-group characters (Murnaghan-Nakayama); shifted
evaluations use the falling-factorial formulas.  No symmetric function
is ever materialized as a polynomial.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, perm

from .errors import BasisMismatch, SizeMismatch
from .partitions import dim_partition, mn_character, skew_count
from .partitions import union as part_union
from .universal import k_coeff
from .wreath import PartitionFamily, class_order, families_up_to

__all__ = [
    "MultiAlphabetPowerSum",
    "hall_inner",
    "to_character_alphabets",
    "from_character_alphabets",
    "CharacterCalculator",
    "character_value",
    "eta_value",
    "p_sharp_eval",
    "s_sharp_eval",
    "p_sharp_family_eval",
    "f_image_eval",
    "image_eval",
    "verify_theorem71",
]


class MultiAlphabetPowerSum:
    """Finite combination of power-sum products, tagged by which
    alphabet family indexes it ("class" or "char")."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms):
        if basis not in ("class", "char"):
            raise ValueError("basis must be 'class' or 'char'")
        self.basis = basis
        self.terms = {f: c for f, c in terms.items() if c}
        for f in self.terms:
            if f.kind != basis:
                raise BasisMismatch("family %r does not match basis %s" % (f, basis))

    def __eq__(self, other):
        if not isinstance(other, MultiAlphabetPowerSum):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __repr__(self):
        return "MultiAlphabetPowerSum(%s, %d terms)" % (self.basis, len(self.terms))


def hall_inner(f, g, G):
    """<f, g> = sum_Lambda f_Lambda conj(g_Lambda) Z_Lambda, both in
    the class-alphabet basis."""
    if f.basis != "class" or g.basis != "class":
        raise BasisMismatch("hall_inner needs class-alphabet operands")
    total = 0
    for fam, cf in f.terms.items():
        cg = g.terms.get(fam)
        if cg is not None:
            total += cf * complex(cg).conjugate() * class_order(fam, G)[0]
    return complex(total)


def _compositions(m, k):
    # ordered k-tuples of non-negative ints summing to m
    if k == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(m - first, k - 1):
            yield (first,) + rest


def _multinomial(m, comp):
    out = factorial(m)
    for a in comp:
        out //= factorial(a)
    return out


def _convolve(terms, nidx, blocks, weight):
    """Distribute each (src, r, mult) block over nidx destination
    alphabets; weight(src, dst) multiplies per moved part."""
    states = dict(terms)
    for src, r, mult in blocks:
        w = [weight(src, d) for d in range(nidx)]
        nxt = {}
        for comp in _compositions(mult, nidx):
            cw = complex(_multinomial(mult, comp))
            for d, a in enumerate(comp):
                if a:
                    cw *= w[d] ** a
            if cw == 0:
                continue
            add = tuple((r,) * a for a in comp)
            for state, c in states.items():
                merged = tuple(
                    part_union(state[d], add[d]) if comp[d] else state[d]
                    for d in range(nidx)
                )
                nxt[merged] = nxt.get(merged, 0) + c * cw
        states = nxt
    return states


def _expand(fam, nidx, weight):
    blocks = []
    for idx, parts in fam.entries:
        mults = {}
        for p in parts:
            mults[p] = mults.get(p, 0) + 1
        for r, m in sorted(mults.items()):
            blocks.append((idx, r, m))
    start = {tuple(() for _ in range(nidx)): 1.0 + 0.0j}
    states = _convolve(start, nidx, blocks, weight)
    return states


def _drop_noise(terms, eps=1e-12):
    # cancellation across alphabets leaves float dust; strip it
    return {f: c for f, c in terms.items() if abs(c) > eps}


def _states_to_terms(states, kind):
    out = {}
    for state, c in states.items():
        if abs(c) < 1e-14:
            continue
        fam = PartitionFamily(
            ((d, parts) for d, parts in enumerate(state) if parts), kind=kind)
        out[fam] = out.get(fam, 0) + c
    return out


def to_character_alphabets(f, G, chars):
    """P_r(c) = sum_gamma conj(gamma(c)) P_r(gamma), extended
    multiplicatively to products and linearly to combinations."""
    if f.basis != "class":
        raise BasisMismatch("expected class-alphabet input")
    rows = chars.rows
    k = len(rows)
    out = {}
    for fam, coeff in f.terms.items():
        states = _expand(fam, k, lambda c, g: rows[g][c].conjugate())
        for gfam, c in _states_to_terms(states, "char").items():
            out[gfam] = out.get(gfam, 0) + coeff * c
    return MultiAlphabetPowerSum("char", _drop_noise(out))


def from_character_alphabets(f, G, chars):
    """P_r(gamma) = sum_c xi_c^{-1} gamma(c) P_r(c)."""
    if f.basis != "char":
        raise BasisMismatch("expected char-alphabet input")
    rows = chars.rows
    ncls = G.num_classes
    xi = G.xi
    out = {}
    for fam, coeff in f.terms.items():
        states = _expand(fam, ncls, lambda g, c: rows[g][c] / xi[c])
        for cfam, c in _states_to_terms(states, "class").items():
            out[cfam] = out.get(cfam, 0) + coeff * c
    return MultiAlphabetPowerSum("class", _drop_noise(out))


class CharacterCalculator:
    """Irreducible character values X^Lambda_Delta of G wr S_n.

    X^Lambda_Delta = <S_Lambda, P_Delta>: P_Delta is pushed through the
    character-alphabet basis change, and each gamma-alphabet contracts
    against s_{Lambda(gamma)} giving a symmetric-group character.
    """

    def __init__(self, G, chars=None):
        self.G = G
        self.chars = chars if chars is not None else G.character_table()
        self._expansions = {}
        self._x_cache = {}

    def expand_class_family(self, fam):
        """P_fam in the character-alphabet basis: {char family: coeff}."""
        hit = self._expansions.get(fam)
        if hit is None:
            rows = self.chars.rows
            states = _expand(fam, len(rows), lambda c, g: rows[g][c].conjugate())
            hit = _states_to_terms(states, "char")
            self._expansions[fam] = hit
        return hit

    def x_value(self, lam, delta):
        """X^lam_delta for |lam| = |delta|; lam char-indexed, delta a type."""
        if lam.size != delta.size:
            raise SizeMismatch(
                "|lam|=%d vs |delta|=%d" % (lam.size, delta.size))
        key = (lam, delta)
        hit = self._x_cache.get(key)
        if hit is not None:
            return hit
        total = 0.0 + 0.0j
        for mfam, c in self.expand_class_family(delta).items():
            prod = 1
            for g, parts in mfam.entries:
                lpart = lam.get(g)
                if sum(lpart) != sum(parts):
                    prod = 0
                    break
                prod *= mn_character(lpart, parts)
            else:
                # alphabets where mfam is empty need lam empty there too
                midx = {g for g, _ in mfam.entries}
                for g, lpart in lam.entries:
                    if g not in midx and lpart:
                        prod = 0
                        break
            if prod:
                total += complex(c).conjugate() * prod
        self._x_cache[key] = total
        return total

    def dim(self, lam):
        """Degree of the irreducible indexed by lam (a positive integer)."""
        n = lam.size
        ident = PartitionFamily([(0, (1,) * n)] if n else [], kind="class")
        val = self.x_value(lam, ident)
        d = round(val.real)
        if abs(val - d) > 1e-9 * max(1.0, abs(val)) or d <= 0:
            raise ValueError("dimension of %r not a positive integer: %r" % (lam, val))
        return d


@lru_cache(maxsize=8)
def get_calculator(G):
    return CharacterCalculator(G)


def character_value(lam, delta, G, chars=None):
    calc = get_calculator(G) if chars is None else CharacterCalculator(G, chars)
    return calc.x_value(lam, delta)


def eta_value(gamma_idx, fam, chars):
    """Character of the tensor-power representation: product over
    classes of gamma(c)^(number of cycles with product in c)."""
    out = 1.0 + 0.0j
    for c, parts in fam.entries:
        out *= chars.rows[gamma_idx][c] ** len(parts)
    return out


@lru_cache(maxsize=None)
@lru_cache(maxsize=None)
def p_sharp_eval(delta, lam):
    """p#_delta(lam) = (|lam| falling |delta|) / dim lam * chi^lam at
    delta padded with 1-parts; 0 when |lam| < |delta|.  Exact."""
    ntop = sum(lam)
    nlow = sum(delta)
    if ntop < nlow:
        return Fraction(0)
    padded = tuple(sorted(delta + (1,) * (ntop - nlow), reverse=True))
    return Fraction(perm(ntop, nlow) * mn_character(lam, padded), dim_partition(lam))


@lru_cache(maxsize=None)
def s_sharp_eval(rho, lam):
    """s#_rho(lam) = (|lam| falling |rho|) / dim lam * f^{lam/rho};
    0 unless rho fits inside lam.  Exact."""
    cnt = skew_count(lam, rho)
    if not cnt:
        return Fraction(0)
    return Fraction(perm(sum(lam), sum(rho)) * cnt, dim_partition(lam))


def p_sharp_family_eval(delta, point):
    """Product over alphabets of p#_{delta(i)}(point(i)); both families
    must be indexed the same way."""
    out = Fraction(1)
    for i, parts in delta.entries:
        out *= p_sharp_eval(parts, point.get(i))
        if not out:
            return out
    return out


@lru_cache(maxsize=None)
def f_image_eval(delta, point, G):
    """(|G|^{|delta|} / Z_delta) * product of p#_{delta(i)}(point(i)),
    aligning the i-th class with the i-th evaluation partition.  This
    is the image of C_{delta;inf} when |G| = 1 (one alphabet); for
    larger groups the image needs the character-alphabet expansion,
    see image_eval."""
    z = class_order(delta, G)[0]
    return Fraction(G.order ** delta.size, z) * p_sharp_family_eval(delta, point)


def _char_route_eval(calc, delta, point):
    # P#_delta at a character-indexed point: expand P_delta into
    # character alphabets, substitute p# per alphabet, evaluate.
    # Conjugate coefficients keep the alphabet labeled gamma aligned
    # with the irreducibles labeled gamma (the twisted representation
    # on the full gamma row has character values gamma(c), not their
    # conjugates).
    total = 0.0 + 0.0j
    for mfam, c in calc.expand_class_family(delta).items():
        val = p_sharp_family_eval(mfam, point)
        if val:
            total += complex(c).conjugate() * float(val)
    return total


def image_eval(delta, point, G, calc=None):
    """Image of C_{delta;inf} under the isomorphism, evaluated at a
    character-indexed family of partitions.  Exact for |G| = 1."""
    if G.order == 1:
        return f_image_eval(delta, point, G)
    if calc is None:
        calc = get_calculator(G)
    factor = Fraction(G.order ** delta.size, class_order(delta, G)[0])
    return float(factor) * _char_route_eval(calc, delta, point)


def verify_theorem71(G, chars=None, size_cap=2, samples=None,
                     point_size=7, point_cap=200, tol=1e-6):
    """Pointwise checks of the isomorphism; returns a list of rows
    {"check", "input", "lhs", "rhs", "pass", "abs_err"}.

    (a) chain: the image of C_{delta;inf} evaluated at a character
        index Lambda equals the normalized central character
        (|G|^|delta| / Z_delta) (|Lambda| falling |delta|) / dim *
        X^Lambda at padded delta.
    (b) homomorphism: expanding C_{d1;inf} C_{d2;inf} through the
        universal coefficients and applying the map term-wise matches
        the product of the images, exactly, at class-indexed points.
    """
    calc = CharacterCalculator(G, chars) if chars is not None else get_calculator(G)
    ncls = G.num_classes
    nchars = len(calc.chars.rows)
    rows = []

    deltas = [f for f in families_up_to(size_cap, ncls)]
    if samples is not None:
        deltas = deltas[:samples]
    points = [f for f in families_up_to(point_size, nchars, kind="char")]
    trivial_g = G.order == 1
    for delta in deltas:
        factor = Fraction(G.order ** delta.size, class_order(delta, G)[0])
        for lam in points:
            if trivial_g:
                lhs = factor * p_sharp_family_eval(delta, lam)
                if lam.size >= delta.size:
                    lpart = lam.get(0)
                    dpart = delta.get(0)
                    padded = tuple(sorted(
                        dpart + (1,) * (lam.size - delta.size), reverse=True))
                    chi = mn_character(lpart, padded) if lam.size else 1
                    rhs = factor * Fraction(
                        perm(lam.size, delta.size) * chi, dim_partition(lpart))
                else:
                    rhs = Fraction(0)
                ok = lhs == rhs
                err = abs(float(lhs - rhs))
            else:
                lhs = float(factor) * _char_route_eval(calc, delta, lam)
                if lam.size >= delta.size:
                    x = calc.x_value(lam, delta.pad(lam.size))
                    rhs = (float(factor) * perm(lam.size, delta.size)
                           / calc.dim(lam)) * x
                else:
                    rhs = 0.0 + 0.0j
                err = abs(lhs - rhs)
                ok = err <= tol * max(1.0, abs(rhs))
            rows.append({
                "check": "chain",
                "input": {"delta": delta.to_json(), "lam": lam.to_json()},
                "lhs": _fmt(lhs),
                "rhs": _fmt(rhs),
                "pass": bool(ok),
                "abs_err": float(err),
            })

    proper = [f for f in families_up_to(size_cap, ncls) if f.is_proper()]
    pairs = [(a, b) for i, a in enumerate(proper) for b in proper[i:]]
    if samples is not None:
        pairs = pairs[:samples]
    for d1, d2 in pairs:
        window = [
            g for g in families_up_to(d1.size + d2.size, ncls)
            if max(d1.size, d2.size) <= g.size
        ]
        kvec = [(g, k_coeff(d1, d2, g, G)) for g in window]
        kvec = [(g, k) for g, k in kvec if k]
        pts = [f for f in families_up_to(
            min(d1.size + d2.size + 1, point_size), nchars,
            kind="char")][:point_cap]
        for pt in pts:
            v1 = image_eval(d1, pt, G, calc)
            v2 = image_eval(d2, pt, G, calc)
            rhs = v1 * v2
            if trivial_g:
                lhs = Fraction(0)
                for g, k in kvec:
                    lhs += k * image_eval(g, pt, G, calc)
                ok = lhs == rhs
                err = abs(float(lhs - rhs))
            else:
                lhs = 0.0 + 0.0j
                for g, k in kvec:
                    lhs += k * image_eval(g, pt, G, calc)
                err = abs(lhs - rhs)
                ok = err <= tol * max(1.0, abs(rhs))
            rows.append({
                "check": "homomorphism",
                "input": {"delta1": d1.to_json(), "delta2": d2.to_json(),
                          "point": pt.to_json()},
                "lhs": _fmt(lhs),
                "rhs": _fmt(rhs),
                "pass": bool(ok),
                "abs_err": float(err),
            })
    return rows


def _fmt(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return "%.12g%+.12gj" % (v.real, v.imag)
    return str(v)
