"""Higher-order Casimir invariants through their torus images.

The order-l central elements act on a highest weight module by an explicit
scalar; projecting onto the torus and shifting by rho identifies them with
symmetric Laurent polynomials in variables L_a (a in {-n..-1,1..n}, plus a
constant slot in type B).  A binomial change of order parameter turns the
family into building blocks G_{n,k}; writing L_a as the formal exponential
e^{eps_a} realises each block inside the character ring.

Two independent constructions of the block characters are provided:

* ``ch_g_via_antisym`` divides an antisymmetrized auxiliary product
  ``H_{n,k}`` by the Weyl denominator, and
* ``ch_g_via_hooks`` assembles signed q-powers of irreducible characters of
  hook shape.

Their exact agreement (for every k) is the central identity of the package
and is what the verification suites establish.  A third, purely numeric
route evaluates the raw rational forms at exact rational points and serves
as an oracle for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .chars import (
    GAElem,
    antisymmetrize,
    divide_by_denominator,
    ga_eval,
    natural_character,
    weyl_character,
)
from .exact import Coeff, NotDivisible, QLaurent
from .roots import (
    LieType,
    NotDominant,
    RootSystem,
    Weight,
    eps,
    hook_weight,
    pairing,
    tau,
)


class DegenerateEvaluation(ZeroDivisionError):
    """An evaluation point makes one of the rational denominators vanish."""


@dataclass(frozen=True)
class CasimirImage:
    """A symmetric character-ring element attached to (type, rank, order).

    ``provenance`` records which construction produced the body, so that
    cross-checks can state what they compared.  The element represented is
    body / denominator; the denominator is 1 for the block characters and
    (q^{-1} - q)^ell for the order-ell torus images, whose coefficients are
    honest rational functions of q (the q-power sums in the numerator do not
    vanish at q = 1, so the denominator never clears).
    """

    lie_type: LieType
    rank: int
    order: int
    body: GAElem
    provenance: str  # one of {"prop4_3", "hook_expansion", "binomial_transform"}
    denominator: QLaurent = QLaurent({0: 1})

    def to_json(self) -> dict:
        return {
            "type": self.lie_type.value,
            "rank": self.rank,
            "k_or_ell": self.order,
            "provenance": self.provenance,
            "body": self.body.to_json(),
            "denominator": self.denominator.to_json(),
        }


def h_element(rs: RootSystem, k: int) -> GAElem:
    """The auxiliary product e^{rho + k eps_1} * prod over positive roots
    alpha with (alpha, eps_1) > 0 of (1 - q^{-2(alpha,eps_1)} e^{-alpha})."""
    if k < 0:
        raise ValueError("k must be >= 0")
    res = GAElem.exponential(rs.rho + eps(rs.rank, 1).scale(k))
    one = GAElem.one(rs.rank)
    for alpha in rs.positive_roots:
        pa = pairing(alpha, eps(rs.rank, 1))
        if pa <= 0:
            continue
        qpow = QLaurent.monomial(int(-8 * pa))  # q^{-2(alpha,eps_1)}
        res = res * (one - GAElem.exponential(-alpha, qpow))
    return res


_chg_cache: dict[tuple, GAElem] = {}


def ch_g_via_antisym(rs: RootSystem, k: int) -> CasimirImage:
    """Block character via the antisymmetrizer route: divide
    q^{c_n - 1} A(H_{n,k}) (plus q^{-k} Delta in type B) by Delta.

    The numerator is divided slice by slice in the q-grading: each q-power
    slice of A(H_{n,k}) is itself alternating, so each slice division is
    exact on its own (and runs in plain integer arithmetic); their sum is
    the single exact quotient.  A NotDivisible escaping from here would be
    an implementation bug and is deliberately not caught.
    """
    key = (rs.lie_type, rs.rank, k, "antisym")
    body = _chg_cache.get(key)
    if body is None:
        if k < 0:
            raise ValueError("k must be >= 0")
        alt = antisymmetrize(h_element(rs, k), rs)
        slices: dict[int, dict] = {}
        for w, c in alt.terms.items():
            for e, v in c.terms.items():
                slices.setdefault(e, {})[w] = QLaurent({0: v})
        body = GAElem.zero(rs.rank)
        for e, terms in slices.items():
            part = divide_by_denominator(GAElem(rs.rank, terms), rs)
            body = body + part.scale(QLaurent.monomial(e + 4 * (rs.c_n - 1)))
        if rs.lie_type is LieType.B:
            body = body + GAElem.constant(
                rs.rank, QLaurent.monomial(-4 * k)
            )
        _chg_cache[key] = body
    return CasimirImage(rs.lie_type, rs.rank, k, body, "prop4_3")


def _hook_char(rs: RootSystem, k: int, r: int, bar: bool = False) -> GAElem:
    return weyl_character(rs, hook_weight(rs, k, r, bar=bar).weight)


def ch_g_via_hooks(rs: RootSystem, k: int) -> CasimirImage:
    """Block character via the signed hook-character expansion.

    The branch is selected by k's parity and range; the expansions terminate
    at the type's largest admissible column index.
    """
    key = (rs.lie_type, rs.rank, k, "hooks")
    body = _chg_cache.get(key)
    if body is not None:
        return CasimirImage(rs.lie_type, rs.rank, k, body, "hook_expansion")
    if k < 0:
        raise ValueError("k must be >= 0")
    n = rs.rank
    lie = rs.lie_type
    if lie is LieType.B:
        top = 2 * n - 1
        qpow = lambda r: QLaurent.monomial(4 * (2 * n - 1 - 2 * r))
        if k == 0:
            const = QLaurent.one()
            for r in range(top + 1):
                const = const + qpow(r)
            body = GAElem.constant(n, const)
        else:
            body = GAElem.zero(n)
            for r in range(0, min(k - 1, top) + 1):
                term = _hook_char(rs, k, r).scale(qpow(r))
                body = body - term if r % 2 else body + term
            if not (1 <= k <= top and k % 2 == 1):
                body = body + GAElem.constant(n, QLaurent.monomial(-4 * k))
    elif lie is LieType.C:
        top = 2 * n
        qpow = lambda r: QLaurent.monomial(4 * (2 * n - 2 * r))
        if k == 0:
            const = QLaurent.zero()
            for r in range(0, n):
                const = const + qpow(r)
            for r in range(n + 1, 2 * n + 1):
                const = const + qpow(r)
            body = GAElem.constant(n, const)
        else:
            body = GAElem.zero(n)
            for r in range(0, min(k - 1, top) + 1):
                t = tau(rs, r)
                if t == 0:
                    continue
                term = _hook_char(rs, k, r).scale(qpow(r))
                sign = (-1) ** r * t
                body = body + term if sign > 0 else body - term
            if 1 <= k <= top and k % 2 == 0:
                body = body - GAElem.constant(n, QLaurent.monomial(-4 * k))
    else:
        top = 2 * n - 2
        qpow = lambda r: QLaurent.monomial(4 * (2 * n - 2 - 2 * r))
        if k == 0:
            const = QLaurent.one()
            for r in range(top + 1):
                const = const + qpow(r)
            body = GAElem.constant(n, const)
        else:
            body = GAElem.zero(n)
            for r in range(0, min(k - 1, top) + 1):
                term = _hook_char(rs, k, r)
                if r == n - 1:
                    term = term + _hook_char(rs, k, r, bar=True)
                term = term.scale(qpow(r))
                body = body - term if r % 2 else body + term
            if 1 <= k <= top and k % 2 == 0:
                body = body + GAElem.constant(n, QLaurent.monomial(-4 * k))
    _chg_cache[key] = body
    return CasimirImage(rs.lie_type, rs.rank, k, body, "hook_expansion")


def closed_form_g0(rs: RootSystem) -> GAElem:
    """The k = 0 block: the constant sum of q^{(2 rho, eps_a)} over the
    index set (the quantum dimension of the natural module)."""
    const = QLaurent.zero()
    for a in rs.iprime:
        const = const + QLaurent.monomial(
            4 * int(pairing(rs.rho.scale(2), eps(rs.rank, a)))
        )
    return GAElem.constant(rs.rank, const)


def closed_form_g1(rs: RootSystem) -> GAElem:
    """The k = 1 block: q^{c_n - 1} times the natural character."""
    return natural_character(rs).scale(QLaurent.monomial(4 * (rs.c_n - 1)))


_hc_cache: dict[tuple, GAElem] = {}


def hc_combination(rs: RootSystem, ell: int) -> GAElem:
    """The binomial combination sum over k of C(ell,k) (-q^{1-c_n})^k times
    the k-th block character: (q^{-1} - q)^ell times the torus image."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    key = (rs.lie_type, rs.rank, ell)
    body = _hc_cache.get(key)
    if body is None:
        body = GAElem.zero(rs.rank)
        minus_qpow = QLaurent.monomial(4 * (1 - rs.c_n), -1)  # -q^{1-c_n}
        for k in range(ell + 1):
            factor = minus_qpow**k * comb(ell, k)
            body = body + ch_g_via_antisym(rs, k).body.scale(factor)
        _hc_cache[key] = body
    return body


def hc_denominator(ell: int) -> QLaurent:
    """(q^{-1} - q)^ell."""
    return QLaurent({-4: 1, 4: -1}) ** ell


def hc_image(rs: RootSystem, ell: int) -> CasimirImage:
    """Torus image of the order-ell invariant, as the exact pair
    (binomial combination, (q^{-1} - q)^ell).

    The quotient exists only over the rational-function field: every
    coefficient of the combination takes a nonzero value at q = 1 at generic
    points, while the denominator vanishes there, so the division is never
    exact in the Laurent ring.  ``hc_divisibility_failures`` documents this;
    evaluation goes through :func:`hc_value`, which divides exact rational
    values instead.
    """
    return CasimirImage(
        rs.lie_type,
        rs.rank,
        ell,
        hc_combination(rs, ell),
        "binomial_transform",
        hc_denominator(ell),
    )


def hc_divisibility_failures(rs: RootSystem, ell: int) -> list[tuple]:
    """Attempt the coefficient-wise exact division of the binomial
    combination by (q^{-1} - q)^ell; return the weights where it fails."""
    den = hc_denominator(ell)
    bad = []
    for w, c in hc_combination(rs, ell).terms.items():
        try:
            c.div_exact(den)
        except NotDivisible:
            bad.append(w)
    return sorted(bad)


def _cancel_v_minus_one(num: QLaurent, den: QLaurent) -> tuple[QLaurent, QLaurent]:
    """Cancel common (v - 1) factors (v = q^{1/4}) from an exact
    numerator/denominator pair; the only rational zero of (q^{-1} - q)
    powers reachable with a rational s (q = s^4) is q = 1, i.e. v = 1,
    and vanishing at v = 1 is exactly divisibility by (v - 1)."""
    factor = QLaurent({1: 1, 0: -1})  # v - 1
    while num.terms and num.evaluate(1) == 0 and den.evaluate(1) == 0:
        num = num.div_exact(factor)
        den = den.div_exact(factor)
    return num, den


def hc_value(
    rs: RootSystem, ell: int, s: Coeff, half_point: Sequence[Coeff]
) -> Fraction:
    """Exact value of the order-ell torus image at e^{eps_i/2} :=
    half_point[i], q^{1/4} := s; removable q = 1 singularities (e.g. the
    classical limit at the all-ones point) are cleared by exact cancellation
    rather than by a limit."""
    img = hc_image(rs, ell)
    den = img.denominator
    s = Fraction(s)
    if den.evaluate(s) != 0:
        return img.body.evaluate(s, half_point) / den.evaluate(s)
    # substitute the point first; the q-dependence collapses to one pair
    num = QLaurent.zero()
    pt = [Fraction(x) for x in half_point]
    for w, c in img.body.terms.items():
        scalar = Fraction(1)
        for x, d in zip(pt, w):
            if d:
                scalar *= x**d
        num = num + c * scalar
    num, den = _cancel_v_minus_one(num, den)
    dval = den.evaluate(s)
    if dval == 0:
        raise DegenerateEvaluation("pole survives cancellation at this point")
    return num.evaluate(s) / dval


# ---------------------------------------------------------------------------
# numeric oracle: the rational forms evaluated at exact points
# ---------------------------------------------------------------------------


def _l_table(rs: RootSystem, half_point: Sequence[Coeff]) -> dict[int, Fraction]:
    """L_a for a in {-n..-1,1..n} from the values of e^{eps_a/2}."""
    if len(half_point) != rs.rank:
        raise ValueError("point length differs from rank")
    table: dict[int, Fraction] = {}
    for i, u in enumerate(half_point, start=1):
        u = Fraction(u)
        if u == 0:
            raise DegenerateEvaluation("zero point entry")
        table[i] = u * u
        table[-i] = 1 / (u * u)
    return table


def _pref_and_p(
    rs: RootSystem, lvals: dict[int, Fraction], q: Fraction, a: int
) -> Fraction:
    """prefactor(a) * P_{n,a} of the rational block form."""
    la = lvals[a]
    inv = 1 / la
    if la == inv:
        raise DegenerateEvaluation("L_a on the unit circle: L_a = 1/L_a")
    if rs.lie_type is LieType.B:
        pref = (q * la - inv / q + q - 1 / q) / (la - inv)
    elif rs.lie_type is LieType.C:
        pref = (q * q * la - inv / (q * q)) / (la - inv)
    else:
        pref = Fraction(1)
    prod = pref
    for b in lvals:
        if b == a or b == -a:
            continue
        den = la - lvals[b]
        if den == 0:
            raise DegenerateEvaluation(f"L_{a} collides with L_{b}")
        prod *= (q * la - lvals[b] / q) / den
    return prod


def g_rational_eval(
    rs: RootSystem, k: int, s: Coeff, half_point: Sequence[Coeff]
) -> Fraction:
    """Value of the raw rational block G_{n,k} at L_a := half_point[a]^2,
    q := s^4.  Independent of the symbolic constructions."""
    if k < 0:
        raise ValueError("k must be >= 0")
    q = Fraction(s) ** 4
    if q == 0:
        raise DegenerateEvaluation("q = 0")
    lvals = _l_table(rs, half_point)
    total = Fraction(0)
    for a in lvals:
        total += _pref_and_p(rs, lvals, q, a) * lvals[a] ** k
    if rs.lie_type is LieType.B:
        total += q ** (-k)
    return total


def c0_rational_eval(
    rs: RootSystem, ell: int, s: Coeff, half_point: Sequence[Coeff]
) -> Fraction:
    """Value of the raw rational order-ell torus image at L_a :=
    half_point[a]^2, q := s^4."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    q = Fraction(s) ** 4
    lvals = _l_table(rs, half_point)
    qdiff = q - 1 / q
    if qdiff == 0:
        raise DegenerateEvaluation("q - 1/q = 0")
    n = rs.rank
    if rs.lie_type is LieType.B:
        shift = q ** (1 - 2 * n)
    elif rs.lie_type is LieType.C:
        shift = q ** (-2 * n)
    else:
        shift = q ** (2 - 2 * n)
    total = Fraction(0)
    for a in lvals:
        core = (shift * lvals[a] - 1) / qdiff
        total += _pref_and_p(rs, lvals, q, a) * core**ell
    if rs.lie_type is LieType.B:
        total += ((q ** (-2 * n) - 1) / qdiff) ** ell
    return total


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------


def _qdim_value(rs: RootSystem, s: Coeff) -> Fraction:
    q = Fraction(s) ** 4
    total = Fraction(0)
    for a in rs.iprime:
        total += q ** int(pairing(rs.rho.scale(2), eps(rs.rank, a)))
    return total


def eigenvalue_direct(
    rs: RootSystem, lam: Weight, ell: int, s: Coeff
) -> Fraction:
    """Scalar by which the order-ell invariant acts on the simple module of
    highest weight lam, from the explicit per-type sum over the index set.

    At ell = 0 the invariant is the quantum dimension of the natural module,
    a constant.  Points where a denominator vanishes (for instance lam_n = 0
    in types B and D, where the two index signs of the last coordinate
    collide) raise DegenerateEvaluation.
    """
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if ell == 0:
        return _qdim_value(rs, s)
    q = Fraction(s) ** 4
    if q in (0, 1, -1):
        raise DegenerateEvaluation("q must avoid 0 and roots of unity")
    lam_rho = lam + rs.rho
    # pair_a = (eps_a, 2 rho + 2 lam + eps_a); its sign-flipped and zero slots
    def pair_a(a: int) -> int:
        if a == 0:
            return 0
        d = lam_rho.dbl[abs(a) - 1]
        return d + 1 if a > 0 else -d + 1

    def pair_b_minus(b: int) -> int:
        # (eps_b, 2 rho + 2 lam - eps_b)
        if b == 0:
            return 0
        d = lam_rho.dbl[abs(b) - 1]
        return d - 1 if b > 0 else -d - 1

    qdiff = q - 1 / q
    total = Fraction(0)
    for a in rs.iprime:
        ea_sq = 0 if a == 0 else 1
        aa = pair_a(a)
        # f(a)
        if a == 0:
            f = Fraction(1)
        else:
            den = q ** (2 * aa) - 1
            if den == 0:
                raise DegenerateEvaluation(f"f({a}) denominator vanishes")
            if rs.lie_type is LieType.B:
                f = 1 + qdiff * q**aa / den
            elif rs.lie_type is LieType.C:
                f = 1 + (1 - q ** (-2)) / den
            else:
                f = 1 - (q**2 - 1) / den
        term = q ** (rs.c_n - ea_sq) * f * ((q ** (aa - rs.c_n) - 1) / qdiff) ** ell
        qa = q**aa
        for b in rs.iprime:
            if b == a:
                continue
            den = qa - q ** pair_a(b)
            if den == 0:
                raise DegenerateEvaluation(
                    f"index pair ({a},{b}) collides at this weight"
                )
            term *= (qa - q ** pair_b_minus(b)) / den
        total += term
    return total


def eigenvalue_via_hc(
    rs: RootSystem, lam: Weight, ell: int, s: Coeff
) -> Fraction:
    """The same scalar from the symbolic torus image: evaluate it at
    e^{eps_a} := q^{(2 eps_a, lam + rho)}."""
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    sf = Fraction(s)
    lam_rho = lam + rs.rho
    # e^{eps_a/2} evaluates to q^{(eps_a, lam+rho)} = s^{2 * dbl(lam+rho)_a}
    half_point = [sf ** (2 * d) for d in lam_rho.dbl]
    if ell == 0:
        return ga_eval(ch_g_via_antisym(rs, 0).body, s, half_point)
    return hc_value(rs, ell, s, half_point)


# ---------------------------------------------------------------------------
# constituents and stability
# ---------------------------------------------------------------------------


def constituents(rs: RootSystem, k: int) -> list[tuple[int, tuple, int]]:
    """Constituent list of the k-th block, normalized for cross-rank
    comparison.

    Each entry is (q-power, weight, multiplicity).  Hook entries report the
    q-power relative to q^{2n} (so it is rank-free) and the weight as its
    partition tuple; the constant term, when present, is reported with its
    absolute power -k and the empty tuple.
    """
    n = rs.rank
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    entries: list[tuple[int, tuple, int]] = []
    for r in range(k):
        if rs.lie_type is LieType.B:
            offset = -1 - 2 * r
        elif rs.lie_type is LieType.C:
            offset = -2 * r
        else:
            offset = -2 - 2 * r
        parts = (k - r,) + (1,) * r
        entries.append((offset, parts, (-1) ** r))
        if rs.lie_type is LieType.D and r == n - 1:
            bar = hook_weight(rs, k, r, bar=True).weight
            entries.append(
                (offset, tuple(int(c) for c in bar.coords), (-1) ** r)
            )
    if k % 2 == 0:
        sign = -1 if rs.lie_type is LieType.C else 1
        entries.append((-k, (), sign))
    return sorted(entries)
