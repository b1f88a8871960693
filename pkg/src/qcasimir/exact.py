"""Exact arithmetic foundations: the q-Laurent ring and abstract polynomials.

All scalar arithmetic in this package is exact.  Rational numbers are
``fractions.Fraction`` (plain ``int`` is accepted wherever a rational is,
as a fast path).  The central object is :class:`QLaurent`, a sparse Laurent
polynomial in an internal variable ``v = q^(1/4)``: exponents are stored in
quarter units, so every pairing of weights that occurs in types B, C, D
(including spin weights, whose pairings land in (1/4)Z) stays on the grid.

:class:`EPoly` is a sparse polynomial in a fixed number of abstract symbols
``E1..En`` with :class:`QLaurent` coefficients; it carries no meaning of its
own and is used to express characters "in the exterior-power basis".

Exact division is single-variable leading-term elimination for
:class:`QLaurent` and box-bounded lexicographic elimination for
:class:`EPoly`; both either return an exact quotient or raise
:class:`NotDivisible`.  Determinants over any of these rings are computed by
cofactor expansion (default at the sizes used here) or by fraction-free
Bareiss elimination, which serve as cross-checks of one another.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]


class ExactArithmeticError(ArithmeticError):
    """Base class for errors raised by the exact rings."""


class DivisionByZero(ExactArithmeticError):
    pass


class NotDivisible(ExactArithmeticError):
    """Exact division requested but the remainder is nonzero."""


class ZeroBase(ExactArithmeticError):
    """Evaluation point has a zero entry where an inverse is needed."""


def _norm_coeff(c: Coeff) -> Coeff:
    # Collapse Fraction with denominator 1 to int so hot loops stay on ints.
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class QLaurent:
    """Sparse Laurent polynomial in q with exponents on the quarter grid.

    ``terms`` maps the exponent of ``v = q^(1/4)`` (an int) to a nonzero
    rational coefficient.  The zero polynomial has an empty map.  Instances
    are immutable; all operations return new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        if terms:
            self.terms = {e: _norm_coeff(c) for e, c in terms.items() if c}
        else:
            self.terms = {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "QLaurent":
        return QLaurent()

    @staticmethod
    def one() -> "QLaurent":
        return QLaurent({0: 1})

    @staticmethod
    def rational(c: Coeff) -> "QLaurent":
        return QLaurent({0: c})

    @staticmethod
    def monomial(quarter_exp: int, coeff: Coeff = 1) -> "QLaurent":
        return QLaurent({quarter_exp: coeff})

    @staticmethod
    def q_power(power, coeff: Coeff = 1) -> "QLaurent":
        """q**power with power in units of q; power may be int or Fraction
        with denominator dividing 4."""
        quarter = Fraction(power) * 4
        if quarter.denominator != 1:
            raise ValueError(f"exponent {power} not on the quarter grid")
        return QLaurent({quarter.numerator: coeff})

    # -- ring structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QLaurent):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == QLaurent.rational(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "QLaurent") -> "QLaurent":
        if not isinstance(other, QLaurent):
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            nc = res.get(e, 0) + c
            if nc:
                res[e] = nc
            elif e in res:
                del res[e]
        out = QLaurent.__new__(QLaurent)
        out.terms = res
        return out

    def __neg__(self) -> "QLaurent":
        out = QLaurent.__new__(QLaurent)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        if not isinstance(other, QLaurent):
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            nc = res.get(e, 0) - c
            if nc:
                res[e] = nc
            elif e in res:
                del res[e]
        out = QLaurent.__new__(QLaurent)
        out.terms = res
        return out

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, (int, Fraction)):
            if not other:
                return QLaurent()
            out = QLaurent.__new__(QLaurent)
            out.terms = {e: _norm_coeff(c * other) for e, c in self.terms.items()}
            return out
        if not isinstance(other, QLaurent):
            return NotImplemented
        res: dict[int, Coeff] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = ea + eb
                nc = res.get(e, 0) + ca * cb
                if nc:
                    res[e] = nc
                elif e in res:
                    del res[e]
        out = QLaurent.__new__(QLaurent)
        out.terms = res
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if n < 0:
            raise ValueError("negative powers: divide exactly instead")
        result = QLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- division and evaluation ----------------------------------------

    def div_exact(self, den: "QLaurent") -> "QLaurent":
        """Exact quotient self/den; raises NotDivisible if remainder is nonzero.

        Leading-term elimination from the top exponent.  The quotient of
        Laurent polynomials, when it exists, has top (bottom) exponent equal
        to the difference of tops (bottoms), which bounds the search and
        guarantees termination.
        """
        if not den.terms:
            raise DivisionByZero("division by the zero polynomial")
        if not self.terms:
            return QLaurent()
        lead_den = max(den.terms)
        low_bound = min(self.terms) - min(den.terms)
        den_lead_coeff = den.terms[lead_den]
        rem = dict(self.terms)
        quot: dict[int, Coeff] = {}
        while rem:
            lead_rem = max(rem)
            t = lead_rem - lead_den
            if t < low_bound:
                raise NotDivisible("nonzero remainder in q-Laurent division")
            c = _norm_coeff(Fraction(rem[lead_rem]) / den_lead_coeff)
            quot[t] = c
            for e, dc in den.terms.items():
                k = e + t
                nc = rem.get(k, 0) - c * dc
                if nc:
                    rem[k] = nc
                elif k in rem:
                    del rem[k]
        return QLaurent(quot)

    def evaluate(self, s: Coeff) -> Fraction:
        """Exact value with q^(1/4) := s, i.e. q := s**4."""
        s = Fraction(s)
        if s == 0:
            raise ZeroBase("evaluation at q^(1/4) = 0")
        total = Fraction(0)
        powers: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            p = powers.get(e)
            if p is None:
                p = powers[e] = s**e
            total += c * p
        return total

    # -- inspection / serialization --------------------------------------

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def is_unit_monomial(self) -> bool:
        """True for c*q^(e/4) with c nonzero (invertible elements)."""
        return len(self.terms) == 1

    def to_json(self) -> list:
        return [
            {"e": e, "c": str(Fraction(c))} for e, c in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(data: Iterable[Mapping]) -> "QLaurent":
        return QLaurent({int(t["e"]): Fraction(t["c"]) for t in data})

    def __repr__(self) -> str:
        return f"QLaurent({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            if e == 0:
                parts.append(str(c))
                continue
            if c == 1:
                mon = ""
            elif c == -1:
                mon = "-"
            else:
                mon = f"{c}*"
            if e % 4 == 0:
                exp = str(e // 4)
            else:
                exp = f"{Fraction(e, 4)}"
            parts.append(f"{mon}q^{exp}" if exp != "1" else f"{mon}q")
        return " + ".join(parts).replace("+ -", "- ")


QL_ZERO = QLaurent.zero()
QL_ONE = QLaurent.one()


class EPoly:
    """Sparse polynomial in abstract symbols E1..En over the q-Laurent ring.

    ``terms`` maps exponent tuples (len == nsyms, entries >= 0) to nonzero
    QLaurent coefficients.  Immutable.
    """

    __slots__ = ("nsyms", "terms")

    def __init__(self, nsyms: int, terms: Mapping[tuple, QLaurent] | None = None):
        self.nsyms = nsyms
        if terms:
            self.terms = {m: c for m, c in terms.items() if c}
        else:
            self.terms = {}

    @staticmethod
    def zero(nsyms: int) -> "EPoly":
        return EPoly(nsyms)

    @staticmethod
    def constant(nsyms: int, c: QLaurent) -> "EPoly":
        return EPoly(nsyms, {(0,) * nsyms: c})

    @staticmethod
    def one(nsyms: int) -> "EPoly":
        return EPoly.constant(nsyms, QL_ONE)

    @staticmethod
    def symbol(nsyms: int, i: int, coeff: QLaurent = QL_ONE) -> "EPoly":
        """The symbol E_i (1-based)."""
        if not 1 <= i <= nsyms:
            raise IndexError(f"symbol index {i} out of range 1..{nsyms}")
        exps = [0] * nsyms
        exps[i - 1] = 1
        return EPoly(nsyms, {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EPoly):
            return NotImplemented
        return self.nsyms == other.nsyms and self.terms == other.terms

    def _check(self, other: "EPoly"):
        if self.nsyms != other.nsyms:
            raise ValueError("mixed symbol counts")

    def __add__(self, other: "EPoly") -> "EPoly":
        self._check(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            nc = res.get(m)
            nc = c if nc is None else nc + c
            if nc:
                res[m] = nc
            elif m in res:
                del res[m]
        out = EPoly.__new__(EPoly)
        out.nsyms, out.terms = self.nsyms, res
        return out

    def __neg__(self) -> "EPoly":
        out = EPoly.__new__(EPoly)
        out.nsyms = self.nsyms
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "EPoly") -> "EPoly":
        return self + (-other)

    def __mul__(self, other: "EPoly") -> "EPoly":
        self._check(other)
        res: dict[tuple, QLaurent] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                c = ca * cb
                nc = res.get(m)
                nc = c if nc is None else nc + c
                if nc:
                    res[m] = nc
                elif m in res:
                    del res[m]
        out = EPoly.__new__(EPoly)
        out.nsyms, out.terms = self.nsyms, res
        return out

    def __pow__(self, n: int) -> "EPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = EPoly.one(self.nsyms)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: QLaurent) -> "EPoly":
        if not c:
            return EPoly.zero(self.nsyms)
        return EPoly(self.nsyms, {m: v * c for m, v in self.terms.items()})

    def coeff(self, exps: tuple) -> QLaurent:
        return self.terms.get(tuple(exps), QL_ZERO)

    def max_degree(self, i: int) -> int:
        """Largest exponent of symbol E_i (1-based); 0 for the zero poly."""
        if not self.terms:
            return 0
        return max(m[i - 1] for m in self.terms)

    def uses_symbol(self, i: int) -> bool:
        return any(m[i - 1] for m in self.terms)

    def partial(self, i: int) -> "EPoly":
        """Formal partial derivative with respect to E_i (1-based)."""
        res: dict[tuple, QLaurent] = {}
        j = i - 1
        for m, c in self.terms.items():
            if m[j]:
                mm = list(m)
                k = mm[j]
                mm[j] = k - 1
                key = tuple(mm)
                add = c * k
                prev = res.get(key)
                res[key] = add if prev is None else prev + add
        return EPoly(self.nsyms, res)

    def substitute(self, values: Sequence, one):
        """Evaluate with E_i := values[i-1] in any ring with +, *, .scale().

        ``one`` must be the multiplicative identity of the target ring.
        """
        if len(values) != self.nsyms:
            raise ValueError("need one value per symbol")
        total = None
        for m, c in self.terms.items():
            prod = one
            for v, e in zip(values, m):
                if e:
                    prod = prod * v**e
            prod = prod.scale(c)
            total = prod if total is None else total + prod
        if total is None:
            return one.scale(QL_ZERO)
        return total

    def div_exact(self, den: "EPoly") -> "EPoly":
        """Exact quotient via lexicographic leading-term elimination.

        Quotient monomials are confined to the per-symbol degree box
        [0, max_i(num) - max_i(den)]; stepping outside it proves the
        division inexact, which bounds the loop.
        """
        self._check(den)
        if not den.terms:
            raise DivisionByZero("division by the zero polynomial")
        if not self.terms:
            return EPoly.zero(self.nsyms)
        lead_den = max(den.terms)
        den_lead_coeff = den.terms[lead_den]
        box = tuple(
            max(m[i] for m in self.terms) - max(m[i] for m in den.terms)
            for i in range(self.nsyms)
        )
        if any(b < 0 for b in box):
            raise NotDivisible("denominator degree exceeds numerator degree")
        rem = dict(self.terms)
        quot: dict[tuple, QLaurent] = {}
        while rem:
            lead_rem = max(rem)
            t = tuple(a - b for a, b in zip(lead_rem, lead_den))
            if any(x < 0 for x in t) or any(x > b for x, b in zip(t, box)):
                raise NotDivisible("nonzero remainder in polynomial division")
            c = rem[lead_rem].div_exact(den_lead_coeff)
            quot[t] = c
            for m, dc in den.terms.items():
                k = tuple(a + b for a, b in zip(m, t))
                sub = c * dc
                nc = rem.get(k)
                nc = -sub if nc is None else nc - sub
                if nc:
                    rem[k] = nc
                elif k in rem:
                    del rem[k]
        return EPoly(self.nsyms, quot)

    def to_json(self) -> list:
        return [
            {"exps": list(m), "coeff": c.to_json()}
            for m, c in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(nsyms: int, data: Iterable[Mapping]) -> "EPoly":
        return EPoly(
            nsyms,
            {tuple(t["exps"]): QLaurent.from_json(t["coeff"]) for t in data},
        )

    def __repr__(self) -> str:
        return f"EPoly({self.nsyms}, {len(self.terms)} terms)"

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"E{i}" for i in range(1, self.nsyms + 1)]
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            syms = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e
            )
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{syms}" if syms else cs)
        return " + ".join(parts)


def det_cofactor(rows: Sequence[Sequence]) -> object:
    """Determinant by cofactor expansion along the first column."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for i in range(n):
        entry = rows[i][0]
        if not entry:
            continue
        minor = [
            [rows[r][c] for c in range(1, n)] for r in range(n) if r != i
        ]
        term = entry * det_cofactor(minor)
        if i % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] - rows[0][0]  # zero of the ring
    return total


def det_bareiss(rows: Sequence[Sequence]) -> object:
    """Fraction-free Bareiss determinant; every division is exact."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return rows[0][0] - rows[0][0]  # singular: zero of the ring
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                if prev is not None:
                    val = val.div_exact(prev)
                m[i][j] = val
            m[i][k] = None  # cleared; never read again
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def det_exact(rows: Sequence[Sequence]) -> object:
    """Exact determinant; cofactor expansion at the sizes used here."""
    if len(rows) <= 6:
        return det_cofactor(rows)
    return det_bareiss(rows)
