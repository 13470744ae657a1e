"""Exact univariate polynomials, rational functions and Laurent series.

Coefficients live in any exact field implementing the arithmetic operators
(Fraction, or RatFunc itself, which allows towers such as rational functions
in N whose coefficients are rational functions in c).  Plain ints are
promoted to Fraction on entry so that true division never hits int//int.

Everything is exact; no floats appear anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _coerce_scalar(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


class Poly:
    """Dense univariate polynomial; coeffs[k] is the coefficient of x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial having degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] + c
        return Poly(a)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly([Fraction(0)] * k + list(self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top == 0:
                continue
            q = top / lead
            quo[k] = q
            for j, c in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * c
        return Poly(quo), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        return Poly([c / lead for c in self.coeffs])

    def __call__(self, point):
        """Horner evaluation; the point may live in any compatible ring."""
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * point + c
        return Fraction(0) if out is None else out

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over the coefficient field."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    g = poly_gcd(a, b)
    return (a * b).exact_div(g).monic()


class RatFunc:
    """Rational function num/den in one variable, kept in canonical form.

    Canonical means gcd(num, den) = 1 and den monic, so == is structural.
    The variable tag guards against accidentally mixing levels of a tower.
    """

    __slots__ = ("var", "num", "den")

    def __init__(self, num, den=None, var: str = "x"):
        num = _as_poly(num)
        den = Poly([1]) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading()
            if lead != 1:
                num = Poly([c / lead for c in num.coeffs])
                den = den.monic()
        else:
            den = Poly([1])
        self.var = var
        self.num = num
        self.den = den

    @classmethod
    def variable(cls, var: str) -> "RatFunc":
        return cls(Poly.x(), var=var)

    @classmethod
    def const(cls, c, var: str = "x") -> "RatFunc":
        return cls(Poly.const(c), var=var)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _check(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        return RatFunc(_as_poly(other), var=self.var)

    def __add__(self, other) -> "RatFunc":
        other = self._check(other)
        return RatFunc(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            var=self.var,
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, var=self.var)

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "RatFunc":
        return self._check(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        other = self._check(other)
        return RatFunc(self.num * other.num, self.den * other.den, var=self.var)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num, var=self.var)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._check(other) / self

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num, var=self.var)

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k, var=self.var)

    def __call__(self, point):
        """Evaluate at a point of the coefficient field (or a wider ring)."""
        denval = self.den(point)
        if denval == 0:
            raise ZeroDivisionError(f"evaluation at a pole of {self.var}")
        return self.num(point) / denval

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            other = RatFunc(_as_poly(other), var=self.var)
        return (
            self.var == other.var and self.num == other.num and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash(("RatFunc", self.var, self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"RatFunc[{self.var}]({_pretty(self.num, self.var)})"
        return (
            f"RatFunc[{self.var}](({_pretty(self.num, self.var)}) / "
            f"({_pretty(self.den, self.var)}))"
        )


def _pretty(p: Poly, var: str) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(f"{c}")
        elif k == 1:
            parts.append(f"{c}*{var}")
        else:
            parts.append(f"{c}*{var}^{k}")
    return " + ".join(parts)


class LaurentSeries:
    """Truncated expansion at infinity: sum of a_k z^k for k >= min_exp.

    Exponents below ``min_exp`` are unknown (truncated), not zero.
    """

    __slots__ = ("coeffs", "min_exp")

    def __init__(self, coeffs: dict[int, object], min_exp: int):
        self.coeffs = {
            k: _coerce_scalar(c) for k, c in coeffs.items() if k >= min_exp and c != 0
        }
        self.min_exp = min_exp

    def __getitem__(self, k: int):
        if k < self.min_exp:
            raise KeyError(f"exponent {k} below truncation {self.min_exp}")
        return self.coeffs.get(k, Fraction(0))

    @property
    def max_exp(self) -> int:
        return max(self.coeffs, default=self.min_exp)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        me = max(self.min_exp, other.min_exp)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentSeries(out, me)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({k: -c for k, c in self.coeffs.items()}, self.min_exp)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        # product is reliable down to where the unknown tails start to interfere
        me = max(
            self.min_exp + other.max_exp,
            other.min_exp + self.max_exp,
            self.min_exp + other.min_exp,
        )
        out: dict[int, object] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if i + j >= me:
                    out[i + j] = out.get(i + j, 0) + a * b
        return LaurentSeries(out, me)

    def scale(self, c) -> "LaurentSeries":
        return LaurentSeries({k: c * v for k, v in self.coeffs.items()}, self.min_exp)

    def shift(self, k: int) -> "LaurentSeries":
        return LaurentSeries(
            {e + k: c for e, c in self.coeffs.items()}, self.min_exp + k
        )

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equality on the overlap of the two truncation ranges."""
        lo = max(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        return all(self[k] == other[k] for k in range(lo, hi + 1))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentSeries)
            and self.min_exp == other.min_exp
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" for k, c in sorted(self.coeffs.items(), reverse=True)]
        return f"LaurentSeries({' + '.join(terms) or '0'}; O(z^{self.min_exp - 1}))"


def series_expand_at_infinity(f: RatFunc, order: int) -> LaurentSeries:
    """Expansion of f in powers of 1/z with error O(z^{-order-1})."""
    min_exp = -order
    if f.is_zero():
        return LaurentSeries({}, min_exp)
    num, den = f.num, f.den
    lead_exp = num.degree - den.degree
    nterms = lead_exp - min_exp + 1
    if nterms <= 0:
        return LaurentSeries({}, min_exp)
    # in u = 1/z:  f = u^(dd-dn) * rev(num)(u) / rev(den)(u)
    nrev = list(reversed(num.coeffs))
    drev = list(reversed(den.coeffs))
    inv = _power_series_inverse(drev, nterms)
    prod = [Fraction(0)] * nterms
    for i, a in enumerate(nrev[:nterms]):
        if a == 0:
            continue
        for j in range(nterms - i):
            prod[i + j] = prod[i + j] + a * inv[j]
    coeffs = {lead_exp - k: c for k, c in enumerate(prod)}
    return LaurentSeries(coeffs, min_exp)


def _power_series_inverse(coeffs: Sequence, nterms: int) -> list:
    """Inverse of sum c_k u^k with c_0 != 0, to nterms coefficients."""
    c0 = _coerce_scalar(coeffs[0])
    if c0 == 0:
        raise ZeroDivisionError("series has no inverse (zero constant term)")
    inv = [1 / c0]
    for k in range(1, nterms):
        acc = 0
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            acc = acc + _coerce_scalar(coeffs[j]) * inv[k - j]
        inv.append(-acc / c0)
    return inv


def elementary_symmetric(values: Sequence, r: int) -> object:
    """e_r of the given values; e_0 = 1 and e_r = 0 for r > len(values)."""
    if r < 0:
        raise ValueError("r must be >= 0")
    # running coefficients of prod (1 + x_i t) up to degree r
    es = [Fraction(1)] + [Fraction(0)] * r
    for x in values:
        x = _coerce_scalar(x)
        for k in range(r, 0, -1):
            es[k] = es[k] + x * es[k - 1]
    return es[r]


def complete_symmetric(values: Sequence, r: int) -> object:
    """h_r of the given values; h_0 = 1."""
    if r < 0:
        raise ValueError("r must be >= 0")
    hs = [Fraction(1)] + [Fraction(0)] * r
    for x in values:
        x = _coerce_scalar(x)
        for k in range(1, r + 1):
            hs[k] = hs[k] + x * hs[k - 1]
    return hs[r]


def solve_linear(matrix: list[list[Poly]], rhs: list[Poly], var: str = "x") -> list[RatFunc]:
    """Solve M w = b exactly by fraction-free (Bareiss) elimination.

    Entries are polynomials over a field; the result is a vector of RatFunc.
    Raises ValueError if the matrix is singular over the function field.
    """
    n = len(matrix)
    aug = [[_as_poly(e) for e in row] + [_as_poly(rhs[i])] for i, row in enumerate(matrix)]
    prev = Poly([1])
    for p in range(n):
        piv = next((i for i in range(p, n) if not aug[i][p].is_zero()), None)
        if piv is None:
            raise ValueError("singular linear system")
        if piv != p:
            aug[p], aug[piv] = aug[piv], aug[p]
        for i in range(p + 1, n):
            for j in range(p + 1, n + 1):
                aug[i][j] = (aug[p][p] * aug[i][j] - aug[i][p] * aug[p][j]).exact_div(
                    prev
                )
            aug[i][p] = Poly()
        prev = aug[p][p]
    sol: list[RatFunc] = [RatFunc(0, var=var)] * n
    for i in range(n - 1, -1, -1):
        acc = RatFunc(aug[i][n], var=var)
        for j in range(i + 1, n):
            acc = acc - RatFunc(aug[i][j], var=var) * sol[j]
        sol[i] = acc / RatFunc(aug[i][i], var=var)
    return sol


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots (with multiplicity collapsed) of a Fraction-coefficient poly."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    coeffs = [Fraction(c) for c in p.coeffs]
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // _gcd_int(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]  # root at 0 handled separately
    roots: list[Fraction] = []
    if ints != [int(c * den_lcm) for c in coeffs]:
        roots.append(Fraction(0))
    if not ints:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    for pnum in _divisors(a0):
        for qden in _divisors(an):
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                if cand not in roots and p(cand) == 0:
                    roots.append(cand)
    return roots


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(m: int) -> list[int]:
    if m == 0:
        return []
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)
