"""Exact integer-polynomial linear algebra and rational generating series.

Everything here is exact: polynomials are integer coefficient tuples,
determinants use fraction-free elimination (divisions are checked, never
rounded), and large transfer matrices go through a modular characteristic
polynomial with a rigorous coefficient bound, so the Chinese-remainder
reconstruction is provably correct rather than heuristic.

The generating function of closed walks at state 0 of a graph with
adjacency A is det((I - xA) minor at 0) / det(I - xA); both determinants
are reversed characteristic polynomials, which is what the fast path
computes.  A companion power-series routine (repeated matrix application)
gives the same coefficients by a different method, which the tests and the
selftest compare.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .errors import CapExceeded

DEFAULT_MAX_GF_STATES = 200


class IntPoly:
    """An integer polynomial as an ascending coefficient tuple.

    >>> x = IntPoly([0, 1])
    >>> ((1 - x) * (1 + x)).coeffs
    (1, 0, -1)
    >>> IntPoly([1, 2, 1]).exact_div(IntPoly([1, 1])).coeffs
    (1, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return "IntPoly(%r)" % (list(self.coeffs),)

    @staticmethod
    def _coerce(other) -> "IntPoly":
        return other if isinstance(other, IntPoly) else IntPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Division that must leave no remainder (ValueError otherwise)."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return IntPoly()
        num = list(self.coeffs)
        dl = other.degree()
        dc = other.coeffs[-1]
        if len(num) - 1 < dl:
            raise ValueError("not divisible (degree too small)")
        quot = [0] * (len(num) - dl)
        for e in range(len(num) - 1, dl - 1, -1):
            c = num[e]
            if c == 0:
                continue
            if c % dc:
                raise ValueError("not divisible")
            f = c // dc
            quot[e - dl] = f
            for i, oc in enumerate(other.coeffs):
                num[e - dl + i] -= f * oc
        if any(num):
            raise ValueError("not divisible")
        return IntPoly(quot)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        g = self.content()
        return self if g in (0, 1) else IntPoly([c // g for c in self.coeffs])

    def to_text(self) -> str:
        """Human form, ascending powers: '1 - 4*x + x^2'."""
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                xs = "x" if e == 1 else "x^%d" % e
                body = xs if mag == 1 else "%d*%s" % (mag, xs)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


ONE = IntPoly([1])
X = IntPoly([0, 1])


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder; all divisions stay in the integers by scaling."""
    da, db = a.degree(), b.degree()
    if da < db:
        return a
    lb = b.coeffs[-1]
    r = list(a.coeffs)
    for e in range(da, db - 1, -1):
        top = r[e]
        r = [lb * c for c in r]
        for i, bc in enumerate(b.coeffs):
            r[e - db + i] -= top * bc
        assert r[e] == 0
    return IntPoly(r[:db])


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor with positive leading coefficient.

    >>> poly_gcd(IntPoly([1, 2, 1]), IntPoly([1, 1])).coeffs
    (1, 1)
    """
    if a.is_zero() and b.is_zero():
        return IntPoly()
    if a.is_zero() or b.is_zero():
        g = b if a.is_zero() else a
        return g if g.coeffs[-1] > 0 else -g
    cont = _gcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, _prem(a, b).primitive()
    g = a.primitive() * cont
    return g if g.coeffs[-1] > 0 else -g


# ---------------------------------------------------------------------------
# determinants


def det(matrix) -> IntPoly:
    """Fraction-free determinant of a square matrix of integer polynomials.

    >>> det([[IntPoly([1, 1]), IntPoly([1])], [IntPoly([1]), IntPoly([1])]]).coeffs
    (0, 1)
    """
    m = [[IntPoly._coerce(entry) for entry in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for col in range(n - 1):
        if m[col][col].is_zero():
            for r in range(col + 1, n):
                if not m[r][col].is_zero():
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return IntPoly()
        piv = m[col][col]
        for r in range(col + 1, n):
            row = m[r]
            for c in range(col + 1, n):
                row[c] = (row[c] * piv - row[col] * m[col][c]).exact_div(prev)
            row[col] = IntPoly()
        prev = piv
    return m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]


def det_cofactor(matrix) -> IntPoly:
    """Cofactor expansion; exponential, for cross-checking only."""
    m = [[IntPoly._coerce(entry) for entry in row] for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    if n == 1:
        return m[0][0]
    total = IntPoly()
    for c in range(n):
        minor = [row[:c] + row[c + 1 :] for row in m[1:]]
        term = m[0][c] * det_cofactor(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# characteristic polynomials, modulo primes, for the big transfer matrices

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24 with the fixed base set
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes(bound_product: int):
    """Yield large primes until their product exceeds bound_product."""
    prod = 1
    candidate = (1 << 61) + 1
    while prod <= bound_product:
        while not _is_prime(candidate):
            candidate += 2
        yield candidate
        prod *= candidate
        candidate += 2


def _charpoly_mod(mat, p: int) -> list[int]:
    """det(yI - mat) mod p, via Hessenberg reduction (similarity-safe)."""
    n = len(mat)
    h = [[x % p for x in row] for row in mat]
    for col in range(n - 2):
        piv_row = None
        for r in range(col + 1, n):
            if h[r][col]:
                piv_row = r
                break
        if piv_row is None:
            continue
        if piv_row != col + 1:
            h[col + 1], h[piv_row] = h[piv_row], h[col + 1]
            for row in h:
                row[col + 1], row[piv_row] = row[piv_row], row[col + 1]
        inv = pow(h[col + 1][col], -1, p)
        for r in range(col + 2, n):
            f = h[r][col] * inv % p
            if not f:
                continue
            hr, hc = h[r], h[col + 1]
            for c in range(col, n):
                hr[c] = (hr[c] - f * hc[c]) % p
            for rr in range(n):
                row = h[rr]
                row[col + 1] = (row[col + 1] + f * row[r]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        a = h[m - 1][m - 1]
        for idx, cf in enumerate(prev):
            cur[idx + 1] = (cur[idx + 1] + cf) % p
            cur[idx] = (cur[idx] - a * cf) % p
        mult = 1
        for i in range(1, m):
            mult = mult * h[m - i][m - i - 1] % p
            if not mult:
                break
            coeff = h[m - 1 - i][m - 1] * mult % p
            if coeff:
                for idx, cf in enumerate(polys[m - 1 - i]):
                    cur[idx] = (cur[idx] - coeff * cf) % p
        polys.append(cur)
    return polys[n]


def charpoly(mat) -> IntPoly:
    """det(yI - mat) for an integer matrix, exactly.

    Residues modulo enough 61-bit primes are combined by Chinese
    remaindering; "enough" comes from the Hadamard-style bound
    |coefficient| <= (1 + max column norm)^n.
    """
    n = len(mat)
    if n == 0:
        return ONE
    norm_sq = max(
        sum(mat[r][c] * mat[r][c] for r in range(n)) for c in range(n)
    )
    bound = 2 * (1 + isqrt(norm_sq) + 1) ** n
    residues: list[list[int]] = []
    primes: list[int] = []
    for p in _primes(bound):
        primes.append(p)
        residues.append(_charpoly_mod(mat, p))
    coeffs = []
    for idx in range(n + 1):
        value, modulus = 0, 1
        for p, res in zip(primes, residues):
            t = (res[idx] - value) * pow(modulus, -1, p) % p
            value += modulus * t
            modulus *= p
        if value > modulus // 2:
            value -= modulus
        coeffs.append(value)
    return IntPoly(coeffs)


def det_identity_minus_x(mat) -> IntPoly:
    """det(I - x*mat) for a square integer matrix.

    The reversed characteristic polynomial; small matrices go through the
    polynomial elimination directly, which doubles as a cross-check path.
    """
    n = len(mat)
    if n <= 16:
        entries = [
            [IntPoly([1 if r == c else 0, -mat[r][c]]) for c in range(n)]
            for r in range(n)
        ]
        return det(entries)
    ch = charpoly(mat)
    assert ch.degree() == n and ch.coeffs[-1] == 1
    return IntPoly(list(reversed(ch.coeffs)))


# ---------------------------------------------------------------------------
# rational functions and series


class RationalFunction:
    """A reduced ratio of integer polynomials.

    Normal form: numerator and denominator coprime (including content) and
    the denominator's lowest nonzero coefficient positive.

    >>> rf = RationalFunction(IntPoly([2, 2]), IntPoly([2, 0, -2]))
    >>> rf.to_text()
    '(1) / (1 - x)'
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly):
        num, den = IntPoly._coerce(num), IntPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = ONE
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0 or g.coeffs != (1,):
                num, den = num.exact_div(g), den.exact_div(g)
        low = next(c for c in den.coeffs if c)
        if low < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return "RationalFunction(%r, %r)" % (self.num, self.den)

    def to_text(self) -> str:
        return "(%s) / (%s)" % (self.num.to_text(), self.den.to_text())


@dataclass(frozen=True)
class Series:
    """Initial coefficients of a counting series.

    `offset` records how coefficient index maps to object size: coefficient
    i counts objects of size i + offset (the gap-walk graphs shift set
    partition counts by one).
    """

    coeffs: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))


def series(rf: RationalFunction, terms: int, offset: int = 0) -> Series:
    """First `terms` coefficients of the power series of num/den.

    >>> series(RationalFunction(IntPoly([1, -1]), IntPoly([1, -3, 1])), 5).coeffs
    (1, 2, 5, 13, 34)
    """
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    dcs = rf.den.coeffs
    if not dcs or dcs[0] == 0:
        raise ValueError("series requires a nonzero constant denominator term")
    d0 = dcs[0]
    ncs = rf.num.coeffs
    out: list[int] = []
    for t in range(terms):
        acc = ncs[t] if t < len(ncs) else 0
        for i in range(1, min(t, len(dcs) - 1) + 1):
            acc -= dcs[i] * out[t - i]
        if acc % d0:
            raise ValueError("series has non-integer coefficients")
        out.append(acc // d0)
    return Series(tuple(out), offset)


def gf_from_graph(g, max_states: Optional[int] = None) -> RationalFunction:
    """Closed-walk generating function at the start state of a graph.

    Guarded by a state cap (default 200): determinants of the very large
    cases reported as infeasible are refused rather than attempted.
    """
    cap = DEFAULT_MAX_GF_STATES if max_states is None else max_states
    n = len(g.matrix)
    if n > cap:
        raise CapExceeded(
            "transfer matrix has %d states (cap %d); raise the cap to attempt it"
            % (n, cap)
        )
    mat = [list(row) for row in g.matrix]
    den = det_identity_minus_x(mat)
    minor = [row[1:] for row in mat[1:]]
    num = det_identity_minus_x(minor)
    return RationalFunction(num, den)


def series_by_power(g, terms: int, offset: int = 0) -> Series:
    """The same coefficients as `series(gf_from_graph(g), ...)`, by
    repeatedly applying the adjacency matrix to the start vector."""
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    mat = g.matrix
    n = len(mat)
    if n == 0:
        raise ValueError("graph has no states")
    out: list[int] = []
    vec = [0] * n
    vec[0] = 1
    for _ in range(terms):
        out.append(vec[0])
        vec = [
            sum(vec[i] * mat[i][c] for i in range(n) if vec[i]) for c in range(n)
        ]
    return Series(tuple(out), offset)


def split_linear_factors(p: IntPoly):
    """Write p as constant * product of (1 - m*x), if it splits over the
    integers; returns (constant, sorted slopes) or None.

    >>> split_linear_factors(IntPoly([1, -8, 12]))
    (1, (2, 6))
    """
    if p.is_zero():
        return None
    work = p
    slopes: list[int] = []
    while work.degree() >= 1:
        lead = abs(work.coeffs[-1])
        for m in _divisor_candidates(lead):
            total = 0
            for c in work.coeffs:  # ascending: total = m^deg * work(1/m)
                total = total * m + c
            if total == 0:
                work = work.exact_div(IntPoly([1, -m]))
                slopes.append(m)
                break
        else:
            return None
    return (work.coeffs[0], tuple(sorted(slopes)))


def _divisor_candidates(n: int):
    divs = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            divs.update((d, n // d))
    for d in sorted(divs):
        yield d
        yield -d
