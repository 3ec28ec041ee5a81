"""
Exact arithmetic for the HOMFLYPT engine.

Provides Laurent polynomials in α (LaurentA), bivariate Laurent polynomials
in (α, ξ) (Laurent2), rational invariants num / (1-ξ²)^d, polynomials in T
with LaurentA coefficients (PolyT), series expansion and exact interpolation.

Every element wraps a sympy ``PolyElement`` over QQ together with an
exponent offset: the stored polynomial has no common monomial factor on the
Laurent axes, and the offset carries the (possibly negative) monomial that
was pulled out. Coefficients handed back to callers are ``int`` when
integral and ``Fraction`` otherwise.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp
from sympy import QQ
from sympy.polys.rings import PolyElement, ring

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Monom = Tuple[int, ...]

# Degree reported for the zero polynomial
NEG_INF = float("-inf")

# Q[a], Q[a, x] and Q[T, a]
_RA, _a = ring("a", QQ)
_R2, _a2, _x2 = ring("a,x", QQ)
_RT, _t, _aT = ring("T,a", QQ)

_ONE_MINUS_X2 = 1 - _x2 ** 2


class RingError(Exception):
    """Raised when an exact ring operation cannot be carried out."""
    pass


def _qq(value) -> object:
    """Coerce an int, Fraction or QQ element into QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def _exact(value) -> Scalar:
    """Coerce to int when integral, Fraction otherwise."""
    n, d = int(value.numerator), int(value.denominator)
    return n if d == 1 else Fraction(n, d)


def _fraction_parts(value: Scalar) -> Tuple[int, int]:
    value = Fraction(value)
    return value.numerator, value.denominator


class _OffsetPoly:
    """
    Shared machinery: ``_poly`` times the monomial ``_offset``.

    Subclasses fix the sympy ring and say which axes may carry negative
    exponents (``_laurent_axes``); only those are folded into the offset.
    """

    __slots__ = ("_poly", "_offset", "_hash")

    _ring = _RA
    _laurent_axes: Tuple[bool, ...] = (True,)

    @classmethod
    def _wrap(cls, poly: PolyElement, offset: Monom):
        obj = cls.__new__(cls)
        obj._set(poly, offset)
        return obj

    def _set(self, poly: PolyElement, offset: Monom) -> None:
        if not poly:
            offset = (0,) * len(self._laurent_axes)
        else:
            low = tuple(t if laurent else 0 for t, laurent in zip(poly.tail_degrees(), self._laurent_axes))
            if any(low):
                poly = poly.new([(tuple(e - m for e, m in zip(monom, low)), c) for monom, c in poly.items()])
                offset = tuple(o + m for o, m in zip(offset, low))
        self._poly = poly
        self._offset = tuple(offset)
        self._hash = None

    def _set_terms(self, terms: Mapping[Monom, object]) -> None:
        nonzero = {}
        for monom, c in terms.items():
            c = _qq(c)
            if c:
                nonzero[tuple(int(e) for e in monom)] = c
        if not nonzero:
            self._set(self._ring.zero, (0,) * len(self._laurent_axes))
            return
        low = tuple(map(min, zip(*nonzero)))
        for m, laurent in zip(low, self._laurent_axes):
            if m < 0 and not laurent:
                raise RingError(f"negative exponent on a polynomial axis: {low}")
        low = tuple(m if laurent else 0 for m, laurent in zip(low, self._laurent_axes))
        shifted = {tuple(e - m for e, m in zip(monom, low)): c for monom, c in nonzero.items()}
        self._set(self._ring.from_dict(shifted), low)

    def _aligned(self, other: "_OffsetPoly") -> Tuple[PolyElement, PolyElement, Monom]:
        common = tuple(map(min, self._offset, other._offset))
        p1 = self._poly.mul_monom(tuple(o - c for o, c in zip(self._offset, common)))
        p2 = other._poly.mul_monom(tuple(o - c for o, c in zip(other._offset, common)))
        return p1, p2, common

    def _add(self, other):
        p1, p2, common = self._aligned(other)
        return self._wrap(p1 + p2, common)

    def _mul(self, other):
        return self._wrap(self._poly * other._poly, tuple(map(sum, zip(self._offset, other._offset))))

    def _scale(self, c: Scalar):
        return self._wrap(self._poly.mul_ground(_qq(c)), self._offset)

    def _monomial_shift(self, delta: Monom):
        return self._wrap(self._poly, tuple(map(sum, zip(self._offset, delta))))

    def _terms(self) -> List[Tuple[Monom, Scalar]]:
        """Exact terms with true exponents, sorted ascending."""
        off = self._offset
        return sorted((tuple(map(sum, zip(monom, off))), _exact(c)) for monom, c in self._poly.items())

    def is_zero(self) -> bool:
        return not self._poly

    def __bool__(self) -> bool:
        return bool(self._poly)

    def __neg__(self):
        return self._wrap(-self._poly, self._offset)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._offset, self._poly))
        return self._hash

    def _same(self, other) -> bool:
        return self._offset == other._offset and self._poly == other._poly


class LaurentA(_OffsetPoly):
    """
    Element of Q[α, α⁻¹]. Instances are immutable.
    """

    __slots__ = ()

    _ring = _RA
    _laurent_axes = (True,)

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None):
        self._set_terms({(j,): c for j, c in (terms or {}).items()})

    @classmethod
    def monomial(cls, j: int, coeff: Scalar = 1) -> "LaurentA":
        return cls({j: coeff})

    @classmethod
    def constant(cls, coeff: Scalar) -> "LaurentA":
        return cls({0: coeff})

    @classmethod
    def zero(cls) -> "LaurentA":
        return cls._wrap(_RA.zero, (0,))

    @classmethod
    def one(cls) -> "LaurentA":
        return cls._wrap(_RA.one, (0,))

    def items(self) -> List[Tuple[int, Scalar]]:
        """Terms sorted by exponent."""
        return [(j, c) for (j,), c in self._terms()]

    def coeff(self, j: int) -> Scalar:
        return _exact(self._poly.get((j - self._offset[0],), QQ.zero))

    def min_degree(self) -> Optional[int]:
        return self._offset[0] if self._poly else None

    def max_degree(self) -> Optional[int]:
        return self._offset[0] + self._poly.degree() if self._poly else None

    def at_alpha_one(self) -> Scalar:
        """Value at α = 1."""
        return _exact(self._poly.evaluate(_a, 1))

    def shift(self, j: int) -> "LaurentA":
        """Multiply by α^j."""
        return self._monomial_shift((j,))

    @staticmethod
    def _coerce(other) -> Optional["LaurentA"]:
        if isinstance(other, LaurentA):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentA.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._add(-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._mul(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentA":
        if n < 0:
            if len(self._poly) != 1:
                raise RingError("only monomials can be raised to negative powers")
            c = self._poly[(0,)]
            return LaurentA._wrap(_RA.ground_new(QQ.one / c ** (-n)), (self._offset[0] * n,))
        if n == 0:
            return LaurentA.one()
        if not self._poly:
            return LaurentA.zero()
        return LaurentA._wrap(self._poly ** n, (self._offset[0] * n,))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._same(other)

    __hash__ = _OffsetPoly.__hash__

    def __str__(self) -> str:
        if not self._poly:
            return "0"
        return " + ".join(f"{c}*a^{j}" for j, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentA({self})"

    def to_json(self) -> List[List[int]]:
        """[[j, numerator, denominator], ...] sorted by j."""
        return [[j, *_fraction_parts(c)] for j, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "LaurentA":
        return cls({int(j): Fraction(int(n), int(d)) for j, n, d in data})

    def to_sympy(self, a: sp.Symbol) -> sp.Expr:
        return self._poly.as_expr(a) * a ** self._offset[0]


class Laurent2(_OffsetPoly):
    """
    Element of Q[α^±1, ξ^±1]; the key (j, k) names the monomial α^j ξ^k.
    Instances are immutable.
    """

    __slots__ = ()

    _ring = _R2
    _laurent_axes = (True, True)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], Scalar]] = None):
        self._set_terms(dict(terms or {}))

    @classmethod
    def monomial(cls, j: int, k: int, coeff: Scalar = 1) -> "Laurent2":
        return cls({(j, k): coeff})

    @classmethod
    def constant(cls, coeff: Scalar) -> "Laurent2":
        return cls({(0, 0): coeff})

    @classmethod
    def zero(cls) -> "Laurent2":
        return cls._wrap(_R2.zero, (0, 0))

    @classmethod
    def one(cls) -> "Laurent2":
        return cls._wrap(_R2.one, (0, 0))

    def items(self) -> List[Tuple[Tuple[int, int], Scalar]]:
        """Terms sorted by (j, k) ascending."""
        return self._terms()

    def coeff(self, j: int, k: int) -> Scalar:
        oj, ok = self._offset
        return _exact(self._poly.get((j - oj, k - ok), QQ.zero))

    def has_odd_xi(self) -> bool:
        ok = self._offset[1]
        return any((k + ok) % 2 for _, k in self._poly)

    def shift(self, dj: int = 0, dk: int = 0) -> "Laurent2":
        """Multiply by α^dj ξ^dk."""
        return self._monomial_shift((dj, dk))

    def substitute_alpha_to_alphaxi(self) -> "Laurent2":
        """α^j ξ^k ↦ α^j ξ^(j+k)."""
        oj, ok = self._offset
        return Laurent2._wrap(self._poly.compose(_a2, _a2 * _x2), (oj, oj + ok))

    def alpha_rows(self) -> Dict[int, LaurentA]:
        """The LaurentA coefficient of each ξ-power present."""
        oj, ok = self._offset
        rows: Dict[int, Dict[Monom, object]] = {}
        for (j, k), c in self._poly.items():
            rows.setdefault(k + ok, {})[(j,)] = c
        return {k: LaurentA._wrap(_RA.from_dict(row), (oj,)) for k, row in rows.items()}

    def divide_one_minus_xi2(self) -> Optional["Laurent2"]:
        """
        Exact quotient by (1 - ξ²).

        Returns:
            The quotient, or None when (1 - ξ²) does not divide this element
        """
        # the offset monomial is a unit, so only the stored part is divided
        quotient, remainder = self._poly.div(_ONE_MINUS_X2)
        if remainder:
            return None
        return Laurent2._wrap(quotient, self._offset)

    @staticmethod
    def _coerce(other) -> Optional["Laurent2"]:
        if isinstance(other, Laurent2):
            return other
        if isinstance(other, (int, Fraction)):
            return Laurent2.constant(other)
        if isinstance(other, LaurentA):
            lifted = _R2.from_dict({(j, 0): c for (j,), c in other._poly.items()})
            return Laurent2._wrap(lifted, (other._offset[0], 0))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._add(-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._mul(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent2":
        if n < 0:
            raise RingError("negative powers of Laurent2 are not supported")
        if n == 0:
            return Laurent2.one()
        if not self._poly:
            return Laurent2.zero()
        oj, ok = self._offset
        return Laurent2._wrap(self._poly ** n, (oj * n, ok * n))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._same(other)

    __hash__ = _OffsetPoly.__hash__

    def __str__(self) -> str:
        if not self._poly:
            return "0"
        return " + ".join(f"{c}*a^{j}*x^{k}" for (j, k), c in self.items())

    def __repr__(self) -> str:
        return f"Laurent2({self})"

    def to_json(self) -> List[List[int]]:
        """[[j, k, numerator, denominator], ...] sorted by (j, k)."""
        return [[j, k, *_fraction_parts(c)] for (j, k), c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "Laurent2":
        return cls({(int(j), int(k)): Fraction(int(n), int(d)) for j, k, n, d in data})

    def to_sympy(self, a: sp.Symbol, x: sp.Symbol) -> sp.Expr:
        oj, ok = self._offset
        return self._poly.as_expr(a, x) * a ** oj * x ** ok


ALPHA = Laurent2.monomial(1, 0)
ALPHA_INV = Laurent2.monomial(-1, 0)
XI = Laurent2.monomial(0, 1)
XI_INV = Laurent2.monomial(0, -1)
ONE_MINUS_XI2 = Laurent2({(0, 0): 1, (0, 2): -1})
# ξ⁻¹ - ξ
XI_INV_MINUS_XI = Laurent2({(0, -1): 1, (0, 1): -1})


class RationalInvariant:
    """
    The value num / (1 - ξ²)^dpow.

    Arithmetic results are normalized: num is not divisible by (1 - ξ²)
    unless dpow is 0. The constructor keeps the given representative as is;
    use ``normalize`` or ``RationalInvariant.of`` for the reduced form.
    """

    __slots__ = ("num", "dpow")

    def __init__(self, num: Laurent2, dpow: int = 0):
        if dpow < 0:
            raise RingError(f"denominator power must be non-negative, got {dpow}")
        self.num = num
        self.dpow = dpow

    @classmethod
    def of(cls, num: Laurent2, dpow: int = 0) -> "RationalInvariant":
        return normalize(cls(num, dpow))

    @classmethod
    def zero(cls) -> "RationalInvariant":
        return cls(Laurent2.zero(), 0)

    @classmethod
    def one(cls) -> "RationalInvariant":
        return cls(Laurent2.one(), 0)

    def _lift(self, dpow: int) -> Laurent2:
        """Numerator over the larger denominator (1 - ξ²)^dpow."""
        if dpow == self.dpow:
            return self.num
        return self.num * ONE_MINUS_XI2 ** (dpow - self.dpow)

    @staticmethod
    def _coerce(other) -> Optional["RationalInvariant"]:
        if isinstance(other, RationalInvariant):
            return other
        if isinstance(other, (int, Fraction, LaurentA, Laurent2)):
            return RationalInvariant(Laurent2._coerce(other), 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = max(self.dpow, other.dpow)
        return RationalInvariant.of(self._lift(d) + other._lift(d), d)

    __radd__ = __add__

    def __neg__(self) -> "RationalInvariant":
        return RationalInvariant(-self.num, self.dpow)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalInvariant.of(self.num * other.num, self.dpow + other.dpow)

    __rmul__ = __mul__

    def over_one_minus_xi2(self, times: int = 1) -> "RationalInvariant":
        """Divide by (1 - ξ²)^times."""
        return RationalInvariant.of(self.num, self.dpow + times)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * ONE_MINUS_XI2 ** other.dpow == other.num * ONE_MINUS_XI2 ** self.dpow

    def __hash__(self) -> int:
        v = normalize(self)
        return hash((v.num, v.dpow))

    def __str__(self) -> str:
        if self.dpow == 0:
            return f"({self.num})"
        return f"({self.num}) / (1 - x^2)^{self.dpow}"

    def __repr__(self) -> str:
        return f"RationalInvariant(num={self.num}, dpow={self.dpow})"

    def to_json(self) -> Dict[str, object]:
        return {"num": self.num.to_json(), "dpow": self.dpow}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "RationalInvariant":
        return cls(Laurent2.from_json(data["num"]), int(data["dpow"]))

    def to_sympy(self, a: sp.Symbol, x: sp.Symbol) -> sp.Expr:
        return self.num.to_sympy(a, x) / (1 - x ** 2) ** self.dpow


def normalize(v: RationalInvariant) -> RationalInvariant:
    """
    Cancel factors of (1 - ξ²) between numerator and denominator.

    Args:
        v: Any representative

    Returns:
        The reduced representative of the same value
    """
    num, dpow = v.num, v.dpow
    if num.is_zero():
        return RationalInvariant(num, 0)
    while dpow > 0:
        quotient = num.divide_one_minus_xi2()
        if quotient is None:
            break
        num, dpow = quotient, dpow - 1
    return RationalInvariant(num, dpow)


def substitute_alpha_to_alphaxi(v: RationalInvariant) -> RationalInvariant:
    """F(α, ξ) ↦ F(αξ, ξ); the denominator carries no α and is unchanged."""
    return RationalInvariant(v.num.substitute_alpha_to_alphaxi(), v.dpow)


@lru_cache(maxsize=4096)
def _geometric_weight(s: int, d: int) -> int:
    """Coefficient of y^s in (1 - y)^(-d)."""
    if d == 0:
        return 1 if s == 0 else 0
    return int(sp.binomial(s + d - 1, d - 1))


def series_coefficients(v: RationalInvariant, tmin: int, tmax: int) -> List[LaurentA]:
    """
    Coefficients c_T of v = Σ c_T ξ^(2T) for tmin <= T <= tmax.

    Args:
        v: A substituted invariant (only even ξ-powers in the numerator)
        tmin: First T
        tmax: Last T

    Returns:
        One LaurentA per T in [tmin, tmax]

    Raises:
        RingError: If the numerator has an odd ξ-power
    """
    if v.num.has_odd_xi():
        raise RingError(f"odd xi-power in numerator of {v}; polynomial grading must be even")
    rows = {k // 2: row for k, row in v.num.alpha_rows().items()}
    out: List[LaurentA] = []
    for t in range(tmin, tmax + 1):
        acc = LaurentA.zero()
        for m, row in rows.items():
            if t < m:
                continue
            weight = _geometric_weight(t - m, v.dpow)
            if weight:
                acc = acc + row * weight
        out.append(acc)
    return out


class PolyT(_OffsetPoly):
    """
    Element of Q[α, α⁻¹][T]. Only the α axis carries an offset; the T axis
    is an ordinary polynomial variable.
    """

    __slots__ = ()

    _ring = _RT
    _laurent_axes = (False, True)

    def __init__(self, coeffs: Iterable[Union[LaurentA, Scalar]] = ()):
        terms: Dict[Monom, object] = {}
        for i, c in enumerate(coeffs):
            if isinstance(c, LaurentA):
                for (j,), q in c._poly.items():
                    terms[(i, j + c._offset[0])] = q
            elif c:
                terms[(i, 0)] = c
        self._set_terms(terms)

    @classmethod
    def constant(cls, c: Union[LaurentA, Scalar]) -> "PolyT":
        return cls([c])

    @classmethod
    def variable(cls) -> "PolyT":
        """The polynomial T."""
        return cls([0, 1])

    @property
    def degree(self) -> Union[int, float]:
        return self._poly.degree(_t) if self._poly else NEG_INF

    @property
    def coeffs(self) -> Tuple[LaurentA, ...]:
        if not self._poly:
            return ()
        return tuple(self.coeff(i) for i in range(self.degree + 1))

    def leading_coefficient(self) -> LaurentA:
        return self.coeff(self.degree) if self._poly else LaurentA.zero()

    def coeff(self, i: int) -> LaurentA:
        row = {(j,): c for (ti, j), c in self._poly.items() if ti == i}
        return LaurentA._wrap(_RA.from_dict(row), (self._offset[1],))

    def __call__(self, t: int) -> LaurentA:
        value = self._poly.evaluate(_t, t)
        return LaurentA._wrap(_RA.from_dict(dict(value)), (self._offset[1],))

    def shift(self, c: int) -> "PolyT":
        """p(T) ↦ p(T + c)."""
        if c == 0 or not self._poly:
            return self
        return PolyT._wrap(self._poly.compose(_t, _t + c), self._offset)

    def scale_alpha(self, j: int) -> "PolyT":
        """Multiply by α^j."""
        return self._monomial_shift((0, j))

    def at_alpha_one(self) -> List[Scalar]:
        """Coefficients of p(1, T) by T-power, trailing zeros stripped."""
        value = self._poly.evaluate(_aT, 1)
        if not value:
            return []
        top = max(i for (i,) in value)
        return [_exact(value.get((i,), QQ.zero)) for i in range(top + 1)]

    @staticmethod
    def _coerce(other) -> Optional["PolyT"]:
        if isinstance(other, PolyT):
            return other
        if isinstance(other, (int, Fraction, LaurentA)):
            return PolyT.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._add(-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._mul(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._same(other)

    __hash__ = _OffsetPoly.__hash__

    def __str__(self) -> str:
        if not self._poly:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            parts.append(f"({a})" if i == 0 else f"({a})*T^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PolyT({self})"

    def to_json(self) -> List[list]:
        """[[t_power, [[j, num, den], ...]], ...] for nonzero coefficients."""
        return [[i, a.to_json()] for i, a in enumerate(self.coeffs) if not a.is_zero()]

    @classmethod
    def from_json(cls, data: Iterable[Sequence]) -> "PolyT":
        table = {int(i): LaurentA.from_json(c) for i, c in data}
        size = max(table) + 1 if table else 0
        return cls([table.get(i, LaurentA.zero()) for i in range(size)])

    def to_sympy(self, a: sp.Symbol, t: sp.Symbol) -> sp.Expr:
        return self._poly.as_expr(t, a) * a ** self._offset[1]


_T_SYMBOL, _A_SYMBOL = _RT.symbols


@lru_cache(maxsize=256)
def binom_poly(shift: int, degree: int) -> PolyT:
    """
    binom(T + shift, degree) as a polynomial in T.

    Args:
        shift: The constant c in binom(T + c, d)
        degree: The lower index d >= 0

    Returns:
        Degree-d PolyT with leading coefficient 1/d!
    """
    if degree < 0:
        raise RingError(f"binomial degree must be non-negative, got {degree}")
    expr = sp.binomial(_T_SYMBOL + shift, degree).expand(func=True)
    return PolyT._wrap(_RT.from_expr(expr), (0, 0))


def interpolate(points: Sequence[Tuple[int, LaurentA]]) -> PolyT:
    """
    Exact Lagrange interpolation through (T, value) pairs.

    Values are scaled by a common power of α so that sympy sees plain
    polynomials; the scale goes back into the α offset of the result.

    Args:
        points: (T, value) pairs with distinct T

    Returns:
        The unique PolyT of degree < len(points) through all points

    Raises:
        RingError: On duplicate abscissae
    """
    xs = [t for t, _ in points]
    if len(set(xs)) != len(xs):
        raise RingError(f"duplicate abscissae in interpolation points: {xs}")
    values = [LaurentA._coerce(y) for _, y in points]
    nonzero = [y.min_degree() for y in values if not y.is_zero()]
    if not nonzero:
        return PolyT()
    low = min(nonzero)
    data = [(t, y.shift(-low).to_sympy(_A_SYMBOL)) for t, y in zip(xs, values)]
    expr = sp.expand(sp.interpolate(data, _T_SYMBOL))
    return PolyT._wrap(_RT.from_expr(expr), (0, low))
