"""
Aritmética Exacta con Radicales
===============================

Números de la forma Σ qᵢ·√sᵢ con qᵢ racional y sᵢ libre de cuadrados.

Todos los valores de Randić de grafos (y las funciones de los lemas en puntos
racionales) viven en este conjunto. La forma canónica guarda solo radicandos
libres de cuadrados con coeficiente no nulo; como las raíces de enteros libres
de cuadrados distintos son linealmente independientes sobre los racionales,
dos valores son iguales si y solo si sus formas canónicas coinciden.

El signo de un valor no nulo se decide con intervalos diádicos exactos
(raíz entera de s·4^b) duplicando la precisión b hasta que el intervalo
excluye al cero.

Uso:
----
from models.radical import RadicalValue, inv_sqrt, sign

c = (inv_sqrt(3) - inv_sqrt(2)) ** 2     # 5/6 - 1/3*sqrt(6)
sign(c)                                  # Sign.POSITIVE
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Dict, Iterable, Mapping, Tuple, Union

import mpmath

from core.config import settings
from core.exceptions import DomainError
from models.enums import Sign

Rational = Union[int, Fraction]
Interval = Tuple[Fraction, Fraction]

_TERM_RE = re.compile(r"[+-]?[^+-]+")
_RADICAL_RE = re.compile(r"(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\)")


@lru_cache(maxsize=4096)
def squarefree_split(r: int) -> Tuple[int, int]:
    """
    Descompone r = s·t² con s libre de cuadrados (división por tentativa)

    Returns:
        (s, t)
    """
    if r < 1:
        raise DomainError(f"Radicando no positivo: {r}")
    s, t = 1, 1
    p = 2
    while p * p <= r:
        exponent = 0
        while r % p == 0:
            r //= p
            exponent += 1
        if exponent:
            t *= p ** (exponent // 2)
            if exponent % 2:
                s *= p
        p += 1 if p == 2 else 2
    return s * r, t


class RadicalValue:
    """
    Valor exacto Σ qᵢ·√sᵢ en forma canónica (inmutable)

    `terms` se guarda como tupla ordenada de (radicando, coeficiente); el
    radicando 1 contiene la parte racional.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rational] = None):
        acc: Dict[int, Fraction] = {}
        for radicand, coefficient in (terms or {}).items():
            s, t = squarefree_split(int(radicand))
            acc[s] = acc.get(s, Fraction(0)) + Fraction(coefficient) * t
        object.__setattr__(self, "_terms", _canonical(acc))

    @classmethod
    def _from_terms(cls, terms: Tuple[Tuple[int, Fraction], ...]) -> "RadicalValue":
        value = cls.__new__(cls)
        object.__setattr__(value, "_terms", terms)
        return value

    @classmethod
    def rational(cls, q: Rational) -> "RadicalValue":
        q = Fraction(q)
        return cls._from_terms(((1, q),) if q else ())

    @classmethod
    def zero(cls) -> "RadicalValue":
        return cls._from_terms(())

    def __setattr__(self, name, value):
        raise AttributeError("RadicalValue es inmutable")

    def __reduce__(self):
        return (RadicalValue._from_terms, (self._terms,))

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return all(s == 1 for s, _ in self._terms)

    def rational_part(self) -> Fraction:
        return dict(self._terms).get(1, Fraction(0))

    # ------------------------------------------------------------------
    # Anillo
    # ------------------------------------------------------------------

    def __add__(self, other) -> "RadicalValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for s, q in other._terms:
            acc[s] = acc.get(s, Fraction(0)) + q
        return RadicalValue._from_terms(_canonical(acc))

    __radd__ = __add__

    def __neg__(self) -> "RadicalValue":
        return RadicalValue._from_terms(tuple((s, -q) for s, q in self._terms))

    def __sub__(self, other) -> "RadicalValue":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RadicalValue":
        return (-self) + other

    def __mul__(self, other) -> "RadicalValue":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RadicalValue):
            return NotImplemented
        acc: Dict[int, Fraction] = {}
        for s1, q1 in self._terms:
            for s2, q2 in other._terms:
                # √s1·√s2 = g·√((s1/g)(s2/g)), ya libre de cuadrados
                g = gcd(s1, s2)
                s = (s1 // g) * (s2 // g)
                acc[s] = acc.get(s, Fraction(0)) + q1 * q2 * g
        return RadicalValue._from_terms(_canonical(acc))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RadicalValue":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = RadicalValue.rational(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, q: Rational) -> "RadicalValue":
        if not isinstance(q, (int, Fraction)):
            return NotImplemented
        if q == 0:
            raise DomainError("División por cero")
        return self.scale(Fraction(1) / Fraction(q))

    def scale(self, q: Rational) -> "RadicalValue":
        q = Fraction(q)
        if not q:
            return RadicalValue.zero()
        return RadicalValue._from_terms(tuple((s, c * q) for s, c in self._terms))

    # ------------------------------------------------------------------
    # Orden (decidido por el signo exacto de la diferencia)
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __lt__(self, other) -> bool:
        return sign(self - other) is Sign.NEGATIVE

    def __le__(self, other) -> bool:
        return sign(self - other) is not Sign.POSITIVE

    def __gt__(self, other) -> bool:
        return sign(self - other) is Sign.POSITIVE

    def __ge__(self, other) -> bool:
        return sign(self - other) is not Sign.NEGATIVE

    # ------------------------------------------------------------------
    # Evaluación
    # ------------------------------------------------------------------

    def enclosure(self, bits: int) -> Interval:
        """Intervalo [lo, hi] exacto que contiene al valor; ancho ≤ Σ|qᵢ|·2^−bits"""
        lo = hi = Fraction(0)
        scale = 1 << bits
        for s, q in self._terms:
            if s == 1:
                lo += q
                hi += q
                continue
            r = isqrt(s << (2 * bits))
            low, high = Fraction(r, scale), Fraction(r + 1, scale)
            if q > 0:
                lo += q * low
                hi += q * high
            else:
                lo += q * high
                hi += q * low
        return lo, hi

    def to_decimal(self, digits: int = None) -> str:
        """Decimal con `digits` cifras significativas a partir de un encierro riguroso"""
        digits = digits or settings.DECIMAL_DIGITS
        lo, hi = to_float(self, digits + 6)
        if lo != hi:
            # ancho relativo ≤ 10^−(digits+2): el encierro excluye el cero
            bits = settings.SIGN_START_BITS
            while True:
                lo, hi = self.enclosure(bits)
                if lo * hi > 0 and (hi - lo) * 10 ** (digits + 2) <= min(abs(lo), abs(hi)):
                    break
                bits *= 2
        mid = (lo + hi) / 2
        with mpmath.workdps(digits + 10):
            return mpmath.nstr(mpmath.mpf(mid.numerator) / mid.denominator, digits)

    def __float__(self) -> float:
        lo, hi = to_float(self, 17)
        return float((lo + hi) / 2)

    # ------------------------------------------------------------------
    # Texto: "q0 + q1*sqrt(s1) + ..."
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for index, (s, q) in enumerate(self._terms):
            magnitude = abs(q)
            if s == 1:
                body = str(magnitude)
            elif magnitude == 1:
                body = f"sqrt({s})"
            else:
                body = f"{magnitude}*sqrt({s})"
            if index == 0:
                parts.append(body if q > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if q > 0 else '-'} {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "RadicalValue":
        """Inversa de to_text (acepta espacios arbitrarios)"""
        compact = text.replace(" ", "")
        if not compact:
            raise DomainError("Texto vacío: no es un valor radical")
        acc: Dict[int, Rational] = {}
        consumed = 0
        for token in _TERM_RE.findall(compact):
            consumed += len(token)
            negative = token.startswith("-")
            body = token.lstrip("+-")
            match = _RADICAL_RE.fullmatch(body)
            try:
                if match:
                    coefficient = Fraction(match.group(1) or 1)
                    radicand = int(match.group(2))
                else:
                    coefficient = Fraction(body)
                    radicand = 1
            except (ValueError, ZeroDivisionError):
                raise DomainError(f"Término no reconocido: '{token}'")
            if radicand < 1:
                raise DomainError(f"Radicando no positivo en '{token}'")
            acc[radicand] = acc.get(radicand, 0) + (-coefficient if negative else coefficient)
        if consumed != len(compact):
            raise DomainError(f"Texto no reconocido como valor radical: '{text}'")
        return cls(acc)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RadicalValue('{self.to_text()}')"


def _canonical(acc: Mapping[int, Fraction]) -> Tuple[Tuple[int, Fraction], ...]:
    return tuple(sorted((s, q) for s, q in acc.items() if q))


def _coerce(value):
    if isinstance(value, RadicalValue):
        return value
    if isinstance(value, (int, Fraction)):
        return RadicalValue.rational(value)
    return NotImplemented


# ======================================================================
# Operaciones del módulo
# ======================================================================

def sqrt_rational(x: Rational) -> RadicalValue:
    """√x exacto para x racional ≥ 0: √(p/q) = √(pq)/q"""
    x = Fraction(x)
    if x < 0:
        raise DomainError(f"Raíz de un número negativo: {x}")
    if x == 0:
        return RadicalValue.zero()
    s, t = squarefree_split(x.numerator * x.denominator)
    return RadicalValue._from_terms(((s, Fraction(t, x.denominator)),))


@lru_cache(maxsize=4096)
def inv_sqrt(m: Rational) -> RadicalValue:
    """
    1/√m exacto

    Con m = s·t² (s libre de cuadrados) el resultado es el término único
    (1/(s·t))·√s. Acepta también racionales positivos: 1/√(p/q) = √(pq)/p.
    """
    m = Fraction(m)
    if m <= 0:
        raise DomainError(f"inv_sqrt requiere m ≥ 1 (o racional positivo), recibido {m}")
    s, t = squarefree_split(m.numerator * m.denominator)
    return RadicalValue._from_terms(((s, Fraction(t, m.numerator)),))


def add(a: RadicalValue, b: RadicalValue) -> RadicalValue:
    return a + b


def sub(a: RadicalValue, b: RadicalValue) -> RadicalValue:
    return a - b


def scale(a: RadicalValue, q: Rational) -> RadicalValue:
    return a.scale(q)


def mul(a: RadicalValue, b: RadicalValue) -> RadicalValue:
    return a * b


def sign(a: RadicalValue) -> Sign:
    """
    Signo exacto

    Cero se decide por la forma canónica; un valor no nulo se encierra con
    precisión creciente (SIGN_START_BITS, duplicando) hasta excluir el cero.
    """
    if a.is_zero:
        return Sign.ZERO
    terms = a._terms
    if len(terms) == 1:
        return Sign.POSITIVE if terms[0][1] > 0 else Sign.NEGATIVE
    bits = settings.SIGN_START_BITS
    while True:
        lo, hi = a.enclosure(bits)
        if lo > 0:
            return Sign.POSITIVE
        if hi < 0:
            return Sign.NEGATIVE
        bits *= 2


def to_float(a: RadicalValue, precision: int) -> Interval:
    """
    Intervalo [lo, hi] que contiene el valor exacto, de ancho ≤ 10^−precision

    Un valor racional devuelve el intervalo degenerado [q, q].
    """
    if precision < 1:
        raise DomainError(f"precision debe ser ≥ 1, recibido {precision}")
    spread = sum((abs(q) for s, q in a._terms if s != 1), Fraction(0))
    if not spread:
        q = a.rational_part()
        return q, q
    target = spread * 10 ** precision
    bits = (-(-target.numerator // target.denominator)).bit_length() + 1
    return a.enclosure(bits)


def sum_values(values: Iterable[RadicalValue]) -> RadicalValue:
    acc: Dict[int, Fraction] = {}
    for value in values:
        for s, q in value._terms:
            acc[s] = acc.get(s, Fraction(0)) + q
    return RadicalValue._from_terms(_canonical(acc))
