from __future__ import annotations
from fractions import Fraction
from typing import Any, Dict, Union

from sympy import QQ
from sympy.polys.domains import QQ_I

from engine.errors import InputError

Rational = Union[int, Fraction]
ScalarLike = Union["ExactScalar", int, Fraction]


def _to_qq(value: Rational | str):
    q = Fraction(value)
    return QQ(q.numerator, q.denominator)


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class ExactScalar:
    """
    Gaussian rational re + im*i, held as an element of sympy's QQ_I.

    The engine passes these around instead of raw domain elements so the
    rest of the code can mix them freely with ints and Fractions.
    """

    __slots__ = ("value",)

    def __init__(self, re: Rational | str = 0, im: Rational | str = 0) -> None:
        self.value = QQ_I(_to_qq(re), _to_qq(im))

    @staticmethod
    def from_domain(value: Any) -> ExactScalar:
        """Wraps a QQ_I element without copying it."""
        z = object.__new__(ExactScalar)
        z.value = value
        return z

    @property
    def re(self) -> Fraction:
        return _to_fraction(self.value.x)

    @property
    def im(self) -> Fraction:
        return _to_fraction(self.value.y)

    def __repr__(self) -> str:
        re, im = self.re, self.im
        if im == 0:
            return f"{re}"
        if re == 0:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"({re}{sign}{abs(im)}i)"

    @staticmethod
    def coerce(value: ScalarLike) -> ExactScalar:
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return ExactScalar(value)
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    # field operations, delegated to QQ_I
    def __add__(self, other: ScalarLike) -> ExactScalar:
        return ExactScalar.from_domain(self.value + ExactScalar.coerce(other).value)

    def __radd__(self, other: ScalarLike) -> ExactScalar:
        return self.__add__(other)

    def __sub__(self, other: ScalarLike) -> ExactScalar:
        return ExactScalar.from_domain(self.value - ExactScalar.coerce(other).value)

    def __rsub__(self, other: ScalarLike) -> ExactScalar:
        return ExactScalar.coerce(other).__sub__(self)

    def __neg__(self) -> ExactScalar:
        return ExactScalar.from_domain(-self.value)

    def __mul__(self, other: ScalarLike) -> ExactScalar:
        return ExactScalar.from_domain(self.value * ExactScalar.coerce(other).value)

    def __rmul__(self, other: ScalarLike) -> ExactScalar:
        return self.__mul__(other)

    def __truediv__(self, other: ScalarLike) -> ExactScalar:
        o = ExactScalar.coerce(other)
        if not o.value:
            raise ZeroDivisionError("Division by zero in ExactScalar")
        return ExactScalar.from_domain(self.value / o.value)

    def __rtruediv__(self, other: ScalarLike) -> ExactScalar:
        return ExactScalar.coerce(other).__truediv__(self)

    def __pow__(self, exponent: int) -> ExactScalar:
        if exponent < 0:
            return ExactScalar(1) / self.__pow__(-exponent)
        return ExactScalar.from_domain(self.value ** exponent)

    # comparisons
    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactScalar):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == ExactScalar(other).value
        return NotImplemented

    def __hash__(self) -> int:
        if not self.value.y:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def is_real(self) -> bool:
        return not self.value.y

    def is_integer(self) -> bool:
        return not self.value.y and self.value.x.denominator == 1

    # complex structure
    def conjugate(self) -> ExactScalar:
        return ExactScalar.from_domain(QQ_I(self.value.x, -self.value.y))

    def abs2(self) -> Fraction:
        """
        Squared modulus re^2 + im^2.
        Zero exactly when the scalar is zero.
        """
        x, y = self.value.x, self.value.y
        return _to_fraction(x * x + y * y)

    def modulus_bound(self) -> Fraction:
        """|re| + |im|, an upper bound for the modulus without a sqrt."""
        return abs(self.re) + abs(self.im)

    # serialization
    def to_json(self) -> Dict[str, str]:
        return {"re": str(self.re), "im": str(self.im)}

    @staticmethod
    def from_json(data: Any) -> ExactScalar:
        """
        Accepts {"re": "a/b", "im": "c/d"}, a bare integer, or a string
        like "3/4".
        """
        try:
            if isinstance(data, dict):
                return ExactScalar(
                    Fraction(str(data.get("re", "0"))),
                    Fraction(str(data.get("im", "0"))),
                )
            if isinstance(data, bool):
                raise TypeError("booleans are not scalars")
            if isinstance(data, (int, str)):
                return ExactScalar(Fraction(data))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise InputError(f"invalid Gaussian rational {data!r}: {exc}") from exc
        raise InputError(f"invalid Gaussian rational {data!r}")


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
