"""The local coefficient algebra A = k[X,Y]/(X^2, XY).

Elements are stored on the free k-basis {1, x, y, y^2, y^3, ...}; the algebra
is graded with deg x = deg y = 1, so the degree-d slice has k-dimension 1 for
d = 0, 2 for d = 1, and 1 for d >= 2.  Literals follow the grammar
``c0 + c*x + c*y^i`` with exact field coefficients, e.g. ``1+2*x+3/4*y^2``.
"""

from __future__ import annotations

import re


class AElement:
    """Element c0 + cx*x + sum_i ys[i-1]*y^i of A, trailing zeros normalized away."""

    __slots__ = ("field", "c0", "cx", "ys")

    def __init__(self, field, c0, cx, ys=()):
        self.field = field
        self.c0 = field.coerce(c0)
        self.cx = field.coerce(cx)
        ys = [field.coerce(v) for v in ys]
        while ys and field.is_zero(ys[-1]):
            ys.pop()
        self.ys = tuple(ys)

    @classmethod
    def zero(cls, field):
        return cls(field, 0, 0)

    @classmethod
    def one(cls, field):
        return cls(field, 1, 0)

    @classmethod
    def x(cls, field):
        return cls(field, 0, 1)

    @classmethod
    def y(cls, field, power: int = 1):
        if power < 1:
            raise ValueError("y power must be >= 1")
        ys = [0] * power
        ys[power - 1] = 1
        return cls(field, 0, 0, ys)

    @classmethod
    def scalar(cls, field, c):
        return cls(field, c, 0)

    def is_zero(self) -> bool:
        f = self.field
        return f.is_zero(self.c0) and f.is_zero(self.cx) and not self.ys

    def is_scalar(self) -> bool:
        return self.field.is_zero(self.cx) and not self.ys

    def y_coeff(self, i: int):
        """Coefficient of y^i, i >= 1."""
        if 1 <= i <= len(self.ys):
            return self.ys[i - 1]
        return self.field.zero()

    def __eq__(self, other):
        return (
            isinstance(other, AElement)
            and self.field == other.field
            and self.c0 == other.c0
            and self.cx == other.cx
            and self.ys == other.ys
        )

    def __hash__(self):
        return hash((self.c0, self.cx, self.ys))

    def __add__(self, other: "AElement") -> "AElement":
        f = self._common_field(other)
        n = max(len(self.ys), len(other.ys))
        ys = [f.add(self.y_coeff(i), other.y_coeff(i)) for i in range(1, n + 1)]
        return AElement(f, f.add(self.c0, other.c0), f.add(self.cx, other.cx), ys)

    def __sub__(self, other: "AElement") -> "AElement":
        return self + (-other)

    def __neg__(self) -> "AElement":
        f = self.field
        return AElement(f, f.neg(self.c0), f.neg(self.cx), [f.neg(v) for v in self.ys])

    def scale(self, c) -> "AElement":
        f = self.field
        c = f.coerce(c)
        return AElement(
            f, f.mul(c, self.c0), f.mul(c, self.cx), [f.mul(c, v) for v in self.ys]
        )

    def __mul__(self, other: "AElement") -> "AElement":
        # x^2 = xy = 0 and y^i * y^j = y^(i+j)
        f = self._common_field(other)
        c0 = f.mul(self.c0, other.c0)
        cx = f.add(f.mul(self.c0, other.cx), f.mul(self.cx, other.c0))
        n = len(self.ys) + len(other.ys)
        ys = [f.zero()] * n
        for k in range(1, n + 1):
            acc = f.add(
                f.mul(self.c0, other.y_coeff(k)), f.mul(other.c0, self.y_coeff(k))
            )
            for i in range(1, k):
                acc = f.add(acc, f.mul(self.y_coeff(i), other.y_coeff(k - i)))
            ys[k - 1] = acc
        return AElement(f, c0, cx, ys)

    def _common_field(self, other: "AElement"):
        if self.field != other.field:
            raise ValueError("mixed base fields")
        return self.field

    def degree_coeffs(self, d: int):
        """Coefficients on the degree-d monomial slice ([1], [x, y], or [y^d])."""
        f = self.field
        if d < 0:
            return []
        if d == 0:
            return [self.c0]
        if d == 1:
            return [self.cx, self.y_coeff(1)]
        return [self.y_coeff(d)]

    def homogeneous_degree(self):
        """The degree if homogeneous (zero counts as any degree -> None), else raises."""
        f = self.field
        degs = []
        if not f.is_zero(self.c0):
            degs.append(0)
        if not f.is_zero(self.cx):
            degs.append(1)
        for i, v in enumerate(self.ys, start=1):
            if not f.is_zero(v):
                degs.append(i)
        if not degs:
            return None
        if min(degs) != max(degs):
            raise ValueError(f"inhomogeneous algebra element {self}")
        return degs[0]

    def __repr__(self):
        return format_a(self)


def a_dim(d: int) -> int:
    """k-dimension of the degree-d slice of A."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    if d == 1:
        return 2
    return 1


def a_monomials(field, d: int):
    """The canonical monomial basis of the degree-d slice, in reporting order."""
    if d < 0:
        return []
    if d == 0:
        return [AElement.one(field)]
    if d == 1:
        return [AElement.x(field), AElement.y(field)]
    return [AElement.y(field, d)]


def monomial_labels(d: int):
    if d < 0:
        return []
    if d == 0:
        return ["1"]
    if d == 1:
        return ["x", "y"]
    return [f"y^{d}"]


def a_mul(a: AElement, b: AElement) -> AElement:
    """Product in A; rejects mixed base fields."""
    return a * b


def in_ideal_x(a: AElement) -> bool:
    """Membership in (x) = k*x."""
    f = a.field
    return f.is_zero(a.c0) and not a.ys


def in_ideal_xy(a: AElement) -> bool:
    """Membership in the maximal ideal (x, y)."""
    return a.field.is_zero(a.c0)


_TERM_RE = re.compile(
    r"^\s*(?P<coeff>[+-]?\d+(?:/\d+)?)?\s*(?:\*\s*)?(?P<mono>x|y(?:\^(?P<pow>\d+))?)?\s*$"
)


def parse_a(field, text: str) -> AElement:
    """Parse an algebra literal like ``1+2*x-3/4*y^2``."""
    s = text.strip()
    if not s:
        raise ValueError("empty algebra literal")
    # split into signed terms
    terms = []
    buf = ""
    for idx, ch in enumerate(s):
        if ch in "+-" and idx > 0 and s[idx - 1] not in "+-*/^ ":
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    out = AElement.zero(field)
    for term in terms:
        t = term.strip()
        if t in ("+", "-", ""):
            raise ValueError(f"bad term in algebra literal {text!r}")
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:].strip()
        m = _TERM_RE.match(t)
        if not m or (m.group("coeff") is None and m.group("mono") is None):
            raise ValueError(f"bad term {term!r} in algebra literal {text!r}")
        coeff = field.coerce(m.group("coeff")) if m.group("coeff") else field.one()
        if sign < 0:
            coeff = field.neg(coeff)
        mono = m.group("mono")
        if mono is None:
            out = out + AElement.scalar(field, coeff)
        elif mono == "x":
            out = out + AElement.x(field).scale(coeff)
        else:
            power = int(m.group("pow")) if m.group("pow") else 1
            out = out + AElement.y(field, power).scale(coeff)
    return out


def format_a(a: AElement) -> str:
    """Canonical literal: c0+cx*x+ci*y^i with zero terms omitted (``0`` if zero)."""
    f = a.field
    parts = []
    if not f.is_zero(a.c0):
        parts.append(f.fmt(a.c0))
    if not f.is_zero(a.cx):
        parts.append(f"{f.fmt(a.cx)}*x")
    for i, v in enumerate(a.ys, start=1):
        if not f.is_zero(v):
            parts.append(f"{f.fmt(v)}*y" + (f"^{i}" if i > 1 else ""))
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += "+" + p if not p.startswith("-") else p
    return out
