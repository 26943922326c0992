"""Exact arithmetic on the numerical Grothendieck group of P^2.

A class is stored as a truncated Chern character (r, d, s) meaning
r + d*H + s*H^2 with r, d integers and s rational subject to the
integrality of c_2 = d^2/2 - s.  All pairings are computed by
Riemann-Roch with td(P^2) = 1 + (3/2)H + H^2, so chi(F) = r + (3/2)d + s.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSolution, UnknownBundle, ZeroRank


@dataclass(frozen=True)
class ChernP2:
    """Truncated Chern character (rank, degree, ch_2 coefficient) on P^2."""

    r: int
    d: int
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        c2 = Fraction(self.d * self.d, 2) - self.s
        if c2.denominator != 1:
            raise ValueError(f"c2 = d^2/2 - s must be an integer, got {c2}")

    @property
    def c2(self) -> int:
        return int(Fraction(self.d * self.d, 2) - self.s)

    def __repr__(self):
        return f"ChernP2({self.r}, {self.d}, {self.s})"

    def __add__(self, other: "ChernP2") -> "ChernP2":
        return ChernP2(self.r + other.r, self.d + other.d, self.s + other.s)

    def __sub__(self, other: "ChernP2") -> "ChernP2":
        return ChernP2(self.r - other.r, self.d - other.d, self.s - other.s)

    def __neg__(self) -> "ChernP2":
        return ChernP2(-self.r, -self.d, -self.s)

    def scale(self, n: int) -> "ChernP2":
        return ChernP2(n * self.r, n * self.d, n * self.s)

    def to_json(self) -> dict:
        return {"r": self.r, "d": self.d, "s": [self.s.numerator, self.s.denominator]}

    @staticmethod
    def from_json(obj: dict) -> "ChernP2":
        num, den = obj["s"]
        return ChernP2(int(obj["r"]), int(obj["d"]), Fraction(num, den))


O = ChernP2(1, 0, Fraction(0))


def tensor(a: ChernP2, b: ChernP2) -> ChernP2:
    """Product of Chern characters truncated at H^2."""
    return ChernP2(
        a.r * b.r,
        a.r * b.d + a.d * b.r,
        a.r * b.s + a.d * b.d + a.s * b.r,
    )


def dual(a: ChernP2) -> ChernP2:
    return ChernP2(a.r, -a.d, a.s)


def line(k: int) -> ChernP2:
    return ChernP2(1, k, Fraction(k * k, 2))


def twist(a: ChernP2, k: int) -> ChernP2:
    return tensor(a, line(k))


def slope(a: ChernP2) -> Fraction:
    if a.r == 0:
        raise ZeroRank(f"slope of rank-zero class {a}")
    return Fraction(a.d, a.r)


def chi(a: ChernP2) -> Fraction:
    """chi(F) = integral of ch(F).td(P^2) = r + (3/2)d + s."""
    return a.r + Fraction(3 * a.d, 2) + a.s


def euler_p2(a: ChernP2, b: ChernP2) -> Fraction:
    """Euler pairing chi(a, b) = chi(dual(a) ** b) by Riemann-Roch."""
    return chi(tensor(dual(a), b))


def exceptional_ch2(r: int, d: int) -> Fraction:
    """The unique s making (r, d, s) self-pair to 1."""
    if r == 0:
        raise NoSolution("chi(E,E) = 1 has no solution at rank 0")
    # chi(a, a) = r^2 - d^2 + 2 r s
    return Fraction(1 - r * r + d * d, 2 * r)


def is_exceptional_class(a: ChernP2) -> bool:
    return euler_p2(a, a) == 1


def strong_pair_chi(a: ChernP2, b: ChernP2) -> Fraction:
    """Closed slope-rank form of the pairing, valid for exceptional classes.

    chi(a,b) = (1/2) r(a) r(b) ((mu_a - mu_b)^2 + 3(mu_b - mu_a)
               + 1/r(a)^2 + 1/r(b)^2)
    """
    ma, mb = slope(a), slope(b)
    return Fraction(a.r * b.r, 2) * (
        (ma - mb) ** 2 + 3 * (mb - ma)
        + Fraction(1, a.r * a.r) + Fraction(1, b.r * b.r)
    )


# --- named bundles -----------------------------------------------------------

OMEGA = ChernP2(2, -3, Fraction(3, 2))
TANGENT = ChernP2(2, 3, Fraction(3, 2))


def binom2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


def sym_tangent(n: int) -> ChernP2:
    """Class of Sym^n T via [Sym^n T] = C(n+2,2)[O(n)] - C(n+1,2)[O(n-1)]."""
    if n < 0:
        raise UnknownBundle(f"Sym^{n}T")
    if n == 0:
        return O
    return line(n).scale(binom2(n + 2)) - line(n - 1).scale(binom2(n + 1))


_NAME_RE = re.compile(
    r"^\s*(O|Omega|Ω|T|(?:∧|w|\^)(?P<wk>[0-2])T|(?:Sym|S)(?P<sn>\d+)T)"
    r"\s*(?:\(\s*(?P<tw>-?\d+)\s*\))?\s*$"
)


def std_class(name: str) -> ChernP2:
    """Class of a named bundle: O(k), Omega(k), T(k), w2T(k), SymnT(k)."""
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownBundle(name)
    k = int(m.group("tw")) if m.group("tw") is not None else 0
    head = m.group(1)
    if head == "O":
        base = O
    elif head in ("Omega", "Ω"):
        base = OMEGA
    elif head == "T":
        base = TANGENT
    elif m.group("wk") is not None:
        base = [O, TANGENT, line(3)][int(m.group("wk"))]
    elif m.group("sn") is not None:
        base = sym_tangent(int(m.group("sn")))
    else:  # pragma: no cover
        raise UnknownBundle(name)
    return twist(base, k)
