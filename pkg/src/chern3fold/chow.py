"""Truncated class arithmetic and the complete-intersection oracle.

Computations live in Q[h]/(h^4), the intersection ring of a threefold with
all classes written as polynomials in the hyperplane restriction h.  That
is enough to carry two independent computation routes:

* For a smooth complete intersection X = V(f_a, f_b) in P^5 the restricted
  Euler sequence gives the total Chern class
      c(X) = (1 + h)^6 (1 + a h)^{-1} (1 + b h)^{-1}   (mod h^4),
  and the Chern numbers follow by evaluating against the fundamental
  class, h^3 = d = ab.  Adjunction gives K = (a + b - 6) H, so the same
  threefold also has a closed-form invariant profile, which feeds the
  double point formula route in :mod:`.invariants`.  Agreement of the two
  routes, exactly and for every bidegree, is the oracle test for the
  formula.

* The normal bundle twist N(-1) has c1 = 4H + K and c2 = (d-5) H^2 - HK.
  It is globally generated, so the numbers
      s2H = (c1^2 - c2) N(-1) . H = 9 H^2K + HK^2 - d(d - 21),
      s3  = (c1^3 - 2 c1c2) N(-1)
          = K^3 - 8d(d-13) - 2(d-33) H^2K + 14 HK^2
  are non-negative.  For complete intersections N(-1) splits as
  O(a-1) + O(b-1), giving a second, direct expansion of both numbers.
  The split expansion is the arbiter for the lower-bound constant in the
  K^3 inequality: it is 8d(d-13); the variant 8d(d-15) that sometimes
  gets quoted is inconsistent with the expansion for every bidegree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .invariants import ChernNumbers, InvariantTuple, chern_from_invariants, chi_from_invariants


class NonUnitError(ValueError):
    """Inversion of a class with vanishing constant term."""


class GradedClass:
    """Polynomial q0 + q1 h + q2 h^2 + q3 h^3 with exact rational
    coefficients, multiplied modulo h^4."""

    __slots__ = ("q0", "q1", "q2", "q3")

    def __init__(self, q0=0, q1=0, q2=0, q3=0):
        self.q0 = Fraction(q0)
        self.q1 = Fraction(q1)
        self.q2 = Fraction(q2)
        self.q3 = Fraction(q3)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.q0, self.q1, self.q2, self.q3)

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(self.coefficients())

    def __repr__(self):
        return f"GradedClass({self.q0}, {self.q1}, {self.q2}, {self.q3})"

    def __mul__(self, other: "GradedClass") -> "GradedClass":
        if not isinstance(other, GradedClass):
            return NotImplemented
        u, v = self.coefficients(), other.coefficients()
        return GradedClass(*(
            sum(u[i] * v[k - i] for i in range(k + 1)) for k in range(4)
        ))

    def __pow__(self, n: int) -> "GradedClass":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        out = GradedClass(1)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "GradedClass":
        """Multiplicative inverse mod h^4; requires q0 != 0."""
        if self.q0 == 0:
            raise NonUnitError("constant term is zero, class is not invertible")
        q = self.coefficients()
        r = [1 / q[0]]
        for k in (1, 2, 3):
            r.append(-sum(q[i] * r[k - i] for i in range(1, k + 1)) / q[0])
        return GradedClass(*r)


@dataclass(frozen=True)
class CompleteIntersection:
    """Threefold V(f_a1, f_a2) in P^5, normalized so that a1 <= a2."""

    a1: int
    a2: int

    def __post_init__(self):
        if self.a1 < 2 or self.a2 < 2:
            raise ValueError(f"multidegrees must be >= 2, got ({self.a1}, {self.a2})")
        if self.a1 > self.a2:
            lo, hi = self.a2, self.a1
            object.__setattr__(self, "a1", lo)
            object.__setattr__(self, "a2", hi)

    @property
    def degree(self) -> int:
        return self.a1 * self.a2


@dataclass(frozen=True)
class TwistedNormalData:
    """Classes and Segre-type numbers of the normal bundle twist N(-1).

    c1 = (coefficient of H, coefficient of K) = (4, 1);
    c2 = (coefficient of H^2, coefficient of HK) = (d - 5, -1).
    """

    c1: tuple[int, int]
    c2: tuple[int, int]
    s2H: int
    s3: int


@dataclass(frozen=True)
class DoublePointReport:
    """Chern numbers of one complete intersection computed two ways."""

    ci: CompleteIntersection
    via_classes: ChernNumbers
    via_formulas: ChernNumbers

    @property
    def matches(self) -> tuple[bool, bool, bool]:
        a, b = self.via_classes, self.via_formulas
        return (a.c1cubed == b.c1cubed, a.c1c2 == b.c1c2, a.c3 == b.c3)

    @property
    def ok(self) -> bool:
        return all(self.matches)


def ci_total_chern(ci: CompleteIntersection) -> GradedClass:
    """Total Chern class (1+h)^6 (1+a1 h)^{-1} (1+a2 h)^{-1} mod h^4."""
    ambient = GradedClass(1, 1) ** 6
    return ambient * GradedClass(1, ci.a1).inverse() * GradedClass(1, ci.a2).inverse()


def ci_invariants(ci: CompleteIntersection) -> InvariantTuple:
    """Invariant profile of the complete intersection; K = (a1+a2-6) H.

    s is min(a1, a2): the ideal is generated in degrees a1 and a2, so the
    smallest hypersurface degree containing X is the smaller of the two.
    """
    d = ci.degree
    lam = ci.a1 + ci.a2 - 6
    h2k = lam * d
    hk2 = lam * lam * d
    k3 = lam ** 3 * d
    chi = chi_from_invariants(d, h2k, hk2, k3)
    return InvariantTuple(d=d, h2k=h2k, hk2=hk2, k3=k3, chi=chi, s=ci.a1)


def euler_from_chern(c: GradedClass, d: int) -> int:
    """Topological Euler number: degree-3 coefficient against h^3 = d."""
    value = c.q3 * d
    if value.denominator != 1:
        raise ValueError(f"c3 evaluates to the non-integer {value}")
    return value.numerator


def chern_numbers_from_class(c: GradedClass, d: int) -> ChernNumbers:
    """Evaluate (c1^3, c1c2, c3) of a total Chern class against h^3 = d."""
    values = (c.q1 ** 3 * d, c.q1 * c.q2 * d, c.q3 * d)
    if any(v.denominator != 1 for v in values):
        raise ValueError(f"non-integral Chern numbers {values}")
    return ChernNumbers(*(v.numerator for v in values))


def twisted_normal_segre(t: InvariantTuple) -> TwistedNormalData:
    """Segre-type numbers of N(-1) from the invariant profile."""
    d = t.d
    s2h = 9 * t.h2k + t.hk2 - d * (d - 21)
    s3 = t.k3 - 8 * d * (d - 13) - 2 * (d - 33) * t.h2k + 14 * t.hk2
    return TwistedNormalData(c1=(4, 1), c2=(d - 5, -1), s2H=s2h, s3=s3)


def ci_twisted_normal_direct(ci: CompleteIntersection) -> tuple[int, int]:
    """(s2H, s3) of N(-1) = O(a1-1) + O(a2-1) by direct expansion.

    With m = a1 + a2 - 2 and p = (a1-1)(a2-1): c1 = mH, c2 = pH^2, and the
    rank-2 bundle has c3 = 0, so
        s2H = (m^2 - p) d   and   s3 = (m^3 - 2mp) d.
    Independent of the profile formulas; used to pin their coefficients.
    """
    m = ci.a1 + ci.a2 - 2
    p = (ci.a1 - 1) * (ci.a2 - 1)
    d = ci.degree
    return ((m * m - p) * d, (m ** 3 - 2 * m * p) * d)


def verify_double_point_formula(ci: CompleteIntersection) -> DoublePointReport:
    """Compute (c1^3, c1c2, c3) by both routes and report exact equality."""
    via_classes = chern_numbers_from_class(ci_total_chern(ci), ci.degree)
    via_formulas = chern_from_invariants(ci_invariants(ci))
    return DoublePointReport(ci=ci, via_classes=via_classes, via_formulas=via_formulas)
