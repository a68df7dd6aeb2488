"""Exact numerical invariants of smooth threefolds embedded in P^5.

A threefold X in P^5 enters this package purely through six integers: the
degree d = H^3, the mixed intersection numbers H^2K, HK^2 and K^3 of the
hyperplane class H and the canonical class K, the holomorphic Euler
characteristic chi(O_X), and optionally s(X), the smallest degree of a
hypersurface containing X.  This module holds the closed-form arithmetic
on such profiles:

* Chern numbers via the double point formula of the embedding,
      c2 = (15 - d) H^2 + 6 HK + K^2,
      c3 = (6d - 70) d + (2d - 51) H^2K - 12 HK^2 - K^3,
  with the sign convention c1 = -K applied throughout, so that
  c1^3 = -K^3 and c1c2 = (d - 15) H^2K - 6 HK^2 - K^3;
* the ratio point (x, y) = (c1^3/c1c2, c3/c1c2);
* the degree-weighted combinations
      Delta1 = (d - 15) H^2K - 6 HK^2,
      Delta2 = (6d - 70) d + (2d - 51) H^2K - 12 HK^2,
  in terms of which c1c2 = Delta1 - K^3 and c3 = Delta2 - K^3;
* chi(O_X) = c1c2 / 24, equivalently K^3 = (d-15) H^2K - 6 HK^2 - 24 chi,
  used both as a consistency check and to reconstruct chi;
* the genus of the general curve section C = X cap P^3, which satisfies
  2g - 2 = H^2K + 2d by adjunction applied twice.

All arithmetic is exact (int and fractions.Fraction).  Floating point
belongs to presentation layers only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InvalidTupleError(ValueError):
    """The given integers do not describe any smooth threefold profile."""


class InconsistentTupleError(InvalidTupleError):
    """k3 and chi disagree: K^3 = (d-15) H^2K - 6 HK^2 - 24 chi fails."""


class RatiosUndefinedError(ZeroDivisionError):
    """Chern ratios are undefined because c1c2 = 0 (equivalently chi = 0)."""

    def __init__(self, chern: "ChernNumbers"):
        super().__init__(f"c1c2 = 0, ratios undefined for {chern}")
        self.chern = chern


@dataclass(frozen=True)
class InvariantTuple:
    """Numerical profile (d, H^2K, HK^2, K^3, chi, s) of a threefold in P^5.

    Construction only checks the cheap positivity constraints; use
    :meth:`validate` to enforce the parity and k3/chi consistency
    relations (kept lazy so that deliberately broken profiles can be fed
    to the constraint reports for diagnosis).
    """

    d: int
    h2k: int
    hk2: int
    k3: int
    chi: int
    s: int | None = None

    def __post_init__(self):
        if self.d < 1:
            raise InvalidTupleError(f"degree must be positive, got d={self.d}")
        if self.s is not None and self.s < 1:
            raise InvalidTupleError(f"s must be positive when given, got s={self.s}")

    def implied_k3(self) -> int:
        return (self.d - 15) * self.h2k - 6 * self.hk2 - 24 * self.chi

    def validate(self) -> "InvariantTuple":
        """Check parity of H^2K + 2d and the k3/chi consistency relation."""
        if (self.h2k + 2 * self.d) % 2 != 0:
            raise InvalidTupleError(
                f"h2k + 2d = {self.h2k + 2 * self.d} is odd; the curve-section "
                "genus 2g - 2 = h2k + 2d would not be an even integer"
            )
        implied = self.implied_k3()
        if self.k3 != implied:
            raise InconsistentTupleError(
                f"k3={self.k3} inconsistent with chi={self.chi}: "
                f"(d-15)*h2k - 6*hk2 - 24*chi = {implied}"
            )
        return self

    def to_record(self) -> dict[str, int]:
        """Flat key/value record; s omitted when unknown."""
        rec = {"d": self.d, "h2k": self.h2k, "hk2": self.hk2,
               "k3": self.k3, "chi": self.chi}
        if self.s is not None:
            rec["s"] = self.s
        return rec

    @classmethod
    def from_record(cls, record: dict) -> "InvariantTuple":
        required = ("d", "h2k", "hk2", "k3", "chi")
        missing = [k for k in required if k not in record]
        if missing:
            raise InvalidTupleError(f"record is missing fields: {', '.join(missing)}")
        values = {}
        for key in (*required, "s"):
            if key == "s" and key not in record:
                continue
            v = record[key]
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidTupleError(f"field {key!r} must be an integer, got {v!r}")
            values[key] = v
        return cls(**values)


@dataclass(frozen=True)
class ChernNumbers:
    c1cubed: int
    c1c2: int
    c3: int


@dataclass(frozen=True)
class ChernRatios:
    """The point (x, y) = (c1^3/c1c2, c3/c1c2) in the ratio plane."""

    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class DeltaPair:
    delta1: int
    delta2: int


@dataclass(frozen=True)
class SectionalGenus:
    """Genus of the general curve section, 2g - 2 = H^2K + 2d."""

    g: int


def deltas(t: InvariantTuple) -> DeltaPair:
    """Degree-weighted combinations Delta1 and Delta2 of a profile."""
    d1 = (t.d - 15) * t.h2k - 6 * t.hk2
    d2 = (6 * t.d - 70) * t.d + (2 * t.d - 51) * t.h2k - 12 * t.hk2
    return DeltaPair(d1, d2)


def chern_from_invariants(t: InvariantTuple) -> ChernNumbers:
    """Chern numbers of the profile via the double point formula.

    Enforces the consistency relation K^3 = (d-15) H^2K - 6 HK^2 - 24 chi
    before converting, since both k3 and chi are stored redundantly.
    """
    implied = t.implied_k3()
    if t.k3 != implied:
        raise InconsistentTupleError(
            f"k3={t.k3} inconsistent with chi={t.chi}: "
            f"(d-15)*h2k - 6*hk2 - 24*chi = {implied}"
        )
    dd = deltas(t)
    return ChernNumbers(c1cubed=-t.k3, c1c2=dd.delta1 - t.k3, c3=dd.delta2 - t.k3)


def ratios(c: ChernNumbers) -> ChernRatios:
    """Exact ratio point (c1^3/c1c2, c3/c1c2); undefined when c1c2 = 0."""
    if c.c1c2 == 0:
        raise RatiosUndefinedError(c)
    return ChernRatios(Fraction(c.c1cubed, c.c1c2), Fraction(c.c3, c.c1c2))


def chi_from_invariants(d: int, h2k: int, hk2: int, k3: int) -> int:
    """Reconstruct chi(O_X) from the intersection numbers.

    chi = ((d-15) H^2K - 6 HK^2 - K^3) / 24; non-divisibility by 24 means
    the integers cannot be the profile of a smooth threefold.
    """
    num = (d - 15) * h2k - 6 * hk2 - k3
    if num % 24 != 0:
        raise InvalidTupleError(
            f"(d-15)*h2k - 6*hk2 - k3 = {num} is not divisible by 24; "
            "no integral chi exists for this profile"
        )
    return num // 24


def sectional_genus(t: InvariantTuple) -> SectionalGenus:
    """Genus of the general curve section, g = (H^2K + 2d + 2) / 2."""
    two_g_minus_2 = t.h2k + 2 * t.d
    if two_g_minus_2 % 2 != 0:
        raise InvalidTupleError(
            f"h2k + 2d = {two_g_minus_2} is odd; sectional genus is not integral"
        )
    if two_g_minus_2 < -2:
        raise InvalidTupleError(
            f"h2k + 2d = {two_g_minus_2} < -2 gives negative sectional genus"
        )
    return SectionalGenus((two_g_minus_2 + 2) // 2)
