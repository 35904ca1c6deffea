"""Coefficient fields for exact linear algebra: GF(p) and the rationals.

Characteristic 0 is realized over the rationals with arbitrary-precision
integer arithmetic (fraction-free elimination), so no computation anywhere
involves floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) for ``characteristic`` a prime, or the rationals for 0."""

    characteristic: int = 2

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise DomainError(
                f"characteristic must be 0 or a prime, got {self.characteristic}"
            )

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``gf<p>`` (e.g. gf2, gf101), ``rational``, ``q`` or ``qq``."""
        t = text.strip().lower()
        if t in ("rational", "rationals", "q", "qq", "char0"):
            return cls(0)
        if t.startswith("gf"):
            try:
                p = int(t[2:])
            except ValueError:
                raise DomainError(f"cannot parse field spec {text!r}") from None
            return cls(p)
        raise DomainError(f"cannot parse field spec {text!r}")

    def __str__(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.characteristic})"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(0)
