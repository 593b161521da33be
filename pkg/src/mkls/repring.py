"""Graded virtual representations of symmetric groups and their q-analogues.

A :class:`GradedRep` is a polynomial in ``t`` whose coefficients are Schur
vectors of one fixed degree ``n``. With the ``sym`` flavor the coefficients are
representations of S_n; with the ``unipotent`` flavor the same vectors are read
as multiplicities of unipotent representations V_lambda(q) of GL_n(F_q), so the
arithmetic is shared and only the dimension map differs.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

from .partitions import Partition, hook_lengths, n_stat
from .poly import IntPolynomial
from .symfunc import (
    ZERO,
    DegreeError,
    SchurVector,
    branch_restrict,
    is_schur_nonneg,
    lr_product,
    sv_dimension,
)

SYM = "sym"
UNIPOTENT = "unipotent"


class FlavorError(ValueError):
    """Operation not defined for this representation flavor."""


@dataclass(frozen=True)
class QContext:
    q: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q must be at least 2, got {self.q}")


class GradedRep:
    __slots__ = ("coeffs", "group_degree", "flavor")

    def __init__(self, coeffs: Sequence[SchurVector], group_degree: int, flavor: str = SYM):
        if flavor not in (SYM, UNIPOTENT):
            raise ValueError(f"unknown flavor {flavor!r}")
        c = list(coeffs)
        for i, v in enumerate(c):
            if v and v.degree != group_degree:
                raise DegreeError(
                    f"coefficient of t^{i} has degree {v.degree}, expected {group_degree}"
                )
        while c and not c[-1]:
            c.pop()
        self.coeffs: tuple[SchurVector, ...] = tuple(c)
        self.group_degree = group_degree
        self.flavor = flavor

    @classmethod
    def constant(cls, v: SchurVector, group_degree: Optional[int] = None) -> "GradedRep":
        return cls([v], v.degree if group_degree is None else group_degree)

    @property
    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    def __getitem__(self, i: int) -> SchurVector:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedRep)
            and self.coeffs == other.coeffs
            and (not self.coeffs or self.group_degree == other.group_degree)
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.group_degree))

    def __repr__(self) -> str:
        return f"GradedRep({self.pretty()}, n={self.group_degree}, {self.flavor})"

    def pretty(self) -> str:
        terms = []
        for i, v in enumerate(self.coeffs):
            if not v:
                continue
            body = v.pretty()
            if len(v) > 1:
                body = f"({body})"
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(body + mono)
        return " + ".join(terms) if terms else "0"

    def _like(self, coeffs) -> "GradedRep":
        return GradedRep(coeffs, self.group_degree, self.flavor)

    def _check(self, other: "GradedRep") -> None:
        if self.flavor != other.flavor:
            raise FlavorError(f"cannot combine {self.flavor} and {other.flavor}")
        if self and other and self.group_degree != other.group_degree:
            raise DegreeError(f"group degrees {self.group_degree} and {other.group_degree} differ")

    def __add__(self, other: "GradedRep") -> "GradedRep":
        self._check(other)
        n = max(len(self), len(other))
        gd = self.group_degree if self else other.group_degree
        return GradedRep([self[i] + other[i] for i in range(n)], gd, self.flavor)

    def __neg__(self) -> "GradedRep":
        return self._like([-v for v in self.coeffs])

    def __sub__(self, other: "GradedRep") -> "GradedRep":
        return self + (-other)

    def scale_poly(self, p: IntPolynomial) -> "GradedRep":
        """Multiply by an integer polynomial in t (a trivial-group factor)."""
        out = [ZERO] * (len(self.coeffs) + max(len(p) - 1, 0))
        for i, v in enumerate(self.coeffs):
            for j, c in enumerate(p):
                if c:
                    out[i + j] = out[i + j] + v.scale(c)
        return self._like(out)

    def shift(self, k: int) -> "GradedRep":
        return self._like([ZERO] * k + list(self.coeffs))

    def reverse(self, d: int) -> "GradedRep":
        """t^d * f(1/t)."""
        if self.degree > d:
            raise ValueError(f"degree {self.degree} exceeds reflection degree {d}")
        return self._like([self[d - i] for i in range(d + 1)])

    def to_json(self) -> dict:
        return {
            "group_degree": self.group_degree,
            "flavor": self.flavor,
            "coeffs": [v.to_json() for v in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedRep":
        return cls(
            [SchurVector.from_json(c) for c in data["coeffs"]],
            data["group_degree"],
            data.get("flavor", SYM),
        )


def induct_product(f: GradedRep, g: GradedRep) -> GradedRep:
    """Induction product S_a x S_b -> S_{a+b}, graded by adding t-degrees."""
    if f.flavor != SYM or g.flavor != SYM:
        raise FlavorError("induction product is defined for the symmetric-group flavor")
    out = [ZERO] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + lr_product(a, b)
    return GradedRep(out, f.group_degree + g.group_degree, SYM)


def restrict_one(f: GradedRep) -> GradedRep:
    """Coefficientwise restriction from S_{h+1} to S_h."""
    if f.group_degree < 1:
        raise DegreeError("cannot restrict from S_0")
    return GradedRep([branch_restrict(v) if v else ZERO for v in f.coeffs], f.group_degree - 1, f.flavor)


def is_honest(f: GradedRep) -> bool:
    return all(is_schur_nonneg(v) for v in f.coeffs)


def is_palindromic(f: GradedRep, d: int) -> bool:
    if f.degree > d:
        return False
    return all(f[i] == f[d - i] for i in range(d + 1))


def unimodal_pivots(f: GradedRep) -> list[int]:
    """Every pivot i at which the coefficient sequence is equivariantly unimodal."""
    c = [f[i] for i in range(f.degree + 1)]
    d = len(c) - 1
    rising = [True] * (d + 1)  # rising[i]: c_0 <= ... <= c_i
    for i in range(1, d + 1):
        rising[i] = rising[i - 1] and is_schur_nonneg(c[i] - c[i - 1])
    falling = [True] * (d + 1)  # falling[i]: c_i >= ... >= c_d
    for i in range(d - 1, -1, -1):
        falling[i] = falling[i + 1] and is_schur_nonneg(c[i] - c[i + 1])
    return [i for i in range(d + 1) if rising[i] and falling[i]]


def is_equivariantly_unimodal(f: GradedRep) -> bool:
    return bool(unimodal_pivots(f))


def logconcavity_witnesses(f: GradedRep) -> list[tuple[int, int]]:
    """Pairs (i, j) where c_i c_j - c_{i-1} c_{j+1} fails to be Schur-nonnegative."""
    if f.flavor != SYM:
        raise FlavorError("strongly induced log-concavity is checked on the symmetric-group flavor")
    d = f.degree
    bad = []
    for i in range(1, d):
        for j in range(i, d):
            diff = lr_product(f[i], f[j]) - lr_product(f[i - 1], f[j + 1])
            if not is_schur_nonneg(diff):
                bad.append((i, j))
    return bad


def strongly_induced_logconcave(f: GradedRep) -> bool:
    return not logconcavity_witnesses(f)


def dimension_poly(f: GradedRep) -> IntPolynomial:
    if f.flavor != SYM:
        raise FlavorError("use qdimension_poly for unipotent representations")
    return IntPolynomial(sv_dimension(v) for v in f.coeffs)


# -- q-analogues --------------------------------------------------------------

def _q(ctx) -> int:
    return ctx.q if isinstance(ctx, QContext) else int(ctx)


def q_integer(m: int, q: int) -> int:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    return sum(q**i for i in range(m))


def q_factorial(m: int, ctx) -> int:
    q = _q(ctx)
    if m < 0:
        raise ValueError("q-factorial of a negative integer")
    return prod((q_integer(i, q) for i in range(1, m + 1)), start=1)


def gauss_binom(n: int, k: int, ctx) -> int:
    """Gaussian binomial coefficient [n choose k]_q (any integer q, including 1)."""
    if not 0 <= k <= n:
        raise ValueError(f"Gaussian binomial needs 0 <= k <= n, got n={n}, k={k}")
    q = _q(ctx)
    return q_factorial(n, q) // (q_factorial(k, q) * q_factorial(n - k, q))


def is_hook(lam: Partition) -> bool:
    return len(lam) <= 1 or all(p == 1 for p in lam[1:])


def unipotent_dim(lam: Partition, ctx, warn: bool = False) -> int:
    """Dimension of the unipotent representation V_lam(q) of GL_|lam|(F_q).

    Uses q^{n(lam)} [m]_q! / prod over cells of [hook]_q. For hooks this agrees
    with the closed forms q^{binom(i,2)} for (1^i) and
    q^{binom(b+1,2)} [m-1 choose b]_q for (m-b, 1^b); for other shapes the
    value is an extrapolation and ``warn=True`` emits a warning.
    """
    q = _q(ctx)
    if warn and not is_hook(lam):
        warnings.warn(f"unipotent dimension of non-hook shape {lam} is extrapolated", stacklevel=2)
    num = q ** n_stat(lam) * q_factorial(sum(lam), q)
    den = prod((q_integer(h, q) for h in hook_lengths(lam)), start=1)
    value, rem = divmod(num, den)
    assert rem == 0, f"non-integral unipotent dimension for {lam}"
    return value


def qdimension_poly(f: GradedRep, ctx, orbit_indices: Optional[Sequence[int]] = None) -> IntPolynomial:
    """Coefficientwise sum of multiplicity * dim V_lam(q).

    ``orbit_indices`` optionally scales the coefficient of t^i by the i-th
    entry (for vectors that record a Levi-level product before parabolic
    induction); omitted entries count as 1.
    """
    if f.flavor != UNIPOTENT:
        raise FlavorError("qdimension_poly expects the unipotent flavor")
    q = _q(ctx)
    out = []
    for i, v in enumerate(f.coeffs):
        scale = orbit_indices[i] if orbit_indices is not None and i < len(orbit_indices) else 1
        out.append(scale * sum(c * unipotent_dim(lam, q) for lam, c in v.items()))
    return IntPolynomial(out)


def as_unipotent(f: GradedRep) -> GradedRep:
    return GradedRep(f.coeffs, f.group_degree, UNIPOTENT)
