"""Integer combinations of Schur functions.

A :class:`SchurVector` is the Frobenius image of a virtual representation of
a symmetric group. Products are computed with the Littlewood-Richardson rule
by enumerating LR skew tableaux; the vertical-strip Pieri rule is kept as an
independent fast path.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .partitions import Partition, dim_syt, make_partition, removable_cells


class DegreeError(ValueError):
    """Raised when Schur vectors of different degrees are combined."""


class SchurVector:
    """Finite map partition -> integer, homogeneous of a single degree."""

    __slots__ = ("_coeffs", "_degree", "_hash")

    def __init__(self, coeffs: Optional[Mapping[Partition, int]] = None):
        clean: dict[Partition, int] = {}
        degree = None
        for lam, c in (coeffs or {}).items():
            if c == 0:
                continue
            lam = make_partition(lam)
            size = sum(lam)
            if degree is None:
                degree = size
            elif size != degree:
                raise DegreeError(f"mixed degrees {degree} and {size} in Schur vector")
            clean[lam] = clean.get(lam, 0) + int(c)
        self._coeffs = {lam: c for lam, c in clean.items() if c != 0}
        self._degree = degree if self._coeffs else None
        self._hash = None

    @classmethod
    def schur(cls, lam: Optional[Iterable[int]], coeff: int = 1) -> "SchurVector":
        """``coeff * s_lam``; ``lam=None`` (an invalid shape) gives zero."""
        if lam is None:
            return cls()
        return cls({tuple(lam): coeff})

    @classmethod
    def _trusted(cls, coeffs: dict) -> "SchurVector":
        out = cls.__new__(cls)
        out._coeffs = {lam: c for lam, c in coeffs.items() if c != 0}
        out._degree = sum(next(iter(out._coeffs))) if out._coeffs else None
        out._hash = None
        return out

    # -- container protocol -------------------------------------------------
    @property
    def degree(self) -> Optional[int]:
        return self._degree

    def items(self):
        return self._coeffs.items()

    def support(self) -> list[Partition]:
        return sorted(self._coeffs)

    def __getitem__(self, lam) -> int:
        return self._coeffs.get(tuple(lam), 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._coeffs
        return isinstance(other, SchurVector) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SchurVector({self.pretty()})"

    def pretty(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for lam in sorted(self._coeffs, reverse=True):
            c = self._coeffs[lam]
            name = "s_(" + ",".join(map(str, lam)) + ")"
            if c == 1:
                terms.append(f"+ {name}")
            elif c == -1:
                terms.append(f"- {name}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {abs(c)}{name}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    # -- arithmetic ---------------------------------------------------------
    def _check_same(self, other: "SchurVector") -> None:
        if self._degree is not None and other._degree is not None and self._degree != other._degree:
            raise DegreeError(f"cannot combine degrees {self._degree} and {other._degree}")

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if isinstance(other, int) and other == 0:
            return self
        self._check_same(other)
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SchurVector._trusted(out)

    __radd__ = __add__

    def __neg__(self) -> "SchurVector":
        return SchurVector._trusted({lam: -c for lam, c in self._coeffs.items()})

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-other)

    def scale(self, k: int) -> "SchurVector":
        return SchurVector._trusted({lam: k * c for lam, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return lr_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "coeff": self._coeffs[lam]} for lam in sorted(self._coeffs)]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SchurVector":
        return cls({tuple(d["partition"]): d["coeff"] for d in data})


ZERO = SchurVector()


def s(*parts: int) -> SchurVector:
    """Shorthand: ``s(3, 1)`` is the Schur function s_(3,1)."""
    return SchurVector.schur(parts)


# -- Littlewood-Richardson --------------------------------------------------

@lru_cache(maxsize=200_000)
def lr_coefficients(lam: Partition, mu: Partition) -> tuple:
    """All (nu, c^nu_{lam,mu}) with c > 0, as a sorted tuple.

    Enumerates LR skew tableaux of shape nu/lam and content mu row by row of
    mu: the boxes labelled r form a horizontal strip, and the reverse reading
    word must be a lattice word.
    """
    if not mu:
        return ((lam, 1),)
    if not lam:
        return ((mu, 1),)
    results: dict[Partition, int] = {}
    max_rows = len(lam) + len(mu)

    def place(label: int, shape: list[int], prev_cum: Optional[list[int]]):
        if label == len(mu):
            key = tuple(shape)
            results[key] = results.get(key, 0) + 1
            return
        size = mu[label]
        nrows = min(len(shape) + 1, max_rows)
        padded = shape + [0]
        adds = [0] * nrows

        def rec(i: int, remaining: int, cum: int):
            if i == nrows:
                if remaining == 0:
                    new_shape = [padded[j] + adds[j] for j in range(nrows)]
                    while new_shape and new_shape[-1] == 0:
                        new_shape.pop()
                    cums = []
                    run = 0
                    for j in range(nrows):
                        run += adds[j]
                        cums.append(run)
                    place(label + 1, new_shape, cums)
                return
            cur = padded[i]
            top = remaining
            if i > 0:
                top = min(top, padded[i - 1] - cur)
            if prev_cum is not None:
                # lattice word: this label's count through row i is bounded by
                # the previous label's count through row i-1
                before = prev_cum[min(i, len(prev_cum)) - 1] if i > 0 else 0
                top = min(top, before - cum)
            for a in range(top, -1, -1):
                adds[i] = a
                rec(i + 1, remaining - a, cum + a)
            adds[i] = 0

        rec(0, size, 0)

    place(0, list(lam), None)
    return tuple(sorted(results.items()))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    return dict(lr_coefficients(tuple(lam), tuple(mu))).get(tuple(nu), 0)


def lr_product(f: SchurVector, g: SchurVector) -> SchurVector:
    """Product of Schur vectors (Frobenius image of induction product)."""
    if not f or not g:
        return ZERO
    out: dict[Partition, int] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            # enumerate with the shorter content for speed; c is symmetric
            key = (lam, mu) if (len(mu), sum(mu)) <= (len(lam), sum(lam)) else (mu, lam)
            for nu, c in lr_coefficients(*key):
                out[nu] = out.get(nu, 0) + a * b * c
    return SchurVector._trusted(out)


def dual_pieri(r: int, lam: Partition) -> SchurVector:
    """e_r * s_lam: sum of s_mu over mu/lam a vertical strip with r boxes."""
    lam = tuple(lam)
    rows = list(lam) + [0] * r
    out: dict[Partition, int] = {}

    def rec(i: int, remaining: int, shape: list[int]):
        if i == len(rows):
            if remaining == 0:
                mu = tuple(x for x in shape if x)
                out[mu] = out.get(mu, 0) + 1
            return
        for add in (0, 1):
            if add > remaining:
                break
            new = rows[i] + add
            if i > 0 and new > shape[i - 1]:
                continue
            rec(i + 1, remaining - add, shape + [new])

    rec(0, r, [])
    return SchurVector._trusted(out)


def branch_restrict(f: SchurVector) -> SchurVector:
    """Restriction S_m -> S_{m-1}: remove one box from every partition."""
    if f.degree == 0:
        raise DegreeError("cannot restrict a degree-0 Schur vector")
    out: dict[Partition, int] = {}
    for lam, c in f.items():
        for smaller in removable_cells(lam):
            out[smaller] = out.get(smaller, 0) + c
    return SchurVector._trusted(out)


def is_schur_nonneg(f: SchurVector) -> bool:
    return all(c >= 0 for _, c in f.items())


def schur_geq(f: SchurVector, g: SchurVector) -> bool:
    """True iff f - g is Schur-nonnegative."""
    return is_schur_nonneg(f - g)


def sv_dimension(f: SchurVector) -> int:
    return sum(c * dim_syt(lam) for lam, c in f.items())
