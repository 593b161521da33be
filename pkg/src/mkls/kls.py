"""Ordinary Kazhdan-Lusztig-Stanley invariants by recursion on the lattice of flats.

Every interval [F, G] of a lattice of flats is the lattice of the minor
(M|G)/F, so P, Q and the characteristic polynomial are computed once per
interval and shared. These are brute-force reference values: the closed
forms in :mod:`mkls.formulas` are checked against them.

Matroids with loops get the zero polynomial for chi, P, Q, Z and Y.
"""
from __future__ import annotations

from typing import Optional

from .matroid import FlatLattice, Matroid
from .poly import IntPolynomial

ONE = IntPolynomial([1])
ZERO = IntPolynomial()


class KLSConsistencyError(AssertionError):
    """A proven property (degree bound, palindromicity, positivity) failed."""


class MinorCache:
    """Memo of P and Q per flat interval, keyed by (lower flat, upper flat) bitsets."""

    def __init__(self):
        self.P: dict[tuple[int, int], IntPolynomial] = {}
        self.Q: dict[tuple[int, int], IntPolynomial] = {}
        self.chi: dict[tuple[int, int], IntPolynomial] = {}
        self.hits = 0

    def __len__(self) -> int:
        return len(self.P) + len(self.Q)


class KLSEngine:
    def __init__(self, M: Matroid, cache: Optional[MinorCache] = None, use_cache: bool = True):
        self.M = M
        self.L: FlatLattice = M.lattice
        self.cache = cache if cache is not None else MinorCache()
        self.use_cache = use_cache

    def _key(self, i: int, j: int) -> tuple[int, int]:
        return self.L.flats[i], self.L.flats[j]

    def chi(self, i: int, j: int) -> IntPolynomial:
        key = self._key(i, j)
        if self.use_cache and key in self.cache.chi:
            return self.cache.chi[key]
        value = self.L.interval_char_poly(i, j)
        if self.use_cache:
            self.cache.chi[key] = value
        return value

    def P(self, i: int, j: int) -> IntPolynomial:
        """Kazhdan-Lusztig polynomial of the interval [flats[i], flats[j]]."""
        key = self._key(i, j)
        if self.use_cache and key in self.cache.P:
            self.cache.hits += 1
            return self.cache.P[key]
        L = self.L
        r = L.ranks[j] - L.ranks[i]
        if r == 0:
            value = ONE
        else:
            Fj = L.flats[j]
            rhs = ZERO
            for h in L.up[i]:
                if h == i or L.flats[h] & ~Fj:
                    continue
                rhs = rhs + self.chi(i, h) * self.P(h, j)
            # t^r P(1/t) - P(t) = rhs, with deg P < r/2
            value = IntPolynomial(-rhs[d] for d in range((r + 1) // 2))
            check = value.reverse(r) - value
            if check != rhs:
                raise KLSConsistencyError(
                    f"KL recursion inconsistent on interval of rank {r}: {check} != {rhs}"
                )
        if self.use_cache:
            self.cache.P[key] = value
        return value

    def Q(self, i: int, j: int) -> IntPolynomial:
        """Inverse KL polynomial, from sum_H (-1)^rk(H) Q(F,H) P(H,G) = 0."""
        key = self._key(i, j)
        if self.use_cache and key in self.cache.Q:
            self.cache.hits += 1
            return self.cache.Q[key]
        L = self.L
        r = L.ranks[j] - L.ranks[i]
        if r == 0:
            value = ONE
        else:
            Fj = L.flats[j]
            acc = ZERO
            for h in L.up[i]:
                if h == j or L.flats[h] & ~Fj:
                    continue
                term = self.Q(i, h) * self.P(h, j)
                acc = acc + (term if (L.ranks[h] - L.ranks[i]) % 2 == 0 else -term)
            value = acc if r % 2 == 1 else -acc
            if 2 * value.degree >= r:
                raise KLSConsistencyError(f"inverse KL degree {value.degree} violates bound for rank {r}")
        if self.use_cache:
            self.cache.Q[key] = value
        return value

    # -- whole-matroid invariants --------------------------------------------
    def kl_P(self) -> IntPolynomial:
        if self.M.loops:
            return ZERO
        return self.P(self.L.bottom, self.L.top)

    def inv_kl_Q(self) -> IntPolynomial:
        if self.M.loops:
            return ZERO
        return self.Q(self.L.bottom, self.L.top)

    def z_poly(self) -> IntPolynomial:
        if self.M.loops:
            return ZERO
        L, r = self.L, self.L.rank
        out = ZERO
        for j in range(len(L)):
            out = out + self.P(j, L.top).shift(L.ranks[j])
        if not out.is_palindromic(r):
            raise KLSConsistencyError(f"Z-polynomial {out} is not palindromic of degree {r}")
        return out

    def inv_z_Y(self) -> IntPolynomial:
        if self.M.loops:
            return ZERO
        L, r = self.L, self.L.rank
        out = ZERO
        for j in range(len(L)):
            mu = L.mobius(L.flats[j], L.flats[L.top])
            out = out + (self.Q(L.bottom, j) * abs(mu)).shift(r - L.ranks[j])
        if not out.is_palindromic(r):
            raise KLSConsistencyError(f"inverse Z-polynomial {out} is not palindromic of degree {r}")
        if any(c < 0 for c in out):
            raise KLSConsistencyError(f"inverse Z-polynomial {out} has a negative coefficient")
        return out


def kl_P(M: Matroid, cache: Optional[MinorCache] = None) -> IntPolynomial:
    return KLSEngine(M, cache).kl_P()


def inv_kl_Q(M: Matroid, cache: Optional[MinorCache] = None) -> IntPolynomial:
    return KLSEngine(M, cache).inv_kl_Q()


def z_poly(M: Matroid, cache: Optional[MinorCache] = None) -> IntPolynomial:
    return KLSEngine(M, cache).z_poly()


def inv_z_Y(M: Matroid, cache: Optional[MinorCache] = None) -> IntPolynomial:
    return KLSEngine(M, cache).inv_z_Y()


def all_invariants(M: Matroid) -> dict[str, IntPolynomial]:
    eng = KLSEngine(M)
    return {
        "char_poly": M.char_poly(),
        "P": eng.kl_P(),
        "Q": eng.inv_kl_Q(),
        "Z": eng.z_poly(),
        "Y": eng.inv_z_Y(),
    }
