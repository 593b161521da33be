"""Matroids on small ground sets, their lattices of flats, and relaxation.

Subsets of the ground set ``{0, ..., n-1}`` are int bitsets throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .poly import IntPolynomial

MAX_GROUND = 64


class MatroidError(ValueError):
    """Invalid matroid data or an operation applied outside its domain."""


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def subsets_of_size(mask: int, size: int) -> Iterable[int]:
    for combo in itertools.combinations(elements_of(mask), size):
        yield mask_of(combo)


class Matroid:
    """Base class: subclasses provide ``_rank(mask)``."""

    backend = "abstract"

    def __init__(self, n: int):
        if not 0 <= n <= MAX_GROUND:
            raise MatroidError(f"ground set size {n} outside 0..{MAX_GROUND}")
        self.n = n
        self._rank_cache: dict[int, int] = {}

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def _rank(self, mask: int) -> int:
        raise NotImplementedError

    def rank(self, subset=None) -> int:
        """Rank of a subset (bitset or iterable of elements); whole ground set by default."""
        if subset is None:
            mask = self.ground
        elif isinstance(subset, int):
            mask = subset
        else:
            mask = mask_of(subset)
        if mask & ~self.ground:
            raise MatroidError(f"subset {elements_of(mask)} not inside ground set of size {self.n}")
        r = self._rank_cache.get(mask)
        if r is None:
            r = self._rank_cache[mask] = self._rank(mask)
        return r

    @cached_property
    def k(self) -> int:
        return self.rank(self.ground)

    def closure(self, mask: int) -> int:
        r = self.rank(mask)
        out = mask
        for e in range(self.n):
            bit = 1 << e
            if not mask & bit and self.rank(mask | bit) == r:
                out |= bit
        return out

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == popcount(mask)

    @cached_property
    def loops(self) -> int:
        return self.closure(0)

    def bases(self) -> frozenset[int]:
        return frozenset(b for b in subsets_of_size(self.ground, self.k) if self.is_independent(b))

    @cached_property
    def lattice(self) -> "FlatLattice":
        return FlatLattice.of(self)

    def flats(self) -> "FlatLattice":
        return self.lattice

    def char_poly(self) -> IntPolynomial:
        """sum over flats F of mu(bottom, F) t^(rk M - rk F); zero if M has loops."""
        if self.loops:
            return IntPolynomial()
        return self.lattice.char_poly()

    def restrict(self, flat: int) -> "Matroid":
        return Minor(self, flat, 0)

    def contract(self, flat: int) -> "Matroid":
        return Minor(self, self.ground & ~flat, flat)

    def to_json(self) -> dict:
        return {
            "backend": "bases",
            "n": self.n,
            "k": self.k,
            "bases": sorted(sorted(elements_of(b)) for b in self.bases()),
        }

    def __repr__(self) -> str:
        return f"<{type(self).__name__} n={self.n} k={self.k}>"


class BasisMatroid(Matroid):
    backend = "bases"

    def __init__(self, n: int, bases: Iterable, validate: Optional[bool] = None):
        super().__init__(n)
        masks = frozenset(b if isinstance(b, int) else mask_of(b) for b in bases)
        if not masks:
            raise MatroidError("a matroid needs at least one basis")
        sizes = {popcount(b) for b in masks}
        if len(sizes) != 1:
            raise MatroidError(f"bases of different sizes {sorted(sizes)}")
        if any(b & ~self.ground for b in masks):
            raise MatroidError("basis element outside the ground set")
        self._bases = masks
        self.__dict__["k"] = sizes.pop()
        if validate is None:
            validate = n <= 12
        if validate:
            check_exchange(masks)

    def _rank(self, mask: int) -> int:
        return max(popcount(mask & b) for b in self._bases)

    def bases(self) -> frozenset[int]:
        return self._bases


def check_exchange(bases: frozenset[int]) -> None:
    """Raise MatroidError unless the basis exchange axiom holds."""
    for b1 in bases:
        for b2 in bases:
            diff1 = b1 & ~b2
            if not diff1:
                continue
            diff2 = elements_of(b2 & ~b1)
            for x in elements_of(diff1):
                base = b1 & ~(1 << x)
                if not any((base | (1 << y)) in bases for y in diff2):
                    raise MatroidError(
                        f"basis exchange fails for {elements_of(b1)}, {elements_of(b2)} at {x}"
                    )


class UniformMatroid(Matroid):
    backend = "uniform"

    def __init__(self, k: int, n: int):
        if not 0 <= k <= n:
            raise MatroidError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
        super().__init__(n)
        self.__dict__["k"] = k

    def _rank(self, mask: int) -> int:
        return min(popcount(mask), self.k)

    def to_json(self) -> dict:
        if self.k == self.n:
            return {"backend": "boolean", "n": self.n, "k": self.k}
        return {"backend": "uniform", "n": self.n, "k": self.k}


def uniform(k: int, n: int) -> UniformMatroid:
    return UniformMatroid(k, n)


def boolean(n: int) -> UniformMatroid:
    return UniformMatroid(n, n)


class DirectSum(Matroid):
    backend = "direct_sum"

    def __init__(self, first: Matroid, second: Matroid):
        super().__init__(first.n + second.n)
        self.first, self.second = first, second

    def _rank(self, mask: int) -> int:
        low = (1 << self.first.n) - 1
        return self.first.rank(mask & low) + self.second.rank(mask >> self.first.n)

    def to_json(self) -> dict:
        return {
            "backend": "direct_sum",
            "n": self.n,
            "k": self.k,
            "summands": [self.first.to_json(), self.second.to_json()],
        }


def direct_sum(first: Matroid, second: Matroid) -> DirectSum:
    return DirectSum(first, second)


class Minor(Matroid):
    """(M | (kept | contracted)) / contracted, relabelled onto 0..|kept|-1."""

    backend = "minor"

    def __init__(self, parent: Matroid, kept: int, contracted: int):
        if kept & contracted:
            raise MatroidError("kept and contracted sets overlap")
        self.parent = parent
        self.kept_elements = elements_of(kept)
        self.contracted = contracted
        self._base_rank = parent.rank(contracted)
        super().__init__(len(self.kept_elements))

    def _lift(self, mask: int) -> int:
        out = 0
        for i, e in enumerate(self.kept_elements):
            if mask >> i & 1:
                out |= 1 << e
        return out

    def _rank(self, mask: int) -> int:
        return self.parent.rank(self._lift(mask) | self.contracted) - self._base_rank


# -- linear matroids ----------------------------------------------------------

def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def rank_mod_p(vectors: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in v] for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _projective_normal(v: Sequence[int], p: int) -> tuple:
    lead = next(x for x in v if x % p)
    inv = pow(lead, p - 2, p)
    return tuple((x * inv) % p for x in v)


class LinearMatroid(Matroid):
    """Column matroid of an integer matrix over F_p, truncated to a rank cap.

    Zero columns are rejected and parallel columns are merged (first one kept),
    so the result is simple.
    """

    backend = "linear"

    def __init__(self, columns: Sequence[Sequence[int]], p: int, truncation: Optional[int] = None):
        if not is_prime(p):
            raise MatroidError(f"field size {p} is not prime")
        cols, seen = [], set()
        for c in columns:
            c = tuple(int(x) % p for x in c)
            if not any(c):
                raise MatroidError("zero column (a loop) in linear matroid")
            key = _projective_normal(c, p)
            if key in seen:
                continue
            seen.add(key)
            cols.append(c)
        super().__init__(len(cols))
        self.columns = cols
        self.p = p
        full = rank_mod_p(cols, p) if cols else 0
        self.truncation = full if truncation is None else min(truncation, full)

    def _rank(self, mask: int) -> int:
        vecs = [self.columns[e] for e in elements_of(mask)]
        return min(rank_mod_p(vecs, self.p) if vecs else 0, self.truncation)

    def to_json(self) -> dict:
        dim = len(self.columns[0]) if self.columns else 0
        return {
            "backend": "linear",
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "truncation": self.truncation,
            "matrix": [[c[r] for c in self.columns] for r in range(dim)],
        }


def projective_points(dim: int, q: int) -> list[tuple]:
    """Representatives of the (q^dim - 1)/(q - 1) points of PG(dim-1, q)."""
    pts = []
    for v in itertools.product(range(q), repeat=dim):
        if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1:
            pts.append(v)
    return pts


class QniformMatroid(LinearMatroid):
    """U_{k,n}(q): projective points of F_q^n (dual-hyperplane model), truncated to rank k."""

    backend = "qniform"

    def __init__(self, k: int, dim: int, q: int):
        if not 0 <= k <= dim:
            raise MatroidError(f"q-niform matroid needs 0 <= k <= n, got k={k}, n={dim}")
        if not is_prime(q):
            raise MatroidError(f"q={q} is not prime; prime-power fields are not supported")
        super().__init__(projective_points(dim, q), q, k)
        self.dim, self.q = dim, q

    def to_json(self) -> dict:
        return {"backend": "qniform", "k": self.k, "n": self.dim, "q": self.q}


def make_qniform(k: int, n: int, q: int) -> QniformMatroid:
    return QniformMatroid(k, n, q)


# -- paving matroids ----------------------------------------------------------

class PavingMatroid(BasisMatroid):
    """Bases are the k-subsets not contained in any listed hyperplane.

    Listed hyperplanes need size >= k and pairwise intersections of size at
    most k-2; when every hyperplane has size k the matroid is sparse paving.
    """

    def __init__(self, n: int, k: int, hyperplanes: Iterable):
        hs = [h if isinstance(h, int) else mask_of(h) for h in hyperplanes]
        ground = (1 << n) - 1
        for h in hs:
            if h & ~ground:
                raise MatroidError(f"hyperplane {elements_of(h)} not inside ground set")
            if popcount(h) < k:
                raise MatroidError(f"hyperplane {elements_of(h)} has fewer than k={k} elements")
        for a, b in itertools.combinations(hs, 2):
            if a == b:
                raise MatroidError(f"hyperplane {elements_of(a)} listed twice")
            if popcount(a & b) > k - 2:
                raise MatroidError(
                    f"hyperplanes {elements_of(a)} and {elements_of(b)} meet in "
                    f"{popcount(a & b)} > k-2 = {k - 2} elements"
                )
        if k < 1 and hs:
            raise MatroidError("rank-0 matroids have no hyperplanes of size >= k")
        self.hyperplanes = tuple(sorted(hs))
        bases = [b for b in subsets_of_size(ground, k) if not any(b & ~h == 0 for h in hs)]
        super().__init__(n, bases, validate=False)
        self.backend = "sparse_paving" if all(popcount(h) == k for h in hs) else "paving"

    def to_json(self) -> dict:
        key = "circuit_hyperplanes" if self.backend == "sparse_paving" else "hyperplanes"
        return {
            "backend": self.backend,
            "n": self.n,
            "k": self.k,
            key: [elements_of(h) for h in self.hyperplanes],
        }


def make_sparse_paving(n: int, k: int, circuit_hyperplanes: Iterable) -> PavingMatroid:
    hs = [h if isinstance(h, int) else mask_of(h) for h in circuit_hyperplanes]
    for h in hs:
        if popcount(h) != k:
            raise MatroidError(f"circuit-hyperplane {elements_of(h)} does not have k={k} elements")
    return PavingMatroid(n, k, hs)


def make_paving(n: int, k: int, hyperplanes: Iterable) -> PavingMatroid:
    return PavingMatroid(n, k, hyperplanes)


def m_kh(k: int, h: int) -> DirectSum:
    """U_{k-1,h} (+) B_1: its first h elements form a stressed hyperplane of size h."""
    return direct_sum(uniform(k - 1, h), boolean(1))


def stressed_hyperplanes(M: Matroid, min_size: int = 0) -> list[int]:
    """Rank-(k-1) flats in which every (k-1)-subset is independent, of size >= min_size."""
    k = M.k
    if k == 0:
        return []
    out = []
    for H in M.lattice.flats_of_rank(k - 1):
        if popcount(H) < min_size:
            continue
        if all(M.is_independent(A) for A in subsets_of_size(H, k - 1)):
            out.append(H)
    return sorted(out)


def relax(M: Matroid, H, validate: Optional[bool] = None) -> BasisMatroid:
    """Adjoin every k-subset of the stressed hyperplane H to the bases."""
    H = H if isinstance(H, int) else mask_of(H)
    k = M.k
    if popcount(H) < k:
        raise MatroidError(f"hyperplane {elements_of(H)} has fewer than k={k} elements")
    if H not in stressed_hyperplanes(M, k):
        raise MatroidError(f"{elements_of(H)} is not a stressed hyperplane")
    bases = set(M.bases()) | set(subsets_of_size(H, k))
    return BasisMatroid(M.n, bases, validate=validate)


def relax_all(M: Matroid) -> BasisMatroid:
    """Relax every stressed hyperplane of size >= k at once."""
    hs = stressed_hyperplanes(M, M.k)
    bases = set(M.bases())
    for H in hs:
        bases |= set(subsets_of_size(H, M.k))
    return BasisMatroid(M.n, bases, validate=False)


def small_circuit(M: Matroid) -> Optional[int]:
    """A circuit with fewer than k elements, or None when M is paving."""
    k = M.k
    for size in range(0, k):
        for A in subsets_of_size(M.ground, size):
            if not M.is_independent(A) and all(
                M.is_independent(A & ~(1 << e)) for e in elements_of(A)
            ):
                return A
    return None


@dataclass(frozen=True)
class PavingProfile:
    k: int
    n: int
    counts: dict = field(default_factory=dict)  # hyperplane size h -> number of stressed hyperplanes

    def __post_init__(self):
        for h, c in self.counts.items():
            if h < self.k or c <= 0:
                raise MatroidError(f"invalid profile entry {h}: {c} for k={self.k}")

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "lambda": {str(h): c for h, c in sorted(self.counts.items())}}


def paving_profile(M: Matroid) -> PavingProfile:
    witness = small_circuit(M)
    if witness is not None:
        raise MatroidError(
            f"matroid is not paving: circuit {elements_of(witness)} has fewer than k={M.k} elements"
        )
    counts: dict[int, int] = {}
    for H in stressed_hyperplanes(M, M.k):
        counts[popcount(H)] = counts.get(popcount(H), 0) + 1
    return PavingProfile(M.k, M.n, counts)


# -- lattice of flats ---------------------------------------------------------

class FlatLattice:
    """Flats sorted by (rank, bitset) with Moebius values computed on demand."""

    def __init__(self, flats: list[int], ranks: list[int]):
        order = sorted(range(len(flats)), key=lambda i: (ranks[i], flats[i]))
        self.flats = [flats[i] for i in order]
        self.ranks = [ranks[i] for i in order]
        self.index = {F: i for i, F in enumerate(self.flats)}
        self.bottom = 0
        self.top = len(self.flats) - 1
        self.rank = self.ranks[-1]
        self._up: Optional[list[list[int]]] = None
        self._mu: dict[int, dict[int, int]] = {}

    @classmethod
    def of(cls, M: Matroid) -> "FlatLattice":
        bottom = M.closure(0)
        level = {bottom}
        flats, ranks = [bottom], [M.rank(bottom)]
        r = ranks[0]
        while True:
            nxt = set()
            for F in level:
                for e in range(M.n):
                    if not F >> e & 1:
                        nxt.add(M.closure(F | (1 << e)))
            if not nxt:
                break
            r += 1
            flats.extend(nxt)
            ranks.extend([r] * len(nxt))
            level = nxt
        return cls(flats, ranks)

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def flats_of_rank(self, r: int) -> list[int]:
        return [F for F, rk in zip(self.flats, self.ranks) if rk == r]

    def rank_of(self, F: int) -> int:
        return self.ranks[self.index[F]]

    @property
    def up(self) -> list[list[int]]:
        """up[i]: indices j with flats[i] <= flats[j], in lattice order."""
        if self._up is None:
            fl = self.flats
            self._up = [[j for j in range(i, len(fl)) if fl[i] & ~fl[j] == 0] for i in range(len(fl))]
        return self._up

    def mobius_from(self, i: int) -> dict[int, int]:
        """mu(flats[i], flats[j]) for all j above i."""
        row = self._mu.get(i)
        if row is None:
            fl = self.flats
            above = self.up[i]
            row = {}
            for j in above:
                if j == i:
                    row[j] = 1
                    continue
                Fj = fl[j]
                row[j] = -sum(v for h, v in row.items() if fl[h] & ~Fj == 0)
            self._mu[i] = row
        return row

    def mobius(self, F: int, G: int) -> int:
        return self.mobius_from(self.index[F]).get(self.index[G], 0)

    def mobius_top(self, F: int) -> int:
        return self.mobius(F, self.flats[self.top])

    def char_poly(self) -> IntPolynomial:
        coeffs = [0] * (self.rank + 1)
        for j, m in self.mobius_from(self.bottom).items():
            coeffs[self.rank - self.ranks[j]] += m
        return IntPolynomial(coeffs)

    def interval_char_poly(self, i: int, j: int) -> IntPolynomial:
        top_rank = self.ranks[j]
        coeffs = [0] * (top_rank - self.ranks[i] + 1)
        Fj = self.flats[j]
        for h, m in self.mobius_from(i).items():
            if self.flats[h] & ~Fj == 0:
                coeffs[top_rank - self.ranks[h]] += m
        return IntPolynomial(coeffs)


# -- JSON --------------------------------------------------------------------

def matroid_from_json(data: dict) -> Matroid:
    """Build a matroid from its JSON description; raises MatroidError on bad input."""
    if not isinstance(data, dict):
        raise MatroidError("matroid spec must be a JSON object")
    backend = data.get("backend")
    try:
        if backend == "uniform":
            return uniform(int(data["k"]), int(data["n"]))
        if backend == "boolean":
            return boolean(int(data["n"]))
        if backend == "bases":
            M = BasisMatroid(int(data["n"]), [tuple(b) for b in data["bases"]])
            if "k" in data and int(data["k"]) != M.k:
                raise MatroidError(f"declared rank {data['k']} differs from basis size {M.k}")
            return M
        if backend == "sparse_paving":
            return make_sparse_paving(int(data["n"]), int(data["k"]), [tuple(h) for h in data["circuit_hyperplanes"]])
        if backend == "paving":
            return make_paving(int(data["n"]), int(data["k"]), [tuple(h) for h in data["hyperplanes"]])
        if backend == "direct_sum":
            parts = data["summands"]
            if len(parts) < 1:
                raise MatroidError("direct_sum needs at least one summand")
            M = matroid_from_json(parts[0])
            for part in parts[1:]:
                M = direct_sum(M, matroid_from_json(part))
            return M
        if backend == "linear":
            rows = data["matrix"]
            columns = list(zip(*rows)) if rows else []
            return LinearMatroid(columns, int(data["p"]), data.get("truncation"))
        if backend == "qniform":
            return make_qniform(int(data["k"]), int(data["n"]), int(data["q"]))
    except KeyError as exc:
        raise MatroidError(f"backend {backend!r} is missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MatroidError):
            raise
        raise MatroidError(f"malformed {backend!r} spec: {exc}") from None
    known = "bases, boolean, direct_sum, linear, paving, qniform, sparse_paving, uniform"
    raise MatroidError(f"unknown backend {backend!r}; expected one of: {known}")
