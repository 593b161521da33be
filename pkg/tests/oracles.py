"""Brute-force reference implementations, independent of the package internals."""
from collections import Counter
from itertools import combinations, product


def count_syt(shape):
    """Standard Young tableaux by removing the largest entry recursively."""
    shape = tuple(p for p in shape if p)
    if not shape:
        return 1
    total = 0
    for i, p in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < p:
            smaller = list(shape)
            smaller[i] -= 1
            total += count_syt(tuple(smaller))
    return total


def ssyt(shape, nvars):
    """All semistandard fillings of ``shape`` with entries 0..nvars-1, as content vectors."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = []

    def rec(idx, filling):
        if idx == len(cells):
            content = [0] * nvars
            for v in filling.values():
                content[v] += 1
            out.append(tuple(content))
            return
        r, c = cells[idx]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars):
            filling[(r, c)] = v
            rec(idx + 1, filling)
            del filling[(r, c)]

    rec(0, {})
    return out


def schur_poly(shape, nvars):
    return Counter(ssyt(shape, nvars))


def poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def schur_expand(poly, nvars):
    """Schur coefficients of a symmetric polynomial by peeling lex-leading monomials."""
    poly = Counter({e: c for e, c in poly.items() if c})
    result = {}
    while poly:
        lead = max(poly)
        coeff = poly[lead]
        lam = tuple(p for p in lead if p)
        assert list(lead) == sorted(lead, reverse=True), "leading monomial must be a partition"
        result[lam] = result.get(lam, 0) + coeff
        for e, c in schur_poly(lam, nvars).items():
            poly[e] -= coeff * c
        poly = Counter({e: c for e, c in poly.items() if c})
    return result


def lr_oracle(lam, mu):
    """Schur expansion of s_lam * s_mu through explicit polynomial multiplication."""
    n = sum(lam) + sum(mu)
    nvars = max(n, 1)
    return schur_expand(poly_mul(schur_poly(lam, nvars), schur_poly(mu, nvars)), nvars)


def flats_by_closure(rank, n):
    """Every subset equal to its own closure, from a rank function on bitsets."""
    full = (1 << n) - 1
    out = []
    for mask in range(full + 1):
        r = rank(mask)
        if all(rank(mask | (1 << e)) > r for e in range(n) if not mask >> e & 1):
            out.append(mask)
    return out


def subspaces_count(dim, k, q=2):
    """Number of k-dimensional subspaces of F_q^dim, by spanning-set enumeration (q prime)."""
    vectors = list(product(range(q), repeat=dim))

    def span(gens):
        out = set()
        for coeffs in product(range(q), repeat=len(gens)):
            out.add(tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) % q for i in range(dim)))
        return frozenset(out)

    spaces = set()
    for gens in combinations(vectors, k):
        sp = span(gens)
        if len(sp) == q**k:
            spaces.add(sp)
    return len(spaces)
