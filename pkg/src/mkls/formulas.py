"""Closed forms for equivariant and ordinary inverse Z-polynomials.

Uniform matroids carry the S_n action, q-niform matroids the GL_n(F_q)
action (recorded through unipotent multiplicities), and paving matroids are
reached through relaxation of stressed hyperplanes.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .matroid import PavingProfile
from .partitions import multinomial, normalize_shape
from .poly import IntPolynomial
from .repring import UNIPOTENT, GradedRep, as_unipotent, gauss_binom, unipotent_dim
from .symfunc import ZERO, SchurVector, lr_product


def _require(n: int, k: int) -> None:
    if not n >= k >= 1:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")


def shape(head: int, twos: int, ones: int) -> SchurVector:
    """s_(head, 2^twos, 1^ones), zero when the shape is not a partition."""
    return SchurVector.schur(normalize_shape(head, twos, ones))


def column(i: int) -> SchurVector:
    """s_(1^i)."""
    return SchurVector.schur((1,) * i)


def hook(n: int, k: int, i: int) -> SchurVector:
    """s_(n-k+1, 1^(k-i-1)), the Moebius-invariant hook appearing in Y."""
    return shape(n - k + 1, 0, k - i - 1)


def equiv_mobius_uniform(k: int, n: int) -> SchurVector:
    """(-1)^k s_(n-k+1, 1^(k-1))."""
    _require(n, k)
    return hook(n, k, 0).scale((-1) ** k)


def equiv_Q_boolean(n: int) -> GradedRep:
    return GradedRep([column(n)], n)


def equiv_Q_uniform(k: int, n: int) -> GradedRep:
    _require(n, k)
    return GradedRep([shape(n - k + 1, i, k - 2 * i - 1) for i in range((k - 1) // 2 + 1)], n)


def _mirror(low: list[SchurVector], k: int, n: int) -> GradedRep:
    """Coefficients for t^0..t^floor(k/2) given; fill the rest palindromically."""
    coeffs = [ZERO] * (k + 1)
    for i, v in enumerate(low):
        coeffs[i] = v
    for i in range((k - 1) // 2 + 1):
        coeffs[k - i] = low[i]
    return GradedRep(coeffs, n)


def induced_coefficient(k: int, n: int, i: int) -> SchurVector:
    """s_(1^i) * s_(n-k+1, 1^(k-i-1)) by the Littlewood-Richardson rule."""
    return lr_product(column(i), hook(n, k, i))


def equiv_Y_uniform(k: int, n: int) -> GradedRep:
    """Inverse Z-polynomial of S_n acting on U_{k,n}, as induced products."""
    _require(n, k)
    return _mirror([induced_coefficient(k, n, i) for i in range(k // 2 + 1)], k, n)


def irreducible_coefficient(k: int, n: int, i: int) -> SchurVector:
    """sum_{x=0}^{i} s_(n-k+1, 2^x, 1^(k-2x-1)) + s_(n-k+2, 2^(x-1), 1^(k-2x))."""
    out = ZERO
    for x in range(i + 1):
        out = out + shape(n - k + 1, x, k - 2 * x - 1) + shape(n - k + 2, x - 1, k - 2 * x)
    return out


def equiv_Y_uniform_irreducible(k: int, n: int) -> GradedRep:
    """Same polynomial as :func:`equiv_Y_uniform`, written in irreducibles."""
    _require(n, k)
    return _mirror([irreducible_coefficient(k, n, i) for i in range(k // 2 + 1)], k, n)


def equiv_Y_uniform_via_definition(k: int, n: int) -> GradedRep:
    """Expand the defining flat sum over S_n-orbits of flats of U_{k,n}.

    Flats of rank i < k are i-subsets (restriction B_i, contraction
    U_{k-i,n-i}, stabilizer S_i x S_{n-i}); the top flat contributes Q. Signs
    are carried explicitly and no palindromic symmetry is used.
    """
    _require(n, k)
    coeffs = [ZERO] * (k + 1)
    for i in range(k):
        sign = (-1) ** (k + i)
        term = lr_product(equiv_Q_boolean(i)[0], equiv_mobius_uniform(k - i, n - i))
        coeffs[k - i] = coeffs[k - i] + term.scale(sign)
    Q = equiv_Q_uniform(k, n)
    for i, v in enumerate(Q.coeffs):
        coeffs[i] = coeffs[i] + v
    return GradedRep(coeffs, n)


def equiv_Y_qniform(k: int, n: int) -> GradedRep:
    """Unipotent multiplicities of the GL_n(F_q) inverse Z-polynomial of U_{k,n}(q)."""
    return as_unipotent(equiv_Y_uniform_irreducible(k, n))


def _qniform_term(k: int, n: int, i: int, q: int) -> int:
    return q ** (comb(i, 2) + comb(k - i, 2)) * gauss_binom(n, i, q) * gauss_binom(n - i - 1, k - i - 1, q)


def _mirror_ints(low: list[int], k: int) -> IntPolynomial:
    coeffs = [0] * (k + 1)
    for i, v in enumerate(low):
        coeffs[i] = v
    for i in range((k - 1) // 2 + 1):
        coeffs[k - i] = low[i]
    return IntPolynomial(coeffs)


def ordinary_Y_qniform(k: int, n: int, q) -> IntPolynomial:
    """Closed form of Y for U_{k,n}(q) in Gaussian binomials; q = 1 gives U_{k,n}."""
    _require(n, k)
    q = getattr(q, "q", q)
    return _mirror_ints([_qniform_term(k, n, i, q) for i in range(k // 2 + 1)], k)


def ordinary_Y_qniform_induced(k: int, n: int, q) -> IntPolynomial:
    """Y for U_{k,n}(q) as [GL_n : P_{i,n}] * dim V_(1^i)(q) * dim V_hook(q)."""
    _require(n, k)
    q = getattr(q, "q", q)
    low = [
        gauss_binom(n, i, q) * unipotent_dim((1,) * i, q) * unipotent_dim(normalize_shape(n - k + 1, 0, k - i - 1), q)
        for i in range(k // 2 + 1)
    ]
    return _mirror_ints(low, k)


def equiv_char_qniform(k: int, n: int) -> GradedRep:
    """Unipotent multiplicities of the GL_n(F_q) characteristic polynomial of U_{k,n}(q)."""
    _require(n, k)
    coeffs = [ZERO] * (k + 1)
    for i in range(k):
        v = shape(n - i, 0, i) + shape(n - i + 1, 0, i - 1)
        coeffs[k - i] = v.scale((-1) ** i)
    coeffs[0] = coeffs[0] + shape(n - k + 1, 0, k - 1).scale((-1) ** k)
    return GradedRep(coeffs, n, UNIPOTENT)


# -- paving matroids ------------------------------------------------------------

def correction_shape(k: int, h: int) -> SchurVector:
    """s_(h-k+2, 2^(k/2-1)) for even k, zero for odd k."""
    if k % 2:
        return ZERO
    return shape(h - k + 2, k // 2 - 1, 0)


def paving_delta(k: int, h: int) -> GradedRep:
    """Change in Y (over S_h) from relaxing one stressed hyperplane of size h."""
    _require(h, k)
    delta = equiv_Y_uniform(k, h)
    if k % 2 == 0:
        delta = delta - GradedRep([correction_shape(k, h)], h).shift(k // 2)
    return delta


def m_kh_equiv_Y(k: int, h: int) -> GradedRep:
    """Y of S_h acting on U_{k-1,h} (+) B_1, the B_1 factor contributing (1+t)."""
    if not h >= k >= 2:
        raise ValueError(f"need h >= k >= 2, got h={h}, k={k}")
    return equiv_Y_uniform_irreducible(k - 1, h).scale_poly(IntPolynomial([1, 1]))


def correction_dimension(k: int, h: int) -> int:
    """2h(1+(-1)^k)/((2h-k)(2h-k+2)) * multinomial(h-1; k/2, k/2-1, h-k), exactly."""
    if k % 2:
        return 0
    value = Fraction(4 * h, (2 * h - k) * (2 * h - k + 2)) * multinomial(h - 1, k // 2, k // 2 - 1, h - k)
    if value.denominator != 1:
        raise ArithmeticError(f"correction dimension not integral at k={k}, h={h}: {value}")
    return int(value)


def ordinary_Y_uniform(k: int, n: int) -> IntPolynomial:
    """Dimensions of the induced coefficients: binom(n, i) * binom(n-i-1, k-i-1)."""
    _require(n, k)
    return _mirror_ints([comb(n, i) * comb(n - i - 1, k - i - 1) for i in range(k // 2 + 1)], k)


def ordinary_paving_Y(profile: PavingProfile) -> IntPolynomial:
    k, n = profile.k, profile.n
    out = ordinary_Y_uniform(k, n)
    for h, count in profile.counts.items():
        delta = ordinary_Y_uniform(k, h)
        if k % 2 == 0:
            delta = delta - IntPolynomial.monomial(k // 2, correction_dimension(k, h))
        out = out - delta * count
    return out


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def sparse_paving_Y(k: int, n: int, circuit_hyperplanes: int) -> IntPolynomial:
    """Y_{U_{k,n}} - lambda((1+t)^k - [k even] Catalan(k/2) t^(k/2))."""
    delta = IntPolynomial([1, 1]) ** k
    if k % 2 == 0:
        delta = delta - IntPolynomial.monomial(k // 2, catalan(k // 2))
    return ordinary_Y_uniform(k, n) - delta * circuit_hyperplanes

