"""Palindromic polynomials and their trace-coordinate reductions.

A monic palindromic P of even degree 2n factors through y = x + 1/x:
P(x) = x^n Q(x + 1/x) for a unique monic Q of degree n.  All structural
questions (separability, ramification, Galois type, root location) are
settled on Q with exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .arith import factor_integer, squarefree_kernel
from .errors import G2CertError, NotMonicError, NotPalindromicError
from .poly import RatPoly, discriminant

TAG_D6 = "D6"
TAG_WEYL_BC = "WeylBC_n"
TAG_C_TIMES_S = "CtimesS_n"
TAG_OTHER = "Other"
TAG_INCONCLUSIVE = "Inconclusive"

EVIDENCE_KEYS = (
    "q_irreducible",
    "delta_nonsquare",
    "delta_prime_nonsquare",
    "product_nonsquare",
    "roots_in_interval",
)


@dataclass(frozen=True)
class PalindromicPair:
    """A palindromic P together with its trace reduction Q and invariants.

    delta is disc(Q); delta_prime is Q(2)Q(-2), which equals the product of
    y_i^2 - 4 over the roots of Q and so detects roots of P at +-1 as well
    as collisions between x and 1/x.
    """

    poly: RatPoly
    q: RatPoly
    delta: Fraction
    delta_prime: Fraction
    q_at_2: Fraction
    q_at_minus_2: Fraction


def _power_basis(n: int) -> list[RatPoly]:
    # basis[k] = x^(n-k) (x^2+1)^k, the image of y^k under the lift
    unit = RatPoly.from_coeffs([1, 0, 1])
    out = []
    acc = RatPoly.from_coeffs([1])
    for k in range(n + 1):
        out.append(acc.times_x_power(n - k))
        acc = acc * unit
    return out


def inflate_palindromic(q: RatPoly) -> RatPoly:
    """x^n q(x + 1/x) for monic q of degree n; always monic palindromic."""
    n = q.degree
    if n < 1 or not q.is_monic():
        raise NotMonicError("need a monic polynomial of degree >= 1")
    basis = _power_basis(n)
    acc = RatPoly.zero()
    for k, c in enumerate(q.coeffs):
        if c:
            acc = acc + basis[k] * c
    return acc


def palindromic_reduce(poly: RatPoly) -> PalindromicPair:
    """Recover Q with poly = x^n Q(x + 1/x) and package the invariants.

    The coefficients of Q are solved top-down: the coefficient of x^(n+k)
    in the residual is exactly q_k once the higher basis terms have been
    subtracted.  Everything is exact.
    """
    if poly.degree < 2 or poly.degree % 2:
        raise NotPalindromicError(f"degree {poly.degree} is not even and >= 2")
    if not poly.is_monic():
        raise NotMonicError("not monic")
    if not poly.is_palindromic():
        raise NotPalindromicError("coefficients are not palindromic")
    n = poly.degree // 2
    basis = _power_basis(n)
    residual = poly
    q_coeffs = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = residual[n + k]
        q_coeffs[k] = c
        if c:
            residual = residual - basis[k] * c
    assert residual.is_zero(), "palindromic reduction left a nonzero residual"
    q = RatPoly(tuple(q_coeffs))
    at2 = q.evaluate(2)
    atm2 = q.evaluate(-2)
    return PalindromicPair(
        poly=poly,
        q=q,
        delta=discriminant(q),
        delta_prime=at2 * atm2,
        q_at_2=at2,
        q_at_minus_2=atm2,
    )


def separability_check(pair: PalindromicPair) -> bool:
    """True iff P has 2n distinct roots, none at +-1: delta and delta_prime nonzero."""
    return pair.delta != 0 and pair.delta_prime != 0


def ramified_primes(pair: PalindromicPair) -> frozenset[int]:
    """Primes dividing a numerator or denominator of delta or delta_prime."""
    if not separability_check(pair):
        raise G2CertError("ramified primes undefined for inseparable pair")
    out: set[int] = set()
    for value in (pair.delta, pair.delta_prime):
        for part in (value.numerator, value.denominator):
            if abs(part) != 1:
                out.update(factor_integer(part).primes())
    return frozenset(out)


def temperedness_check(pair: PalindromicPair) -> bool:
    """Exact sign test confining the roots of Q to (-2, 2).

    For a monic cubic: disc > 0 gives three distinct real roots; the signs
    of Q' at -2, 0, 2 put both critical points inside (-2, 2); the signs of
    Q at the endpoints then pin all three roots inside.  Equivalently every
    root of P lies on the unit circle.  All six inequalities are strict and
    rational, so no floating point is involved.
    """
    q = pair.q
    if q.degree != 3:
        raise ValueError("temperedness test implemented for cubics only")
    qp = q.derivative()
    return (
        pair.delta > 0
        and pair.q_at_minus_2 < 0
        and pair.q_at_2 > 0
        and qp.evaluate(-2) > 0
        and qp.evaluate(0) < 0
        and qp.evaluate(2) > 0
    )


def g2_lift_check(q: RatPoly) -> bool:
    """Does the product of the x-roots on one side equal 1?

    Writing q = y^3 - a y^2 + b y - c, the condition is a^2 = c + 2b + 4.
    It holds exactly when the six roots of the palindromic lift split as
    x1 x2 x3 = 1 (and inverses), the shape a simply connected rank-2 torus
    element produces.
    """
    if q.degree != 3 or not q.is_monic():
        raise ValueError("lift check needs a monic cubic")
    a = -q[2]
    b = q[1]
    c = -q[0]
    return a * a == c + 2 * b + 4


def _is_square(r: Fraction) -> bool:
    return r > 0 and squarefree_kernel(r) == 1


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factor_integer(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return out


def _cubic_irreducible(q: RatPoly) -> bool:
    # rational root test on the primitive integer model
    if q[0] == 0:
        return False
    lcm = 1
    for c in q.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in q.coeffs]
    for num in _divisors(abs(ints[0])):
        for den in _divisors(abs(ints[3])):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if q.evaluate(cand) == 0:
                    return False
    return True


@dataclass(frozen=True)
class GaloisClassification:
    tag: str
    evidence: Mapping[str, bool]


def classify_galois(pair: PalindromicPair, product_one: bool | None = None) -> GaloisClassification:
    """Classify the Galois group of the splitting field of P, for n = 3.

    Evidence gathered: Q irreducible, delta / delta_prime / their product
    all nonsquare, and all roots of Q inside (-2, 2).  With all five plus
    the unit-product constraint the group is the dihedral group of order
    12 (tag D6).  With all five but the constraint failing, only the
    signed-permutation bound survives (tag WeylBC_n).  A failed algebraic
    condition is conclusive evidence of a different group (Other); absent
    temperedness nothing more can be claimed (Inconclusive).
    """
    q = pair.q
    if q.degree != 3 or not q.is_monic():
        raise ValueError("classification implemented for monic cubics only")
    separable = separability_check(pair)
    evidence = {
        "q_irreducible": _cubic_irreducible(q),
        "delta_nonsquare": separable and not _is_square(pair.delta),
        "delta_prime_nonsquare": separable and not _is_square(pair.delta_prime),
        "product_nonsquare": separable and not _is_square(pair.delta * pair.delta_prime),
        "roots_in_interval": separable and temperedness_check(pair),
    }
    algebraic = (
        evidence["q_irreducible"]
        and evidence["delta_nonsquare"]
        and evidence["delta_prime_nonsquare"]
        and evidence["product_nonsquare"]
    )
    if not algebraic:
        tag = TAG_OTHER
    elif not evidence["roots_in_interval"]:
        tag = TAG_INCONCLUSIVE
    else:
        if product_one is None:
            product_one = g2_lift_check(q)
        tag = TAG_D6 if product_one else TAG_WEYL_BC
    return GaloisClassification(tag=tag, evidence=evidence)


@dataclass(frozen=True)
class IndependenceVerdict:
    kernels_a: frozenset[int]
    kernels_b: frozenset[int]
    independent: bool


def _kernel_set(pair: PalindromicPair) -> frozenset[int]:
    kernels = {
        squarefree_kernel(pair.delta),
        squarefree_kernel(pair.delta_prime),
        squarefree_kernel(pair.delta * pair.delta_prime),
    }
    kernels.discard(1)
    return frozenset(kernels)


def independence_check(pair_a: PalindromicPair, pair_b: PalindromicPair) -> IndependenceVerdict:
    """Are the two splitting fields linearly disjoint?

    The quadratic subfields are cut out by the squarefree kernels of delta,
    delta_prime and their product; the two degree-12 fields are independent
    exactly when the kernel sets do not meet.
    """
    for pair in (pair_a, pair_b):
        if classify_galois(pair).tag != TAG_D6:
            raise G2CertError("independence test requires both pairs to classify as D6")
    ka = _kernel_set(pair_a)
    kb = _kernel_set(pair_b)
    return IndependenceVerdict(kernels_a=ka, kernels_b=kb, independent=not (ka & kb))
