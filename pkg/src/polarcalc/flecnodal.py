"""Flecnodal covariants and the pointwise contact-order test.

A point q of a surface S in P^3 is flecnodal when some line meets S with
multiplicity at least 4 at q.  Restricting S to lines through q inside the
tangent plane produces binary forms II (quadratic) and III (cubic) in the
direction parameter; an order-4 line exists exactly when II and III share
a root, which the Sylvester resultant of the two forms detects.  An
explicit rational line contained in S through q upgrades the answer to
certified infinite contact.

The classical covariants Theta and Phi built from the Hessian matrix are
assembled exactly as printed in the classical sources; their degrees are
reported rather than reconciled (the printed combination is not
homogeneous), and the contact-order test above is the authoritative
membership criterion.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import linalg
from .curvature import hessian_determinant, hessian_matrix
from .polarity import _check_point, _check_surface, is_smooth_point, line_multiplicity
from .polyring import (
    INFINITY,
    DomainError,
    Poly,
    PolyRing,
    ProjPoint,
    Rationals,
    _det_cofactor,
)


@dataclass(frozen=True)
class CovariantPair:
    """The two Hessian-cofactor covariants and their printed combination.

    theta = sum |H|_ij diF djF over signed 3x3 cofactors; phi is the
    double cofactor sum with 2x2 minors and second partials; combination
    is theta - 4 phi Hess(F) assembled verbatim.  ``degrees`` maps each
    piece to its total degree (None for zero polynomials): theta has
    degree 5n-8 and phi degree 7n-14 when nonzero, so the combination is
    reported, not asserted, to be homogeneous.
    """

    theta: Poly
    phi: Poly
    combination: Poly
    degrees: dict


def _signed_cofactor(matrix, i, j):
    minor = [
        [matrix[r][c] for c in range(len(matrix)) if c != j]
        for r in range(len(matrix))
        if r != i
    ]
    det = _det_cofactor(minor)
    return det if (i + j) % 2 == 0 else -det


def _signed_cofactor2(matrix, i1, i2, j1, j2):
    rows = [r for r in range(len(matrix)) if r not in (i1, i2)]
    cols = [c for c in range(len(matrix)) if c not in (j1, j2)]
    det = (
        matrix[rows[0]][cols[0]] * matrix[rows[1]][cols[1]]
        - matrix[rows[0]][cols[1]] * matrix[rows[1]][cols[0]]
    )
    return det if (i1 + i2 + j1 + j2) % 2 == 0 else -det


def flecnodal_covariants(F: Poly) -> CovariantPair:
    """Hessian-cofactor covariants of a surface in P^3."""
    n = _check_surface(F)
    if len(F.ring.variables) != 4:
        raise DomainError("covariants need exactly 4 variables")
    if n < 2:
        raise DomainError("covariants need degree at least 2")
    ring = F.ring
    names = ring.variables
    H = hessian_matrix(F)
    partials = [F.partial(v) for v in names]
    theta = ring.zero()
    cof_sum = ring.zero()
    for i in range(4):
        for j in range(4):
            cof = _signed_cofactor(H, i, j)
            if cof.is_zero:
                continue
            cof_sum = cof_sum + cof
            theta = theta + cof * partials[i] * partials[j]
    pair_sum = ring.zero()
    for i1 in range(4):
        for i2 in range(i1 + 1, 4):
            dif = partials[i1].partial(names[i2])
            if dif.is_zero:
                continue
            for j1 in range(4):
                for j2 in range(j1 + 1, 4):
                    djf = partials[j1].partial(names[j2])
                    if djf.is_zero:
                        continue
                    cof2 = _signed_cofactor2(H, i1, i2, j1, j2)
                    if cof2.is_zero:
                        continue
                    pair_sum = pair_sum + cof2 * dif * djf
    phi = -(cof_sum * pair_sum)
    combination = theta - 4 * phi * hessian_determinant(F)
    degrees = {
        "theta": None if theta.is_zero else theta.total_degree(),
        "phi": None if phi.is_zero else phi.total_degree(),
        "combination": None if combination.is_zero else combination.total_degree(),
    }
    return CovariantPair(theta, phi, combination, degrees)


# ---------------------------------------------------------------------------
# contact order through a point
# ---------------------------------------------------------------------------


class ContactOrder(enum.Enum):
    TWO = "2"
    THREE = "3"
    GE4 = "ge4"
    INFINITE = "infinity"


@dataclass(frozen=True)
class ContactReport:
    """Largest line contact order at a smooth surface point.

    ``order`` is THREE when II is nonzero with nonvanishing resultant
    against III, GE4 when the resultant vanishes (or II is identically
    zero), and INFINITE when an explicit rational line inside the surface
    through the point certifies unbounded contact.  ``line_direction``
    carries that certificate when present.
    """

    order: ContactOrder
    ii: Poly
    iii: Poly
    resultant: object
    line_direction: Optional[ProjPoint]
    tangent_basis: Tuple[ProjPoint, ProjPoint]


def _tangent_frame(F: Poly, q: ProjPoint):
    """Two deterministic directions spanning the tangent plane with q."""
    field = F.ring.field
    grads = [F.partial(v).evaluate(list(q.coords)) for v in F.ring.variables]
    pivot = next(i for i, g in enumerate(grads) if g)
    n = len(grads)
    kernel = {}
    for j in range(n):
        if j == pivot:
            continue
        vec = [field.zero] * n
        vec[j] = field.one
        vec[pivot] = -grads[j] / grads[pivot]
        kernel[j] = vec
    ell = next(j for j in kernel if q.coords[j])
    picked = [kernel[j] for j in kernel if j != ell]
    return ProjPoint(picked[0], field), ProjPoint(picked[1], field)


def _restriction_strata(F: Poly, q: ProjPoint, t1: ProjPoint, t2: ProjPoint):
    """Binary forms c_k(u, v) with F(q + T(u t1 + v t2)) = sum c_k T^k."""
    field = F.ring.field
    aux = PolyRing(("T", "u", "v"), field)
    T, u, v = aux.gens()
    assignment = {}
    for name, qi, a1, a2 in zip(F.ring.variables, q.coords, t1.coords, t2.coords):
        assignment[name] = aux.const(qi) + T * (u * a1 + v * a2)
    G = F.substitute(assignment, into=aux)
    duo = PolyRing(("u", "v"), field)
    strata = [duo.zero() for _ in range(F.total_degree() + 1)]
    for e, c in G.terms.items():
        k = e[0]
        strata[k] = strata[k] + duo.monomial((e[1], e[2]), c)
    return strata, duo


def _binary_coeff_list(form: Poly, degree: int):
    """Coefficients [u^degree, ..., v^degree] of a binary form of that degree."""
    ring = form.ring
    out = [ring.field.zero] * (degree + 1)
    for e, c in form.terms.items():
        out[degree - e[0]] = c
    return out


def binary_form_resultant(f: Poly, g: Poly, deg_f: int, deg_g: int):
    """Sylvester resultant of binary forms with declared degrees.

    Using declared degrees keeps the root at (1 : 0) visible; the zero
    form yields a zero resultant.
    """
    field = f.ring.field
    fc = _binary_coeff_list(f, deg_f)
    gc = _binary_coeff_list(g, deg_g)
    size = deg_f + deg_g
    rows = []
    for i in range(deg_g):
        rows.append([field.zero] * i + fc + [field.zero] * (size - deg_f - 1 - i))
    for i in range(deg_f):
        rows.append([field.zero] * i + gc + [field.zero] * (size - deg_g - 1 - i))
    return linalg.scalar_determinant(field, rows)


def _univariate_field_roots(coeffs, field):
    """Roots in the field of sum coeffs[i] x^i, for small degrees.

    Over Q this is the rational root search on the integer-cleared
    polynomial; over a prime field only degrees <= 2 are enumerated
    (higher degrees would need full factorization machinery).
    """
    while coeffs and not coeffs[-1]:
        coeffs = coeffs[:-1]
    if len(coeffs) <= 1:
        return []
    if len(coeffs) == 2:
        return [-coeffs[0] / coeffs[1]]
    if isinstance(field, Rationals):
        lcm = 1
        for c in coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        ints = [c // g for c in ints]
        lead, const = ints[-1], ints[0]
        if const == 0:
            return [Fraction(0)] + _univariate_field_roots(
                [Fraction(c) for c in ints[1:]], field
            )
        roots = []
        for p in _divisors(abs(const)):
            for q in _divisors(abs(lead)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand in roots:
                        continue
                    if not sum(c * cand ** i for i, c in enumerate(ints)):
                        roots.append(cand)
        return roots
    if len(coeffs) == 3:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        if not field.is_square(disc):
            return []
        s = field.sqrt(disc)
        roots = [(-b + s) / (2 * a)]
        if s:
            roots.append((-b - s) / (2 * a))
        return roots
    return []


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _common_projective_roots(forms, duo: PolyRing):
    """Field-rational projective roots shared by all the binary forms."""
    field = duo.field
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return None  # every direction works
    candidates = []
    seen = []
    base = nonzero[0]
    # (1 : 0) is a root exactly when the pure u-power coefficient vanishes.
    if base.degree_in("u") < base.total_degree():
        candidates.append((field.one, field.zero))
    univ = [base.coefficient((i, base.total_degree() - i)) for i in range(base.total_degree() + 1)]
    for root in _univariate_field_roots(univ, field):
        candidates.append((root, field.one))
    for cand in candidates:
        if any(cand[0] * s[1] == cand[1] * s[0] for s in seen):
            continue
        u0, v0 = cand
        if all(not f.evaluate([u0, v0]) for f in nonzero):
            seen.append(cand)
    return seen


def max_contact_order(F: Poly, q: ProjPoint) -> ContactReport:
    """Largest intersection multiplicity of a line with V(F) at q."""
    d = _check_surface(F)
    _check_point(F, q)
    if len(F.ring.variables) != 4:
        raise DomainError("contact-order analysis needs a surface in P^3")
    if not is_smooth_point(F, q):
        raise DomainError("singular point")
    t1, t2 = _tangent_frame(F, q)
    strata, duo = _restriction_strata(F, q, t1, t2)
    ii = strata[2] if d >= 2 else duo.zero()
    iii = strata[3] if d >= 3 else duo.zero()
    tail = strata[2:]

    common = _common_projective_roots(tail, duo)
    line_dir = None
    if common is None:
        # The whole tangent plane lies inside the surface.
        line_dir = t1
    else:
        for u0, v0 in common:
            vec = [u0 * a + v0 * b for a, b in zip(t1.coords, t2.coords)]
            direction = ProjPoint(vec, duo.field)
            if line_multiplicity(F, q, direction).multiplicity == INFINITY:
                line_dir = direction
                break
    res = binary_form_resultant(ii, iii, 2, 3)
    if line_dir is not None:
        order = ContactOrder.INFINITE
    elif ii.is_zero or not res:
        order = ContactOrder.GE4
    else:
        order = ContactOrder.THREE
    return ContactReport(order, ii, iii, res, line_dir, (t1, t2))


def flecnodal_member(F: Poly, q: ProjPoint) -> bool:
    """True when some line meets V(F) with multiplicity >= 4 at q."""
    report = max_contact_order(F, q)
    return report.order in (ContactOrder.GE4, ContactOrder.INFINITE)
