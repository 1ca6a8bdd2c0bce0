"""Pluecker systems for plane curves, developables, and space curves.

Covers four classical calculi:

* the plane-curve character sextuple (degree, class, nodes, cusps,
  bitangents, flexes) with the four Pluecker relations, their three
  preferred generators, and the genus relation;
* the nine characteristic numbers of a developable system (order m,
  class n, rank r, stationary planes alpha, stationary points beta,
  double-curve degrees x and y, apparent double points g and h), solved
  from any determining subset by substitution in a fixed order;
* the i-th ranks of a curve in P^N from its degree, genus, and
  hyperosculation totals k_1..k_N, together with the involution sending a
  curve to its osculating dual;
* de Jonquieres counts of divisors with prescribed multiplicities in a
  linear series, by exact truncated power-series coefficient extraction
  (the generalized binomial handles the possibly negative exponent).

Every function accepts exact integers or polynomial values in an
indeterminate, so each relation can be verified either at sample degrees
or as a symbolic zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .polyring import QQ, DomainError, Poly, PolyRing
from .reporting import residual_zero


def _value(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise DomainError(f"expected an integer or polynomial value, got {v!r}")
    return Fraction(v)


def _numeric(v) -> bool:
    return isinstance(v, Fraction)


def _require_count(name: str, v):
    """A character must be a nonnegative integer when numeric."""
    if _numeric(v):
        if v.denominator != 1:
            raise DomainError(f"{name} = {v} is not an integer")
        if v < 0:
            raise DomainError(f"{name} = {v} is negative")
        return int(v)
    return v


# ---------------------------------------------------------------------------
# plane curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneCurveCharacters:
    """degree, class, nodes, cusps, bitangents, flexes (and genus)."""

    degree: object
    dual_degree: object
    nodes: object
    cusps: object
    bitangents: object
    flexes: object
    genus: Optional[object] = None

    def as_tuple(self):
        return (
            self.degree,
            self.dual_degree,
            self.nodes,
            self.cusps,
            self.bitangents,
            self.flexes,
        )


def complete_plane_characters(n, nodes, cusps) -> PlaneCurveCharacters:
    """Fill in class, flexes, and bitangents of a nodal-cuspidal curve."""
    n, d, k = _value(n), _value(nodes), _value(cusps)
    if _numeric(n) and n < 2:
        raise DomainError("degree must be at least 2")
    dual = n * (n - 1) - 2 * d - 3 * k
    flexes = 3 * n * (n - 2) - 6 * d - 8 * k
    bitangents = (dual * (dual - 1) - n - 3 * flexes) / 2
    genus = (n - 1) * (n - 2) / 2 - d - k
    return PlaneCurveCharacters(
        degree=_require_count("degree", n),
        dual_degree=_require_count("class", dual),
        nodes=_require_count("nodes", d),
        cusps=_require_count("cusps", k),
        bitangents=_require_count("bitangents", bitangents),
        flexes=_require_count("flexes", flexes),
        genus=_require_count("genus", genus),
    )


def solve_from_genus(degree, dual_degree, genus) -> PlaneCurveCharacters:
    """Recover (nodes, cusps) and (bitangents, flexes) from degree data.

    Pairs the class formula with the genus formula on each side of the
    duality: a 2 x 2 integer linear solve for each pair.
    """
    n, nd, g = _value(degree), _value(dual_degree), _value(genus)
    nodes_plus_cusps = (n - 1) * (n - 2) / 2 - g
    cusps = n * (n - 1) - nd - 2 * nodes_plus_cusps
    nodes = nodes_plus_cusps - cusps
    bi_plus_flex = (nd - 1) * (nd - 2) / 2 - g
    flexes = nd * (nd - 1) - n - 2 * bi_plus_flex
    bitangents = bi_plus_flex - flexes
    return PlaneCurveCharacters(
        degree=_require_count("degree", n),
        dual_degree=_require_count("class", nd),
        nodes=_require_count("nodes", nodes),
        cusps=_require_count("cusps", cusps),
        bitangents=_require_count("bitangents", bitangents),
        flexes=_require_count("flexes", flexes),
        genus=_require_count("genus", g),
    )


def plucker_residuals(chars: PlaneCurveCharacters) -> Dict[str, object]:
    n, nd, d, k, b, f = (_value(v) for v in chars.as_tuple())
    return {
        "P1": n * (n - 1) - 2 * d - 3 * k - nd,
        "P2": 3 * n * (n - 2) - 6 * d - 8 * k - f,
        "P1_dual": nd * (nd - 1) - 2 * b - 3 * f - n,
        "P2_dual": 3 * nd * (nd - 2) - 6 * b - 8 * f - k,
        "G1": (3 * n - k) - (3 * nd - f),
        "G2": n * (n - 2) + nd * (nd - 2) - (2 * d + 3 * k + 2 * b + 3 * f),
        "G3": 18 * (d - b) - (k - f) * ((k - f) + 6 * nd - 27),
        "genus": ((n - 1) * (n - 2) / 2 - d - k)
        - ((nd - 1) * (nd - 2) / 2 - b - f),
    }


def verify_plucker_relations(chars: PlaneCurveCharacters) -> list:
    """Residuals of the four Pluecker relations, the three generators,
    the dependence relation, and the generator-matrix reconstruction."""
    n, nd, d, k, b, f = (_value(v) for v in chars.as_tuple())
    r = plucker_residuals(chars)
    checks = [residual_zero(name, value) for name, value in r.items()]
    r1, r2, rd1, rd2 = r["P1"], r["P2"], r["P1_dual"], r["P2_dual"]
    g1, g2, g3 = r["G1"], r["G2"], r["G3"]
    s, t = n + nd, k - f
    checks.append(residual_zero("G1 = 3*P1 - P2", g1 - (3 * r1 - r2)))
    checks.append(residual_zero("G1 = -3*P1_dual + P2_dual", g1 - (rd2 - 3 * rd1)))
    checks.append(residual_zero("G2 = P1 + P1_dual", g2 - (r1 + rd1)))
    checks.append(residual_zero("3*G2 = P2 + P2_dual", 3 * g2 - (r2 + rd2)))
    checks.append(
        residual_zero(
            "G3 composition",
            g3 - (3 * (3 * s + t - 3) * r1 - (3 * s + t) * r2 + 9 * rd1),
        )
    )
    checks.append(
        residual_zero("reconstruct P1", r1 - ((s / 6 + t / 18) * g1 + g2 / 2 - g3 / 18))
    )
    checks.append(
        residual_zero(
            "reconstruct P2", r2 - ((s / 2 + t / 6 - 1) * g1 + 3 * g2 / 2 - g3 / 6)
        )
    )
    checks.append(
        residual_zero(
            "reconstruct P1_dual",
            rd1 - (-(s / 6 + t / 18) * g1 + g2 / 2 + g3 / 18),
        )
    )
    checks.append(
        residual_zero(
            "reconstruct P2_dual",
            rd2 - (-(s / 2 + t / 6 - 1) * g1 + 3 * g2 / 2 + g3 / 6),
        )
    )
    return checks


def generator_identities_symbolic() -> list:
    """The structural generator identities over fully indeterminate characters.

    These are the checks of :func:`verify_plucker_relations` that hold for
    arbitrary (even inconsistent) character values; here they are verified
    as zero polynomials in six indeterminates.
    """
    ring = PolyRing(("n", "nd", "d", "k", "b", "f"), QQ)
    chars = PlaneCurveCharacters(*ring.gens())
    structural_names = {
        "G1 = 3*P1 - P2",
        "G1 = -3*P1_dual + P2_dual",
        "G2 = P1 + P1_dual",
        "3*G2 = P2 + P2_dual",
        "G3 composition",
        "reconstruct P1",
        "reconstruct P2",
        "reconstruct P1_dual",
        "reconstruct P2_dual",
    }
    keep = [c for c in verify_plucker_relations(chars) if c.name in structural_names]
    r = plucker_residuals(chars)
    keep.append(
        residual_zero(
            "genus relation from the residuals",
            r["genus"] - (r["P1"] + 2 * r["P1_dual"] - r["P2_dual"]) / 2,
        )
    )
    return keep


# ---------------------------------------------------------------------------
# developable systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DevelopableCharacters:
    """Characteristic numbers of a developable system.

    m: order (degree of the edge curve); n: class (degree of the dual
    curve); r: rank (degree of the tangential surface); alpha / beta:
    stationary planes / points; x / y: degrees of the ordinary double
    curves of the two tangential surfaces; g / h: apparent double points
    of the dual curve and of the edge curve; genus: common geometric
    genus, when determined.
    """

    m: object
    n: object
    r: object
    alpha: object
    beta: object
    x: object
    y: object
    g: object
    h: object
    genus: Optional[object] = None


_FIELDS = ("m", "n", "r", "alpha", "beta", "x", "y", "g", "h", "genus")

# (target, dependencies, solved form); applied in order until stable.
_RULES = (
    ("r", ("m", "genus", "beta"), lambda v: 2 * v["m"] + 2 * v["genus"] - 2 - v["beta"]),
    ("r", ("n", "genus", "alpha"), lambda v: 2 * v["n"] + 2 * v["genus"] - 2 - v["alpha"]),
    ("beta", ("m", "genus", "r"), lambda v: 2 * v["m"] + 2 * v["genus"] - 2 - v["r"]),
    ("alpha", ("n", "genus", "r"), lambda v: 2 * v["n"] + 2 * v["genus"] - 2 - v["r"]),
    ("n", ("r", "genus", "alpha"), lambda v: (v["r"] + v["alpha"] + 2 - 2 * v["genus"]) / 2),
    ("m", ("r", "genus", "beta"), lambda v: (v["r"] + v["beta"] + 2 - 2 * v["genus"]) / 2),
    ("genus", ("r", "m", "beta"), lambda v: (v["r"] + v["beta"] + 2 - 2 * v["m"]) / 2),
    ("genus", ("r", "n", "alpha"), lambda v: (v["r"] + v["alpha"] + 2 - 2 * v["n"]) / 2),
    ("g", ("n", "r", "alpha"), lambda v: (v["n"] * (v["n"] - 1) - v["r"] - 3 * v["alpha"]) / 2),
    ("r", ("n", "g", "alpha"), lambda v: v["n"] * (v["n"] - 1) - 2 * v["g"] - 3 * v["alpha"]),
    ("alpha", ("n", "r", "g"), lambda v: (v["n"] * (v["n"] - 1) - v["r"] - 2 * v["g"]) / 3),
    ("m", ("n", "g", "alpha"), lambda v: 3 * v["n"] * (v["n"] - 2) - 6 * v["g"] - 8 * v["alpha"]),
    ("g", ("n", "m", "alpha"), lambda v: (3 * v["n"] * (v["n"] - 2) - v["m"] - 8 * v["alpha"]) / 6),
    ("alpha", ("n", "m", "g"), lambda v: (3 * v["n"] * (v["n"] - 2) - v["m"] - 6 * v["g"]) / 8),
    ("n", ("r", "x", "m"), lambda v: v["r"] * (v["r"] - 1) - 2 * v["x"] - 3 * v["m"]),
    ("x", ("r", "n", "m"), lambda v: (v["r"] * (v["r"] - 1) - v["n"] - 3 * v["m"]) / 2),
    ("m", ("r", "n", "x"), lambda v: (v["r"] * (v["r"] - 1) - v["n"] - 2 * v["x"]) / 3),
    ("alpha", ("r", "x", "m"), lambda v: 3 * v["r"] * (v["r"] - 2) - 6 * v["x"] - 8 * v["m"]),
    ("x", ("r", "alpha", "m"), lambda v: (3 * v["r"] * (v["r"] - 2) - v["alpha"] - 8 * v["m"]) / 6),
    ("h", ("m", "r", "beta"), lambda v: (v["m"] * (v["m"] - 1) - v["r"] - 3 * v["beta"]) / 2),
    ("r", ("m", "h", "beta"), lambda v: v["m"] * (v["m"] - 1) - 2 * v["h"] - 3 * v["beta"]),
    ("beta", ("m", "r", "h"), lambda v: (v["m"] * (v["m"] - 1) - v["r"] - 2 * v["h"]) / 3),
    ("n", ("m", "h", "beta"), lambda v: 3 * v["m"] * (v["m"] - 2) - 6 * v["h"] - 8 * v["beta"]),
    ("h", ("m", "n", "beta"), lambda v: (3 * v["m"] * (v["m"] - 2) - v["n"] - 8 * v["beta"]) / 6),
    ("y", ("r", "m", "n"), lambda v: (v["r"] * (v["r"] - 1) - v["m"] - 3 * v["n"]) / 2),
    ("m", ("r", "y", "n"), lambda v: v["r"] * (v["r"] - 1) - 2 * v["y"] - 3 * v["n"]),
    ("beta", ("r", "y", "n"), lambda v: 3 * v["r"] * (v["r"] - 2) - 6 * v["y"] - 8 * v["n"]),
    ("y", ("r", "beta", "n"), lambda v: (3 * v["r"] * (v["r"] - 2) - v["beta"] - 8 * v["n"]) / 6),
    ("alpha", ("beta", "n", "m"), lambda v: v["beta"] + 2 * (v["n"] - v["m"])),
    ("beta", ("alpha", "n", "m"), lambda v: v["alpha"] - 2 * (v["n"] - v["m"])),
    ("x", ("y", "n", "m"), lambda v: v["y"] + v["n"] - v["m"]),
    ("y", ("x", "n", "m"), lambda v: v["x"] - v["n"] + v["m"]),
    ("g", ("h", "n", "m"), lambda v: v["h"] + (v["n"] - v["m"]) * (v["n"] + v["m"] - 7) / 2),
    ("h", ("g", "n", "m"), lambda v: v["g"] - (v["n"] - v["m"]) * (v["n"] + v["m"] - 7) / 2),
)

_EQUATIONS = (
    ("class from rank section", ("n", "r", "x", "m"),
     lambda v: v["r"] * (v["r"] - 1) - 2 * v["x"] - 3 * v["m"] - v["n"]),
    ("stationary planes from rank section", ("alpha", "r", "x", "m"),
     lambda v: 3 * v["r"] * (v["r"] - 2) - 6 * v["x"] - 8 * v["m"] - v["alpha"]),
    ("rank from class projection", ("r", "n", "g", "alpha"),
     lambda v: v["n"] * (v["n"] - 1) - 2 * v["g"] - 3 * v["alpha"] - v["r"]),
    ("order from class projection", ("m", "n", "g", "alpha"),
     lambda v: 3 * v["n"] * (v["n"] - 2) - 6 * v["g"] - 8 * v["alpha"] - v["m"]),
    ("rank from order projection", ("r", "m", "h", "beta"),
     lambda v: v["m"] * (v["m"] - 1) - 2 * v["h"] - 3 * v["beta"] - v["r"]),
    ("class from order projection", ("n", "m", "h", "beta"),
     lambda v: 3 * v["m"] * (v["m"] - 2) - 6 * v["h"] - 8 * v["beta"] - v["n"]),
    ("order from dual rank section", ("m", "r", "y", "n"),
     lambda v: v["r"] * (v["r"] - 1) - 2 * v["y"] - 3 * v["n"] - v["m"]),
    ("stationary points from dual rank section", ("beta", "r", "y", "n"),
     lambda v: 3 * v["r"] * (v["r"] - 2) - 6 * v["y"] - 8 * v["n"] - v["beta"]),
    ("stationary difference", ("alpha", "beta", "n", "m"),
     lambda v: v["alpha"] - v["beta"] - 2 * (v["n"] - v["m"])),
    ("double-curve difference", ("x", "y", "n", "m"),
     lambda v: v["x"] - v["y"] - (v["n"] - v["m"])),
    ("apparent-node difference", ("g", "h", "n", "m"),
     lambda v: 2 * (v["g"] - v["h"]) - (v["n"] - v["m"]) * (v["n"] + v["m"] - 7)),
    ("genus count via order", ("r", "m", "genus", "beta"),
     lambda v: 2 * v["m"] + 2 * v["genus"] - 2 - v["beta"] - v["r"]),
    ("genus count via class", ("r", "n", "genus", "alpha"),
     lambda v: 2 * v["n"] + 2 * v["genus"] - 2 - v["alpha"] - v["r"]),
)


def complete_developable(**known) -> Tuple[DevelopableCharacters, list]:
    """Solve the developable relation system from a determining subset.

    Returns the completed characters and residual checks for every
    relation whose participants are all determined; over-determined
    inputs are verified, never re-solved.
    """
    values = {}
    for key, v in known.items():
        if key not in _FIELDS:
            raise DomainError(f"unknown character {key!r}")
        if v is not None:
            values[key] = _value(v)
    progress = True
    while progress:
        progress = False
        for target, deps, fn in _RULES:
            if target in values:
                continue
            if all(dep in values for dep in deps):
                values[target] = fn(values)
                progress = True
    missing = [f for f in _FIELDS[:-1] if f not in values]
    if missing:
        raise DomainError(f"insufficient knowns: cannot determine {missing}")
    checks = []
    for name, deps, fn in _EQUATIONS:
        if all(dep in values for dep in deps):
            checks.append(residual_zero(name, fn(values)))
    bad = [c.name for c in checks if not c.ok]
    if bad:
        raise DomainError(f"inconsistent characters: nonzero residuals in {bad}")
    cleaned = {
        f: _require_count(f, values[f]) if f in values else None for f in _FIELDS
    }
    return DevelopableCharacters(**cleaned), checks


# ---------------------------------------------------------------------------
# ranks of space curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankProfile:
    """Degrees r_0..r_{N-1} of the osculating varieties of a curve in P^N.

    k[i] totals the i-th hyperosculation jumps (k_1..k_N), constrained by
    the closing relation sum (N-j+1) k_j = (N+1)(m + N(genus-1)).
    """

    dim: int
    degree: object
    genus: object
    k: Tuple[object, ...]
    ranks: Tuple[object, ...]

    def dual(self) -> "RankProfile":
        """Profile of the osculating dual: ranks reversed, jumps reversed."""
        dual_profile = rank_profile(
            self.dim, self.ranks[-1], self.genus, tuple(reversed(self.k))
        )
        expected = tuple(reversed(self.ranks))
        if dual_profile.ranks != expected:
            raise RuntimeError("rank duality failed the independent recomputation")
        return dual_profile


def rank_profile(dim: int, degree, genus, k: Sequence) -> RankProfile:
    """Ranks r_i from degree, genus, and hyperosculation totals."""
    if dim < 2:
        raise DomainError("ambient dimension must be at least 2")
    k = tuple(_value(v) for v in k)
    if len(k) != dim:
        raise DomainError(f"need {dim} hyperosculation totals k_1..k_{dim}")
    m, g = _value(degree), _value(genus)
    closing = sum(
        ((dim - j + 1) * k[j - 1] for j in range(2, dim + 1)),
        dim * k[0],
    ) - (dim + 1) * (m + dim * (g - 1))
    if not (closing.is_zero if isinstance(closing, Poly) else not closing):
        raise DomainError(f"hyperosculation totals violate the closing relation: {closing}")
    ranks = []
    for i in range(dim):
        r = (i + 1) * (m + i * (g - 1))
        for j in range(1, i + 1):
            r = r - (i - j + 1) * k[j - 1]
        ranks.append(_require_count(f"r_{i}", r))
    # Telescoping consistency, with r_N = r_(-1) = 0.
    padded = [0 * m] + ranks + [0 * m]
    for i in range(dim):
        residual = (
            padded[i] - 2 * padded[i + 1] + padded[i + 2] - (2 * g - 2 - k[i])
        )
        ok = residual.is_zero if isinstance(residual, Poly) else not residual
        if not ok:
            raise RuntimeError(f"telescoping relation failed at i={i}")
    return RankProfile(dim, _require_count("degree", m), g, k, tuple(ranks))


# ---------------------------------------------------------------------------
# de Jonquieres counts
# ---------------------------------------------------------------------------


def _series_mul(a, b, caps):
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            if any(x > cap for x, cap in zip(e, caps)):
                continue
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def _series_pow(base, exponent: int, caps):
    """(1 + u)^exponent truncated, where base = u has no constant term.

    The generalized binomial handles negative exponents exactly.
    """
    total_cap = sum(caps)
    one = {(0,) * len(caps): Fraction(1)}
    result = dict(one)
    power = dict(one)
    coeff = Fraction(1)
    for k in range(1, total_cap + 1):
        power = _series_mul(power, base, caps)
        if not power:
            break
        coeff = coeff * Fraction(exponent - (k - 1), k)
        for e, c in power.items():
            result[e] = result.get(e, Fraction(0)) + coeff * c
    return result


@dataclass(frozen=True)
class DeJonquieresProblem:
    """Degree m series of genus g with prescribed multiplicity pattern."""

    degree: int
    genus: int
    multiplicities: Mapping[int, int]  # s -> number of s-fold points
    dimension: int  # sum (s-1) m_s


def dejonquieres_problem(degree: int, genus: int, multiplicities: Mapping[int, int]):
    filled = {int(s): int(ms) for s, ms in multiplicities.items() if ms}
    if any(s < 1 or ms < 0 for s, ms in filled.items()):
        raise DomainError("multiplicities must map s >= 1 to counts >= 0")
    weighted = sum(s * ms for s, ms in filled.items())
    if 1 not in filled:
        if weighted > degree:
            raise DomainError("multiplicity pattern exceeds the series degree")
        if weighted < degree:
            filled[1] = degree - weighted
    elif weighted != degree:
        raise DomainError("sum of s * m_s must equal the series degree")
    dim = sum((s - 1) * ms for s, ms in filled.items())
    return DeJonquieresProblem(degree, genus, filled, dim)


def dejonquieres_count(degree: int, genus: int, multiplicities: Mapping[int, int]) -> int:
    """Virtual count of divisors with the given multiplicity pattern.

    Coefficient of prod t_s^(m_s) in
    (1 + sum s^2 t_s)^genus * (1 + sum s t_s)^(degree - dim - genus);
    the result may be negative (virtual-number semantics) but is always an
    integer, which is asserted.
    """
    problem = dejonquieres_problem(degree, genus, multiplicities)
    support = sorted(problem.multiplicities)
    caps = tuple(problem.multiplicities[s] for s in support)
    nvars = len(support)

    def linear(weight_fn):
        out = {}
        for idx, s in enumerate(support):
            e = tuple(1 if i == idx else 0 for i in range(nvars))
            out[e] = Fraction(weight_fn(s))
        return out

    genus_factor = _series_pow(linear(lambda s: s * s), problem.genus, caps)
    tail_exponent = problem.degree - problem.dimension - problem.genus
    tail_factor = _series_pow(linear(lambda s: s), tail_exponent, caps)
    product = _series_mul(genus_factor, tail_factor, caps)
    coeff = product.get(caps, Fraction(0))
    if coeff.denominator != 1:
        raise RuntimeError(f"non-integer de Jonquieres coefficient {coeff}")
    return int(coeff)
