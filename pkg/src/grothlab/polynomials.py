"""The polynomial families: Schur, P-Schur, and their weak deformations.

Each deformed family has two independent routes: the algebraic one (an
antisymmetrized or coset-summed product of truncated geometric factors,
divided exactly by the Vandermonde) and the combinatorial one (a weighted
sum over multiset or shifted multiset tableaux).  Matching results from
the two routes is the core correctness check of the whole library.

Everything is exact: integer coefficients throughout, with the t-degree
cap as the only source of truncation.  Within the cap window the x-degree
of every term equals |mu| plus its t-degree, so any x-cap of at least
|mu| + t_cap loses nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    Polynomial,
    TruncatedSeries,
    antisymmetrize,
    coset_sum,
    divide_exact,
    geometric_factor,
    h_polynomial,
    vandermonde,
)
from .partitions import (
    column_heights,
    is_partition,
    is_strict_partition,
    pad,
    staircase,
)
from .tableaux import (
    enumerate_maximal_mt,
    enumerate_maximal_smt,
    enumerate_mt,
    enumerate_smt,
    enumerate_ssyt,
    enumerate_sst,
)

__all__ = [
    "ExpansionError",
    "FamilySpec",
    "BasisExpansion",
    "schur",
    "schur_bialternant",
    "pschur",
    "grothendieck_J_algebraic",
    "grothendieck_J_combinatorial",
    "grothendieck_P_algebraic",
    "grothendieck_P_combinatorial",
    "signed_smt_sum",
    "grothendieck_P_from_signed",
    "coefficient_via_hmult",
    "hmult_good_extension_route",
    "expand_in_schur",
    "expand_in_pschur",
    "expansion_via_maximal",
    "specialize_t",
]


class ExpansionError(ValueError):
    """A polynomial does not expand in the requested basis."""


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one polynomial computation.

    `family` is one of 'J', 'P', 'schur', 'pschur'.  The t-variable count
    is always ell = mu_1.  When mu needs more rows than there are
    x-variables the family vanishes; both routes then return the zero
    series.
    """

    family: str
    mu: tuple[int, ...]
    n: int
    t_cap: int = 1
    x_cap: int | None = None

    def __post_init__(self):
        if self.family not in ("J", "P", "schur", "pschur"):
            raise ValueError(f"unknown family {self.family!r}")
        if not is_partition(self.mu):
            raise ValueError(f"mu must be a partition without trailing zeros: {self.mu}")
        if self.family in ("P", "pschur") and not is_strict_partition(self.mu):
            raise ValueError(f"family {self.family} needs a strict partition: {self.mu}")
        if self.n < 1:
            raise ValueError("need at least one x-variable")
        if self.t_cap < 0:
            raise ValueError("t_cap must be nonnegative")
        if self.x_cap is not None and self.x_cap < 0:
            raise ValueError("x_cap must be nonnegative")

    @property
    def ell(self) -> int:
        return self.mu[0] if self.mu else 0

    @property
    def weight_size(self) -> int:
        return sum(self.mu)

    def effective_x_cap(self) -> int:
        if self.x_cap is not None:
            return self.x_cap
        return self.weight_size + self.t_cap * self.ell * self.n

    def vanishes(self) -> bool:
        return len(self.mu) > self.n

    def zero_series(self) -> TruncatedSeries:
        return TruncatedSeries(
            Polynomial.zero(self.n, self.ell), self.effective_x_cap(), self.t_cap
        )


# ---------------------------------------------------------------------------
# undeformed bases


@lru_cache(maxsize=None)
def schur(lam: tuple[int, ...], n: int) -> Polynomial:
    """Schur polynomial as the tableau generating function."""
    lam = tuple(p for p in lam if p)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    total = Polynomial.zero(n, 0)
    if len(lam) > n:
        return total
    for t in enumerate_ssyt(lam, n):
        total = total + Polynomial.monomial(pad(t.weight(), n), ())
    return total


def schur_bialternant(lam: tuple[int, ...], n: int) -> Polynomial:
    """Schur polynomial as the bialternant quotient (independent route)."""
    lam = tuple(lam)
    if len(lam) > n:
        return Polynomial.zero(n, 0)
    exps = tuple(a + b for a, b in zip(pad(lam, n), staircase(n)))
    return divide_exact(antisymmetrize(Polynomial.monomial(exps, ())), vandermonde(n))


@lru_cache(maxsize=None)
def pschur(lam: tuple[int, ...], n: int) -> Polynomial:
    """P-Schur polynomial as the shifted tableau generating function."""
    lam = tuple(lam)
    if not is_strict_partition(lam):
        raise ValueError(f"not a strict partition: {lam}")
    total = Polynomial.zero(n, 0)
    if len(lam) > n:
        return total
    for t in enumerate_sst(lam, n):
        total = total + Polynomial.monomial(pad(t.weight(), n), ())
    return total


# ---------------------------------------------------------------------------
# the weak symmetric Grothendieck family J


def _geometric_row(i: int, part: int, ell: int, n: int, x_cap: int, t_cap: int) -> TruncatedSeries:
    """Product of the geometric factors of row i: t-indices ell-part+1..ell."""
    out = TruncatedSeries.one(n, ell, x_cap, t_cap)
    for j in range(ell - part + 1, ell + 1):
        out = out * geometric_factor(i, j - 1, n, ell, x_cap, t_cap)
    return out


def grothendieck_J_algebraic(spec: FamilySpec) -> TruncatedSeries:
    """The antisymmetrized-product route, divided exactly by the Vandermonde."""
    n, ell, t_cap = spec.n, spec.ell, spec.t_cap
    if spec.vanishes():
        return spec.zero_series()
    mu_p = pad(spec.mu, n)
    window = min(spec.effective_x_cap(), spec.weight_size + t_cap)
    x_work = window + n * (n - 1) // 2
    prod = TruncatedSeries.one(n, ell, x_work, t_cap)
    for i in range(n):
        stair = [0] * n
        stair[i] = n - 1 - i
        prod = prod * Polynomial.monomial(stair, (0,) * ell)
        prod = prod * _geometric_row(i, mu_p[i], ell, n, x_work, t_cap)
    quotient = divide_exact(antisymmetrize(prod, n), vandermonde(n))
    return TruncatedSeries(quotient.poly, spec.effective_x_cap(), t_cap)


def grothendieck_J_combinatorial(spec: FamilySpec) -> TruncatedSeries:
    """Tableau route: sum of t^cw x^wt over capped multiset tableaux."""
    n, ell, t_cap = spec.n, spec.ell, spec.t_cap
    total = Polynomial.zero(n, ell)
    for t in enumerate_mt(spec.mu, n, t_cap):
        total = total + Polynomial.monomial(pad(t.weight(), n), t.column_weight())
    return TruncatedSeries(total, spec.effective_x_cap(), t_cap)


# ---------------------------------------------------------------------------
# the weak symmetric P-Grothendieck family


def grothendieck_P_algebraic(spec: FamilySpec) -> TruncatedSeries:
    """Coset-sum route with plus and minus pair factors, divided by V."""
    n, ell, t_cap = spec.n, spec.ell, spec.t_cap
    m = len(spec.mu)
    if spec.vanishes():
        return spec.zero_series()
    window = min(spec.effective_x_cap(), spec.weight_size + t_cap)
    x_work = window + n * (n - 1) // 2
    prod = TruncatedSeries.one(n, ell, x_work, t_cap)
    for i in range(m):
        prod = prod * _geometric_row(i, spec.mu[i], ell, n, x_work, t_cap)
    plus = Polynomial.constant(1, n, ell)
    for i in range(m):
        for j in range(i + 1, n):
            xi = Polynomial.monomial([1 if a == i else 0 for a in range(n)], (0,) * ell)
            xj = Polynomial.monomial([1 if a == j else 0 for a in range(n)], (0,) * ell)
            plus = plus * (xi + xj)
    minus = Polynomial.constant(1, n, ell)
    for i in range(m, n):
        for j in range(i + 1, n):
            xi = Polynomial.monomial([1 if a == i else 0 for a in range(n)], (0,) * ell)
            xj = Polynomial.monomial([1 if a == j else 0 for a in range(n)], (0,) * ell)
            minus = minus * (xi - xj)
    prod = prod * plus * minus
    quotient = divide_exact(coset_sum(prod, n, m), vandermonde(n))
    return TruncatedSeries(quotient.poly, spec.effective_x_cap(), t_cap)


def grothendieck_P_combinatorial(spec: FamilySpec) -> TruncatedSeries:
    """Tableau route: sum of t^dw x^wt over capped shifted multiset tableaux."""
    n, ell, t_cap = spec.n, spec.ell, spec.t_cap
    total = Polynomial.zero(n, ell)
    for t in enumerate_smt(spec.mu, n, t_cap, signed=False):
        total = total + Polynomial.monomial(pad(t.weight(), n), t.diagonal_weight())
    return TruncatedSeries(total, spec.effective_x_cap(), t_cap)


def signed_smt_sum(spec: FamilySpec) -> TruncatedSeries:
    """Sum over the signed census; equals 2^m times the unsigned route."""
    n, ell, t_cap = spec.n, spec.ell, spec.t_cap
    total = Polynomial.zero(n, ell)
    for t in enumerate_smt(spec.mu, n, t_cap, signed=True):
        total = total + Polynomial.monomial(pad(t.weight(), n), t.diagonal_weight())
    return TruncatedSeries(total, spec.effective_x_cap(), t_cap)


def grothendieck_P_from_signed(spec: FamilySpec) -> TruncatedSeries:
    """Signed route: divide the signed census sum by 2^m, exactly."""
    m = len(spec.mu)
    total = signed_smt_sum(spec)
    out = {}
    for mono, c in total.poly.terms.items():
        if c % (1 << m):
            raise ExpansionError(f"coefficient {c} not divisible by 2^{m}")
        out[mono] = c >> m
    return TruncatedSeries(Polynomial(spec.n, spec.ell, out), total.x_cap, total.t_cap)


# ---------------------------------------------------------------------------
# the t-coefficient through the h-product identity


def _h_product(t_exps, heights, n: int) -> Polynomial:
    out = Polynomial.constant(1, n, 0)
    for h, t_h in enumerate(t_exps, start=1):
        out = out * h_polynomial(t_h, heights[h], n)
    return out


def coefficient_via_hmult(spec: FamilySpec, t_exps) -> Polynomial:
    """The x-coefficient of t^T computed by the h-product route.

    For family J the product is antisymmetrized against the staircase-shifted
    monomial; for family P it is coset-summed with the pair factors.  The
    result must match the same coefficient extracted from the algebraic
    series.
    """
    t_exps = tuple(t_exps)
    n, ell = spec.n, spec.ell
    if len(t_exps) != ell:
        raise ValueError(f"need exactly {ell} t-exponents")
    heights = column_heights(spec.mu)
    if spec.vanishes():
        return Polynomial.zero(n, 0)
    if spec.family == "J":
        mu_p = pad(spec.mu, n)
        exps = tuple(a + b for a, b in zip(mu_p, staircase(n)))
        f = _h_product(t_exps, heights, n) * Polynomial.monomial(exps, ())
        return divide_exact(antisymmetrize(f, n), vandermonde(n))
    if spec.family == "P":
        m = len(spec.mu)
        f = _h_product(t_exps, heights, n) * Polynomial.monomial(pad(spec.mu, n), ())
        for i in range(m):
            for j in range(i + 1, n):
                f = f * (Polynomial.monomial([1 if a == i else 0 for a in range(n)], ())
                         + Polynomial.monomial([1 if a == j else 0 for a in range(n)], ()))
        for i in range(m, n):
            for j in range(i + 1, n):
                f = f * (Polynomial.monomial([1 if a == i else 0 for a in range(n)], ())
                         - Polynomial.monomial([1 if a == j else 0 for a in range(n)], ()))
        return divide_exact(coset_sum(f, n, m), vandermonde(n))
    raise ValueError("coefficient_via_hmult applies to families J and P")


def hmult_good_extension_route(spec: FamilySpec, t_exps) -> Polynomial:
    """Family J only: the same t-coefficient summed over good extensions."""
    from .partitions import hmult_rhs_good

    t_exps = tuple(t_exps)
    n = spec.n
    if spec.family != "J":
        raise ValueError("the good-extension route applies to family J")
    if spec.vanishes():
        return Polynomial.zero(n, 0)
    heights = column_heights(spec.mu)
    ell = spec.ell
    mu_p = pad(spec.mu, n)
    base = tuple(a + b for a, b in zip(mu_p, staircase(n)))
    increments = tuple(t_exps[h - 1] for h in range(ell, 0, -1))
    columns = tuple(heights[h] for h in range(ell, 0, -1))
    return divide_exact(hmult_rhs_good(base, increments, columns, n), vandermonde(n))


# ---------------------------------------------------------------------------
# basis expansions


@dataclass(frozen=True)
class BasisExpansion:
    """Finitely supported map from basis indices to t-polynomials."""

    basis: str
    n: int
    nt: int
    coefficients: tuple[tuple[tuple[int, ...], Polynomial], ...]

    @classmethod
    def from_dict(cls, basis: str, n: int, nt: int, coeffs: dict) -> "BasisExpansion":
        items = tuple(
            (lam, coeffs[lam])
            for lam in sorted(coeffs, key=lambda l: (sum(l), l), reverse=True)
            if coeffs[lam]
        )
        return cls(basis, n, nt, items)

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def coefficient(self, lam) -> Polynomial:
        for lam_i, c in self.coefficients:
            if lam_i == tuple(lam):
                return c
        return Polynomial.zero(0, self.nt)

    def is_nonnegative(self) -> bool:
        return all(
            c >= 0 for _, poly in self.coefficients for c in poly.terms.values()
        )

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return (self.basis, self.n, self.nt, self.coefficients) == (
            other.basis,
            other.n,
            other.nt,
            other.coefficients,
        )


def _expand(f, n: int, basis_fn, basis_name: str, strict: bool) -> BasisExpansion:
    poly = f.poly if isinstance(f, TruncatedSeries) else f
    if not poly.is_symmetric_x():
        raise ExpansionError("polynomial is not symmetric in the x-block")
    nt = poly.nt
    slices: dict[tuple, dict] = {}
    for (xe, te), c in poly.terms.items():
        slices.setdefault(te, {})[(xe, ())] = c
    coeffs: dict[tuple[int, ...], Polynomial] = {}
    for te, terms in sorted(slices.items()):
        rem = Polynomial(n, 0, terms)
        while rem:
            xe, _ = rem.leading_monomial()
            lam = tuple(p for p in xe if p)
            if tuple(sorted(lam, reverse=True)) != lam:
                raise ExpansionError(f"leading exponent {xe} is not a partition")
            if strict and not is_strict_partition(lam):
                raise ExpansionError(f"leading exponent {xe} is not strict")
            c = rem.terms[(xe, ())]
            rem = rem - basis_fn(lam, n) * c
            prev = coeffs.get(lam, Polynomial.zero(0, nt))
            coeffs[lam] = prev + Polynomial.monomial((), te, c)
    return BasisExpansion.from_dict(basis_name, n, nt, coeffs)


def expand_in_schur(f, n: int) -> BasisExpansion:
    """Greedy leading-monomial expansion in Schur polynomials."""
    return _expand(f, n, schur, "schur", strict=False)


def expand_in_pschur(f, n: int) -> BasisExpansion:
    """Greedy leading-monomial expansion in P-Schur polynomials."""
    return _expand(f, n, pschur, "pschur", strict=True)


def expansion_via_maximal(spec: FamilySpec) -> BasisExpansion:
    """Expansion read off maximal tableaux: index lambda gets sum of t^cw
    (or t^dw) over the maximal tableaux of weight lambda."""
    n, ell, t_cap = spec.n, spec.ell, spec.t_cap
    coeffs: dict[tuple[int, ...], Polynomial] = {}
    if spec.family == "J":
        tableaux = enumerate_maximal_mt(spec.mu, t_cap)
        stats = [(t.weight(), t.column_weight()) for t in tableaux]
        basis = "schur"
    elif spec.family == "P":
        tableaux = enumerate_maximal_smt(spec.mu, t_cap)
        stats = [(t.weight(), t.diagonal_weight()) for t in tableaux]
        basis = "pschur"
    else:
        raise ValueError("maximal-tableau expansions apply to families J and P")
    if spec.vanishes():
        return BasisExpansion.from_dict(basis, n, ell, {})
    for wt, cw in stats:
        if not is_partition(wt):
            raise ExpansionError(f"maximal tableau weight {wt} is not a partition")
        prev = coeffs.get(wt, Polynomial.zero(0, ell))
        coeffs[wt] = prev + Polynomial.monomial((), cw)
    return BasisExpansion.from_dict(basis, n, ell, coeffs)


# ---------------------------------------------------------------------------
# specialization


def specialize_t(f, values) -> Polynomial:
    """Substitute 0 or 1 for every t-variable; exactness caveat under caps.

    With all-zero values this is the t-free part.  All-one values are exact
    per x-degree slice only up to the series caps.
    """
    poly = f.poly if isinstance(f, TruncatedSeries) else f
    values = tuple(values)
    if len(values) != poly.nt:
        raise ValueError(f"need exactly {poly.nt} substitution values")
    if any(v not in (0, 1) for v in values):
        raise ValueError("only 0/1 specializations are exact under truncation")
    out: dict = {}
    for (xe, te), c in poly.terms.items():
        if any(e > 0 and v == 0 for e, v in zip(te, values)):
            continue
        mono = (xe, ())
        out[mono] = out.get(mono, 0) + c
    return Polynomial(poly.nx, 0, out)
