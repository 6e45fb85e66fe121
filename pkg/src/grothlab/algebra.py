"""Exact sparse arithmetic for polynomials in two variable blocks.

Every polynomial lives in Z[x_1..x_nx, t_1..t_nt].  Terms are stored as a
dict mapping (x_exponents, t_exponents) -> integer coefficient, with zero
coefficients never stored.  TruncatedSeries wraps a Polynomial together with
degree caps on the two blocks; series products drop terms over either cap.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

__all__ = [
    "ExactDivisionError",
    "Polynomial",
    "TruncatedSeries",
    "antisymmetrize",
    "apply_permutation",
    "coset_sum",
    "coset_permutations",
    "divide_exact",
    "geometric_factor",
    "h_polynomial",
    "perm_sign",
    "vandermonde",
    "x_var",
    "t_var",
]


class ExactDivisionError(ArithmeticError):
    """Raised when a quotient does not exist exactly over the integers."""


def perm_sign(sigma) -> int:
    """Sign of a permutation given in one-line form (tuple of images)."""
    inv = 0
    n = len(sigma)
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _order_key(mono):
    """Graded lex key, x-block before t-block."""
    xe, te = mono
    return (sum(xe), xe, sum(te), te)


class Polynomial:
    """Sparse exact polynomial over Z with an x-block and a t-block."""

    __slots__ = ("nx", "nt", "terms")

    def __init__(self, nx: int, nt: int, terms=None):
        self.nx = nx
        self.nt = nt
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[mono] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nx: int, nt: int = 0) -> "Polynomial":
        return cls(nx, nt)

    @classmethod
    def constant(cls, c: int, nx: int, nt: int = 0) -> "Polynomial":
        mono = ((0,) * nx, (0,) * nt)
        return cls(nx, nt, {mono: c})

    @classmethod
    def monomial(cls, xexps, texps, coeff: int = 1) -> "Polynomial":
        return cls(len(xexps), len(texps), {(tuple(xexps), tuple(texps)): coeff})

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.nx != other.nx or self.nt != other.nt:
            raise ValueError(
                f"variable blocks differ: ({self.nx},{self.nt}) vs ({other.nx},{other.nt})"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nx, self.nt)
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, 0) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return Polynomial(self.nx, self.nt, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nx, self.nt, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nx, self.nt)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.nx, self.nt, {m: c * other for m, c in self.terms.items()})
        self._check_compatible(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (xa, ta), ca in a.items():
            for (xb, tb), cb in b.items():
                mono = (
                    tuple(p + q for p, q in zip(xa, xb)),
                    tuple(p + q for p, q in zip(ta, tb)),
                )
                c = out.get(mono, 0) + ca * cb
                if c:
                    out[mono] = c
                else:
                    del out[mono]
        return Polynomial(self.nx, self.nt, out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.nx, self.nt, self.terms) == (other.nx, other.nt, other.terms)

    __hash__ = None

    # -- queries -----------------------------------------------------------

    def coefficient(self, xexps, texps=()) -> int:
        texps = tuple(texps) if texps else (0,) * self.nt
        return self.terms.get((tuple(xexps), texps), 0)

    def x_degree(self) -> int:
        return max((sum(xe) for xe, _ in self.terms), default=0)

    def t_degree(self) -> int:
        return max((sum(te) for _, te in self.terms), default=0)

    def leading_monomial(self):
        """Largest monomial in graded lex order (x-block first), or None."""
        if not self.terms:
            return None
        return max(self.terms, key=_order_key)

    def coefficient_of_t(self, texps) -> "Polynomial":
        """Extract the x-polynomial multiplying t^texps (t-block dropped)."""
        texps = tuple(texps)
        out = {}
        for (xe, te), c in self.terms.items():
            if te == texps:
                out[(xe, ())] = c
        return Polynomial(self.nx, 0, out)

    def x_graded_slices(self):
        """Split into {total x-degree: sub-polynomial}."""
        slices = {}
        for mono, c in self.terms.items():
            slices.setdefault(sum(mono[0]), {})[mono] = c
        return {d: Polynomial(self.nx, self.nt, ts) for d, ts in sorted(slices.items())}

    def is_symmetric_x(self) -> bool:
        """True iff invariant under every adjacent x-transposition."""
        for i in range(self.nx - 1):
            sigma = list(range(self.nx))
            sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
            if apply_permutation(self, tuple(sigma)) != self:
                return False
        return True

    def sorted_terms(self):
        """Terms as (x_exps, t_exps, coeff), leading (graded lex) first."""
        return [
            (xe, te, self.terms[(xe, te)])
            for xe, te in sorted(self.terms, key=_order_key, reverse=True)
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for xe, te, c in self.sorted_terms():
            names = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(xe) if e]
            names += [f"t{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(te) if e]
            if not names:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(names))
            elif c == -1:
                parts.append("-" + "*".join(names))
            else:
                parts.append("*".join([str(c)] + names))
        return " + ".join(parts).replace("+ -", "- ")


def x_var(i: int, nx: int, nt: int = 0) -> Polynomial:
    """The variable x_{i+1} (0-based index i)."""
    xe = [0] * nx
    xe[i] = 1
    return Polynomial.monomial(xe, (0,) * nt)


def t_var(j: int, nx: int, nt: int) -> Polynomial:
    te = [0] * nt
    te[j] = 1
    return Polynomial.monomial((0,) * nx, te)


def apply_permutation(p, sigma):
    """Relabel x_i -> x_{sigma(i)} (0-based one-line sigma); t-block untouched."""
    if isinstance(p, TruncatedSeries):
        return TruncatedSeries(apply_permutation(p.poly, sigma), p.x_cap, p.t_cap)
    if len(sigma) != p.nx:
        raise ValueError("permutation length does not match x-block")
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    out = {}
    for (xe, te), c in p.terms.items():
        new_xe = tuple(xe[inv[j]] for j in range(p.nx))
        out[(new_xe, te)] = out.get((new_xe, te), 0) + c
    return Polynomial(p.nx, p.nt, out)


def antisymmetrize(f, n: int | None = None):
    """Sum of sgn(sigma) * (f with x relabeled by sigma) over all of S_n."""
    poly = f.poly if isinstance(f, TruncatedSeries) else f
    n = poly.nx if n is None else n
    total = Polynomial.zero(poly.nx, poly.nt)
    for sigma in permutations(range(n)):
        term = apply_permutation(poly, sigma)
        total = total + (term if perm_sign(sigma) > 0 else -term)
    if isinstance(f, TruncatedSeries):
        return TruncatedSeries(total, f.x_cap, f.t_cap)
    return total


def coset_permutations(n: int, m: int):
    """One-line permutations of {0..n-1} with no descents after position m."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    out = []
    for head in permutations(range(n), m):
        tail = tuple(sorted(set(range(n)) - set(head)))
        out.append(head + tail)
    return sorted(out)


def coset_sum(f, n: int, m: int):
    """Signed sum of x-relabelings of f over S_n / S_{n-m} coset representatives."""
    poly = f.poly if isinstance(f, TruncatedSeries) else f
    total = Polynomial.zero(poly.nx, poly.nt)
    for sigma in coset_permutations(n, m):
        term = apply_permutation(poly, sigma)
        total = total + (term if perm_sign(sigma) > 0 else -term)
    if isinstance(f, TruncatedSeries):
        return TruncatedSeries(total, f.x_cap, f.t_cap)
    return total


def vandermonde(n: int, nt: int = 0) -> Polynomial:
    """Product of (x_i - x_j) over i < j; the empty product is 1."""
    out = Polynomial.constant(1, n, nt)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (x_var(i, n, nt) - x_var(j, n, nt))
    return out


def h_polynomial(k: int, c: int, nx: int, nt: int = 0) -> Polynomial:
    """Complete homogeneous polynomial h_k(x_1..x_c) inside Z[x_1..x_nx]."""
    if k == 0:
        return Polynomial.constant(1, nx, nt)
    if c == 0:
        return Polynomial.zero(nx, nt)
    out = {}
    for combo in combinations_with_replacement(range(c), k):
        xe = [0] * nx
        for i in combo:
            xe[i] += 1
        mono = (tuple(xe), (0,) * nt)
        out[mono] = out.get(mono, 0) + 1
    return Polynomial(nx, nt, out)


def _divide_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact division by leading-term reduction in graded lex order."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    lt_g = g.leading_monomial()
    c_g = g.terms[lt_g]
    rem = dict(f.terms)
    quot = {}
    while rem:
        lt_r = max(rem, key=_order_key)
        c_r = rem[lt_r]
        dx = tuple(a - b for a, b in zip(lt_r[0], lt_g[0]))
        dt = tuple(a - b for a, b in zip(lt_r[1], lt_g[1]))
        if any(e < 0 for e in dx) or any(e < 0 for e in dt) or c_r % c_g:
            raise ExactDivisionError("no exact quotient exists")
        qc = c_r // c_g
        quot[(dx, dt)] = quot.get((dx, dt), 0) + qc
        for (xg, tg), cg in g.terms.items():
            mono = (
                tuple(a + b for a, b in zip(dx, xg)),
                tuple(a + b for a, b in zip(dt, tg)),
            )
            c = rem.get(mono, 0) - qc * cg
            if c:
                rem[mono] = c
            else:
                rem.pop(mono, None)
    return Polynomial(f.nx, f.nt, quot)


def divide_exact(f, g: Polynomial):
    """Divide f by g exactly; raises ExactDivisionError if no exact quotient.

    For a TruncatedSeries f, g must be x-homogeneous with no t-variables:
    division then acts per x-degree slice and the x-cap drops by deg g.
    """
    if isinstance(f, TruncatedSeries):
        if g.t_degree() != 0:
            raise ValueError("series division requires a divisor free of t")
        degs = {sum(xe) for xe, _ in g.terms}
        if len(degs) != 1:
            raise ValueError("series division requires an x-homogeneous divisor")
        d = degs.pop()
        lifted = Polynomial(f.poly.nx, f.poly.nt, {(xe, (0,) * f.poly.nt): c for (xe, _), c in g.terms.items()})
        out = Polynomial.zero(f.poly.nx, f.poly.nt)
        for _, piece in f.poly.x_graded_slices().items():
            out = out + _divide_poly(piece, lifted)
        return TruncatedSeries(out, f.x_cap - d, f.t_cap)
    if f.nx != g.nx or f.nt != g.nt:
        raise ValueError("variable blocks differ")
    return _divide_poly(f, g)


class TruncatedSeries:
    """Polynomial plus degree caps; products drop terms above either cap.

    The t-cap is the single source of truncation: results are exact for
    every term within the caps.
    """

    __slots__ = ("poly", "x_cap", "t_cap")

    def __init__(self, poly: Polynomial, x_cap: int, t_cap: int):
        kept = {
            mono: c
            for mono, c in poly.terms.items()
            if sum(mono[0]) <= x_cap and sum(mono[1]) <= t_cap
        }
        self.poly = Polynomial(poly.nx, poly.nt, kept)
        self.x_cap = x_cap
        self.t_cap = t_cap

    @classmethod
    def one(cls, nx: int, nt: int, x_cap: int, t_cap: int) -> "TruncatedSeries":
        return cls(Polynomial.constant(1, nx, nt), x_cap, t_cap)

    def _check_caps(self, other: "TruncatedSeries"):
        if (self.x_cap, self.t_cap) != (other.x_cap, other.t_cap):
            raise ValueError("series caps differ")

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = TruncatedSeries(other, self.x_cap, self.t_cap)
        self._check_caps(other)
        return TruncatedSeries(self.poly + other.poly, self.x_cap, self.t_cap)

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.x_cap, self.t_cap)

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            other = TruncatedSeries(other, self.x_cap, self.t_cap)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.poly * other, self.x_cap, self.t_cap)
        if isinstance(other, Polynomial):
            other = TruncatedSeries(other, self.x_cap, self.t_cap)
        self._check_caps(other)
        return TruncatedSeries(self.poly * other.poly, self.x_cap, self.t_cap)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.x_cap, self.t_cap, self.poly) == (other.x_cap, other.t_cap, other.poly)

    __hash__ = None

    def __bool__(self):
        return bool(self.poly)

    def truncate(self, x_cap: int | None = None, t_cap: int | None = None) -> "TruncatedSeries":
        x_cap = self.x_cap if x_cap is None else min(x_cap, self.x_cap)
        t_cap = self.t_cap if t_cap is None else min(t_cap, self.t_cap)
        return TruncatedSeries(self.poly, x_cap, t_cap)

    def coefficient_of_t(self, texps) -> Polynomial:
        return self.poly.coefficient_of_t(texps)

    def x_slice(self, degree: int) -> Polynomial:
        """Terms of total x-degree exactly `degree`."""
        kept = {m: c for m, c in self.poly.terms.items() if sum(m[0]) == degree}
        return Polynomial(self.poly.nx, self.poly.nt, kept)

    def __repr__(self):
        return f"TruncatedSeries({self.poly!r}, x_cap={self.x_cap}, t_cap={self.t_cap})"


def geometric_factor(i: int, j: int, nx: int, nt: int, x_cap: int, t_cap: int) -> TruncatedSeries:
    """The truncated series x_i * sum_k (t_j x_i)^k = sum_k t_j^k x_i^{k+1}."""
    terms = {}
    for k in range(0, min(t_cap, x_cap - 1) + 1):
        xe = [0] * nx
        te = [0] * nt
        xe[i] = k + 1
        te[j] = k
        terms[(tuple(xe), tuple(te))] = 1
    return TruncatedSeries(Polynomial(nx, nt, terms), x_cap, t_cap)
