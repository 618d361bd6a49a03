"""The quantum elementary abelian group algebra A = Lambda x| G.

A has k-basis {X_1^{a_1}...X_m^{a_m} g_1^{b_1}...g_m^{b_m}} with all exponents
in [0, ell), so dim A = ell^{2m}.  Relations: X_i^ell = 0, g_i^ell = 1, the
X's commute, the g's commute, and g_i X_j = q^{d_ij} X_j g_i with d_ij the
Kronecker delta.  Elements are sparse dicts from basis index to field code.

Basis indexing packs the exponent vector (a_1..a_m, b_1..b_m) in mixed radix
ell with a_1 most significant.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .errors import ContextMismatch, OutOfRange
from .field import FieldCtx, make_field


class AlgebraCtx:
    """Structure constants and Hopf data for A at fixed (ell, m, field)."""

    def __init__(self, field: FieldCtx, m: int):
        if m < 1:
            raise OutOfRange(f"m = {m} must be >= 1")
        self.field = field
        self.ell = field.ell
        self.m = m
        self.dim = self.ell ** (2 * m)
        self.lattice = self.ell**m  # number of X-exponent vectors
        self._radix = tuple(self.ell ** (2 * m - 1 - i) for i in range(2 * m))

    # -- basis indexing ------------------------------------------------------

    def encode(self, a, b) -> int:
        idx = 0
        for e in tuple(a) + tuple(b):
            if not 0 <= e < self.ell:
                raise OutOfRange(f"exponent {e} outside [0, {self.ell})")
            idx = idx * self.ell + e
        return idx

    def decode(self, idx: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        exps = []
        for _ in range(2 * self.m):
            exps.append(idx % self.ell)
            idx //= self.ell
        exps.reverse()
        return tuple(exps[: self.m]), tuple(exps[self.m :])

    def x_exponents(self) -> list[tuple[int, ...]]:
        """All X-exponent vectors in lattice order (lexicographic)."""
        return [tuple(a) for a in product(range(self.ell), repeat=self.m)]

    def characters(self) -> list[tuple[int, ...]]:
        """All characters of G, identified with exponent vectors of q."""
        return self.x_exponents()

    # -- structure constants -------------------------------------------------

    @lru_cache(maxsize=None)
    def mul_basis(self, i: int, j: int):
        """Product of basis monomials: None, or (index, coefficient code)."""
        a, b = self.decode(i)
        c, d = self.decode(j)
        if any(a[t] + c[t] >= self.ell for t in range(self.m)):
            return None
        phase = sum(b[t] * c[t] for t in range(self.m)) % self.ell
        coeff = self.field.q_powers[phase]
        e = tuple(a[t] + c[t] for t in range(self.m))
        f = tuple((b[t] + d[t]) % self.ell for t in range(self.m))
        return self.encode(e, f), coeff

    # -- element constructors ------------------------------------------------

    def zero(self) -> "AlgElem":
        return AlgElem(self, {})

    def one(self) -> "AlgElem":
        return AlgElem(self, {0: 1})

    def monomial(self, a, b, coeff=1) -> "AlgElem":
        c = self.field._coerce(coeff)
        if c == 0:
            return self.zero()
        return AlgElem(self, {self.encode(a, b): c})

    def x(self, i: int) -> "AlgElem":
        a = [0] * self.m
        a[i] = 1
        return self.monomial(a, [0] * self.m)

    def g(self, i: int) -> "AlgElem":
        b = [0] * self.m
        b[i] = 1
        return self.monomial([0] * self.m, b)

    def group_elem(self, b) -> "AlgElem":
        return self.monomial([0] * self.m, b)

    def from_coeffs(self, vec) -> "AlgElem":
        terms = {int(i): int(c) for i, c in enumerate(vec) if c}
        return AlgElem(self, terms)

    # -- distinguished elements ----------------------------------------------

    def h_elem(self, j: int) -> "AlgElem":
        """h_1 = 1 and h_j = g_1 g_2 ... g_{j-1} for j >= 2 (0-indexed arg)."""
        b = [0] * self.m
        for t in range(j):
            b[t] = 1
        return self.group_elem(b)

    def tau(self, lam) -> "AlgElem":
        """tau_lambda = sum_i lambda_i X_i h_i, the cyclic shifted generator."""
        if len(lam) != self.m:
            raise OutOfRange(f"expected {self.m} coordinates, got {len(lam)}")
        out = self.zero()
        for i, c in enumerate(lam):
            out = out + self.x(i) * self.h_elem(i) * self.field._coerce(c)
        return out

    def idempotent(self, chi) -> "AlgElem":
        """Primitive central idempotent of kG for the character g_i -> q^{chi_i}."""
        F = self.field
        scale = F.pow(F.from_int(self.ell), -(self.m))  # wrong if ell^m not unit? p coprime
        terms = {}
        for b in product(range(self.ell), repeat=self.m):
            phase = -sum(chi[t] * b[t] for t in range(self.m)) % self.ell
            terms[self.encode((0,) * self.m, b)] = int(F.mul(scale, F.q_powers[phase]))
        return AlgElem(self, terms)

    # -- q-combinatorics -----------------------------------------------------

    def q_int(self, s: int) -> int:
        """(s)_q = 1 + q + ... + q^{s-1}, as a field code."""
        F = self.field
        out = 0
        for j in range(s):
            out = int(F.add(out, F.q_powers[j % self.ell]))
        return out

    def q_factorial(self, s: int) -> int:
        F = self.field
        out = 1
        for j in range(1, s + 1):
            out = int(F.mul(out, self.q_int(j)))
        return out

    def q_binomial(self, n: int, s: int) -> int:
        """Gaussian binomial [n choose s]_q as a field code (0 <= s <= n < 2*ell)."""
        if not 0 <= s <= n:
            return 0
        # compute via the q-Pascal recurrence to stay exact when (ell)_q = 0
        F = self.field
        row = [1]
        for _ in range(n):
            new = [1]
            for s2 in range(1, len(row)):
                new.append(int(F.add(row[s2 - 1], F.mul(F.q_powers[s2 % self.ell], row[s2]))))
            new.append(1)
            row = new
        return row[s]

    # -- Hopf structure ------------------------------------------------------

    def counit(self, elem: "AlgElem") -> int:
        """epsilon: X_i -> 0, g_i -> 1.  Returns a field code."""
        F = self.field
        out = 0
        for idx, c in elem.terms.items():
            a, _ = self.decode(idx)
            if all(e == 0 for e in a):
                out = int(F.add(out, c))
        return out

    def antipode(self, elem: "AlgElem") -> "AlgElem":
        """S: X_i -> -g_i^{-1} X_i, g_i -> g_i^{-1}, an algebra antihomomorphism."""
        out = self.zero()
        for idx, c in elem.terms.items():
            a, b = self.decode(idx)
            factors = []
            for i in range(self.m):
                gi_inv = self.g(i) ** (self.ell - 1)
                for _ in range(a[i]):
                    factors.append(self.zero() - gi_inv * self.x(i))
                for _ in range(b[i]):
                    factors.append(gi_inv)
            term = self.one() * c
            for f in reversed(factors):
                term = term * f
            out = out + term
        return out

    def coproduct(self, elem: "AlgElem") -> "TensorElem":
        """Delta: X_i -> X_i(x)1 + g_i(x)X_i, g_i -> g_i(x)g_i."""
        out = TensorElem(self, {})
        for idx, c in elem.terms.items():
            a, b = self.decode(idx)
            term = TensorElem(self, {(0, 0): c})
            for i in range(self.m):
                xi, gi = self.x(i), self.g(i)
                dx = TensorElem.pure(xi, self.one()) + TensorElem.pure(gi, xi)
                dg = TensorElem.pure(gi, gi)
                for _ in range(a[i]):
                    term = term * dx
                for _ in range(b[i]):
                    term = term * dg
            out = out + term
        return out


class AlgElem:
    """A sparse element of the algebra: dict basis index -> nonzero field code."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraCtx, terms: dict):
        self.ctx = ctx
        self.terms = {i: c for i, c in terms.items() if c}

    def _check(self, other: "AlgElem"):
        if other.ctx is not self.ctx:
            raise ContextMismatch("elements from different algebra contexts")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        F = self.ctx.field
        terms = dict(self.terms)
        for i, c in other.terms.items():
            terms[i] = int(F.add(terms.get(i, 0), c))
        return AlgElem(self.ctx, terms)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        F = self.ctx.field
        terms = dict(self.terms)
        for i, c in other.terms.items():
            terms[i] = int(F.sub(terms.get(i, 0), c))
        return AlgElem(self.ctx, terms)

    def __mul__(self, other):
        F = self.ctx.field
        if not isinstance(other, AlgElem):
            c = F._coerce(other)
            return AlgElem(self.ctx, {i: int(F.mul(v, c)) for i, v in self.terms.items()})
        self._check(other)
        terms: dict = {}
        for i, ci in self.terms.items():
            for j, cj in other.terms.items():
                hit = self.ctx.mul_basis(i, j)
                if hit is None:
                    continue
                k, coeff = hit
                terms[k] = int(F.add(terms.get(k, 0), F.mul(F.mul(ci, cj), coeff)))
        return AlgElem(self.ctx, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "AlgElem":
        out = self.ctx.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ctx), tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def to_coeffs(self) -> np.ndarray:
        vec = np.zeros(self.ctx.dim, dtype=np.int64)
        for i, c in self.terms.items():
            vec[i] = c
        return vec

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx in sorted(self.terms):
            a, b = self.ctx.decode(idx)
            mono = "".join(
                f"X{i+1}^{e}" if e > 1 else (f"X{i+1}" if e else "")
                for i, e in enumerate(a)
            ) + "".join(
                f"g{i+1}^{e}" if e > 1 else (f"g{i+1}" if e else "")
                for i, e in enumerate(b)
            )
            parts.append(f"{self.terms[idx]}*{mono or '1'}")
        return " + ".join(parts)


class TensorElem:
    """A sparse element of A (x) A, for checking coalgebra identities."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraCtx, terms: dict):
        self.ctx = ctx
        self.terms = {k: c for k, c in terms.items() if c}

    @staticmethod
    def pure(left: AlgElem, right: AlgElem) -> "TensorElem":
        ctx = left.ctx
        F = ctx.field
        terms = {}
        for i, ci in left.terms.items():
            for j, cj in right.terms.items():
                terms[(i, j)] = int(F.mul(ci, cj))
        return TensorElem(ctx, terms)

    def __add__(self, other: "TensorElem") -> "TensorElem":
        F = self.ctx.field
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = int(F.add(terms.get(k, 0), c))
        return TensorElem(self.ctx, terms)

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        F = self.ctx.field
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = int(F.sub(terms.get(k, 0), c))
        return TensorElem(self.ctx, terms)

    def __mul__(self, other: "TensorElem") -> "TensorElem":
        F = self.ctx.field
        ctx = self.ctx
        terms: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                hl = ctx.mul_basis(i1, i2)
                if hl is None:
                    continue
                hr = ctx.mul_basis(j1, j2)
                if hr is None:
                    continue
                k = (hl[0], hr[0])
                coeff = F.mul(F.mul(c1, c2), F.mul(hl[1], hr[1]))
                terms[k] = int(F.add(terms.get(k, 0), coeff))
        return TensorElem(ctx, terms)

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def apply_counit_left(self) -> AlgElem:
        ctx, F = self.ctx, self.ctx.field
        out: dict = {}
        for (i, j), c in self.terms.items():
            a, _ = ctx.decode(i)
            if all(e == 0 for e in a):
                out[j] = int(F.add(out.get(j, 0), c))
        return AlgElem(ctx, out)

    def apply_counit_right(self) -> AlgElem:
        ctx, F = self.ctx, self.ctx.field
        out: dict = {}
        for (i, j), c in self.terms.items():
            a, _ = ctx.decode(j)
            if all(e == 0 for e in a):
                out[i] = int(F.add(out.get(i, 0), c))
        return AlgElem(ctx, out)

    def contract_mul(self) -> AlgElem:
        """Apply multiplication A (x) A -> A."""
        ctx, F = self.ctx, self.ctx.field
        out: dict = {}
        for (i, j), c in self.terms.items():
            hit = ctx.mul_basis(i, j)
            if hit is None:
                continue
            k, coeff = hit
            out[k] = int(F.add(out.get(k, 0), F.mul(c, coeff)))
        return AlgElem(ctx, out)

    def map_left(self, fn) -> "TensorElem":
        """Apply an AlgElem -> AlgElem map to left tensor factors."""
        ctx, F = self.ctx, self.ctx.field
        out: dict = {}
        for (i, j), c in self.terms.items():
            img = fn(AlgElem(ctx, {i: 1}))
            for i2, c2 in img.terms.items():
                k = (i2, j)
                out[k] = int(F.add(out.get(k, 0), F.mul(c, c2)))
        return TensorElem(ctx, out)


@lru_cache(maxsize=None)
def make_algebra(ell: int, m: int, p: int, r: int = 1) -> AlgebraCtx:
    """Construct (and cache) the algebra context for given parameters."""
    return AlgebraCtx(make_field(p, r, ell), m)
