"""Exact arithmetic in F_p and F_{p^r}, with a canonical primitive root of unity.

Elements are stored as integer codes in ``[0, p^r)``: the code of an element
with coefficient vector (c_0, ..., c_{r-1}) (constant term first) is
``sum c_i * p^i``.  All operations accept plain ints or numpy arrays of codes
and are exact; nothing here ever touches floating point except the BLAS
matmul fast path, which is used only when products are exactly representable.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import CharDividesEll, NonPrimeModulus, NoRootOfUnity

# Largest extension-field order for which dense op tables are built.
_MAX_TABLE_ORDER = 4096


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, lowest degree first)


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    lb_inv = pow(lb, p - 2, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = (c * lb_inv) % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_is_irreducible(f: list[int], p: int) -> bool:
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if len(_poly_mod(f, g, p)) == 1 and _poly_mod(f, g, p) == [0]:
                return False
    return True


def _find_modulus(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over F_p."""
    if r == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=r):
        f = list(tail) + [1]
        if f[0] != 0 and _poly_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldElem:
    """A single element of a FieldCtx; thin wrapper over an integer code."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: "FieldCtx", code: int):
        self.ctx = ctx
        self.code = int(code)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.code_to_coeffs(self.code)

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.code, self.ctx._coerce(other)))

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.code, self.ctx._coerce(other)))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.code, self.ctx._coerce(other)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __truediv__(self, other):
        return FieldElem(
            self.ctx, self.ctx.mul(self.code, self.ctx.inv(self.ctx._coerce(other)))
        )

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.code, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx is other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        if self.ctx.r == 1:
            return f"F{self.ctx.p}({self.code})"
        return f"F{self.ctx.p}^{self.ctx.r}{self.coeffs}"


class FieldCtx:
    """The coefficient field F_{p^r} with a distinguished primitive ell-th root q.

    Immutable after construction; all operations are pure and safe to share
    across threads.
    """

    def __init__(self, p: int, r: int, ell: int):
        if not _is_prime(p):
            raise NonPrimeModulus(f"p = {p} is not prime")
        if r < 1:
            raise NoRootOfUnity(f"extension degree r = {r} must be >= 1")
        if ell < 2:
            raise NoRootOfUnity(f"ell = {ell} must be >= 2")
        if ell % p == 0:
            raise CharDividesEll(f"characteristic {p} divides ell = {ell}")
        self.p = p
        self.r = r
        self.ell = ell
        self.order = p**r
        if (self.order - 1) % ell != 0:
            raise NoRootOfUnity(f"ell = {ell} does not divide p^r - 1 = {self.order - 1}")
        self.modulus_poly = _find_modulus(p, r)
        if r > 1:
            if self.order > _MAX_TABLE_ORDER:
                raise NoRootOfUnity(
                    f"extension field of order {self.order} exceeds supported table size"
                )
            self._build_tables()
        else:
            self._inv_table = np.zeros(p, dtype=np.int64)
            for a in range(1, p):
                self._inv_table[a] = pow(a, p - 2, p)
        self.q = FieldElem(self, self._find_q())
        # powers of q, q^0 .. q^(ell-1), as codes
        self.q_powers = tuple(self.pow(self.q.code, j) for j in range(ell))

    # -- element encoding ---------------------------------------------------

    def code_to_coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def coeffs_to_code(self, coeffs) -> int:
        if len(coeffs) > self.r:
            if any(c for c in coeffs[self.r :]):
                raise ValueError("coefficient vector longer than extension degree")
            coeffs = coeffs[: self.r]
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (int(c) % self.p)
        return code

    def from_int(self, n: int) -> int:
        """Code of the image of the integer n under the prime-field embedding."""
        return n % self.p

    def elem(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.ctx is not self:
                raise ValueError("element from a different field context")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElem(self, self.coeffs_to_code(value))
        return FieldElem(self, self.from_int(int(value)))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            return other.code
        return self.from_int(int(other))

    # -- table construction (r > 1) -----------------------------------------

    def _mul_codes(self, a: int, b: int) -> int:
        ca, cb = self.code_to_coeffs(a), self.code_to_coeffs(b)
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        prod = _poly_mod(prod, list(self.modulus_poly), self.p)
        prod += [0] * (self.r - len(prod))
        return self.coeffs_to_code(prod)

    def _build_tables(self):
        n, p, r = self.order, self.p, self.r
        codes = np.arange(n, dtype=np.int64)
        digits = np.zeros((n, r), dtype=np.int64)
        rest = codes.copy()
        for i in range(r):
            digits[:, i] = rest % p
            rest //= p
        # addition/subtraction: digitwise mod p
        dsum = (digits[:, None, :] + digits[None, :, :]) % p
        self._add_table = self._digits_to_codes(dsum)
        ddiff = (digits[:, None, :] - digits[None, :, :]) % p
        self._sub_table = self._digits_to_codes(ddiff)
        mul = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(a, n):
                c = self._mul_codes(a, b)
                mul[a, b] = c
                mul[b, a] = c
        self._mul_table = mul
        inv = np.zeros(n, dtype=np.int64)
        for a in range(1, n):
            inv[a] = self.pow(a, n - 2)
        self._inv_table = inv

    def _digits_to_codes(self, digits: np.ndarray) -> np.ndarray:
        code = np.zeros(digits.shape[:-1], dtype=np.int64)
        for i in range(self.r - 1, -1, -1):
            code = code * self.p + digits[..., i]
        return code

    # -- vectorized arithmetic on codes -------------------------------------

    def add(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        return self._add_table[a, b]

    def sub(self, a, b):
        if self.r == 1:
            return (a - b) % self.p
        return self._sub_table[a, b]

    def neg(self, a):
        if self.r == 1:
            return (-a) % self.p
        return self._sub_table[0, a]

    def mul(self, a, b):
        if self.r == 1:
            return (a * b) % self.p
        return self._mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero field element")
        return self._inv_table[a]

    def pow(self, a, e: int):
        a = int(a)
        if e < 0:
            a = int(self.inv(a))
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            e >>= 1
        return result

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Exact matrix product of two code matrices."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.ndim == 1:
            A = A[None, :]
            squeeze = 0
        elif B.ndim == 1:
            B = B[:, None]
            squeeze = 1
        else:
            squeeze = None
        if A.shape[-1] != B.shape[0]:
            raise ValueError(f"matmul shape mismatch {A.shape} x {B.shape}")
        if self.r == 1:
            inner = A.shape[-1]
            if inner == 0:
                C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
            elif inner * (self.p - 1) ** 2 <= 2**52:
                C = (A.astype(np.float64) @ B.astype(np.float64))
                C = np.rint(C).astype(np.int64) % self.p
            else:
                C = (A @ B) % self.p
        else:
            C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
            for k in range(A.shape[1]):
                C = self._add_table[C, self._mul_table[A[:, k][:, None], B[k, :][None, :]]]
        if squeeze == 0:
            return C[0]
        if squeeze == 1:
            return C[:, 0]
        return C

    # -- canonical root of unity --------------------------------------------

    def _mult_order_is(self, code: int, ell: int) -> bool:
        if code == 0 or self.pow(code, ell) != 1:
            return False
        return all(self.pow(code, ell // f) != 1 for f in _prime_factors(ell))

    def _find_q(self) -> int:
        # minimal canonical encoding: lexicographic on the coefficient vector
        candidates = sorted(range(self.order), key=self.code_to_coeffs)
        for code in candidates:
            if self._mult_order_is(code, self.ell):
                return code
        raise NoRootOfUnity(f"no element of order {self.ell} found")  # unreachable

    def __repr__(self):
        return f"FieldCtx(p={self.p}, r={self.r}, ell={self.ell}, q={self.q.code})"


@lru_cache(maxsize=None)
def make_field(p: int, r: int, ell: int) -> FieldCtx:
    """Construct (and cache) the field F_{p^r} with its canonical q of order ell."""
    return FieldCtx(p, r, ell)
