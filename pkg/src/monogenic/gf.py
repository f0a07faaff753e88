"""Arithmetic in small finite fields F_{p^k}.

An element of F_{p^k} is a coordinate vector over F_p with respect to the
power basis 1, z, ..., z^{k-1} of a fixed monic irreducible modulus.  The
"raw" coordinate encoding used internally is

    k == 1 : a single int in {0, ..., p-1}
    k  > 1 : a tuple of k such ints, little-endian in z

All raw-level arithmetic lives on the context object `FqCtx`; `FqElem` is a
thin value wrapper with operator overloads.  Contexts are immutable after
construction and elements never mutate, so values can be shared freely
between concurrent tasks.

Canonical text form: prime-field elements print as decimal residues,
extension elements as polynomials in z with descending exponents
(`z^2+z+1`), omitting zero terms and unit coefficients.
"""

from __future__ import annotations

import itertools
from typing import Iterator

# Default moduli for the small fields used throughout: fixed, reproducible
# choices (not Conway polynomials; desk scale does not need compatibility
# between extensions).  Little-endian, monic, length k+1.
_DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),        # z^2+z+1
    (2, 3): (1, 1, 0, 1),     # z^3+z+1
    (2, 4): (1, 1, 0, 0, 1),  # z^4+z+1
    (3, 2): (1, 0, 1),        # z^2+1
    (7, 2): (1, 0, 1),        # z^2+1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _fp_poly_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    while len(a) > dm:
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_is_irreducible(m, p) -> bool:
    """Trial factorization: a reducible monic polynomial of degree k has a
    monic factor of degree between 1 and k//2."""
    k = len(m) - 1
    if k < 1 or m[-1] != 1:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        if p ** d > 10 ** 6:
            raise ValueError("modulus too large for trial factorization")
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not _fp_poly_mod(m, g, p):
                return False
    return True


class FqCtx:
    """Context of a finite field F_{p^k}: prime, extension degree, modulus."""

    __slots__ = ("p", "k", "q", "modulus", "gen_label")

    def __init__(self, p: int, k: int = 1, modulus=None, gen_label: str = "z"):
        if not (2 <= p <= 2 ** 16) or not _is_prime(p):
            raise ValueError(f"p must be a prime in [2, 2^16], got {p}")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** k
        if q >= 2 ** 64:
            raise ValueError("field cardinality must fit in 64 bits")
        if modulus is None:
            if k == 1:
                modulus = (0, 1)
            elif (p, k) in _DEFAULT_MODULI:
                modulus = _DEFAULT_MODULI[(p, k)]
            else:
                raise ValueError(f"no default modulus for (p, k) = ({p}, {k})")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if k > 1 and not _fp_is_irreducible(modulus, p):
            raise ValueError("modulus is not irreducible over F_p")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        self.gen_label = gen_label

    # contexts compare by value so fields built twice interoperate
    def __eq__(self, other):
        return (
            isinstance(other, FqCtx)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"F{self.p}"
        return f"F{self.q}=F{self.p}[{self.gen_label}]/({_mod_str(self.modulus, self.gen_label)})"

    # ---- raw-scalar arithmetic -------------------------------------------

    @property
    def rzero(self):
        return 0 if self.k == 1 else (0,) * self.k

    @property
    def rone(self):
        return 1 if self.k == 1 else (1,) + (0,) * (self.k - 1)

    def rgen(self):
        if self.k == 1:
            raise ValueError("prime field has no extension generator")
        return (0, 1) + (0,) * (self.k - 2)

    def rfrom_int(self, n: int):
        n %= self.p
        return n if self.k == 1 else (n,) + (0,) * (self.k - 1)

    def ris_zero(self, a) -> bool:
        return a == 0 if self.k == 1 else not any(a)

    def radd(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def rsub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def rneg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return tuple((-x) % p for x in a)

    def rmul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        prod = _fp_poly_mul(a, b, self.p)
        red = _fp_poly_mod(prod, self.modulus, self.p)
        red += [0] * (self.k - len(red))
        return tuple(red)

    def rpow(self, a, n: int):
        if n < 0:
            return self.rpow(self.rinv(a), -n)
        if self.k == 1:
            return pow(a, n, self.p)
        out = self.rone
        base = a
        while n:
            if n & 1:
                out = self.rmul(out, base)
            base = self.rmul(base, base)
            n >>= 1
        return out

    def rinv(self, a):
        if self.ris_zero(a):
            raise ZeroDivisionError("division by zero in finite field")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.rpow(a, self.q - 2)

    def rdiv(self, a, b):
        return self.rmul(a, self.rinv(b))

    def rfrob(self, a, e: int = 1):
        """a -> a^{p^e}."""
        if e < 0:
            raise ValueError("Frobenius exponent must be non-negative")
        if self.ris_zero(a):
            return a
        # reduce the exponent mod q-1 so huge e stays cheap
        exp = pow(self.p, e, self.q - 1) if self.q > 2 else 1
        return self.rpow(a, exp)

    def rpth_root(self, a):
        """The unique b with b^p = a, namely a^{p^{k-1}}."""
        return self.rfrob(a, self.k - 1)

    # ---- element interface -----------------------------------------------

    def elem(self, v) -> "FqElem":
        if isinstance(v, FqElem):
            if v.ctx != self:
                raise ValueError("element from a different field context")
            return v
        if isinstance(v, int):
            return FqElem(self, self.rfrom_int(v))
        if isinstance(v, tuple):
            if self.k == 1:
                if len(v) != 1:
                    raise ValueError("prime-field raw value must have length 1")
                return FqElem(self, v[0] % self.p)
            if len(v) > self.k:
                raise ValueError("coordinate vector too long")
            vv = tuple(int(c) % self.p for c in v) + (0,) * (self.k - len(v))
            return FqElem(self, vv)
        raise TypeError(f"cannot build field element from {v!r}")

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, self.rzero)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, self.rone)

    @property
    def gen(self) -> "FqElem":
        return FqElem(self, self.rgen())

    def elements(self) -> Iterator["FqElem"]:
        if self.k == 1:
            for v in range(self.p):
                yield FqElem(self, v)
        else:
            for tup in itertools.product(range(self.p), repeat=self.k):
                yield FqElem(self, tup)

    def random_elem(self, rng) -> "FqElem":
        if self.k == 1:
            return FqElem(self, rng.randrange(self.p))
        return FqElem(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def _raw_str(self, a) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = self.gen_label if i == 1 else f"{self.gen_label}^{i}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return "+".join(terms) if terms else "0"


def _mod_str(m, label):
    terms = []
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            if i == 0:
                terms.append(str(m[i]))
            elif i == 1:
                terms.append(label if m[i] == 1 else f"{m[i]}*{label}")
            else:
                terms.append(f"{label}^{i}" if m[i] == 1 else f"{m[i]}*{label}^{i}")
    return "+".join(terms)


class FqElem:
    """A value of F_{p^k} tied to its context."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx: FqCtx, raw):
        self.ctx = ctx
        self.raw = raw

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise ValueError("field context mismatch")
            return other.raw
        if isinstance(other, int):
            return self.ctx.rfrom_int(other)
        return None

    def __add__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.radd(self.raw, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.rsub(self.raw, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.rsub(r, self.raw))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.rmul(self.raw, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.rdiv(self.raw, r))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.rdiv(r, self.raw))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.rneg(self.raw))

    def __pow__(self, n: int):
        return FqElem(self.ctx, self.ctx.rpow(self.raw, n))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.raw == self.ctx.rfrom_int(other)
        return (
            isinstance(other, FqElem)
            and self.ctx == other.ctx
            and self.raw == other.raw
        )

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def __bool__(self):
        return not self.ctx.ris_zero(self.raw)

    def is_zero(self) -> bool:
        return self.ctx.ris_zero(self.raw)

    def frobenius(self, e: int = 1) -> "FqElem":
        return FqElem(self.ctx, self.ctx.rfrob(self.raw, e))

    def pth_root(self) -> "FqElem":
        return FqElem(self.ctx, self.ctx.rpth_root(self.raw))

    def __repr__(self):
        return self.ctx._raw_str(self.raw)


def fq_arith(a: FqElem, b: FqElem, op: str) -> FqElem:
    """Dispatch form of the four field operations (same-context operands)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def fq_frobenius(a: FqElem, e: int) -> FqElem:
    return a.frobenius(e)


def fq_pth_root(a: FqElem) -> FqElem:
    return a.pth_root()
