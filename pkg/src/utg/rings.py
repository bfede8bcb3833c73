"""Finite quotient rings of Z, F_p[x], and Z[i], with exact prime-ideal factorization.

Ring elements are kept as canonical residues (plain ints for Z/n, coefficient
tuples for polynomial quotients, integer pairs for Gaussian quotients) and
wrapped in RingElement for arithmetic through operators.  All factorization is
exact trial division; ring orders are capped so that element enumeration stays
cheap.
"""

import os
import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    IndexOutOfRange,
    MixedRings,
    OrderCapExceeded,
    ParseError,
    TrivialQuotient,
    UnsupportedRing,
)

DEFAULT_MAX_ORDER = 65536


class Family(Enum):
    INTEGER_MOD = "IntegerMod"
    POLY_MOD = "PolyMod"
    GAUSSIAN_MOD = "GaussianMod"


@dataclass(frozen=True)
class RingSpec:
    """Validated description of a quotient ring: family plus family-specific modulus.

    modulus is n for Z/n, (p, coeffs) for GF(p)[x]/(f) with coeffs reduced mod p
    and stored low-to-high, and (a, b) for Zi/(a+bi).
    """

    family: Family
    modulus: object

    def text(self) -> str:
        """Canonical spec string that parses back to an equal spec."""
        if self.family is Family.INTEGER_MOD:
            return f"Z/{self.modulus}"
        if self.family is Family.POLY_MOD:
            p, coeffs = self.modulus
            return f"GF({p})[x]/({poly_str(coeffs)})"
        a, b = self.modulus
        return f"Zi/({gauss_str((a, b))})"


@dataclass(frozen=True)
class PrimeFactor:
    """One prime-power divisor P^exponent of the modulus ideal.

    generator is a canonical base-ring value: a prime integer, a monic
    irreducible polynomial, or a Gaussian prime in canonical associate form.
    """

    generator: object
    exponent: int
    residue_index: int
    residue_char: int


# ---------------------------------------------------------------------------
# integer helpers


def factor_int(n: int) -> list[tuple[int, int]]:
    """Factor n >= 1 by trial division, returning sorted (prime, exponent) pairs."""
    assert n >= 1
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over F_p: tuples of coefficients, low degree first, no trailing zeros


def poly_trim(c):
    c = tuple(c)
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def poly_deg(a) -> int:
    return len(a) - 1


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return poly_trim((((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p) for i in range(n))


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    return poly_trim((((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p) for i in range(n))


def poly_neg(a, p):
    return tuple((-c) % p for c in a)


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return poly_trim(out)


def poly_divmod(a, b, p):
    """Divide a by b (b monic) over F_p, returning (quotient, remainder)."""
    assert b and b[-1] == 1, "divisor must be monic"
    r = [c % p for c in a]
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), poly_trim(r)
    q = [0] * (len(r) - db)
    for shift in range(len(r) - db - 1, -1, -1):
        lead = r[shift + db]
        if lead:
            q[shift] = lead
            for i, cb in enumerate(b):
                r[shift + i] = (r[shift + i] - lead * cb) % p
    return poly_trim(q), poly_trim(r)


def poly_mod(a, b, p):
    return poly_divmod(a, b, p)[1]


def poly_monic(a, p):
    """Scale a nonzero polynomial by a unit so the leading coefficient is 1."""
    assert a
    inv = pow(a[-1], p - 2, p)
    return tuple((c * inv) % p for c in a)


def poly_from_int(v: int, p: int):
    c = []
    while v:
        v, r = divmod(v, p)
        c.append(r)
    return tuple(c)


def poly_to_int(a, p: int) -> int:
    v = 0
    for c in reversed(a):
        v = v * p + c
    return v


def poly_str(a) -> str:
    """Render a polynomial as grammar-compatible text, highest degree first."""
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{k}" if c == 1 else f"{c}*x^{k}")
    return "+".join(terms)


def factor_poly(f, p):
    """Factor a monic polynomial over F_p into monic irreducibles by trial division.

    Candidates are tried in ascending (degree, value) order, so every divisor
    found is irreducible.  Returns (irreducible, exponent) pairs.
    """
    assert f and f[-1] == 1
    out = []
    rem = f
    d = 1
    while poly_deg(rem) > 0:
        if 2 * d > poly_deg(rem):
            out.append((rem, 1))
            break
        for v in range(p**d, p ** (d + 1)):
            g = poly_from_int(v, p)
            if g[-1] != 1:
                continue
            e = 0
            while True:
                q, r = poly_divmod(rem, g, p)
                if r:
                    break
                rem = q
                e += 1
            if e:
                out.append((g, e))
        d += 1
    return out


# ---------------------------------------------------------------------------
# Gaussian integers: pairs (re, im)


def gnorm(z) -> int:
    return z[0] * z[0] + z[1] * z[1]


def gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def gneg(a):
    return (-a[0], -a[1])


def gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gconj(a):
    return (a[0], -a[1])


def gdivides(d, x) -> bool:
    """Exact divisibility d | x in Z[i]."""
    n = gnorm(d)
    t = gmul(x, gconj(d))
    return t[0] % n == 0 and t[1] % n == 0


def gdiv_exact(x, d):
    n = gnorm(d)
    t = gmul(x, gconj(d))
    assert t[0] % n == 0 and t[1] % n == 0
    return (t[0] // n, t[1] // n)


def gmod_nearest(a, b):
    """Remainder of a modulo b with norm < norm(b), via nearest-integer quotient."""
    n = gnorm(b)
    t = gmul(a, gconj(b))
    q = ((t[0] + n // 2) // n, (t[1] + n // 2) // n)
    return gsub(a, gmul(q, b))


def ggcd(a, b):
    while b != (0, 0):
        a, b = b, gmod_nearest(a, b)
    return a


def gcanon_assoc(z):
    """The associate of z with re > 0 and im >= 0 (unique for z != 0)."""
    assert z != (0, 0)
    for _ in range(4):
        if z[0] > 0 and z[1] >= 0:
            return z
        z = (-z[1], z[0])  # multiply by i
    raise AssertionError("unreachable")


def gauss_str(z) -> str:
    a, b = z
    if b == 0:
        return str(a)
    i_part = "i" if b == 1 else ("-i" if b == -1 else f"{b}i")
    if a == 0:
        return i_part
    sign = "+" if b > 0 else ""
    return f"{a}{sign}{i_part}"


def sqrt_minus_one_mod(p: int) -> int:
    """A square root of -1 modulo a prime p with p % 4 == 1."""
    assert p % 4 == 1
    for c in range(2, p):
        t = pow(c, (p - 1) // 4, p)
        if (t * t) % p == p - 1:
            return t
    raise AssertionError(f"no sqrt(-1) mod {p}")


def factor_gaussian(z) -> list[tuple[tuple[int, int], int]]:
    """Factor a nonzero non-unit Gaussian integer into canonical Gaussian primes.

    2 ramifies as (1+i)^2, p = 3 mod 4 stays inert, p = 1 mod 4 splits into a
    conjugate pair.  The product of the returned prime powers equals z up to a
    unit in {1, i, -1, -i}.
    """
    assert gnorm(z) >= 2
    out = []
    rem = z
    for p, _ in factor_int(gnorm(z)):
        if p == 2:
            cands = [(1, 1)]
        elif p % 4 == 3:
            cands = [(p, 0)]
        else:
            t = sqrt_minus_one_mod(p)
            pi = gcanon_assoc(ggcd((p, 0), (t, 1)))
            cands = [pi, gcanon_assoc(gconj(pi))]
        for pi in cands:
            e = 0
            while gdivides(pi, rem):
                rem = gdiv_exact(rem, pi)
                e += 1
            if e:
                out.append((pi, e))
    assert gnorm(rem) == 1, "factorization must exhaust z up to a unit"
    return out


# ---------------------------------------------------------------------------
# ring spec parsing

_INT_RE = re.compile(r"^Z/(\d+)$")
_POLY_RING_RE = re.compile(r"^GF\((\d+)\)\[x\]/\((.+)\)$")
_GAUSS_RING_RE = re.compile(r"^Zi/\((.+)\)$")
_POLY_TERM_RE = re.compile(r"^(?:(\d+)\*?)?x(?:\^(\d+))?$|^(\d+)$")
_GAUSS_REAL_RE = re.compile(r"^([+-]?\d+)$")
_GAUSS_IMAG_RE = re.compile(r"^([+-]?\d*)i$")
_GAUSS_FULL_RE = re.compile(r"^([+-]?\d+)([+-]\d*)i$")


def _parse_poly_body(body: str, p: int):
    coeffs = {}
    body = body.replace("-", "+-")
    for raw in body.split("+"):
        if not raw:
            continue
        sign = 1
        if raw.startswith("-"):
            sign, raw = -1, raw[1:]
        m = _POLY_TERM_RE.match(raw)
        if not m:
            raise ParseError(f"bad polynomial term: {raw!r}")
        if m.group(3) is not None:
            k, c = 0, int(m.group(3))
        else:
            c = int(m.group(1)) if m.group(1) else 1
            k = int(m.group(2)) if m.group(2) else 1
        coeffs[k] = coeffs.get(k, 0) + sign * c
    if not coeffs:
        raise ParseError("empty polynomial")
    deg = max(coeffs)
    return poly_trim(tuple(coeffs.get(k, 0) % p for k in range(deg + 1)))


def _imag_value(digits: str) -> int:
    if digits in ("", "+"):
        return 1
    if digits == "-":
        return -1
    return int(digits)


def _parse_gauss_body(body: str):
    m = _GAUSS_REAL_RE.match(body)
    if m:
        return (int(m.group(1)), 0)
    m = _GAUSS_IMAG_RE.match(body)
    if m:
        return (0, _imag_value(m.group(1)))
    m = _GAUSS_FULL_RE.match(body)
    if m:
        return (int(m.group(1)), _imag_value(m.group(2)))
    raise ParseError(f"bad Gaussian integer: {body!r}")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a ring spec string ("Z/6", "GF(2)[x]/(x^2+x+1)", "Zi/(1+2i)")."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty ring spec")

    m = _INT_RE.match(s)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise TrivialQuotient(f"Z/{n} is not a finite ring with at least 2 elements")
        return RingSpec(Family.INTEGER_MOD, n)

    m = _POLY_RING_RE.match(s)
    if m:
        p = int(m.group(1))
        if not is_prime(p):
            raise UnsupportedRing(f"GF({p}) requires a prime; prime powers are not supported")
        coeffs = _parse_poly_body(m.group(2), p)
        if not coeffs:
            raise TrivialQuotient("zero polynomial modulus gives an infinite quotient")
        if poly_deg(coeffs) < 1:
            raise TrivialQuotient("constant polynomial modulus gives a trivial quotient")
        return RingSpec(Family.POLY_MOD, (p, coeffs))

    m = _GAUSS_RING_RE.match(s)
    if m:
        z = _parse_gauss_body(m.group(1))
        if z == (0, 0):
            raise TrivialQuotient("zero Gaussian modulus gives an infinite quotient")
        if gnorm(z) < 2:
            raise TrivialQuotient(f"{gauss_str(z)} is a unit; the quotient is trivial")
        return RingSpec(Family.GAUSSIAN_MOD, z)

    if re.match(r"^(Z/|GF\(|Zi/)", s):
        raise ParseError(f"malformed ring spec: {text!r}")
    raise UnsupportedRing(f"unknown ring family in {text!r}")


# ---------------------------------------------------------------------------
# elements and rings


class RingElement:
    """A canonical residue bound to its ring; supports +, -, *, unary -.

    Integer operands are coerced to repeated sums of the ring's unity.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise MixedRings("elements belong to different rings")
            return other.value
        if isinstance(other, int):
            return self.ring.from_int_raw(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.add_raw(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub_raw(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub_raw(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul_raw(self.value, v))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg_raw(self.value))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring is other.ring and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.value))

    def __repr__(self):
        return f"<{self.ring.spec.text()}: {self}>"

    def __str__(self):
        return self.ring.format_raw(self.value)


class QuotientRing:
    """A finite quotient ring with enumerated canonical residues.

    Immutable after construction; subclasses supply family-specific raw
    arithmetic on canonical residue values.
    """

    def __init__(self, spec: RingSpec, order: int, factors: list[PrimeFactor]):
        self.spec = spec
        self.order = order
        self.factors = sorted(factors, key=lambda f: (f.residue_index, self._gen_sort_key(f.generator)))
        check = 1
        for f in self.factors:
            check *= f.residue_index**f.exponent
        assert check == order, "factorization must multiply back to the ring order"
        self.elements_raw = self._enumerate_raw()
        assert len(self.elements_raw) == order
        self._index = {v: i for i, v in enumerate(self.elements_raw)}
        assert len(self._index) == order

    # family-specific raw operations -------------------------------------
    def add_raw(self, a, b):
        raise NotImplementedError

    def sub_raw(self, a, b):
        raise NotImplementedError

    def mul_raw(self, a, b):
        raise NotImplementedError

    def neg_raw(self, a):
        raise NotImplementedError

    def from_int_raw(self, k: int):
        raise NotImplementedError

    def canon_raw(self, base_value):
        """Reduce an arbitrary base-ring value to its canonical residue."""
        raise NotImplementedError

    def format_raw(self, a) -> str:
        raise NotImplementedError

    def divides_base(self, d, x) -> bool:
        """Exact divisibility d | x between base-ring values."""
        raise NotImplementedError

    def base_mul(self, a, b):
        raise NotImplementedError

    def base_add(self, a, b):
        raise NotImplementedError

    def base_sub(self, a, b):
        raise NotImplementedError

    def base_add_int(self, a, k: int):
        """a + k computed in the base ring (k an integer multiple of unity)."""
        raise NotImplementedError

    def base_one(self):
        raise NotImplementedError

    def _gen_sort_key(self, gen):
        raise NotImplementedError

    def _enumerate_raw(self) -> tuple:
        raise NotImplementedError

    # shared API ----------------------------------------------------------
    def is_unit_raw(self, a) -> bool:
        return all(not self.divides_base(f.generator, a) for f in self.factors)

    def element(self, i: int) -> RingElement:
        return RingElement(self, self.elements_raw[i])

    def elements(self):
        return [RingElement(self, v) for v in self.elements_raw]

    def index_raw(self, value) -> int:
        return self._index[value]

    def index_of(self, a) -> int:
        return self._index[self._raw(a)]

    def make(self, base_value) -> RingElement:
        """Wrap an arbitrary base-ring value as the canonical residue it represents."""
        return RingElement(self, self.canon_raw(base_value))

    def from_int(self, k: int) -> RingElement:
        return RingElement(self, self.from_int_raw(k))

    @property
    def zero(self) -> RingElement:
        return self.from_int(0)

    @property
    def one(self) -> RingElement:
        return self.from_int(1)

    def _raw(self, a):
        if isinstance(a, RingElement):
            if a.ring is not self:
                raise MixedRings("element belongs to a different ring")
            return a.value
        if a in self._index:
            return a
        return self.canon_raw(a)

    def add(self, a, b) -> RingElement:
        return RingElement(self, self.add_raw(self._raw(a), self._raw(b)))

    def sub(self, a, b) -> RingElement:
        return RingElement(self, self.sub_raw(self._raw(a), self._raw(b)))

    def mul(self, a, b) -> RingElement:
        return RingElement(self, self.mul_raw(self._raw(a), self._raw(b)))

    def neg(self, a) -> RingElement:
        return RingElement(self, self.neg_raw(self._raw(a)))

    def is_unit(self, a) -> bool:
        return self.is_unit_raw(self._raw(a))

    def in_prime(self, factor_index: int, a) -> bool:
        """Membership of a residue in the factor_index-th prime divisor."""
        if not 0 <= factor_index < len(self.factors):
            raise IndexOutOfRange(f"factor index {factor_index} out of range")
        return self.divides_base(self.factors[factor_index].generator, self._raw(a))

    def unit_inverse_raw(self, a):
        """Inverse of a unit residue, via the unit-group order."""
        assert self.is_unit_raw(a)
        phi = 1
        for f in self.factors:
            phi *= f.residue_index ** (f.exponent - 1) * (f.residue_index - 1)
        out = self.from_int_raw(1)
        base = a
        e = phi - 1
        while e:
            if e & 1:
                out = self.mul_raw(out, base)
            base = self.mul_raw(base, base)
            e >>= 1
        return out

    def __repr__(self):
        return f"QuotientRing({self.spec.text()}, order={self.order})"


class IntegerQuotientRing(QuotientRing):
    def __init__(self, spec: RingSpec):
        n = spec.modulus
        self.n = n
        factors = [PrimeFactor(p, e, p, p) for p, e in factor_int(n)]
        super().__init__(spec, n, factors)

    def add_raw(self, a, b):
        return (a + b) % self.n

    def sub_raw(self, a, b):
        return (a - b) % self.n

    def mul_raw(self, a, b):
        return (a * b) % self.n

    def neg_raw(self, a):
        return (-a) % self.n

    def from_int_raw(self, k):
        return k % self.n

    def canon_raw(self, v):
        return v % self.n

    def format_raw(self, a):
        return str(a)

    def divides_base(self, d, x):
        return x % d == 0

    def base_mul(self, a, b):
        return a * b

    def base_add(self, a, b):
        return a + b

    def base_sub(self, a, b):
        return a - b

    def base_add_int(self, a, k):
        return a + k

    def base_one(self):
        return 1

    def format_base(self, v):
        return str(v)

    def _gen_sort_key(self, gen):
        return gen

    def _enumerate_raw(self):
        return tuple(range(self.n))


class PolyQuotientRing(QuotientRing):
    def __init__(self, spec: RingSpec):
        p, coeffs = spec.modulus
        self.p = p
        self.f = poly_monic(coeffs, p)
        factors = [
            PrimeFactor(g, e, p ** poly_deg(g), p) for g, e in factor_poly(self.f, p)
        ]
        super().__init__(spec, p ** poly_deg(self.f), factors)

    def add_raw(self, a, b):
        return poly_add(a, b, self.p)

    def sub_raw(self, a, b):
        return poly_sub(a, b, self.p)

    def mul_raw(self, a, b):
        return poly_mod(poly_mul(a, b, self.p), self.f, self.p)

    def neg_raw(self, a):
        return poly_neg(a, self.p)

    def from_int_raw(self, k):
        v = k % self.p
        return (v,) if v else ()

    def canon_raw(self, v):
        if isinstance(v, int):
            return self.from_int_raw(v)
        return poly_mod(poly_trim(c % self.p for c in v), self.f, self.p)

    def format_raw(self, a):
        return poly_str(a)

    def divides_base(self, d, x):
        return not poly_mod(x, d, self.p)

    def base_mul(self, a, b):
        return poly_mul(a, b, self.p)

    def base_add(self, a, b):
        return poly_add(a, b, self.p)

    def base_sub(self, a, b):
        return poly_sub(a, b, self.p)

    def base_add_int(self, a, k):
        return poly_add(a, self.from_int_raw(k), self.p)

    def base_one(self):
        return (1,)

    def format_base(self, v):
        return poly_str(v)

    def _gen_sort_key(self, gen):
        return poly_to_int(gen, self.p)

    def _enumerate_raw(self):
        return tuple(poly_from_int(v, self.p) for v in range(self.order))


class GaussianQuotientRing(QuotientRing):
    def __init__(self, spec: RingSpec):
        self.z = spec.modulus
        self.znorm = gnorm(self.z)
        factors = [
            PrimeFactor(pi, e, gnorm(pi), factor_int(gnorm(pi))[0][0])
            for pi, e in factor_gaussian(self.z)
        ]
        super().__init__(spec, self.znorm, factors)

    def canon_raw(self, w):
        """Unique coset representative: remainder under the nearest-corner quotient.

        Among the four lattice quotients around the exact rational quotient the
        remainder minimizing (norm, -re, -im) is chosen; the candidate set is
        translation-invariant, so the result depends only on the coset.
        """
        if isinstance(w, int):
            w = (w, 0)
        t = gmul(w, gconj(self.z))
        n = self.znorm
        qr0, qi0 = t[0] // n, t[1] // n
        best_key, best = None, None
        for qr in (qr0, qr0 + 1):
            for qi in (qi0, qi0 + 1):
                r = gsub(w, gmul((qr, qi), self.z))
                key = (gnorm(r), -r[0], -r[1])
                if best_key is None or key < best_key:
                    best_key, best = key, r
        return best

    def add_raw(self, a, b):
        return self.canon_raw(gadd(a, b))

    def sub_raw(self, a, b):
        return self.canon_raw(gsub(a, b))

    def mul_raw(self, a, b):
        return self.canon_raw(gmul(a, b))

    def neg_raw(self, a):
        return self.canon_raw(gneg(a))

    def from_int_raw(self, k):
        return self.canon_raw((k, 0))

    def format_raw(self, a):
        return gauss_str(a)

    def divides_base(self, d, x):
        return gdivides(d, x)

    def base_mul(self, a, b):
        return gmul(a, b)

    def base_add(self, a, b):
        return gadd(a, b)

    def base_sub(self, a, b):
        return gsub(a, b)

    def base_add_int(self, a, k):
        return (a[0] + k, a[1])

    def base_one(self):
        return (1, 0)

    def format_base(self, v):
        return gauss_str(v)

    def _gen_sort_key(self, gen):
        return (gnorm(gen),) + gen

    def _enumerate_raw(self):
        # 1 and i generate the additive group, so closure from 0 reaches every coset
        seen = {(0, 0)}
        frontier = [(0, 0)]
        while frontier:
            nxt = []
            for v in frontier:
                for step in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    w = self.canon_raw(gadd(v, step))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return tuple(sorted(seen, key=lambda r: (gnorm(r), -r[0], -r[1])))


def max_order_cap(override: int | None = None) -> int:
    """The ring-order hard cap: explicit override, else UTG_MAX_ORDER, else default."""
    if override is not None:
        return override
    return int(os.environ.get("UTG_MAX_ORDER", DEFAULT_MAX_ORDER))


def build_quotient_ring(spec: RingSpec, max_order: int | None = None) -> QuotientRing:
    """Construct the quotient ring for a validated spec, factoring its modulus."""
    cap = max_order_cap(max_order)
    if spec.family is Family.INTEGER_MOD:
        order = spec.modulus
    elif spec.family is Family.POLY_MOD:
        p, coeffs = spec.modulus
        order = p ** poly_deg(poly_monic(coeffs, p))
    else:
        order = gnorm(spec.modulus)
    if order > cap:
        raise OrderCapExceeded(f"ring order {order} exceeds cap {cap}")

    cls = {
        Family.INTEGER_MOD: IntegerQuotientRing,
        Family.POLY_MOD: PolyQuotientRing,
        Family.GAUSSIAN_MOD: GaussianQuotientRing,
    }[spec.family]
    return cls(spec)


def build_ring(text: str, max_order: int | None = None) -> QuotientRing:
    """Parse a spec string and build its quotient ring."""
    return build_quotient_ring(parse_ring_spec(text), max_order)
