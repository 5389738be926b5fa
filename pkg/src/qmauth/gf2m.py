"""GF(2^m) arithmetic and polynomials over GF(2^m).

Field elements are ints in [0, 2^m); bit i is the coefficient of the
generator's i-th power.  Polynomials are tuples of field elements,
lowest degree first, with no trailing zeros (the zero polynomial is the
empty tuple).

Every operation the Goppa decoder needs lives here: modular inverse,
modular square root, the degree-bounded extended Euclidean split, and
irreducibility testing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import FormatError, NotInvertibleError, ParamError, ZeroInverseError

# One fixed irreducible modulus per extension degree, so field tables and
# serialized keys mean the same thing everywhere.
REDUCTION_POLYS = {
    2: 0b111,      # z^2 + z + 1
    3: 0b1011,     # z^3 + z + 1
    4: 0b10011,    # z^4 + z + 1
    5: 0b100101,   # z^5 + z^2 + 1
    6: 0b1000011,  # z^6 + z + 1
}

Poly = tuple

P_ZERO: Poly = ()
P_ONE: Poly = (1,)
P_X: Poly = (0, 1)


@dataclass(frozen=True)
class FieldParams:
    """Extension degree and reduction polynomial of a GF(2^m) instance."""

    m: int
    modulus: int

    @classmethod
    def for_degree(cls, m: int) -> "FieldParams":
        if m not in REDUCTION_POLYS:
            raise ParamError(f"no fixed modulus for m={m}; supported: {sorted(REDUCTION_POLYS)}")
        return cls(m, REDUCTION_POLYS[m])

    @property
    def order(self) -> int:
        return 1 << self.m


def fe_mul(a: int, b: int, fp: FieldParams) -> int:
    """Carry-less product of a and b reduced by the field modulus."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> fp.m & 1:
            a ^= fp.modulus
    return r


def fe_pow(a: int, e: int, fp: FieldParams) -> int:
    r = 1
    while e:
        if e & 1:
            r = fe_mul(r, a, fp)
        a = fe_mul(a, a, fp)
        e >>= 1
    return r


def fe_inv(a: int, fp: FieldParams) -> int:
    """Multiplicative inverse via a^(2^m - 2)."""
    if a == 0:
        raise ZeroInverseError("0 has no inverse")
    return fe_pow(a, fp.order - 2, fp)


def poly_norm(coeffs) -> Poly:
    """Strip trailing zero coefficients."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_deg(p: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(p) - 1


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return poly_norm(out)


def poly_scale(a: Poly, c: int, fp: FieldParams) -> Poly:
    if c == 0:
        return P_ZERO
    return poly_norm(fe_mul(x, c, fp) for x in a)


def poly_shift(a: Poly, k: int) -> Poly:
    """Multiply by z^k."""
    if not a:
        return P_ZERO
    return (0,) * k + a


def poly_mul(a: Poly, b: Poly, fp: FieldParams) -> Poly:
    if not a or not b:
        return P_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= fe_mul(x, y, fp)
    return poly_norm(out)


def poly_divmod(a: Poly, b: Poly, fp: FieldParams) -> tuple[Poly, Poly]:
    """Quotient and remainder of polynomial long division."""
    a, b = poly_norm(a), poly_norm(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if poly_deg(a) < poly_deg(b):
        return P_ZERO, a
    rem = list(a)
    lead_inv = fe_inv(b[-1], fp)
    db = poly_deg(b)
    quot = [0] * (len(a) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i] == 0:
            continue
        q = fe_mul(rem[i], lead_inv, fp)
        quot[i - db] = q
        for j, c in enumerate(b):
            rem[i - db + j] ^= fe_mul(q, c, fp)
    return poly_norm(quot), poly_norm(rem)


def poly_mod(a: Poly, b: Poly, fp: FieldParams) -> Poly:
    return poly_divmod(a, b, fp)[1]


def poly_mul_mod(a: Poly, b: Poly, g: Poly, fp: FieldParams) -> Poly:
    """(a * b) mod g."""
    return poly_mod(poly_mul(a, b, fp), g, fp)


def poly_eval(p: Poly, x: int, fp: FieldParams) -> int:
    """Evaluate by Horner's rule."""
    acc = 0
    for c in reversed(p):
        acc = fe_mul(acc, x, fp) ^ c
    return acc


def poly_monic(p: Poly, fp: FieldParams) -> Poly:
    if not p or p[-1] == 1:
        return p
    return poly_scale(p, fe_inv(p[-1], fp), fp)


def poly_gcd(a: Poly, b: Poly, fp: FieldParams) -> Poly:
    while b:
        a, b = b, poly_mod(a, b, fp)
    return poly_monic(a, fp)


def poly_inv_mod(f: Poly, g: Poly, fp: FieldParams) -> Poly:
    """Inverse of f modulo g by the extended Euclidean algorithm."""
    f = poly_mod(f, g, fp)
    if not f:
        raise NotInvertibleError("f is 0 mod g")
    r_prev, r_cur = g, f
    s_prev, s_cur = P_ZERO, P_ONE  # invariant: r_i = s_i * f  (mod g)
    while r_cur:
        q, rem = poly_divmod(r_prev, r_cur, fp)
        r_prev, r_cur = r_cur, rem
        s_prev, s_cur = s_cur, poly_add(s_prev, poly_mul(q, s_cur, fp))
    if poly_deg(r_prev) != 0:
        raise NotInvertibleError("f and g are not coprime")
    return poly_mod(poly_scale(s_prev, fe_inv(r_prev[0], fp), fp), g, fp)


def poly_sqrt_mod(f: Poly, g: Poly, fp: FieldParams) -> Poly:
    """Square root of f in GF(2^m)[z]/(g) for irreducible g.

    Squaring is an automorphism of the residue field of size 2^(m*t), so
    the root exists, is unique, and equals f^(2^(m*t-1)): square f
    m*t - 1 times.
    """
    t = poly_deg(g)
    s = poly_mod(f, g, fp)
    for _ in range(fp.m * t - 1):
        s = poly_mul_mod(s, s, g, fp)
    return s


def poly_eea_bounded(a: Poly, b: Poly, stop_deg: int, fp: FieldParams) -> tuple[Poly, Poly]:
    """Extended Euclid on (a, b), stopped at the first remainder of degree <= stop_deg.

    Returns that remainder r together with its coefficient u satisfying
    r = u * b (mod a).  Degenerate b = 0 yields (0, 0).
    """
    if not b:
        return P_ZERO, P_ZERO
    r_prev, r_cur = a, b
    u_prev, u_cur = P_ZERO, P_ONE  # invariant: r_i = u_i * b  (mod a)
    while poly_deg(r_cur) > stop_deg:
        q, rem = poly_divmod(r_prev, r_cur, fp)
        r_prev, r_cur = r_cur, rem
        u_prev, u_cur = u_cur, poly_add(u_prev, poly_mul(q, u_cur, fp))
    return r_cur, u_cur


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


def _frobenius_iterate(base: Poly, g: Poly, fp: FieldParams, times: int) -> Poly:
    s = base
    for _ in range(times):
        s = poly_mul_mod(s, s, g, fp)
    return s


def is_irreducible(g: Poly, fp: FieldParams) -> bool:
    """Rabin's irreducibility test over GF(2^m)."""
    t = poly_deg(g)
    if t < 1:
        return False
    z = poly_mod(P_X, g, fp)
    # z^((2^m)^t) must come back to z ...
    if _frobenius_iterate(z, g, fp, fp.m * t) != z:
        return False
    # ... and z^((2^m)^(t/q)) - z must be coprime to g for each prime q | t.
    for q in _prime_factors(t):
        h = poly_add(_frobenius_iterate(z, g, fp, fp.m * (t // q)), z)
        if not h or poly_deg(poly_gcd(h, g, fp)) != 0:
            return False
    return True


def random_irreducible(t: int, fp: FieldParams, rng: random.Random) -> Poly:
    """Monic irreducible polynomial of degree t, by rejection sampling."""
    if t < 1:
        raise ParamError("degree must be >= 1")
    while True:
        g = poly_norm([rng.randrange(fp.order) for _ in range(t)] + [1])
        if is_irreducible(g, fp):
            return g


def poly_to_text(p: Poly) -> str:
    """Comma-separated coefficient hex values, degree 0 first."""
    return ",".join(format(c, "x") for c in p)


def poly_from_text(text: str) -> Poly:
    text = text.strip()
    if not text:
        return P_ZERO
    try:
        coeffs = [int(part, 16) for part in text.split(",")]
    except ValueError as exc:
        raise FormatError(f"bad polynomial text: {text!r}") from exc
    if coeffs and coeffs[-1] == 0:
        raise FormatError("trailing zero coefficient in polynomial text")
    return tuple(coeffs)
