"""Independent brute-force oracles the tests check the library against.

Everything here recomputes results from first principles (list-of-lists
loops, exhaustive enumeration, trial division) without calling the code
paths under test, so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations

from qmauth.gf2 import BitMatrix, BitVector


# --- GF(2) linear algebra ---------------------------------------------------

def naive_mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Triple-loop GF(2) matrix product."""
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            acc = 0
            for l in range(inner):
                acc ^= a[i][l] & b[l][j]
            out[i][j] = acc
    return out


def rowspace(m: BitMatrix) -> set[int]:
    """All 2^rows XOR combinations of the rows, as packed ints."""
    span = {0}
    for r in m.rows:
        span |= {v ^ r for v in span}
    return span


def vectors_of_weight(n: int, w: int):
    for pos in combinations(range(n), w):
        yield BitVector.from_positions(pos, n)


def vectors_up_to_weight(n: int, wmax: int):
    for w in range(wmax + 1):
        yield from vectors_of_weight(n, w)


# --- GF(2^m) ----------------------------------------------------------------

def build_exp_log_tables(m: int, modulus: int) -> tuple[list[int], dict[int, int]]:
    """exp/log tables from repeated multiply-by-z (shift and reduce).

    Valid when z generates the multiplicative group, which holds for
    every modulus in the fixed table.
    """
    order = 1 << m
    exp = [1]
    for _ in range(order - 2):
        v = exp[-1] << 1
        if v >> m & 1:
            v ^= modulus
        exp.append(v)
    assert len(set(exp)) == order - 1, "z does not generate the group"
    log = {v: i for i, v in enumerate(exp)}
    return exp, log


def table_mul(a: int, b: int, exp: list[int], log: dict[int, int]) -> int:
    if a == 0 or b == 0:
        return 0
    return exp[(log[a] + log[b]) % len(exp)]


def naive_poly_mul(a, b, mul) -> tuple:
    """Convolution product; ``mul`` multiplies two field elements."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] ^= mul(x, y)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def naive_poly_divmod(a, b, mul, inv) -> tuple[tuple, tuple]:
    """Long division by repeated leading-term elimination."""
    rem = list(a)
    db = len(b) - 1
    lead_inv = inv(b[-1])
    quot = [0] * max(len(a) - db, 0)
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        q = mul(rem[-1], lead_inv)
        quot[shift] = q
        for j, c in enumerate(b):
            rem[shift + j] ^= mul(q, c)
    while rem and rem[-1] == 0:
        rem.pop()
    while quot and quot[-1] == 0:
        quot.pop()
    return tuple(quot), tuple(rem)


def all_monic_polys(deg: int, order: int):
    """Every monic polynomial of exactly the given degree over GF(order)."""
    def rec(i, coeffs):
        if i == deg:
            yield tuple(coeffs) + (1,)
            return
        for c in range(order):
            coeffs.append(c)
            yield from rec(i + 1, coeffs)
            coeffs.pop()
    yield from rec(0, [])


def trial_division_irreducible(g, order: int, mul, inv) -> bool:
    """Irreducibility by trial division with every lower-degree monic factor."""
    t = len(g) - 1
    for d in range(1, t // 2 + 1):
        for f in all_monic_polys(d, order):
            _, rem = naive_poly_divmod(g, f, mul, inv)
            if not rem:
                return False
    return True


# --- Goppa / protocol -------------------------------------------------------

def naive_syndrome(y_bits: list[int], h_lists: list[list[int]]) -> int:
    """Bit-loop syndrome of a word against a parity check given as lists."""
    out = 0
    for i, row in enumerate(h_lists):
        acc = 0
        for yj, hj in zip(y_bits, row):
            acc ^= yj & hj
        out |= acc << i
    return out


def coset_leader_table(code) -> dict[int, int]:
    """syndrome bits -> unique weight-<=t error bits, by exhaustive enumeration."""
    h_lists = code.H.to_lists()
    n, t = code.n, code.t
    table: dict[int, int] = {}
    for w in range(t + 1):
        for e in vectors_of_weight(n, w):
            syn = naive_syndrome(e.to_bits(), h_lists)
            assert syn not in table or table[syn] == e.bits, "coset leader not unique"
            table.setdefault(syn, e.bits)
    return table


def classical_attack_oracle(priv, sent_error: BitVector, d: BitVector,
                            leaders: dict[int, int], gs_rowspace: set[int]):
    """Predict the decode verdict under a constant-XOR attack.

    Returns (accepted, message_offset_bits or None, reason or None) where
    message_offset_bits is the XOR the accepted message picks up relative
    to the one that was sent (0 means an unchanged accept).
    """
    from qmauth.gf2 import vec_mat

    n = priv.params.n
    total = priv.P_inv.apply(sent_error ^ d)
    h_lists = priv.goppa.H.to_lists()
    syn = naive_syndrome(total.to_bits(), h_lists)
    if syn not in leaders:
        return False, None, "decode-failure"
    e_hat = BitVector(leaders[syn], n)
    delta = vec_mat(vec_mat(total ^ e_hat, priv.goppa.G_rinv), priv.S_inv)
    if delta.bits not in gs_rowspace:
        return False, None, "auth-check-failed"
    return True, delta.prefix(priv.params.k).bits, None
