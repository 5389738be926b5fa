"""Dense GF(2) linear algebra on packed integer bitsets.

A row (or vector) is a Python int with bit j holding coordinate j, so a
row operation is a single XOR no matter how wide the matrix is.  All
values are immutable after construction and safe to share.

Text encoding used by the key files: one line per matrix row, bits packed
LSB-first into bytes, ceil(cols/8) bytes per row, lowercase hex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimError, FormatError, NoSolutionError, RankError, SingularError


@dataclass(frozen=True)
class BitVector:
    """Fixed-length vector over GF(2); bit i of ``bits`` is coordinate i."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise DimError(f"value 0x{self.bits:x} does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, seq: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for b in seq:
            if b:
                bits |= 1 << n
            n += 1
        return cls(bits, n)

    @classmethod
    def from_positions(cls, positions: Iterable[int], n: int) -> "BitVector":
        bits = 0
        for p in positions:
            bits |= 1 << p
        return cls(bits, n)

    def to_bits(self) -> list[int]:
        return [self.bits >> i & 1 for i in range(self.n)]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return self.bits >> i & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_bits())

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise DimError(f"xor of lengths {self.n} and {other.n}")
        return BitVector(self.bits ^ other.bits, self.n)

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.to_bits())

    def prefix(self, k: int) -> "BitVector":
        """First k coordinates."""
        if not 0 <= k <= self.n:
            raise DimError(f"prefix {k} of length-{self.n} vector")
        return BitVector(self.bits & ((1 << k) - 1), k)

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_hex(self) -> str:
        return self.bits.to_bytes((self.n + 7) // 8, "little").hex()

    @classmethod
    def from_hex(cls, text: str, n: int) -> "BitVector":
        try:
            raw = bytes.fromhex(text)
        except ValueError as exc:
            raise FormatError(f"bad hex: {text!r}") from exc
        if len(raw) != (n + 7) // 8:
            raise FormatError(f"expected {(n + 7) // 8} bytes for {n} bits, got {len(raw)}")
        bits = int.from_bytes(raw, "little")
        if bits >> n:
            raise FormatError(f"stray bits beyond position {n} in {text!r}")
        return cls(bits, n)


def zeros(n: int) -> BitVector:
    return BitVector(0, n)


def weight(v: BitVector) -> int:
    """Hamming weight."""
    return v.weight()


@dataclass(frozen=True)
class BitMatrix:
    """Row-major bit matrix; each row is a packed int as in BitVector."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise DimError("negative column count")
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise DimError(f"row 0x{r:x} does not fit in {self.cols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        packed = []
        cols = None
        for row in rows:
            v = BitVector.from_bits(row)
            if cols is None:
                cols = v.n
            elif cols != v.n:
                raise DimError("ragged rows")
            packed.append(v.bits)
        if cols is None:
            raise DimError("matrix needs at least one row; use zero() for empties")
        return cls(tuple(packed), cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, cols: int) -> "BitMatrix":
        return cls((0,) * nrows, cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.rows[i], self.cols)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_bits() for i in range(self.nrows)]

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                out[j] |= 1 << i
                r &= r - 1
        return BitMatrix(tuple(out), self.nrows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def to_hex_lines(self) -> list[str]:
        nbytes = (self.cols + 7) // 8
        return [r.to_bytes(nbytes, "little").hex() for r in self.rows]

    @classmethod
    def from_hex_lines(cls, lines: Iterable[str], cols: int) -> "BitMatrix":
        return cls(tuple(BitVector.from_hex(ln, cols).bits for ln in lines), cols)


def vec_mat(v: BitVector, m: BitMatrix) -> BitVector:
    """Row vector times matrix: v @ m over GF(2)."""
    if v.n != m.nrows:
        raise DimError(f"vec_mat: length {v.n} vs {m.nrows} rows")
    acc = 0
    x = v.bits
    while x:
        j = (x & -x).bit_length() - 1
        acc ^= m.rows[j]
        x &= x - 1
    return BitVector(acc, m.cols)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2) (XOR-accumulate of b's rows)."""
    if a.cols != b.nrows:
        raise DimError(f"mat_mul: {a.nrows}x{a.cols} times {b.nrows}x{b.cols}")
    out = []
    for ra in a.rows:
        acc = 0
        x = ra
        while x:
            j = (x & -x).bit_length() - 1
            acc ^= b.rows[j]
            x &= x - 1
        out.append(acc)
    return BitMatrix(tuple(out), b.cols)


def _rref(rows: list[int], cols: int, aug: list[int]) -> list[int]:
    """Reduce [rows | aug] to reduced row echelon form in place.

    Pivots are searched in ``rows`` only; XORs are mirrored onto ``aug``.
    Returns the pivot column list (its length is the GF(2) rank).
    """
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, m) if rows[i] >> c & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        aug[r], aug[pivot] = aug[pivot], aug[r]
        for i in range(m):
            if i != r and rows[i] >> c & 1:
                rows[i] ^= rows[r]
                aug[i] ^= aug[r]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def rank(m: BitMatrix) -> int:
    """GF(2) rank via row echelon form."""
    rows = list(m.rows)
    return len(_rref(rows, m.cols, [0] * len(rows)))


def invert(m: BitMatrix) -> BitMatrix:
    """Inverse of a square matrix by Gauss-Jordan elimination."""
    n = m.nrows
    if m.cols != n:
        raise DimError(f"invert: {n}x{m.cols} is not square")
    rows = list(m.rows)
    aug = [1 << i for i in range(n)]
    if len(_rref(rows, n, aug)) != n:
        raise SingularError(f"{n}x{n} matrix is singular")
    return BitMatrix(tuple(aug), n)


def right_inverse(m: BitMatrix) -> BitMatrix:
    """Right inverse R with m @ R = I, for a full-row-rank matrix.

    Among all solutions the pivot-column one is chosen (free variables
    zero), which makes the result deterministic.
    """
    rows = list(m.rows)
    aug = [1 << i for i in range(m.nrows)]
    pivots = _rref(rows, m.cols, aug)
    if len(pivots) != m.nrows:
        raise RankError(f"right_inverse: rank {len(pivots)} < {m.nrows} rows")
    out = [0] * m.cols
    for j, p in enumerate(pivots):
        out[p] = aug[j]
    return BitMatrix(tuple(out), m.nrows)


def solve(m: BitMatrix, b: BitVector) -> BitVector:
    """One solution x of m @ x = b (column convention), free variables zero."""
    if b.n != m.nrows:
        raise DimError(f"solve: rhs length {b.n} vs {m.nrows} rows")
    rows = list(m.rows)
    aug = [1 << i for i in range(m.nrows)]
    pivots = _rref(rows, m.cols, aug)
    xbits = 0
    for j, p in enumerate(pivots):
        if (aug[j] & b.bits).bit_count() & 1:
            xbits |= 1 << p
    for i in range(len(pivots), m.nrows):
        if (aug[i] & b.bits).bit_count() & 1:
            raise NoSolutionError("inconsistent system")
    return BitVector(xbits, m.cols)


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis of the right nullspace {x : m @ x = 0}, one basis vector per row.

    Built from the reduced echelon form with free columns in ascending
    order, so the basis is deterministic for a given input.
    """
    rows = list(m.rows)
    pivots = _rref(rows, m.cols, [0] * len(rows))
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for j, p in enumerate(pivots):
            if rows[j] >> f & 1:
                bits |= 1 << p
        basis.append(bits)
    return BitMatrix(tuple(basis), m.cols)


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1; position i maps to image[i]."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise DimError("image is not a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def apply(self, v: BitVector) -> BitVector:
        """Permute coordinates: out[image[i]] = v[i]."""
        if v.n != self.n:
            raise DimError(f"permutation size {self.n} vs vector length {v.n}")
        bits = 0
        x = v.bits
        while x:
            i = (x & -x).bit_length() - 1
            bits |= 1 << self.image[i]
            x &= x - 1
        return BitVector(bits, self.n)

    def apply_cols(self, m: BitMatrix) -> BitMatrix:
        """Permute the columns of m (equivalent to m times the permutation matrix)."""
        if m.cols != self.n:
            raise DimError(f"permutation size {self.n} vs {m.cols} columns")
        return BitMatrix(tuple(self.apply(m.row(i)).bits for i in range(m.nrows)), m.cols)

    def to_matrix(self) -> BitMatrix:
        """Permutation matrix M with v @ M = apply(v)."""
        return BitMatrix(tuple(1 << j for j in self.image), self.n)


def random_invertible(n: int, rng: random.Random) -> BitMatrix:
    """Uniformly random invertible n x n matrix by rejection sampling."""
    if n < 1:
        raise DimError("need n >= 1")
    while True:
        m = BitMatrix(tuple(rng.getrandbits(n) for _ in range(n)), n)
        if rank(m) == n:
            return m


def random_permutation(n: int, rng: random.Random) -> Permutation:
    """Uniform permutation of 0..n-1 via Fisher-Yates."""
    if n < 1:
        raise DimError("need n >= 1")
    image = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.randrange(i + 1)
        image[i], image[j] = image[j], image[i]
    return Permutation(tuple(image))
