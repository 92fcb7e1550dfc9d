"""Syndrome-driven pseudo-random generator over rank-metric codes.

The key is a random systematic parity-check matrix H = (I | A) of an [n, k]
code over GF(2^n).  The state is a word y of rank weight at most w.  One step
computes the syndrome s = H * y^T, serializes it to n*(n-k) bits, feeds the
first w*(2n - w) bits back through the rank-w expansion map to obtain the
next state, and emits the remaining bits as output.  Recovering the state
from one output block is a rank syndrome decoding instance.

Two implementations of the step live here on purpose.  ``expand`` and
``syndrome`` spell out the algebra one field element at a time and are the
reference the tests trust; ``GeneratorState`` runs a vectorized engine with
per-key precomputed tables and is the one you want for throughput.  The test
suite holds them bit-for-bit equal.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass

import numpy as np

from .bits import bits_to_bytes, bytes_to_bits
from .field import GF2n
from .ranklin import Word, gv_distance_approx

__all__ = [
    "ParamSet",
    "presets",
    "preset",
    "data_size_bits",
    "SystematicParityCheck",
    "keygen",
    "key_to_bytes",
    "key_from_bytes",
    "write_key_file",
    "read_key_file",
    "expand",
    "syndrome",
    "serialize_syndrome",
    "split_syndrome",
    "GeneratorState",
    "prng_init",
    "KEY_MAGIC",
]


@dataclass(frozen=True)
class ParamSet:
    """Generator parameters: code length n, dimension k, state rank w, and
    the security target lam in bits (which is also the seed length).

    The base field is always GF(2) and the extension degree m equals n, so
    state unfoldings are square.  Construction enforces 0 < k < n and
    0 < w < gv_distance_approx(n, n, k); the strict upper bound keeps the
    output block non-empty.
    """

    n: int
    k: int
    w: int
    lam: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        d_gv = gv_distance_approx(self.n, self.n, self.k)
        if not 0 < self.w < d_gv:
            raise ValueError(
                f"w={self.w} must lie strictly between 0 and the GV radius {d_gv}"
            )
        if self.lam <= 0:
            raise ValueError("security parameter must be positive")

    @property
    def q(self) -> int:
        return 2

    @property
    def m(self) -> int:
        return self.n

    @property
    def seed_bits(self) -> int:
        return self.lam

    @property
    def expand_input_bits(self) -> int:
        """Bits consumed by the expansion map: w*(2n - w)."""
        return self.w * (2 * self.n - self.w)

    @property
    def iv_bits(self) -> int:
        """Bits of the expansion input not covered by the seed."""
        return self.expand_input_bits - self.lam

    @property
    def syndrome_bits(self) -> int:
        return self.n * (self.n - self.k)

    @property
    def block_out_bits(self) -> int:
        """Output bits per generator step."""
        return self.syndrome_bits - self.expand_input_bits

    @property
    def key_bits(self) -> int:
        """Size of the non-identity key block A: k*(n-k) elements of n bits."""
        return self.k * (self.n - self.k) * self.n

    def validate_stream_layout(self) -> None:
        """Reject parameter sets that cannot drive the generator.

        Constructible sets may still be useful for cost estimation alone;
        stream generation additionally needs room for an IV and a positive
        output rate.
        """
        if self.iv_bits <= 0:
            raise ValueError(
                f"seed length {self.lam} leaves no IV room "
                f"(expansion input is {self.expand_input_bits} bits)"
            )
        if self.block_out_bits <= 0:
            raise ValueError("parameter set emits no output bits per step")


# label, n, k, w, lam; the compact rows minimize key-plus-IV data for their
# security level, the fast rows buy throughput with a larger code
_PRESET_ROWS = (
    ("compact-128", 31, 13, 10, 128),
    ("compact-192", 41, 16, 12, 192),
    ("compact-256", 47, 17, 15, 256),
    ("compact-512", 61, 22, 23, 512),
    ("fast-128", 43, 7, 14, 128),
    ("fast-192", 61, 11, 17, 192),
    ("fast-256", 83, 10, 25, 256),
    ("fast-512", 127, 12, 42, 512),
)


def presets() -> list[tuple[str, ParamSet]]:
    """All named parameter sets, in table order."""
    return [(label, ParamSet(n, k, w, lam)) for label, n, k, w, lam in _PRESET_ROWS]


def preset(label: str) -> ParamSet:
    for name, n, k, w, lam in _PRESET_ROWS:
        if name == label:
            return ParamSet(n, k, w, lam)
    raise ValueError(f"unknown preset {label!r}")


def data_size_bits(p: ParamSet) -> int:
    """Total secret-plus-public data to start a stream: key bits + IV bits."""
    return p.key_bits + p.iv_bits


# ---------------------------------------------------------------------------
# key generation and key files

_SM64_GAMMA = 0x9E3779B97F4A7C15
_M64 = (1 << 64) - 1


def _splitmix64(state: int, count: int) -> list[int]:
    """First ``count`` outputs of the splitmix64 sequence from ``state``."""
    out = []
    for _ in range(count):
        state = (state + _SM64_GAMMA) & _M64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        out.append(z ^ (z >> 31))
    return out


def _key_stream_int(p: ParamSet, seed64: int | None, os_entropy: bool) -> int:
    """The key bit stream as one big little-endian integer."""
    nbytes = (p.key_bits + 7) // 8
    if os_entropy:
        return int.from_bytes(os.urandom(nbytes), "little")
    words = _splitmix64(seed64 & _M64, (nbytes + 7) // 8)
    data = b"".join(wd.to_bytes(8, "little") for wd in words)
    return int.from_bytes(data[:nbytes], "little")


@dataclass(frozen=True)
class SystematicParityCheck:
    """Parity-check matrix H = (I | A), stored by its right block A.

    ``a_part[i][j]`` is the GF(2^n) entry of A at row i < n-k, column j < k.
    """

    params: ParamSet
    a_part: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        p = self.params
        if len(self.a_part) != p.n - p.k:
            raise ValueError("wrong number of key rows")
        top = 1 << p.n
        for row in self.a_part:
            if len(row) != p.k:
                raise ValueError("wrong number of key columns")
            for e in row:
                if not 0 <= e < top:
                    raise ValueError("key element out of field range")


def keygen(
    p: ParamSet, seed64: int | None = None, *, os_entropy: bool = False
) -> SystematicParityCheck:
    """Draw the k*(n-k) field elements of a systematic parity check.

    Exactly one source must be chosen: ``seed64`` runs a splitmix64 stream
    for reproducible keys, ``os_entropy`` pulls from ``os.urandom``.  Bits
    fill A row by row, each element least-significant coefficient first.
    """
    if (seed64 is None) == (not os_entropy):
        raise ValueError("pass exactly one of seed64 or os_entropy")
    big = _key_stream_int(p, seed64, os_entropy)
    mask = (1 << p.n) - 1
    nk, k, n = p.n - p.k, p.k, p.n
    a_part = tuple(
        tuple((big >> ((i * k + j) * n)) & mask for j in range(k)) for i in range(nk)
    )
    return SystematicParityCheck(p, a_part)


KEY_MAGIC = b"RQP1"


def key_to_bytes(h: SystematicParityCheck) -> bytes:
    """Serialize: magic, four u32 LE header fields, then the A bit stream."""
    p = h.params
    header = KEY_MAGIC + struct.pack("<IIII", p.n, p.k, p.w, p.lam)
    big = 0
    for i, row in enumerate(h.a_part):
        for j, e in enumerate(row):
            big |= e << ((i * p.k + j) * p.n)
    return header + big.to_bytes((p.key_bits + 7) // 8, "little")


def key_from_bytes(data: bytes) -> SystematicParityCheck:
    """Parse and validate a serialized key; strict about length and padding."""
    if len(data) < 20 or data[:4] != KEY_MAGIC:
        raise ValueError("not a key file (bad magic)")
    n, k, w, lam = struct.unpack("<IIII", data[4:20])
    p = ParamSet(n, k, w, lam)
    body = data[20:]
    if len(body) != (p.key_bits + 7) // 8:
        raise ValueError("key file length does not match its header")
    big = int.from_bytes(body, "little")
    if big >> p.key_bits:
        raise ValueError("nonzero padding bits in key file")
    mask = (1 << n) - 1
    nk = n - k
    a_part = tuple(
        tuple((big >> ((i * k + j) * n)) & mask for j in range(k)) for i in range(nk)
    )
    return SystematicParityCheck(p, a_part)


def write_key_file(path: str, h: SystematicParityCheck) -> None:
    with open(path, "wb") as f:
        f.write(key_to_bytes(h))


def read_key_file(path: str) -> SystematicParityCheck:
    with open(path, "rb") as f:
        return key_from_bytes(f.read())


# ---------------------------------------------------------------------------
# reference step: expansion and syndrome, one field element at a time

def expand(input_bits, p: ParamSet) -> Word:
    """Expand w*(2n - w) bits into a word of rank weight at most w.

    The bits fill an n x w matrix A column by column, then a w x (n - w)
    matrix C row by row.  With B = (I_w | C), the product M = A * B over
    GF(2) is the unfolding of the result, so its column space sits inside
    the column space of A and the rank cannot exceed w.
    """
    bits = np.asarray(input_bits, dtype=np.uint8)
    if bits.shape != (p.expand_input_bits,):
        raise ValueError(
            f"expansion input must be exactly {p.expand_input_bits} bits"
        )
    n, w = p.n, p.w
    a_rows = [0] * n
    for j in range(w):
        for r in range(n):
            a_rows[r] |= int(bits[j * n + r]) << j
    b_rows = []
    for j in range(w):
        c_row = 0
        for c in range(n - w):
            c_row |= int(bits[w * n + j * (n - w) + c]) << c
        b_rows.append((1 << j) | (c_row << w))
    m_rows = []
    for r in range(n):
        acc = 0
        sel = a_rows[r]
        j = 0
        while sel:
            if sel & 1:
                acc ^= b_rows[j]
            sel >>= 1
            j += 1
        m_rows.append(acc)
    elems = []
    for i in range(n):
        e = 0
        for r in range(n):
            e |= ((m_rows[r] >> i) & 1) << r
        elems.append(e)
    return Word(tuple(elems), n)


def syndrome(h: SystematicParityCheck, y: Word) -> tuple[int, ...]:
    """s = H * y^T over GF(2^n) with H = (I | A).

    Coordinate i is y_i + sum_j A[i][j] * y_{n-k+j}.
    """
    p = h.params
    if y.n != p.n or y.m != p.n:
        raise ValueError("word shape does not match the parameter set")
    gf = GF2n(p.n)
    nk = p.n - p.k
    out = []
    for i in range(nk):
        acc = y.elems[i]
        row = h.a_part[i]
        for j in range(p.k):
            acc ^= gf.mul(row[j], y.elems[nk + j])
        out.append(acc)
    return tuple(out)


def serialize_syndrome(s: tuple[int, ...], p: ParamSet) -> np.ndarray:
    """Syndrome coordinates to bits: element index ascending, low bit first."""
    big = 0
    for i, e in enumerate(s):
        big |= e << (i * p.n)
    nbits = p.n * len(s)
    return bytes_to_bits(big.to_bytes((nbits + 7) // 8, "little"), nbits)


def split_syndrome(bits: np.ndarray, p: ParamSet):
    """Split serialized syndrome bits into (feedback, output)."""
    if bits.shape != (p.syndrome_bits,):
        raise ValueError(f"syndrome must serialize to {p.syndrome_bits} bits")
    cut = p.expand_input_bits
    return bits[:cut], bits[cut:]


# ---------------------------------------------------------------------------
# vectorized engine

class _BlockEngine:
    """Per-key tables for the generator step, operating on packed uint64 rows.

    The state is kept as the transposed unfolding MT, an n x n uint8 array
    whose row i holds the coefficients of y_i.  The syndrome's A-part
    contribution is a XOR over precomputed 64-bit-packed rows, one per
    (state bit, key column) pair; the identity part is a plain XOR with the
    leading state rows.  Expansion is a small uint8 matrix product.
    """

    def __init__(self, h: SystematicParityCheck):
        p = h.params
        self.p = p
        n, k, w = p.n, p.k, p.w
        nk = n - k
        self.s_bits = p.syndrome_bits
        self.s1_bits = p.expand_input_bits
        gf = GF2n(n)
        row_bytes = (self.s_bits + 7) // 8
        row_words = (row_bytes + 7) // 8
        # table row for state bit (j, c): bits of a_part[i][j] * x^c laid out
        # at syndrome position i*n + ..., for all rows i at once
        table = np.zeros((k * n, row_words * 8), dtype=np.uint8)
        for j in range(k):
            col = [h.a_part[i][j] for i in range(nk)]
            for c in range(n):
                big = 0
                for i in range(nk):
                    big |= col[i] << (i * n)
                table[j * n + c, :row_bytes] = np.frombuffer(
                    big.to_bytes(row_bytes, "little"), dtype=np.uint8
                )
                col = [gf.mulx(v) for v in col]
        self.table = np.ascontiguousarray(table).view(np.uint64)
        self.row_words = row_words
        self.nk = nk

    def init_state(self, s1_bits: np.ndarray) -> np.ndarray:
        """Expansion input bits to the transposed unfolding MT."""
        p = self.p
        n, w = p.n, p.w
        at = s1_bits[: w * n].reshape(w, n)
        c = s1_bits[w * n :].reshape(w, n - w)
        act = (c.T.astype(np.uint16) @ at).astype(np.uint8) & 1
        return np.ascontiguousarray(np.vstack([at, act]))

    def step(self, mt: np.ndarray):
        """One generator step: returns (next MT, output bits)."""
        v = mt[self.nk :].ravel()
        idx = np.nonzero(v)[0]
        if len(idx):
            acc = np.bitwise_xor.reduce(self.table[idx], axis=0)
        else:
            acc = np.zeros(self.row_words, dtype=np.uint64)
        s = np.unpackbits(acc.view(np.uint8), count=self.s_bits, bitorder="little")
        s ^= mt[: self.nk].ravel()
        return self.init_state(s[: self.s1_bits]), s[self.s1_bits :]


class GeneratorState:
    """Evolving generator state plus the emitted-bit cursor.

    Build one with :func:`prng_init`.  ``next_block`` advances the word one
    step and returns that step's raw output bits; ``generate`` buffers blocks
    into the byte stream and is resumable at any byte boundary.
    """

    def __init__(self, engine: _BlockEngine, mt: np.ndarray):
        self._engine = engine
        self._mt = mt
        self._chunks: list[np.ndarray] = []
        self._buffered = 0

    @property
    def params(self) -> ParamSet:
        return self._engine.p

    @property
    def y(self) -> Word:
        """The current state word."""
        n = self._engine.p.n
        elems = tuple(
            int.from_bytes(bits_to_bytes(row), "little") for row in self._mt
        )
        return Word(elems, n)

    def clone(self) -> "GeneratorState":
        dup = GeneratorState(self._engine, self._mt.copy())
        dup._chunks = [c.copy() for c in self._chunks]
        dup._buffered = self._buffered
        return dup

    def next_block(self) -> np.ndarray:
        """Advance one step; returns the block_out_bits output bits."""
        self._mt, out = self._engine.step(self._mt)
        return out

    def generate(self, nbytes: int) -> bytes:
        """The next ``nbytes`` bytes of the stream (LSB-first bit packing)."""
        if nbytes < 0:
            raise ValueError("nbytes must be non-negative")
        need = 8 * nbytes
        while self._buffered < need:
            block = self.next_block()
            self._chunks.append(block)
            self._buffered += len(block)
        bits = np.concatenate(self._chunks) if self._chunks else np.zeros(0, np.uint8)
        out, rest = bits[:need], bits[need:]
        self._chunks = [rest]
        self._buffered = len(rest)
        return bits_to_bytes(out)


def prng_init(seed_bits, iv_bits, h: SystematicParityCheck) -> GeneratorState:
    """Start a stream: the first state is expand(seed || iv).

    ``seed_bits`` must hold exactly lam bits and ``iv_bits`` the parameter
    set's iv_bits.  The all-zero seed and IV give the all-zero fixed point;
    rejecting that input is left to callers that control provisioning.
    """
    p = h.params
    p.validate_stream_layout()
    seed = np.asarray(seed_bits, dtype=np.uint8)
    iv = np.asarray(iv_bits, dtype=np.uint8)
    if seed.shape != (p.seed_bits,):
        raise ValueError(f"seed must be exactly {p.seed_bits} bits")
    if iv.shape != (p.iv_bits,):
        raise ValueError(f"iv must be exactly {p.iv_bits} bits")
    engine = _BlockEngine(h)
    mt = engine.init_state(np.concatenate([seed, iv]))
    return GeneratorState(engine, mt)
