"""Classical linear codes over a finite field, with exact enumeration.

A code is stored by the reduced row echelon form of its generator
matrix, which is canonical for the row space: two codes are equal
exactly when their ``gen`` attributes are equal.  Codewords and vectors
are tuples of packed field values.  Vectors compare lexicographically
as tuples, which matches ordering by the big-endian packed integer
sum(v[i] * q^(n-1-i)).
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import BudgetExceeded, LengthMismatch, NotACodeword, ZeroCode
from .gf import Field, field_make

DEFAULT_BUDGET = 1 << 22


def weight(v) -> int:
    """Hamming weight."""
    return sum(1 for x in v if x)


class LinearCode:
    """A k-dimensional length-n code over ``field``, held in RREF."""

    __slots__ = ("field", "n", "k", "gen", "pivots", "_words")

    def __init__(self, field: Field, n: int, gen: tuple, pivots: tuple):
        self.field = field
        self.n = n
        self.k = len(gen)
        self.gen = gen
        self.pivots = pivots
        self._words = None

    @property
    def size(self) -> int:
        return self.field.order ** self.k

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.gen == other.gen
        )

    def __hash__(self):
        return hash((self.field, self.n, self.gen))

    def __repr__(self):
        return f"[{self.n},{self.k}] code over {self.field!r}"


def code_make(field: Field, rows) -> LinearCode:
    """Build a code from spanning rows. Rejects empty spans with ZeroCode."""
    rows = [tuple(int(x) for x in r) for r in rows]
    if not rows:
        raise ZeroCode("no generator rows given")
    n = len(rows[0])
    if n == 0:
        raise LengthMismatch("codewords must have positive length")
    for r in rows:
        if len(r) != n:
            raise LengthMismatch("generator rows have differing lengths")
        for x in r:
            if not 0 <= x < field.order:
                raise ValueError(f"entry {x} is not a packed element of {field!r}")
    gen, pivots = linalg.rref(field, rows)
    if not gen:
        raise ZeroCode("generator rows span only the zero vector")
    return LinearCode(field, n, tuple(gen), tuple(pivots))


def zero_code(field: Field, n: int) -> LinearCode:
    """The k = 0 code {0} in F_q^n; only ever produced, never parsed."""
    return LinearCode(field, n, (), ())


def dual(code: LinearCode) -> LinearCode:
    """Dual code under the standard dot product; involutive."""
    if code.k == code.n:
        return zero_code(code.field, code.n)
    if code.k == 0:
        full = [tuple(1 if j == i else 0 for j in range(code.n)) for i in range(code.n)]
        gen, pivots = linalg.rref(code.field, full)
        return LinearCode(code.field, code.n, tuple(gen), tuple(pivots))
    basis = linalg.nullspace(code.field, list(code.gen), code.n)
    gen, pivots = linalg.rref(code.field, basis)
    return LinearCode(code.field, code.n, tuple(gen), tuple(pivots))


def encode(code: LinearCode, message) -> tuple:
    """message . G for a length-k message tuple."""
    if len(message) != code.k:
        raise LengthMismatch(f"message length {len(message)} != dimension {code.k}")
    f = code.field
    word = [0] * code.n
    for m, row in zip(message, code.gen):
        if m:
            for j, g in enumerate(row):
                if g:
                    word[j] = f.add(word[j], f.mul(m, g))
    return tuple(word)


def message_of(code: LinearCode, word) -> tuple:
    """Inverse of encode; raises NotACodeword for vectors outside the code."""
    if len(word) != code.n:
        raise LengthMismatch(f"word length {len(word)} != code length {code.n}")
    msg = tuple(word[j] for j in code.pivots)
    if encode(code, msg) != tuple(word):
        raise NotACodeword(f"{tuple(word)} is not in {code!r}")
    return msg


def contains(code: LinearCode, word) -> bool:
    if len(word) != code.n:
        return False
    if code.k == 0:
        return not any(word)
    return encode(code, tuple(word[j] for j in code.pivots)) == tuple(word)


def iter_codewords(code: LinearCode):
    """All codewords, messages in lexicographic order (zero word first)."""
    q = code.field.order
    for message in itertools.product(range(q), repeat=code.k):
        yield encode(code, message)


def codewords(code: LinearCode) -> tuple:
    """Cached tuple of all codewords in enumeration order."""
    if code._words is None:
        code._words = tuple(iter_codewords(code))
    return code._words


def fp_basis(code: LinearCode) -> list:
    """F_p-basis of the code: generator rows times each digit basis scalar.

    Ordered row-major, digit index inner, so the result is deterministic.
    Over a prime field this is just the generator rows.
    """
    f = code.field
    if f.degree == 1:
        return [tuple(row) for row in code.gen]
    out = []
    for row in code.gen:
        for d in range(f.degree):
            scalar = f.from_digits(tuple(1 if i == d else 0 for i in range(f.degree)))
            out.append(tuple(f.mul(scalar, x) for x in row))
    return out


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming distance by full codeword enumeration."""
    if code.k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    if code.size > budget:
        raise BudgetExceeded(f"codeword count {code.size} exceeds budget {budget}")
    best = code.n + 1
    for word in iter_codewords(code):
        w = weight(word)
        if 0 < w < best:
            best = w
            if best == 1:
                break
    return best


def coset_leader_weight(code: LinearCode, v, budget: int = DEFAULT_BUDGET) -> int:
    """min { wt(v + c) : c in code }, the weight of the coset leader."""
    if len(v) != code.n:
        raise LengthMismatch(f"vector length {len(v)} != code length {code.n}")
    if code.size > budget:
        raise BudgetExceeded(f"codeword count {code.size} exceeds budget {budget}")
    f = code.field
    v = tuple(v)
    best = code.n + 1
    for word in codewords(code):
        w = sum(1 for a, b in zip(v, word) if f.add(a, b))
        if w < best:
            best = w
            if best == 0:
                break
    return best


# --- code files ----------------------------------------------------------
# Line 1: "p t n k".  Optional "modulus: c0 c1 ... ct" line.  Then k rows
# of n packed integers.


def code_to_text(code: LinearCode) -> str:
    f = code.field
    lines = [f"{f.p} {f.degree} {code.n} {code.k}"]
    if f.degree > 1:
        lines.append("modulus: " + " ".join(str(c) for c in f.modulus))
    for row in code.gen:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def code_from_text(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 4:
        raise ValueError("code file header must be 'p t n k'")
    p, t, n, k = (int(x) for x in head)
    body = lines[1:]
    modulus = None
    if body and body[0].startswith("modulus:"):
        modulus = [int(c) for c in body[0].split(":", 1)[1].split()]
        body = body[1:]
    field = field_make(p, t, modulus)
    if len(body) != k:
        raise ValueError(f"expected {k} generator rows, found {len(body)}")
    rows = [[int(x) for x in ln.split()] for ln in body]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row length {len(r)} != declared n = {n}")
    code = code_make(field, rows)
    if code.k != k:
        raise ValueError(f"declared dimension {k} but rows span dimension {code.k}")
    return code
