"""Linear functionals on a code C indexed by the extension field F_{q^k}.

For C of dimension k over F_q = F_{p^r} and K = F_{q^k} = F_{p^{rk}},
every scalar lam in K induces the F_p-linear functional

    f_lam(c) = tr_{K/p}( lam * pack(msg(c)) )

where msg(c) is the message of c under the echelon generator and pack
sends a message to K coordinatewise over the basis 1, g, ..., g^{k-1}
(g the canonical generator of K, which has degree exactly k over the
embedded F_q).  The map lam -> f_lam is an isomorphism onto the full
dual space of C over F_p, because the trace pairing of K is
non-degenerate and pack . msg is an F_p-isomorphism of C onto K.

``theta`` inverts the representation through the ambient space: it
returns the lexicographically smallest x in F_q^n whose trace pairing
rho_x(c) = tr_{q/p}(c . x) agrees with f_lam on C.  The solution set is
a coset of the dual code, so theta(lam) names that coset canonically.
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import DegenerateD, DimensionMismatch, LengthMismatch, NotACodeword
from .gf import Field, FieldElement, field_make
from .lincode import LinearCode, code_make, contains, encode, fp_basis


class FunctionalTable:
    """The family { f_lam : lam in K } attached to one code C."""

    __slots__ = ("code", "scalars", "prime", "_embed", "_basis_powers", "_theta")

    def __init__(self, code: LinearCode, scalars: Field):
        self.code = code
        self.scalars = scalars
        self.prime = field_make(scalars.p, 1)
        self._embed = scalars.embed_table(code.field)
        g = scalars.from_digits((0, 1) + (0,) * (scalars.degree - 2)) if scalars.degree >= 2 else 1
        powers, cur = [], 1
        for _ in range(code.k):
            powers.append(cur)
            cur = scalars.mul(cur, g)
        self._basis_powers = tuple(powers)
        self._theta = None

    # -- scalar side

    def pack_message(self, message) -> int:
        """Message tuple over F_q -> packed element of K."""
        K = self.scalars
        acc = 0
        for m, power in zip(message, self._basis_powers):
            if m:
                acc = K.add(acc, K.mul(self._embed[m], power))
        return acc

    def f_int(self, lam: int, word) -> int:
        """f_lam evaluated on a codeword, as an int in [0, p)."""
        msg = tuple(word[j] for j in self.code.pivots)
        return self.scalars.trace_int(self.scalars.mul(lam, self.pack_message(msg)))

    @property
    def theta_map(self) -> "ThetaMap":
        if self._theta is None:
            self._theta = ThetaMap(self)
        return self._theta

    def __repr__(self):
        return f"functional table for {self.code!r} over {self.scalars!r}"


def table_make(code: LinearCode, scalars: Field) -> FunctionalTable:
    """Validate the tower F_p < F_q < K and build the functional family."""
    if scalars.p != code.field.p:
        raise DimensionMismatch(
            f"scalar field characteristic {scalars.p} != code characteristic {code.field.p}"
        )
    if code.k < 1:
        raise DimensionMismatch("code must have positive dimension")
    if scalars.degree != code.field.degree * code.k:
        raise DimensionMismatch(
            f"scalar field degree {scalars.degree} != r*k = {code.field.degree * code.k}"
        )
    return FunctionalTable(code, scalars)


def f_eval(table: FunctionalTable, lam, word) -> FieldElement:
    """f_lam(word) as an element of F_p; word must lie in C."""
    lam = lam.value if isinstance(lam, FieldElement) else int(lam)
    word = tuple(word)
    if not contains(table.code, word):
        raise NotACodeword(f"{word} is not in {table.code!r}")
    return table.prime.element(table.f_int(lam, word))


class ThetaMap:
    """Solves tr_{q/p}(c . x) = f_lam(c) for the canonical representative x.

    Unknowns are the F_p digits of x in priority order: coordinate 0
    first and, inside a coordinate, the most significant digit first.
    With columns in that order the reduced echelon form of the solution
    space yields the lexicographically smallest solution directly, where
    vectors compare as tuples of packed values.
    """

    __slots__ = ("table", "_rows", "_kernel", "_kpivots", "_cache", "_lam_rows", "_lam_cache")

    def __init__(self, table: FunctionalTable):
        self.table = table
        code = table.code
        f = code.field
        r, n = f.degree, code.n
        basis = fp_basis(code)
        unknowns = n * r
        rows = []
        for e in basis:
            row = [0] * unknowns
            for j in range(n):
                if e[j]:
                    for dd in range(r):
                        scalar = f.from_digits(tuple(1 if i == dd else 0 for i in range(r)))
                        row[j * r + (r - 1 - dd)] = f.trace_int(f.mul(e[j], scalar))
            rows.append(tuple(row))
        self._rows = rows
        self._kernel = linalg.nullspace(table.prime, rows, unknowns)
        self._kpivots = [next(i for i, x in enumerate(krow) if x) for krow in self._kernel]
        self._cache = {}
        K = table.scalars
        lam_rows = []
        for e in basis:
            msg_packed = table.pack_message(tuple(e[j] for j in code.pivots))
            row = [
                K.trace_int(K.mul(K.from_digits(tuple(1 if i == t else 0 for i in range(K.degree))), msg_packed))
                for t in range(K.degree)
            ]
            lam_rows.append(tuple(row))
        self._lam_rows = lam_rows
        self._lam_cache = {}

    def _digits_to_vector(self, digs):
        f = self.table.code.field
        r = f.degree
        coords = []
        for j in range(self.table.code.n):
            chunk = digs[j * r : (j + 1) * r]
            coords.append(f.from_digits(tuple(reversed(chunk))))
        return tuple(coords)

    def theta(self, lam: int) -> tuple:
        got = self._cache.get(lam)
        if got is not None:
            return got
        table = self.table
        basis = fp_basis(table.code)
        rhs = [table.f_int(lam, e) for e in basis]
        x = linalg.solve(table.prime, self._rows, rhs)
        if x is None:  # pragma: no cover - trace pairing is non-degenerate
            raise ArithmeticError("inconsistent trace system; field tables corrupt")
        x = linalg.reduce_vector(table.prime, self._kernel, self._kpivots, x)
        vec = self._digits_to_vector(x)
        self._cache[lam] = vec
        return vec

    def lambda_of(self, x) -> int:
        x = tuple(x)
        got = self._lam_cache.get(x)
        if got is not None:
            return got
        table = self.table
        code = table.code
        f = code.field
        basis = fp_basis(code)
        rhs = []
        for e in basis:
            acc = 0
            for ej, xj in zip(e, x):
                if ej and xj:
                    acc += f.trace_int(f.mul(ej, xj))
            rhs.append(acc % f.p)
        digs = linalg.solve(table.prime, self._lam_rows, rhs)
        if digs is None:  # pragma: no cover - lam -> f_lam is onto the dual
            raise ArithmeticError("functional not representable; field tables corrupt")
        lam = table.scalars.from_digits(digs)
        self._lam_cache[x] = lam
        return lam


def theta(table: FunctionalTable, lam) -> tuple:
    """Lexicographically smallest x with rho_x = f_lam on C."""
    lam = lam.value if isinstance(lam, FieldElement) else int(lam)
    return table.theta_map.theta(lam)


def lambda_of(table: FunctionalTable, x) -> int:
    """The unique scalar lam whose functional agrees with rho_x on C."""
    return table.theta_map.lambda_of(x)


def validate_d(d_code: LinearCode, table: FunctionalTable | None = None) -> None:
    """Reject outer codes the construction cannot use.

    The code must be neither zero nor the full space, and every
    coordinate must carry some nonzero codeword value (coordinates that
    are identically zero should be projected away first; see
    ``project_zero_coordinates``).
    """
    if d_code.k == 0:
        raise DegenerateD("outer code must be nonzero")
    if d_code.k >= d_code.n:
        raise DegenerateD(
            f"outer code dimension {d_code.k} must be strictly below its length {d_code.n}"
        )
    dead = [
        i for i in range(d_code.n) if all(row[i] == 0 for row in d_code.gen)
    ]
    if dead:
        raise DegenerateD(
            f"outer code coordinates {dead} are identically zero; project them away first"
        )


def project_zero_coordinates(d_code: LinearCode) -> LinearCode:
    """Drop coordinates on which every codeword vanishes."""
    keep = [
        i for i in range(d_code.n) if any(row[i] for row in d_code.gen)
    ]
    if not keep:
        raise DegenerateD("outer code is zero; nothing to project")
    if len(keep) == d_code.n:
        return d_code
    return code_make(d_code.field, [tuple(row[i] for i in keep) for row in d_code.gen])


def d_theta_member(table: FunctionalTable, d_code: LinearCode, vectors) -> bool:
    """Membership of an m-tuple of ambient vectors in the theta image of D.

    Each vector is mapped back to its scalar through the functional it
    represents; the tuple belongs exactly when those scalars form a
    codeword of D.
    """
    vectors = [tuple(v) for v in vectors]
    if len(vectors) != d_code.n:
        raise LengthMismatch(f"need {d_code.n} blocks, got {len(vectors)}")
    n = table.code.n
    for v in vectors:
        if len(v) != n:
            raise LengthMismatch(f"block length {len(v)} != inner code length {n}")
    lam = tuple(table.theta_map.lambda_of(v) for v in vectors)
    return contains(d_code, lam)


def big_f_kernel(table: FunctionalTable, d_code: LinearCode) -> list:
    """F_p-basis of the joint kernel of all summed functionals.

    The functional indexed by a D-codeword Lam sends (c_1, ..., c_m) to
    sum_i f_{lam_i}(c_i).  The returned basis spans the intersection of
    all their kernels inside C^m; each basis element is an m-tuple of
    codewords.  Deterministic: the basis is echelonized over message
    digits.
    """
    code = table.code
    K = table.scalars
    if d_code.field != K:
        raise DimensionMismatch("outer code is not defined over the scalar field")
    m, k, r = d_code.n, code.k, code.field.degree
    q = code.field
    unknowns = m * k * r
    # F_p-spanning set of D: every generator row times each digit basis scalar
    constraints = []
    for row in d_code.gen:
        for t in range(K.degree):
            scalar = K.from_digits(tuple(1 if i == t else 0 for i in range(K.degree)))
            constraints.append(tuple(K.mul(scalar, lam) for lam in row))
    rows = []
    for lam_tuple in constraints:
        row = [0] * unknowns
        for i in range(m):
            lam = lam_tuple[i]
            if not lam:
                continue
            for j in range(k):
                for d in range(r):
                    unit = q.from_digits(tuple(1 if t == d else 0 for t in range(r)))
                    packed = K.mul(table._embed[unit], table._basis_powers[j])
                    row[(i * k + j) * r + d] = K.trace_int(K.mul(lam, packed))
        rows.append(tuple(row))
    basis = linalg.nullspace(table.prime, rows, unknowns)
    out = []
    for vec in basis:
        blocks = []
        for i in range(m):
            msg = []
            for j in range(k):
                digs = vec[(i * k + j) * r : (i * k + j) * r + r]
                msg.append(q.from_digits(digs))
            blocks.append(encode(code, tuple(msg)))
        out.append(tuple(blocks))
    return out


def table_matrix(table: FunctionalTable):
    """The exponent matrix [ f_lam(c) ] with canonical labels.

    Rows are indexed by packed scalars in increasing order; columns by
    codewords in message enumeration order.  Column labels pack the
    message big-endian so that label arithmetic matches the group
    structure of C.
    """
    from .bh import BhMatrix

    code = table.code
    K = table.scalars
    q = code.field.order
    messages = list(itertools.product(range(q), repeat=code.k))
    col_labels = []
    for msg in messages:
        acc = 0
        for mcoord in msg:
            acc = acc * q + mcoord
        col_labels.append(acc)
    words = [encode(code, msg) for msg in messages]
    rows = [
        tuple(table.f_int(lam, w) for w in words) for lam in range(K.order)
    ]
    return BhMatrix(
        K.order,
        table.prime.p,
        rows,
        row_labels=tuple(range(K.order)),
        col_labels=tuple(col_labels),
    )
