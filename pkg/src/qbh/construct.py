"""Assembly of the stabilizer code attached to a code pair (C, D).

The stabilizer group is generated by two families.  X-type generators
carry an m-tuple of codewords of C lying in the common kernel of every
summed functional indexed by D; Z-type generators carry one dual
codeword in one block.  Both families are phase-free, the group is
abelian, and the F_p-span of the symplectic rows has full rank
r(nm - ks), so the fixed space has dimension q^{ks}.

Distances come in two independent flavours: ``distance`` evaluates the
closed form min{d(C), ell} from the construction data, while
``distance_bruteforce`` enumerates the symplectic centralizer and never
looks at the construction data beyond the generator list.  The test
suite holds the two against each other.
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import (
    BudgetExceeded,
    DimensionBounds,
    DimensionMismatch,
    LengthMismatch,
)
from .functional import FunctionalTable, big_f_kernel, table_make, theta, validate_d
from .gf import Field, field_make
from .lincode import (
    LinearCode,
    coset_leader_weight,
    dual,
    fp_basis,
    iter_codewords,
    min_distance,
)
from .pauli import PauliElement, SymplecticVector, symp_ip_int

ENUM_BUDGET = 1 << 20


def _flatten(field: Field, a, b) -> tuple:
    """Symplectic vector over F_q -> digit vector over F_p, a-part first."""
    out = []
    for x in a:
        out.extend(field.digits(x))
    for x in b:
        out.extend(field.digits(x))
    return tuple(out)


class StabilizerCode:
    """An [[nm, ks]]_q stabilizer code with its generating set.

    ``code``, ``d_code`` and ``table`` hold the construction data when
    the object was built rather than parsed; the closed-form distance
    needs them, the brute-force one does not.
    """

    __slots__ = (
        "field", "n", "k", "m", "s", "generators",
        "code", "d_code", "table", "delta",
        "_sbar_rref", "_sbar_pivots",
    )

    def __init__(self, field, n, k, m, s, generators,
                 code=None, d_code=None, table=None, delta=None):
        self.field = field
        self.n = n
        self.k = k
        self.m = m
        self.s = s
        self.generators = tuple(generators)
        self.code = code
        self.d_code = d_code
        self.table = table
        self.delta = delta
        self._sbar_rref = None
        self._sbar_pivots = None

    @property
    def num_qudits(self) -> int:
        return self.n * self.m

    @property
    def log_dim_exp(self) -> int:
        """K with dim = q^K; K = ks."""
        return self.k * self.s

    @property
    def sympl_matrix(self) -> list:
        """Generator symplectic rows flattened to F_p digit vectors."""
        return [_flatten(self.field, g.a, g.b) for g in self.generators]

    def _sbar(self):
        if self._sbar_rref is None:
            prime = field_make(self.field.p, 1)
            self._sbar_rref, self._sbar_pivots = linalg.rref(prime, self.sympl_matrix)
        return self._sbar_rref, self._sbar_pivots

    def contains_symplectic(self, a, b) -> bool:
        """Membership of (a|b) in the F_p-span of the generator rows."""
        rrows, pivots = self._sbar()
        prime = field_make(self.field.p, 1)
        vec = _flatten(self.field, tuple(a), tuple(b))
        return not any(linalg.reduce_vector(prime, rrows, pivots, vec))

    def __repr__(self):
        d = f", delta={self.delta}" if self.delta is not None else ""
        return (
            f"[[{self.num_qudits},{self.log_dim_exp}]]_{self.field.order}"
            f" stabilizer code ({len(self.generators)} generators{d})"
        )


def build(code: LinearCode, d_code: LinearCode) -> StabilizerCode:
    """Assemble the stabilizer code of the pair (C, D).

    D lives over the scalar field F_{q^k}; its length m and dimension s
    must satisfy 1 <= s < m, and C must satisfy 1 <= k < n.
    """
    if not 1 <= code.k < code.n:
        raise DimensionBounds(
            f"need 1 <= k < n, got k = {code.k}, n = {code.n}"
        )
    scalars = d_code.field
    if scalars.p != code.field.p or scalars.degree != code.field.degree * code.k:
        raise DimensionMismatch(
            f"outer code field GF({scalars.p}^{scalars.degree}) is not the"
            f" degree-{code.field.degree * code.k} extension of the inner field"
        )
    validate_d(d_code)
    table = table_make(code, scalars)
    f = code.field
    r, n, k = f.degree, code.n, code.k
    m, s = d_code.n, d_code.k

    x_tuples = big_f_kernel(table, d_code)
    if len(x_tuples) != r * k * (m - s):
        raise ArithmeticError(
            f"kernel dimension {len(x_tuples)} != rk(m-s) = {r * k * (m - s)};"
            " construction data corrupt"
        )
    zero_block = (0,) * (n * m)
    gens = []
    for blocks in x_tuples:
        a = tuple(itertools.chain.from_iterable(blocks))
        gens.append(PauliElement(f, 0, a, zero_block))
    dual_basis = fp_basis(dual(code))
    for i in range(m):
        for u in dual_basis:
            b = (0,) * (n * i) + tuple(u) + (0,) * (n * (m - 1 - i))
            gens.append(PauliElement(f, 0, zero_block, b))

    sc = StabilizerCode(f, n, k, m, s, gens, code=code, d_code=d_code, table=table)
    expected = r * (n * m - k * s)
    prime = field_make(f.p, 1)
    rank = len(linalg.rref(prime, sc.sympl_matrix)[0])
    if len(gens) != expected or rank != expected:
        raise ArithmeticError(
            f"generator rank {rank} != r(nm-ks) = {expected}; construction data corrupt"
        )
    for x, y in itertools.combinations(gens, 2):
        if symp_ip_int(f, x.a, x.b, y.a, y.b):
            raise ArithmeticError("generators fail to commute; construction data corrupt")
    return sc


def ell(code: LinearCode, d_code: LinearCode, table: FunctionalTable,
        budget: int = ENUM_BUDGET) -> int:
    """min over nonzero Lam in D of the summed coset-leader weights.

    The weight of a coset product is the sum of per-coordinate leader
    weights, so the minimum decomposes coordinatewise.
    """
    if d_code.size > budget:
        raise BudgetExceeded(f"outer code has {d_code.size} words, budget {budget}")
    dual_code = dual(code)
    leader = {0: 0}
    best = None
    for lam_word in iter_codewords(d_code):
        if not any(lam_word):
            continue
        total = 0
        for lam in lam_word:
            w = leader.get(lam)
            if w is None:
                w = coset_leader_weight(dual_code, theta(table, lam))
                leader[lam] = w
            total += w
        if best is None or total < best:
            best = total
    return best


def distance(sc: StabilizerCode) -> int:
    """The closed-form distance min{d(C), ell}; cached on the code."""
    if sc.delta is not None:
        return sc.delta
    if sc.code is None:
        raise ValueError(
            "no construction data on this code; parsed codes carry only"
            " a stored delta"
        )
    sc.delta = min(min_distance(sc.code), ell(sc.code, sc.d_code, sc.table))
    return sc.delta


def centralizer_basis(sc: StabilizerCode) -> list:
    """F_p-basis of the symplectic centralizer of the generator rows.

    With construction data the basis is structural: X-parts range over
    C in each block, Z-parts over the theta lifts of an F_p-basis of D
    together with dual words in each block, giving dimension r(nm + ks).
    Without it the basis is the nullspace of the symplectic pairing
    against the generators.  Every returned vector is checked to pair to
    zero with every generator.
    """
    f = sc.field
    n, m = sc.n, sc.m
    out = []
    if sc.code is not None:
        zero_block = (0,) * (n * m)
        for i in range(m):
            for u in fp_basis(sc.code):
                a = (0,) * (n * i) + tuple(u) + (0,) * (n * (m - 1 - i))
                out.append(SymplecticVector(f, a, zero_block))
        for lam_word in fp_basis(sc.d_code):
            blocks = [theta(sc.table, lam) for lam in lam_word]
            b = tuple(itertools.chain.from_iterable(blocks))
            out.append(SymplecticVector(f, zero_block, b))
        for i in range(m):
            for u in fp_basis(dual(sc.code)):
                b = (0,) * (n * i) + tuple(u) + (0,) * (n * (m - 1 - i))
                out.append(SymplecticVector(f, zero_block, b))
    else:
        prime = field_make(f.p, 1)
        N = sc.num_qudits
        r = f.degree
        rows = []
        for g in sc.generators:
            # pairing of unknown (a|b) with g, as a functional on digits
            row = [0] * (2 * N * r)
            for i in range(N):
                for d in range(r):
                    unit = f.from_digits(tuple(1 if t == d else 0 for t in range(r)))
                    # coefficient of a_i digit d: tr(g.b_i * unit) with minus sign
                    row[i * r + d] = (-f.trace_int(f.mul(g.b[i], unit))) % f.p
                    # coefficient of b_i digit d: tr(unit * g.a_i)
                    row[N * r + i * r + d] = f.trace_int(f.mul(unit, g.a[i]))
            rows.append(tuple(row))
        for vec in linalg.nullspace(prime, rows, 2 * N * r):
            a = tuple(
                f.from_digits(vec[i * r : (i + 1) * r]) for i in range(N)
            )
            b = tuple(
                f.from_digits(vec[(N + i) * r : (N + i + 1) * r]) for i in range(N)
            )
            out.append(SymplecticVector(f, a, b))
    for v in out:
        for g in sc.generators:
            if symp_ip_int(f, v.a, v.b, g.a, g.b):
                raise ArithmeticError(
                    "centralizer vector fails to commute; construction data corrupt"
                )
    return out


def _extend_basis(prime, base_flats, candidates):
    """Greedy extension of an F_p row space; returns the added vectors."""
    ech = {}

    def insert(flat):
        v = list(flat)
        while True:
            lead = next((i for i, x in enumerate(v) if x), None)
            if lead is None:
                return False
            row = ech.get(lead)
            if row is None:
                inv = prime.inv(v[lead])
                ech[lead] = [prime.mul(inv, x) for x in v]
                return True
            c = v[lead]
            v = [prime.sub(x, prime.mul(c, y)) for x, y in zip(v, row)]

    for flat in base_flats:
        insert(flat)
    added = []
    for cand, flat in candidates:
        if insert(flat):
            added.append(cand)
    return added


def distance_bruteforce(sc: StabilizerCode, budget: int = ENUM_BUDGET) -> int:
    """Minimum symplectic weight over the centralizer, by enumeration.

    The centralizer is walked as an F_p-space with the generator rows as
    the fastest-moving digits, so membership in the stabilizer span is a
    single index comparison: the first p^{dim S} elements are exactly
    the span.  Weights are tracked incrementally; the minimum is taken
    over elements outside the span when any exist, otherwise over the
    nonzero span.
    """
    f = sc.field
    p = f.p
    prime = field_make(p, 1)
    N = sc.num_qudits
    gens = list(sc.generators)
    gen_vecs = [(g.a, g.b) for g in gens]
    gen_flat = [_flatten(f, g.a, g.b) for g in gens]
    cent = centralizer_basis(sc)
    cand = [((v.a, v.b), _flatten(f, v.a, v.b)) for v in cent]
    ext = _extend_basis(prime, gen_flat, cand)
    basis = gen_vecs + ext
    dim = len(basis)
    total = p ** dim
    if total > budget:
        raise BudgetExceeded(f"centralizer size {total} exceeds budget {budget}")
    s_size = p ** len(gen_vecs)
    if p == 2:
        return _min_weight_walk_packed(f, N, basis, s_size, len(ext) > 0)
    return _min_weight_walk(f, N, basis, s_size, len(ext) > 0)


def _min_weight_walk(f, N, basis, s_size, want_outside):
    p = f.p
    dim = len(basis)
    digits = [0] * dim
    A = [0] * N
    B = [0] * N
    best = N + 1

    def bump(vec):
        a, b = vec
        for i in range(N):
            if a[i]:
                A[i] = f.add(A[i], a[i])
            if b[i]:
                B[i] = f.add(B[i], b[i])

    for idx in range(1, p ** dim):
        j = 0
        while digits[j] == p - 1:
            digits[j] = 0
            bump(basis[j])  # 0 - (p-1) = 1 mod p, so a wrap adds once
            j += 1
        digits[j] += 1
        bump(basis[j])
        if want_outside and idx < s_size:
            continue
        w = sum(1 for i in range(N) if A[i] or B[i])
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _min_weight_walk_packed(f, N, basis, s_size, want_outside):
    """Characteristic 2: pack each qudit's (a, b) digits into one chunk and
    walk the space in Gray-code order, one XOR per step."""
    r = f.degree
    chunk = 2 * r
    mask = (1 << chunk) - 1
    packed = []
    for a, b in basis:
        acc = 0
        for i in range(N):
            acc |= (a[i] | (b[i] << r)) << (i * chunk)
        packed.append(acc)
    dim = len(packed)
    cur = 0
    prev_gray = 0
    best = N + 1
    for idx in range(1, 1 << dim):
        gray = idx ^ (idx >> 1)
        bit = (gray ^ prev_gray).bit_length() - 1
        prev_gray = gray
        cur ^= packed[bit]
        if want_outside and gray < s_size:
            continue
        w = 0
        x = cur
        while x:
            if x & mask:
                w += 1
                if w >= best:
                    break
            x >>= chunk
        if w < best:
            best = w
            if best == 1:
                break
    return best


def syndrome(sc: StabilizerCode, e: PauliElement) -> tuple:
    """Symplectic pairings of the error against each generator, over F_p."""
    if len(e.a) != sc.num_qudits:
        raise LengthMismatch(
            f"error acts on {len(e.a)} qudits, code has {sc.num_qudits}"
        )
    f = sc.field
    return tuple(symp_ip_int(f, e.a, e.b, g.a, g.b) for g in sc.generators)


def verify_generators(sc: StabilizerCode) -> list:
    """Diagnostics for a parsed generator set; empty means clean."""
    f = sc.field
    problems = []
    for i, g in enumerate(sc.generators):
        if g.phase:
            problems.append(f"generator {i} carries phase exponent {g.phase}")
    for (i, x), (j, y) in itertools.combinations(enumerate(sc.generators), 2):
        if symp_ip_int(f, x.a, x.b, y.a, y.b):
            problems.append(f"generators {i} and {j} do not commute")
    prime = field_make(f.p, 1)
    rank = len(linalg.rref(prime, sc.sympl_matrix)[0])
    expected = f.degree * (sc.n * sc.m - sc.k * sc.s)
    if rank != expected:
        problems.append(
            f"symplectic rank {rank} != r(nm-ks) = {expected}"
        )
    if len(sc.generators) != expected:
        problems.append(
            f"generator count {len(sc.generators)} != r(nm-ks) = {expected}"
        )
    return problems


# --- stabilizer files -----------------------------------------------------
# Line 1: "p r n k m s N K delta".  Optional "modulus: ..." line for the
# base field.  Then one generator per line: N packed a-values, a pipe,
# N packed b-values.


def stab_to_text(sc: StabilizerCode) -> str:
    f = sc.field
    delta = sc.delta if sc.delta is not None else "-"
    lines = [
        f"{f.p} {f.degree} {sc.n} {sc.k} {sc.m} {sc.s}"
        f" {sc.num_qudits} {sc.log_dim_exp} {delta}"
    ]
    if f.degree > 1:
        lines.append("modulus: " + " ".join(str(c) for c in f.modulus))
    for g in sc.generators:
        a = " ".join(str(x) for x in g.a)
        b = " ".join(str(x) for x in g.b)
        lines.append(f"{a} | {b}")
    return "\n".join(lines) + "\n"


def stab_from_text(text: str) -> StabilizerCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty stabilizer file")
    head = lines[0].split()
    if len(head) != 9:
        raise ValueError("stabilizer file header must be 'p r n k m s N K delta'")
    p, r, n, k, m, s, N, K = (int(x) for x in head[:8])
    delta = None if head[8] == "-" else int(head[8])
    if N != n * m or K != k * s:
        raise ValueError(f"header inconsistent: N != n*m or K != k*s in {head}")
    body = lines[1:]
    modulus = None
    if body and body[0].startswith("modulus:"):
        modulus = [int(c) for c in body[0].split(":", 1)[1].split()]
        body = body[1:]
    f = field_make(p, r, modulus)
    gens = []
    for ln in body:
        if "|" not in ln:
            raise ValueError(f"generator line lacks the a|b separator: {ln!r}")
        a_txt, b_txt = ln.split("|")
        a = tuple(int(x) for x in a_txt.split())
        b = tuple(int(x) for x in b_txt.split())
        if len(a) != N or len(b) != N:
            raise ValueError(f"generator parts must have length {N}: {ln!r}")
        for x in itertools.chain(a, b):
            if not 0 <= x < f.order:
                raise ValueError(f"entry {x} is not a packed element of {f!r}")
        gens.append(PauliElement(f, 0, a, b))
    return StabilizerCode(f, n, k, m, s, gens, delta=delta)
