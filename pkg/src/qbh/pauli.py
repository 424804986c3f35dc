"""Generalized Pauli operators on N qudits of dimension q = p^r.

An operator is kept in the normal form omega^c X(a) Z(b) with a, b in
F_q^N, where X(a)|x> = |x + a> and Z(b)|x> = omega^tr(b.x) |x> for the
absolute trace tr down to F_p and omega a fixed primitive p-th root of
unity.  For odd p the phase exponent c lives mod p.  For p = 2 the group
needs the imaginary unit: phases are tracked mod 4 as powers of i, and
reordering contributes the doubled exponent 2 tr(b . a') because
Z(b) X(a') = (-1)^{tr(b.a')} X(a') Z(b).

``psi`` drops the phase and returns the symplectic pair (a | b); all
commutation questions reduce to the trace symplectic inner product on
those pairs.
"""

from __future__ import annotations

from .errors import LengthMismatch
from .gf import Field, FieldElement, field_make


def phase_modulus(field: Field) -> int:
    """Order of the phase subgroup: 4 for characteristic 2, else p."""
    return 4 if field.p == 2 else field.p


class SymplecticVector:
    """A pair (a | b) in F_q^N x F_q^N."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: Field, a, b):
        a, b = tuple(a), tuple(b)
        if len(a) != len(b):
            raise LengthMismatch("X part and Z part must have equal length")
        self.field = field
        self.a = a
        self.b = b

    @property
    def length(self) -> int:
        return len(self.a)

    def __eq__(self, other):
        return (
            isinstance(other, SymplecticVector)
            and self.field == other.field
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.field, self.a, self.b))

    def __repr__(self):
        return f"({' '.join(map(str, self.a))} | {' '.join(map(str, self.b))})"


class PauliElement:
    """omega^phase X(a) Z(b) in normal form."""

    __slots__ = ("field", "phase", "a", "b")

    def __init__(self, field: Field, phase: int, a, b):
        a, b = tuple(a), tuple(b)
        if len(a) != len(b):
            raise LengthMismatch("X part and Z part must have equal length")
        self.field = field
        self.phase = phase % phase_modulus(field)
        self.a = a
        self.b = b

    @property
    def length(self) -> int:
        return len(self.a)

    def __eq__(self, other):
        return (
            isinstance(other, PauliElement)
            and self.field == other.field
            and self.phase == other.phase
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.field, self.phase, self.a, self.b))

    def __repr__(self):
        return f"w^{self.phase} X({','.join(map(str, self.a))}) Z({','.join(map(str, self.b))})"


def identity(field: Field, n: int) -> PauliElement:
    return PauliElement(field, 0, (0,) * n, (0,) * n)


def x_op(field: Field, a) -> PauliElement:
    return PauliElement(field, 0, a, (0,) * len(a))


def z_op(field: Field, b) -> PauliElement:
    return PauliElement(field, 0, (0,) * len(b), b)


def psi(e: PauliElement) -> SymplecticVector:
    """Forget the phase: the symplectic image (a | b)."""
    return SymplecticVector(e.field, e.a, e.b)


def _dot_trace(field: Field, u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc += field.trace_int(field.mul(x, y))
    return acc % field.p


def mul(e1: PauliElement, e2: PauliElement) -> PauliElement:
    """Group product, reordering e2's X part past e1's Z part."""
    if e1.field != e2.field:
        raise ValueError("operators act on different fields")
    if e1.length != e2.length:
        raise LengthMismatch("operators act on different qudit counts")
    f = e1.field
    cross = _dot_trace(f, e1.b, e2.a)
    if f.p == 2:
        phase = (e1.phase + e2.phase + 2 * cross) % 4
    else:
        phase = (e1.phase + e2.phase + cross) % f.p
    a = tuple(f.add(x, y) for x, y in zip(e1.a, e2.a))
    b = tuple(f.add(x, y) for x, y in zip(e1.b, e2.b))
    return PauliElement(f, phase, a, b)


def symp_ip(u: SymplecticVector, v: SymplecticVector) -> FieldElement:
    """Trace symplectic inner product tr(u.b . v.a - v.b . u.a) in F_p."""
    if u.field != v.field:
        raise ValueError("vectors over different fields")
    if u.length != v.length:
        raise LengthMismatch("vectors of different lengths")
    f = u.field
    val = (_dot_trace(f, u.b, v.a) - _dot_trace(f, v.b, u.a)) % f.p
    return field_make(f.p, 1).element(val)


def symp_ip_int(field: Field, a1, b1, a2, b2) -> int:
    """Int fast path of symp_ip for hot loops."""
    return (_dot_trace(field, b1, a2) - _dot_trace(field, b2, a1)) % field.p


def swt(v) -> int:
    """Symplectic weight: positions where the (a_i, b_i) pair is nonzero."""
    if isinstance(v, (PauliElement, SymplecticVector)):
        a, b = v.a, v.b
    else:
        a, b = v
    return sum(1 for x, y in zip(a, b) if x or y)


def commutes(e1: PauliElement, e2: PauliElement) -> bool:
    return symp_ip_int(e1.field, e1.a, e1.b, e2.a, e2.b) == 0


def detectable(scode, e: PauliElement) -> bool:
    """Error detectability against a stabilizer code.

    An error is detectable exactly when it lies in the stabilizer up to
    phase, or fails to commute with some generator.  ``scode`` is a
    StabilizerCode; only its symplectic data is consulted.
    """
    if e.field != scode.field or e.length != scode.num_qudits:
        raise LengthMismatch("error does not act on the code's qudits")
    if scode.contains_symplectic(e.a, e.b):
        return True
    for g in scode.generators:
        if symp_ip_int(e.field, e.a, e.b, g.a, g.b) != 0:
            return True
    return False


# --- text forms ------------------------------------------------------------


def pauli_to_text(e: PauliElement) -> str:
    """Machine form 'phase | a part | b part'."""
    return "{} | {} | {}".format(
        e.phase, " ".join(map(str, e.a)), " ".join(map(str, e.b))
    )


def pauli_from_text(field: Field, text: str) -> PauliElement:
    parts = [p.strip() for p in text.split("|")]
    if len(parts) != 3:
        raise ValueError("expected 'phase | a part | b part'")
    phase = int(parts[0])
    a = tuple(int(x) for x in parts[1].split())
    b = tuple(int(x) for x in parts[2].split())
    return PauliElement(field, phase, a, b)


def render_human(e: PauliElement) -> str:
    """Readable 'X1 Z3'-style form for prime fields, 1-indexed positions."""
    parts = []
    for i, (ai, bi) in enumerate(zip(e.a, e.b), start=1):
        if ai:
            parts.append(f"X{i}" if ai == 1 else f"X{i}^{ai}")
        if bi:
            parts.append(f"Z{i}" if bi == 1 else f"Z{i}^{bi}")
    body = " ".join(parts) if parts else "I"
    if e.phase:
        body = f"w^{e.phase} {body}"
    return body
