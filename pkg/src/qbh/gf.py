"""Exact arithmetic in finite fields F_{p^t} and their subfield towers.

An element of F_{p^t} is a packed integer in [0, p^t): the base-p digits
of the integer are the coefficients of the residue polynomial, constant
term first.  Every field precomputes exp/log tables over a generator at
construction time, so multiplication, inversion, Frobenius and trace are
table lookups on plain ints.  ``FieldElement`` is a thin wrapper over
(field, value) used at API boundaries; hot loops call the int-level
methods on ``Field`` directly.

The default modulus for F_{p^t} is the monic irreducible polynomial of
degree t whose non-leading coefficient vector, read as a packed integer,
is smallest.  This makes field construction deterministic, so two calls
to ``field_make(p, t)`` agree everywhere.
"""

from __future__ import annotations

from .errors import BudgetExceeded, NoEmbedding, NotPrime, ReducibleModulus

# Elements are packed into machine ints; keep orders desk-sized.
FIELD_SIZE_LIMIT = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# --- polynomial helpers ------------------------------------------------
# Polynomials over F_p are tuples of ints, constant term first.


def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim(a[:dm])


def _is_irreducible(m, p):
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg < 1 or any(c % p for c in (m[-1] - 1,)):
        return False
    if deg == 1:
        return True
    if m[0] == 0:
        return False  # divisible by x
    for d in range(1, deg // 2 + 1):
        for packed in range(p ** d):
            div = list(_unpack_digits(packed, p, d)) + [1]
            if not _poly_mod(m, div, p):
                return False
    return True


def _smallest_irreducible(p, t):
    for packed in range(p ** t):
        m = tuple(_unpack_digits(packed, p, t)) + (1,)
        if _is_irreducible(m, p):
            return m
    raise ReducibleModulus(f"no irreducible polynomial of degree {t} over F_{p}")


def _unpack_digits(v, p, t):
    digs = []
    for _ in range(t):
        v, r = divmod(v, p)
        digs.append(r)
    return tuple(digs)


def _pack_digits(digs, p):
    v = 0
    for d in reversed(digs):
        v = v * p + d
    return v


# --- the field itself --------------------------------------------------


class Field:
    """F_{p^t} with table-backed arithmetic on packed-int elements.

    Do not call the constructor directly; use :func:`field_make`, which
    validates inputs and memoizes instances.
    """

    __slots__ = (
        "p", "degree", "order", "modulus",
        "_exp", "_log", "_trace", "_frob", "_add", "_neg", "_embed_cache",
    )

    def __init__(self, p: int, degree: int, modulus: tuple):
        self.p = p
        self.degree = degree
        self.order = p ** degree
        self.modulus = modulus
        self._embed_cache = {}
        self._build_tables()

    # -- construction helpers

    def _mul_raw(self, a: int, b: int) -> int:
        """Polynomial multiplication mod (modulus, p); used only to bootstrap."""
        pa = _unpack_digits(a, self.p, self.degree)
        pb = _unpack_digits(b, self.p, self.degree)
        return _pack_digits(_poly_mod(_poly_mul(pa, pb, self.p), self.modulus, self.p), self.p)

    def _build_tables(self):
        order = self.order
        self._add = None
        self._neg = None
        # exp/log over the smallest multiplicative generator
        exp = None
        for g in range(1, order):
            powers = [1]  # powers[i] = g^i
            cur = g
            while cur != 1:
                powers.append(cur)
                cur = self._mul_raw(cur, g)
            if len(powers) == order - 1:
                exp = powers
                break
        if exp is None:  # pragma: no cover - cannot happen for true prime powers
            raise ReducibleModulus("multiplicative group is not cyclic; modulus reducible")
        log = [0] * order
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

        p, t = self.p, self.degree
        frob = [0] * order
        for a in range(order):
            frob[a] = exp[(log[a] * p) % (order - 1)] if a else 0
        self._frob = frob

        trace = [0] * order
        for a in range(order):
            acc, cur = 0, a
            for _ in range(t):
                acc = self.add(acc, cur)
                cur = frob[cur]
            trace[a] = acc  # lies in the prime subfield, so acc < p
        self._trace = trace

        # dense add/neg tables pay off only on small fields
        if order <= 512 and t > 1:
            neg = [self._neg_slow(a) for a in range(order)]
            add = [[self._add_slow(a, b) for b in range(order)] for a in range(order)]
            self._add, self._neg = add, neg
        else:
            self._add, self._neg = None, None

    def _add_slow(self, a, b):
        p = self.p
        da = _unpack_digits(a, p, self.degree)
        db = _unpack_digits(b, p, self.degree)
        return _pack_digits(tuple((x + y) % p for x, y in zip(da, db)), p)

    def _neg_slow(self, a):
        p = self.p
        return _pack_digits(tuple((-x) % p for x in _unpack_digits(a, p, self.degree)), p)

    # -- int-level arithmetic

    def add(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.degree == 1:
            return (-a) % self.p
        if self._neg is not None:
            return self._neg[a]
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.degree == 1:
            return (a * b) % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        if self.degree == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def frobenius(self, a: int) -> int:
        """x -> x^p, the generating automorphism over F_p."""
        if self.degree == 1:
            return a
        return self._frob[a]

    def trace_int(self, a: int) -> int:
        """Absolute trace down to F_p, returned as an int in [0, p)."""
        if self.degree == 1:
            return a
        return self._trace[a]

    # -- representation plumbing

    def digits(self, a: int) -> tuple:
        """Base-p digit vector of a packed element, constant term first."""
        return _unpack_digits(a, self.p, self.degree)

    def from_digits(self, digs) -> int:
        return _pack_digits(tuple(d % self.p for d in digs), self.p)

    def elements(self):
        return range(self.order)

    def element(self, v: int) -> "FieldElement":
        if not 0 <= v < self.order:
            raise ValueError(f"packed value {v} outside [0, {self.order})")
        return FieldElement(self, v)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def embed_table(self, sub: "Field") -> tuple:
        """Packed-value table of the canonical embedding of ``sub`` into self.

        The embedding sends the class of x in the subfield to the smallest
        root of the subfield modulus in this field, so it is deterministic.
        """
        key = (sub.p, sub.degree, sub.modulus)
        cached = self._embed_cache.get(key)
        if cached is not None:
            return cached
        if sub.p != self.p or self.degree % sub.degree != 0:
            raise NoEmbedding(
                f"no embedding of GF({sub.p}^{sub.degree}) into GF({self.p}^{self.degree})"
            )
        root = None
        for cand in self.elements():
            acc = 0
            for coeff in reversed(sub.modulus):  # Horner
                acc = self.add(self.mul(acc, cand), coeff)
            if acc == 0:
                root = cand
                break
        if root is None:  # pragma: no cover - subfield modulus always splits
            raise NoEmbedding("subfield modulus has no root; fields incompatible")
        table = []
        for v in sub.elements():
            acc, power = 0, 1
            for d in sub.digits(v):
                if d:
                    acc = self.add(acc, self.mul(d, power))
                power = self.mul(power, root)
            table.append(acc)
        table = tuple(table)
        self._embed_cache[key] = table
        return table

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree})"


class FieldElement:
    """A single field element: owning field plus packed integer value."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p if other < 0 or other >= self.field.order else other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def frobenius(self):
        return FieldElement(self.field, self.field.frobenius(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.degree, self.field.modulus, self.value))

    def __repr__(self):
        return f"{self.field!r}:{self.value}"


_FIELD_CACHE: dict = {}


def field_make(p: int, t: int, modulus=None) -> Field:
    """Construct (or fetch the memoized) F_{p^t}.

    ``modulus`` is an optional coefficient sequence of length t + 1,
    constant term first, monic.  When omitted the deterministic smallest
    irreducible is used.  Raises NotPrime, ReducibleModulus or
    BudgetExceeded on bad input.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise NotPrime(f"characteristic {p} is not prime")
    if not isinstance(t, int) or t < 1:
        raise ReducibleModulus(f"extension degree {t} must be a positive integer")
    if p ** t > FIELD_SIZE_LIMIT:
        raise BudgetExceeded(f"field order {p}^{t} exceeds limit {FIELD_SIZE_LIMIT}")
    key = (p, t, tuple(c % p for c in modulus) if modulus is not None else None)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached
    if modulus is None:
        mod = _smallest_irreducible(p, t)
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != t + 1 or mod[-1] != 1:
            raise ReducibleModulus(
                f"modulus must be monic of degree {t} (got {len(mod) - 1} coefficients + leading)"
            )
        if not _is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {list(mod)} is reducible over F_{p}")
    fld = _FIELD_CACHE.get((p, t, mod))
    if fld is None:
        fld = Field(p, t, mod)
        _FIELD_CACHE[(p, t, mod)] = fld
    _FIELD_CACHE[key] = fld
    return fld


def trace_to_prime(x: FieldElement) -> FieldElement:
    """Absolute trace tr(x) = x + x^p + ... + x^{p^{t-1}}, as an F_p element."""
    prime = field_make(x.field.p, 1)
    return FieldElement(prime, x.field.trace_int(x.value))


def embed(x: FieldElement, target: Field) -> FieldElement:
    """Image of x under the canonical embedding of its field into ``target``."""
    table = target.embed_table(x.field)
    return FieldElement(target, table[x.value])


# --- field spec files ---------------------------------------------------
# Line 1: "p t".  Optional line 2: "t+1 modulus coefficients, constant first".


def field_from_spec(text: str) -> Field:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty field spec")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("field spec header must be 'p t'")
    p, t = int(head[0]), int(head[1])
    modulus = None
    if len(lines) > 1:
        modulus = [int(c) for c in lines[1].split()]
    return field_make(p, t, modulus)


def field_to_spec(field: Field) -> str:
    return f"{field.p} {field.degree}\n{' '.join(str(c) for c in field.modulus)}\n"
