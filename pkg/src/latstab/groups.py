"""Pauli subgroup machinery over the symplectic GF(2) representation.

Groups are handled projectively as GF(2) row spans of 2n-bit vectors.  The
echelon pivot order is the symplectic column order (X-bits then Z-bits), which
makes membership exponent vectors and every derived basis deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .codes import STABILIZER, CodeSpec
from .errors import ValidationError
from .pauli import PauliOp, omega

_MAX_COSET_ENUM_RANK = 16


class GroupBasis:
    """Independent generating rows of a projective Pauli subgroup."""

    __slots__ = ("n", "rows", "rref_rows", "pivots")

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        kept: List[int] = []
        red, piv = [], []
        for r in rows:
            if not gf2.in_span(r, red, piv):
                kept.append(r)
                red, piv = gf2.rref(red + [r])
        self.rows = tuple(kept)
        self.rref_rows = tuple(red)
        self.pivots = tuple(piv)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains_vec(self, v: int) -> bool:
        return gf2.in_span(v, list(self.rref_rows), list(self.pivots))

    def contains(self, op: PauliOp) -> bool:
        return self.contains_vec(op.vector)

    def member_vec(self, v: int) -> Optional[int]:
        """Coefficient mask over self.rows, or None if v is outside the span."""
        return gf2.solve(list(self.rows), v, 2 * self.n)

    def member(self, op: PauliOp) -> Optional[Tuple[int, ...]]:
        """Unique GF(2) exponent vector of op over the basis rows, or None."""
        mask = self.member_vec(op.vector)
        if mask is None:
            return None
        return tuple((mask >> i) & 1 for i in range(self.rank))

    def ops(self) -> List[PauliOp]:
        return [PauliOp.from_vector(self.n, r) for r in self.rows]

    def __repr__(self):
        return f"GroupBasis(n={self.n}, rank={self.rank})"


def span_basis(n: int, ops: Sequence[PauliOp]) -> GroupBasis:
    """Greedy independent subset of the given generators, in order."""
    for op in ops:
        if op.n != n:
            raise ValidationError(f"operator on {op.n} qubits in an n={n} group")
    return GroupBasis(n, [op.vector for op in ops])


def centralizer(basis: GroupBasis) -> GroupBasis:
    """All Pauli vectors commuting with every row: the symplectic nullspace."""
    n = basis.n
    rows = [omega(r, n) for r in basis.rows]
    return GroupBasis(n, gf2.nullspace(rows, 2 * n))


def center(basis: GroupBasis) -> GroupBasis:
    """Span of the group intersected with its centralizer."""
    cent = centralizer(basis)
    rows = gf2.intersect_spans(list(basis.rows), list(cent.rows), 2 * basis.n)
    return GroupBasis(basis.n, rows)


def restrict_group(basis: GroupBasis, qubit_mask: int) -> GroupBasis:
    """Group of restrictions onto the masked qubits (correct because
    restriction is a homomorphism of the projective group)."""
    m2 = qubit_mask | (qubit_mask << basis.n)
    return GroupBasis(basis.n, [r & m2 for r in basis.rows])


def contained_subgroup(basis: GroupBasis, qubit_mask: int) -> GroupBasis:
    """Subgroup of span elements whose support lies inside the masked qubits."""
    n = basis.n
    out_mask = ~(qubit_mask | (qubit_mask << n))
    outside = [r & out_mask for r in basis.rows]
    rows = []
    for coeff in gf2.left_kernel(outside, 2 * n):
        v = 0
        for i in range(basis.rank):
            if (coeff >> i) & 1:
                v ^= basis.rows[i]
        if v:
            rows.append(v)
    return GroupBasis(n, gf2.rref(rows)[0])


@dataclass(frozen=True)
class LogicalBasis:
    """Anticommuting logical pairs: `pairs` are the protected (used) qubits,
    `gauge_pairs` live inside the gauge group modulo its center."""

    n: int
    pairs: Tuple[Tuple[PauliOp, PauliOp], ...]
    gauge_pairs: Tuple[Tuple[PauliOp, PauliOp], ...]

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def g(self) -> int:
        return len(self.gauge_pairs)


def _coset_reduce(vec: int, rows: Sequence[int], n: int) -> int:
    """Deterministic low-weight representative of vec modulo span(rows).

    Exact (full enumeration) when the span is small, greedy descent otherwise.
    Tie-break: lexicographically smallest vector.
    """
    def wt(v):
        return ((v & ((1 << n) - 1)) | (v >> n)).bit_count()

    rows = list(rows)
    if len(rows) <= _MAX_COSET_ENUM_RANK:
        best = vec
        bw = wt(vec)
        span = [0]
        for r in rows:
            span += [s ^ r for s in span]
        for s in span:
            cand = vec ^ s
            cw = wt(cand)
            if cw < bw or (cw == bw and cand < best):
                best, bw = cand, cw
        return best
    improved = True
    best = vec
    bw = wt(vec)
    while improved:
        improved = False
        for r in rows:
            cand = best ^ r
            cw = wt(cand)
            if cw < bw or (cw == bw and cand < best):
                best, bw = cand, cw
                improved = True
    return best


def _symplectic_pairs(vectors: List[int], n: int) -> List[Tuple[int, int]]:
    """Greedy symplectic Gram-Schmidt over a set of vectors on which the form
    is nondegenerate modulo the ambient radical."""
    def sp(u, v):
        return gf2.parity(u & omega(v, n))

    pool = list(vectors)
    out = []
    while pool:
        v = pool.pop(0)
        partner = None
        for i, u in enumerate(pool):
            if sp(v, u):
                partner = pool.pop(i)
                break
        if partner is None:
            raise ValidationError("degenerate symplectic form on logical candidates")
        cleaned = []
        for u in pool:
            if sp(u, partner):
                u ^= v
            if sp(u, v):
                u ^= partner
            cleaned.append(u)
        pool = cleaned
        out.append((v, partner))
    return out


def _orient_pair(n: int, a: int, b: int) -> Tuple[int, int]:
    """Order a pair as (X-like, Z-like) by X-letter count, stable on ties."""
    xa = (a & ((1 << n) - 1)).bit_count()
    xb = (b & ((1 << n) - 1)).bit_count()
    if xb > xa:
        return b, a
    return a, b


class CodeStructure:
    """Cached group-theoretic decomposition of a code.

    Provides the stabilizer group (center for gauge codes), centralizers, a
    deterministic logical basis split into used and gauge pairs, and the
    linear syndrome / logical-class maps.
    """

    def __init__(self, code: CodeSpec):
        self.code = code
        n = code.n
        self.n = n
        self.gen_vectors = tuple(g.vector for g in code.generators)
        self.gen_omega = tuple(omega(v, n) for v in self.gen_vectors)
        self.G = span_basis(n, code.generators)
        self.CG = centralizer(self.G)
        if code.role == STABILIZER:
            self.S = self.G
            self.CS = self.CG
        else:
            self.S = center(self.G)
            self.CS = centralizer(self.S)
        self.s = self.S.rank
        if (self.G.rank - self.s) % 2:
            raise ValidationError("gauge rank minus center rank must be even")
        self.g = (self.G.rank - self.s) // 2
        self.k = n - self.s - self.g

        def sort_key(v):
            return (PauliOp.from_vector(n, v).weight(), v)

        gauge_cands = sorted(self.G.rows, key=sort_key)
        gauge_ext = gf2.extend_basis(self.S.rows, gauge_cands)
        if len(gauge_ext) != 2 * self.g:
            raise ValidationError("gauge extension has wrong dimension")
        used_cands = sorted(self.CG.rows, key=sort_key)
        used_ext = gf2.extend_basis(list(self.S.rows) + gauge_ext, used_cands)
        if len(used_ext) != 2 * self.k:
            raise ValidationError("logical extension has wrong dimension")

        def build_pairs(vectors):
            pairs = []
            for a, b in _symplectic_pairs(vectors, n):
                a = _coset_reduce(a, self.S.rows, n)
                b = _coset_reduce(b, self.S.rows, n)
                a, b = _orient_pair(n, a, b)
                pairs.append((PauliOp.from_vector(n, a), PauliOp.from_vector(n, b)))
            return tuple(pairs)

        self.logicals = LogicalBasis(
            n=n,
            pairs=build_pairs(used_ext),
            gauge_pairs=build_pairs(gauge_ext),
        )
        self.stab_omega = tuple(omega(r, n) for r in self.S.rows)
        class_rows = []
        for xbar, zbar in self.logicals.pairs:
            class_rows.append(omega(zbar.vector, n))
            class_rows.append(omega(xbar.vector, n))
        self.class_omega = tuple(class_rows)
        gauge_rows = []
        for xbar, zbar in self.logicals.gauge_pairs:
            gauge_rows.append(omega(zbar.vector, n))
            gauge_rows.append(omega(xbar.vector, n))
        self.gauge_class_omega = tuple(gauge_rows)

    # -- linear maps ---------------------------------------------------------

    def syndrome_vec(self, v: int) -> int:
        """Anticommutation bits against the declared generator list."""
        out = 0
        for i, row in enumerate(self.gen_omega):
            out |= gf2.parity(v & row) << i
        return out

    def syndrome(self, op: PauliOp) -> int:
        return self.syndrome_vec(op.vector)

    def energy_vec(self, v: int) -> int:
        return 2 * self.syndrome_vec(v).bit_count()

    def energy(self, op: PauliOp) -> int:
        """Energy cost: twice the number of declared terms anticommuting with op.

        Exact for commuting-generator Hamiltonians; an upper bound on the
        sector gap for non-commuting gauge Hamiltonians.
        """
        return self.energy_vec(op.vector)

    def stab_syndrome_vec(self, v: int) -> int:
        out = 0
        for i, row in enumerate(self.stab_omega):
            out |= gf2.parity(v & row) << i
        return out

    def class_bits_vec(self, v: int) -> int:
        """Pairing with the used logical pairs: bit 2j is the X-bar_j
        component (pairing with Z-bar_j), bit 2j+1 the Z-bar_j component."""
        out = 0
        for i, row in enumerate(self.class_omega):
            out |= gf2.parity(v & row) << i
        return out

    def class_bits(self, op: PauliOp) -> int:
        return self.class_bits_vec(op.vector)

    def gauge_class_bits_vec(self, v: int) -> int:
        out = 0
        for i, row in enumerate(self.gauge_class_omega):
            out |= gf2.parity(v & row) << i
        return out

    # -- membership / targets -------------------------------------------------

    def in_S(self, op: PauliOp) -> bool:
        return self.S.contains(op)

    def in_G(self, op: PauliOp) -> bool:
        return self.G.contains(op)

    def is_logical_vec(self, v: int, mode: str, class_mask: Optional[int] = None) -> bool:
        """Target predicate for distance/barrier searches.

        stabilizer/subsystem: commutes with the stabilizer group and carries a
        used-class component (outside S resp. G).  bare: commutes with the
        whole gauge group and lies outside it.  class_mask restricts targets
        to ones overlapping the given used-class bits.
        """
        if mode in ("stabilizer", "subsystem"):
            if mode == "stabilizer" and self.code.role != STABILIZER:
                raise ValidationError("stabilizer mode on a gauge code; use subsystem")
            if self.stab_syndrome_vec(v):
                return False
        elif mode == "bare":
            if self.syndrome_vec(v):
                return False
        else:
            raise ValidationError(f"unknown mode {mode!r}")
        cls = self.class_bits_vec(v)
        if class_mask is not None:
            return bool(cls & class_mask)
        return cls != 0

    def is_logical(self, op: PauliOp, mode: str = "subsystem",
                   class_mask: Optional[int] = None) -> bool:
        return self.is_logical_vec(op.vector, mode, class_mask)


_structure_cache: Dict[CodeSpec, CodeStructure] = {}


def get_structure(code: CodeSpec) -> CodeStructure:
    if code not in _structure_cache:
        if len(_structure_cache) > 128:
            _structure_cache.clear()
        _structure_cache[code] = CodeStructure(code)
    return _structure_cache[code]


def logical_basis(code: CodeSpec) -> LogicalBasis:
    """Deterministic symplectic basis of logical pairs (used + gauge)."""
    return get_structure(code).logicals
