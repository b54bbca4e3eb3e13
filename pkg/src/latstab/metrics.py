"""Quantitative code metrics: energy cost, exact distances (enumeration and
transfer DP), linear distance, and walk-based energy-barrier upper bounds.

Search modes share one target predicate (groups.CodeStructure.is_logical):

  stabilizer  operators in C(S) outside S         (subspace codes)
  subsystem   operators in C(S) outside G         (dressed logicals)
  bare        operators in C(G) outside G         (bare logicals)

A class_mask narrows targets to ones whose used-logical class overlaps the
mask; restricting to the classes outside <S, designated pairs> is exactly the
gauge-qubit distance/barrier, so gauge-qubit modes are expressed as masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .codes import STABILIZER, CodeSpec
from .config import DEFAULT_BUDGETS, Budgets
from .errors import CapacityError, ContractViolation, DimensionError, ValidationError
from .gf2 import nullspace, parity
from .groups import CodeStructure, get_structure
from .pauli import PauliOp

_LETTERS = ("X", "Y", "Z")


def energy_cost(code: CodeSpec, op: PauliOp) -> int:
    """Twice the number of declared Hamiltonian terms anticommuting with op."""
    return get_structure(code).energy(op)


# ---------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class DistanceResult:
    value: Optional[int]
    status: str  # exact | lower_bound | no_logicals
    mode: str
    method: str
    witness: Optional[PauliOp] = None
    lower_bound: Optional[int] = None
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class WalkTrace:
    """Single-qubit walk: cumulative operators differ on one qubit per step."""

    steps: Tuple[Tuple[int, str], ...]
    profile: Tuple[int, ...]  # energy after each step
    eps_max: int
    final: PauliOp

    @staticmethod
    def build(structure: CodeStructure, steps: Sequence[Tuple[int, str]]) -> "WalkTrace":
        n = structure.n
        synd = 0
        op = PauliOp.identity(n)
        profile = []
        for q, letter in steps:
            step_op = PauliOp.single(n, q, letter)
            synd ^= structure.syndrome(step_op)
            op = op.mul(step_op)
            profile.append(2 * synd.bit_count())
        return WalkTrace(
            steps=tuple(steps),
            profile=tuple(profile),
            eps_max=max(profile, default=0),
            final=op,
        )

    def validate(self, structure: CodeStructure):
        rebuilt = WalkTrace.build(structure, self.steps)
        assert rebuilt.profile == self.profile and rebuilt.final == self.final
        assert self.eps_max == max(self.profile, default=0)


@dataclass(frozen=True)
class BarrierResult:
    value: Optional[int]
    status: str  # exact | upper_bound | no_logicals
    method: str  # exact_bottleneck | walk_row_by_row | walk_arbitrary | walk_given_order
    witness: Optional[WalkTrace] = None
    stats: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# brute-force distance


def _detector_rows(st: CodeStructure, mode: str) -> Tuple[int, ...]:
    if mode not in ("bare", "stabilizer", "subsystem"):
        raise ValidationError(f"unknown mode {mode!r}")
    if mode == "bare" or st.code.role == STABILIZER:
        return st.gen_omega
    return st.stab_omega


def _target_ok(cls: int, class_mask: Optional[int]) -> bool:
    if class_mask is not None:
        return bool(cls & class_mask)
    return cls != 0


def distance_bruteforce(
    code: CodeSpec,
    mode: str = "subsystem",
    weight_cap: Optional[int] = None,
    class_mask: Optional[int] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> DistanceResult:
    """Exact distance by weight-ordered enumeration of supports and letters.

    Returns the first (minimum-weight) operator passing the target predicate;
    if the cap is exhausted first, a typed lower-bound result (d > cap).
    """
    st = get_structure(code)
    if st.k == 0:
        return DistanceResult(None, "no_logicals", mode, "bruteforce")
    cap = weight_cap if weight_cap is not None else budgets.weight_cap
    n = code.n
    det_rows = _detector_rows(st, mode)
    det = [[0] * 3 for _ in range(n)]
    cls = [[0] * 3 for _ in range(n)]
    for q in range(n):
        for li, letter in enumerate(_LETTERS):
            v = PauliOp.single(n, q, letter).vector
            det[q][li] = sum(parity(v & row) << i for i, row in enumerate(det_rows))
            cls[q][li] = st.class_bits_vec(v)
    examined = 0
    for w in range(1, cap + 1):
        for support in combinations(range(n), w):
            # depth-first over the 3^w letter assignments
            stack = [(0, 0, 0, ())]
            while stack:
                pos, dacc, cacc, letters = stack.pop()
                if pos == w:
                    examined += 1
                    if dacc == 0 and _target_ok(cacc, class_mask):
                        witness = PauliOp.from_letters(
                            n, [(q, _LETTERS[li]) for q, li in zip(support, letters)]
                        )
                        return DistanceResult(
                            w, "exact", mode, "bruteforce", witness=witness,
                            stats={"examined": examined},
                        )
                    continue
                q = support[pos]
                for li in (2, 1, 0):  # stack pops X first
                    stack.append((pos + 1, dacc ^ det[q][li], cacc ^ cls[q][li], letters + (li,)))
    return DistanceResult(
        None, "lower_bound", mode, "bruteforce",
        lower_bound=cap + 1, stats={"examined": examined},
    )


# ---------------------------------------------------------------------------
# transfer dynamic programming


def _color_intervals(first: List[int], last: List[int]) -> Tuple[List[int], int]:
    """Assign each [first, last] interval a bit position so that intervals
    sharing a position never overlap (greedy interval-graph coloring)."""
    import heapq

    order = sorted(range(len(first)), key=lambda i: (first[i], last[i], i))
    colors = [0] * len(first)
    active: List[Tuple[int, int]] = []  # (last, color)
    free: List[int] = []
    next_color = 0
    for i in order:
        while active and active[0][0] < first[i]:
            _, c = heapq.heappop(active)
            heapq.heappush(free, c)
        if free:
            c = heapq.heappop(free)
        else:
            c = next_color
            next_color += 1
        colors[i] = c
        heapq.heappush(active, (last[i], c))
    return colors, next_color


def distance_dp(
    code: CodeSpec,
    axis: int = 0,
    mode: str = "subsystem",
    class_mask: Optional[int] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> DistanceResult:
    """Exact distance by sweeping qubits along an axis.

    The DP state is (partial anticommutation bits of the detector rows whose
    support window is still open across the sweep front, partial logical-class
    bits); a detector row's bit must be zero when its window closes.  Rows with
    disjoint windows share a state bit, so the front is exponential only in
    the cut size.  Equal to distance_bruteforce wherever both run.
    """
    import numpy as np

    st = get_structure(code)
    if st.k == 0:
        return DistanceResult(None, "no_logicals", mode, "dp")
    n = code.n
    if not 0 <= axis < code.lattice.D:
        raise DimensionError(f"axis {axis} outside 0..{code.lattice.D - 1}")
    order = sorted(range(n), key=lambda q: (code.anchor(q)[axis], code.anchor(q), q))
    pos_of = {q: p for p, q in enumerate(order)}
    det_rows = [r for r in _detector_rows(st, mode) if r]
    cls_rows = list(st.class_omega)
    mask_n = (1 << n) - 1

    first, last = [], []
    for row in det_rows:
        supp = (row & mask_n) | (row >> n)
        ps = [pos_of[q] for q in range(n) if (supp >> q) & 1]
        first.append(min(ps))
        last.append(max(ps))
    bit_of, det_width = _color_intervals(first, last)
    nbits = det_width + len(cls_rows)
    if nbits > 62:
        raise CapacityError(
            f"transfer DP front needs {nbits} state bits (cut too wide)",
            required=nbits, cap=62,
        )

    # per position: letter contribution masks and the close mask
    contribs = []
    closes = []
    for p, q in enumerate(order):
        row_ids = [i for i in range(len(det_rows)) if first[i] <= p <= last[i]]
        per_letter = [0]
        for letter in _LETTERS:
            v = PauliOp.single(n, q, letter).vector
            c = 0
            for i in row_ids:
                c |= parity(v & det_rows[i]) << bit_of[i]
            for j, row in enumerate(cls_rows):
                c |= parity(v & row) << (det_width + j)
            per_letter.append(c)
        contribs.append(per_letter)
        close = 0
        for i in range(len(det_rows)):
            if last[i] == p:
                close |= 1 << bit_of[i]
        closes.append(close)

    keys = np.zeros(1, dtype=np.uint64)
    weights = np.zeros(1, dtype=np.uint16)
    trail = []
    peak = 1
    for p in range(n):
        close = np.uint64(closes[p])
        cand_k, cand_w = [], []
        for li in range(-1, 3):
            c = np.uint64(0) if li < 0 else np.uint64(contribs[p][li + 1])
            nk = keys ^ c
            ok = (nk & close) == 0
            cand_k.append(nk[ok])
            cand_w.append(weights[ok] + (0 if li < 0 else 1))
        ck = np.concatenate(cand_k)
        cw = np.concatenate(cand_w)
        srt = np.lexsort((cw, ck))
        ck, cw = ck[srt], cw[srt]
        keep = np.ones(len(ck), dtype=bool)
        keep[1:] = ck[1:] != ck[:-1]
        keys, weights = ck[keep], cw[keep]
        peak = max(peak, len(keys))
        if len(keys) > budgets.dp_state_cap:
            raise CapacityError(
                f"transfer DP front has {len(keys)} states at position {p}",
                required=len(keys), cap=budgets.dp_state_cap,
            )
        trail.append((keys, weights))

    cls_vals = (keys >> np.uint64(det_width)).astype(np.int64)
    sel = cls_vals != 0 if class_mask is None else (cls_vals & class_mask) != 0
    if not sel.any():
        return DistanceResult(None, "no_logicals", mode, "dp")
    cand = np.flatnonzero(sel)
    best_i = cand[int(np.argmin(weights[cand]))]
    best_key = np.uint64(keys[best_i])
    best_w = int(weights[best_i])

    # backward reconstruction: XOR transitions are invertible, so search the
    # previous front for a predecessor with the matching weight
    letters = []
    key, w = best_key, best_w
    for p in range(n - 1, -1, -1):
        pk_arr, pw_arr = trail[p - 1] if p else (np.zeros(1, np.uint64),
                                                 np.zeros(1, np.uint16))
        for li in range(-1, 3):
            c = np.uint64(0) if li < 0 else np.uint64(contribs[p][li + 1])
            cost = 0 if li < 0 else 1
            if w - cost < 0:
                continue
            prev = key ^ c
            i = int(np.searchsorted(pk_arr, prev))
            if i < len(pk_arr) and pk_arr[i] == prev and int(pw_arr[i]) == w - cost:
                letters.append(li)
                key, w = prev, w - cost
                break
        else:
            raise AssertionError("DP reconstruction lost the optimal path")
    letters.reverse()
    witness = PauliOp.from_letters(
        n, [(order[p], _LETTERS[li]) for p, li in enumerate(letters) if li >= 0]
    )
    assert witness.weight() == best_w
    assert st.is_logical(witness, "subsystem" if mode == "stabilizer" else mode, class_mask)
    return DistanceResult(best_w, "exact", mode, "dp", witness=witness,
                          stats={"front_peak": peak})


# ---------------------------------------------------------------------------
# linear distance (minimal axis window containing a logical)


def _window_logical_vectors(st: CodeStructure, qubit_mask: int, mode: str) -> List[int]:
    """Basis vectors supported on the masked qubits commuting with the mode's
    detector rows (stabilizer group or whole gauge group)."""
    n = st.n
    det_rows = _detector_rows(st, mode)
    qubits = [q for q in range(n) if (qubit_mask >> q) & 1]
    cols = [q for q in qubits] + [n + q for q in qubits]
    comp = []
    for row in det_rows:
        comp.append(sum(((row >> c) & 1) << j for j, c in enumerate(cols)))
    out = []
    for v in nullspace(comp, len(cols)):
        lifted = 0
        for j, c in enumerate(cols):
            if (v >> j) & 1:
                lifted |= 1 << c
        out.append(lifted)
    return out


@dataclass(frozen=True)
class LinearDistanceResult:
    value: Optional[int]
    status: str
    mode: str
    axis: int
    witness: Optional[PauliOp] = None


def linear_distance(
    code: CodeSpec,
    axis: int = 0,
    mode: str = "subsystem",
    class_mask: Optional[int] = None,
) -> LinearDistanceResult:
    """Exact minimal axis-window width carrying a logical operator.

    Scans window widths in increasing order; for each placement the window
    logicals are read off a nullspace computation, so the scan is exact with
    no weight enumeration.
    """
    from .geometry import axis_window_region

    st = get_structure(code)
    if st.k == 0:
        return LinearDistanceResult(None, "no_logicals", mode, axis)
    lat = code.lattice
    for width in range(1, lat.L + 1):
        starts = range(lat.L) if lat.periodic and width < lat.L else range(lat.L - width + 1)
        hits = []
        for start in starts:
            region = axis_window_region(lat, axis, start, width)
            mask = code.qubit_mask_in(region)
            for v in _window_logical_vectors(st, mask, mode):
                if st.is_logical_vec(v, "subsystem" if mode == "stabilizer" else mode,
                                     class_mask):
                    op = PauliOp.from_vector(code.n, v)
                    hits.append((op.weight(), v, op))
        if hits:
            hits.sort(key=lambda t: (t[0], t[1]))
            return LinearDistanceResult(width, "exact", mode, axis, witness=hits[0][2])
    return LinearDistanceResult(None, "no_logicals", mode, axis)


# ---------------------------------------------------------------------------
# walk-based barrier upper bounds


def barrier_walk_bound(
    code: CodeSpec,
    witness: PauliOp,
    schedule: str = "row_by_row",
    axis: int = 0,
    order: Optional[Sequence[int]] = None,
    mode: str = "subsystem",
) -> BarrierResult:
    """Energy ceiling of the walk implementing the witness letter by letter.

    row_by_row applies the letters in cross-coordinate-major order (the walk
    sweeps along the witness string so only its moving front costs energy);
    arbitrary applies them in qubit-index order; an explicit order wins.
    """
    st = get_structure(code)
    if not st.is_logical(witness, mode):
        raise ContractViolation("walk witness is not a logical operator for this mode")
    support = witness.support()
    if order is not None:
        if sorted(order) != support:
            raise ContractViolation("explicit order must permute the witness support")
        ordered = list(order)
        method = "walk_given_order"
    elif schedule == "row_by_row":
        def key(q):
            a = code.anchor(q)
            cross = tuple(a[j] for j in range(code.lattice.D) if j != axis)
            return (cross, a[axis], q)

        ordered = sorted(support, key=key)
        method = "walk_row_by_row"
    elif schedule == "arbitrary":
        ordered = support
        method = "walk_arbitrary"
    else:
        raise ValidationError(f"unknown schedule {schedule!r}")
    trace = WalkTrace.build(st, [(q, witness.letter(q)) for q in ordered])
    assert trace.final == witness
    return BarrierResult(trace.eps_max, "upper_bound", method, witness=trace)
