import pytest

from latstab import (
    PauliOp,
    clean_stabilizer,
    clean_subsystem,
    compress_qubits,
    get_structure,
    make_bacon_shor_2d,
    make_heisenberg_gauge,
    make_repetition_1d,
    make_steane_chain,
    make_surface_2d,
    make_toric_2d,
    minimal_block_search,
    restriction_audit,
    strip_sweep,
)
from latstab.errors import ContractViolation, NoLogicalQubitsError
from latstab.geometry import Region

from conftest import random_centralizer_element


def test_clean_disjoint_region_is_identity_multiplier():
    code = make_toric_2d(3)
    st = get_structure(code)
    zbar = st.logicals.pairs[0][1]
    rows = {code.anchor(q)[1] for q in zbar.support()}
    other_row = (max(rows) + 1) % 3
    region = Region.from_sites(code.lattice, [(x, other_row) for x in range(3)])
    if code.qubit_mask_in(region) & zbar.support_mask():
        pytest.skip("region overlaps the logical; pick a different row")
    res = clean_stabilizer(code, zbar, region)
    assert res.outcome == "cleaned"
    assert res.stabilizer.is_identity


def test_clean_deforms_logical_around_region():
    code = make_toric_2d(4)
    st = get_structure(code)
    zbar = st.logicals.pairs[0][1]
    region = Region.from_box(code.lattice, (1, 0), (3, 2))
    assert code.qubit_mask_in(region) & zbar.support_mask()
    res = clean_stabilizer(code, zbar, region)
    assert res.outcome == "cleaned"
    assert res.cleaned.restrict(code.qubit_mask_in(region)).is_identity
    assert st.is_logical(res.cleaned, "subsystem")
    assert st.class_bits(res.cleaned) == st.class_bits(zbar)
    # multiplier uses only generators overlapping the region
    mask = code.qubit_mask_in(region)
    for a in res.generator_indices:
        assert code.generators[a].support_mask() & mask


def test_clean_full_lattice_traps():
    code = make_toric_2d(3)
    st = get_structure(code)
    res = clean_stabilizer(code, st.logicals.pairs[0][1], Region.full(code.lattice))
    assert res.outcome == "trapped_logical"
    assert st.is_logical(res.trapped, "subsystem")


def test_clean_contract_violation():
    code = make_toric_2d(2)
    with pytest.raises(ContractViolation):
        clean_stabilizer(code, PauliOp.single(code.n, 0, "X"), Region.full(code.lattice))


def test_clean_subsystem_moves_bacon_shor_column():
    code = make_bacon_shor_2d(3)
    st = get_structure(code)
    xbar = st.logicals.pairs[0][0]
    top = Region.from_sites(code.lattice, [code.anchor(min(xbar.support()))])
    res = clean_subsystem(code, xbar, top)
    assert res.outcome == "cleaned"
    assert res.cleaned.restrict(code.qubit_mask_in(top)).is_identity
    assert st.stab_syndrome_vec(res.cleaned.vector) == 0
    assert st.class_bits(res.cleaned) == st.class_bits(xbar)
    # the multiplier is a (nonlocal) center element, weight 2L
    assert res.stabilizer.weight() == 6


def test_clean_subsystem_empty_region():
    code = make_bacon_shor_2d(2)
    st = get_structure(code)
    res = clean_subsystem(code, st.logicals.pairs[0][0], Region.empty(code.lattice))
    assert res.outcome == "cleaned" and res.stabilizer.is_identity


def test_randomized_cleaning_postconditions(rng):
    codes = [
        make_repetition_1d(5),
        make_toric_2d(2),
        make_toric_2d(3),
        make_surface_2d(2),
        make_bacon_shor_2d(2),
        make_bacon_shor_2d(3),
        make_heisenberg_gauge(1, 3),
        make_steane_chain(1),
    ]
    for code in codes:
        st = get_structure(code)
        lat = code.lattice
        for _ in range(30):
            region = Region(lat, rng.getrandbits(lat.n_sites))
            mask = code.qubit_mask_in(region)
            if code.role == "stabilizer":
                op = random_centralizer_element(rng, st)
                res = clean_stabilizer(code, op, region)
            else:
                op = random_centralizer_element(rng, st, bare=True)
                res = clean_subsystem(code, op, region)
            if res.outcome == "cleaned":
                assert res.cleaned.restrict(mask).is_identity
                assert res.cleaned == op.mul(res.stabilizer)
                assert st.in_S(res.stabilizer)
            else:
                assert res.trapped.support_mask() & ~mask == 0
                assert st.is_logical(res.trapped, "subsystem")


def test_strip_sweep_certified_across_zoo():
    codes = [
        make_toric_2d(2), make_toric_2d(3), make_toric_2d(5),
        make_surface_2d(2), make_surface_2d(4),
        make_bacon_shor_2d(2), make_bacon_shor_2d(4),
        make_heisenberg_gauge(2, 3),
    ]
    for code in codes:
        st = get_structure(code)
        for axis in (0, 1):
            res = strip_sweep(code, axis=axis)
            assert res.extent <= max(code.declared_r, 2), code.name
            assert st.is_logical(res.witness, "subsystem"), code.name
            assert code.bounding_extent(res.witness, axis) == res.extent


def test_strip_sweep_repetition():
    code = make_repetition_1d(4)
    res = strip_sweep(code, axis=0)
    assert res.extent <= 2


def test_strip_sweep_needs_logicals():
    # a code with k = 0: single qubit fully fixed by its stabilizer
    from latstab import CodeSpec, Lattice

    code = CodeSpec("fixed", Lattice(1, 2), "stabilizer", 2,
                    [PauliOp.single(2, 0, "Z"), PauliOp.single(2, 1, "Z")])
    with pytest.raises(NoLogicalQubitsError):
        strip_sweep(code)


def test_compress_qubits_keeps_locality_and_drops_identities():
    code = make_toric_2d(3)
    region = Region.from_box(code.lattice, (0, 0), (2, 2))
    sub = compress_qubits(code, code.qubit_mask_in(region), "sub")
    assert sub.n == code.qubit_mask_in(region).bit_count()
    assert all(not g.is_identity for g in sub.generators)


def test_restriction_audit_disk_and_full():
    code = make_toric_2d(3)
    disk = Region.from_box(code.lattice, (0, 0), (2, 2))
    res = restriction_audit(code, disk, original_distance=3)
    assert res.case == "no_logicals" and res.holds
    full = restriction_audit(code, Region.full(code.lattice), original_distance=3)
    assert full.case == "distance_bound"
    assert full.d_M == 3 and full.shell_qubits == 0 and full.holds


def test_restriction_audit_randomized_never_violates(rng):
    cases = [
        (make_toric_2d(3), 3),
        (make_repetition_1d(7), 1),
        (make_bacon_shor_2d(3), 3),
        (make_surface_2d(3), 3),
        (make_steane_chain(1), 3),
    ]
    for code, d in cases:
        lat = code.lattice
        for _ in range(40):
            region = Region(lat, rng.getrandbits(lat.n_sites))
            res = restriction_audit(code, region, original_distance=d)
            assert res.holds, (code.name, region.site_coords())


def test_minimal_block_steane_and_heisenberg():
    for nb in (1, 3):
        code = make_steane_chain(nb)
        res = minimal_block_search(code, axis=0)
        assert res.found
        assert res.d_M <= code.declared_r
        assert res.checks["d <= 3r*L^(D-1)"]
        assert res.checks["d <= d_M + shell"]
    for L in (3, 5):
        code = make_heisenberg_gauge(1, L)
        res = minimal_block_search(code, axis=0)
        assert res.found and res.d_M <= code.declared_r
        assert res.d == 1


def test_minimal_block_bacon_shor_strips():
    code = make_bacon_shor_2d(3)
    res = minimal_block_search(code, axis=0)
    assert res.found
    L = code.lattice.L
    assert res.d_M <= code.declared_r * L
    assert res.checks["d <= 3r*L^(D-1)"]
