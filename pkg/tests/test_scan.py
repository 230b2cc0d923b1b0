"""Finite-field scans checked against a repeated-addition oracle."""

import pytest

from x1torsion import (
    DEFAULT_GONALITIES,
    BudgetError,
    FieldDescriptor,
    GonalityTable,
    Poly,
    ScanHit,
    TateParams,
    find_irreducible,
    format_hit_line,
    low_degree_filter,
    place_degree,
    point_count,
    hit_record,
    scan_fp,
    summary_record,
    tate_curve,
)

from support import naive_scan


def hit_coords(hits):
    return {(h.b.flat_coords(), h.c.flat_coords()) for h in hits}


# -------------------------------------------------------------- oracle match

@pytest.mark.parametrize("p,n", [(5, 4), (7, 5), (2, 37), (3, 7), (11, 6), (13, 9)])
def test_scan_matches_naive_oracle(p, n):
    hits = scan_fp(p, 1, n)
    assert hit_coords(hits) == naive_scan(p, n)
    for h in hits:
        assert h.order == n and h.p == p and h.d == 1 and h.place_degree == 1


def test_scan_order_four_is_c_zero_locus():
    for h in scan_fp(5, 1, 4):
        assert h.c.is_zero() and not h.b.is_zero()


def test_scan_order_five_is_diagonal_locus():
    hits = scan_fp(7, 1, 5)
    assert len(hits) == 6
    for h in hits:
        assert h.b == h.c and not h.b.is_zero()


def test_scan_no_rational_37_torsion_over_f2():
    assert scan_fp(2, 1, 37) == []


def test_scan_results_sorted_deterministically():
    hits = scan_fp(11, 1, 6)
    assert hits == sorted(hits, key=lambda h: h.sort_key())
    assert hits == scan_fp(11, 1, 6)


# ---------------------------------------------------------- extension fields

def test_scan_extension_field_frobenius_closed():
    hits = scan_fp(3, 2, 8)
    assert len(hits) == 4
    found = hit_coords(hits)
    q = 3
    for h in hits:
        frob_b, frob_c = h.b ** q, h.c ** q
        assert (frob_b.flat_coords(), frob_c.flat_coords()) in found
        assert h.place_degree in (1, 2)


def test_scan_extension_contains_prime_field_hits():
    base = hit_coords(scan_fp(5, 1, 4))
    ext = scan_fp(5, 2, 4)
    # every F_5 hit reappears in F_25 with place degree 1
    lifted = {
        (h.b.flat_coords(), h.c.flat_coords())
        for h in ext
        if h.place_degree == 1
    }
    embedded = {((b, 0), (c, 0)) for (b,), (c,) in ((bb, cc) for bb, cc in base)}
    assert embedded <= lifted


def test_scan_explicit_modulus_matches_generated_one():
    auto = scan_fp(3, 2, 8)
    explicit = scan_fp(3, 2, 8, modpoly=find_irreducible(3, 2))
    assert [format_hit_line(h) for h in auto] == [format_hit_line(h) for h in explicit]


def test_scan_modpoly_validation():
    f3 = FieldDescriptor.prime_field(3)
    reducible = Poly.make(f3, [2, 0, 1])  # x^2 + 2 = (x+1)(x+2) mod 3
    with pytest.raises(ValueError):
        scan_fp(3, 2, 8, modpoly=reducible)
    with pytest.raises(ValueError):
        scan_fp(3, 2, 8, modpoly=find_irreducible(3, 3))  # degree mismatch
    with pytest.raises(ValueError):
        scan_fp(3, 1, 8, modpoly=find_irreducible(3, 1))  # modulus given for d = 1


def test_scan_input_validation():
    with pytest.raises(ValueError):
        scan_fp(4, 1, 5)  # not prime
    with pytest.raises(ValueError):
        scan_fp(5, 0, 4)
    with pytest.raises(ValueError):
        scan_fp(5, 1, 0)


# -------------------------------------------------------------- hit sanity

def test_hits_satisfy_lagrange_and_hasse():
    for p, d, n in ((5, 1, 4), (7, 1, 5), (3, 2, 8), (13, 1, 10)):
        q = p ** d
        for h in scan_fp(p, d, n):
            e = tate_curve(TateParams(h.b, h.c))
            count = point_count(e)
            assert count % n == 0
            assert (count - (q + 1)) ** 2 <= 4 * q


def test_parallel_scan_identical_output():
    solo = [format_hit_line(h) for h in scan_fp(7, 1, 5, jobs=1)]
    duo = [format_hit_line(h) for h in scan_fp(7, 1, 5, jobs=2)]
    assert solo == duo


def test_budget_refusal():
    with pytest.raises(BudgetError):
        scan_fp(10007, 2, 5)
    with pytest.raises(BudgetError):
        scan_fp(101, 1, 4, budget=100)
    # exactly at budget is allowed
    assert isinstance(scan_fp(3, 1, 5, budget=81), list)


# ------------------------------------------------------------- place degree

def test_place_degree_prime_subfield():
    desc = FieldDescriptor.prime_field(5, [("u", [2, 0, 1])])
    two = desc.from_int(2)
    assert place_degree(two, two) == 1
    u = desc.gen(0)
    assert place_degree(u, two) == 2
    assert place_degree(two, u) == 2


def test_place_degree_divides_extension_degree():
    modulus = [int(c.coords) for c in find_irreducible(2, 4).coeffs]
    desc = FieldDescriptor.prime_field(2, [("u", modulus)])
    for b in desc.iter_elements():
        deg = place_degree(b, desc.one())
        assert 4 % deg == 0
        assert b ** (2 ** deg) == b


# ------------------------------------------------------------- point counts

def test_point_count_small_curves():
    f7 = FieldDescriptor.prime_field(7)
    e = tate_curve(TateParams(f7.one(), f7.one()))
    assert point_count(e) == 10  # divisible by 5, per Lagrange
    f5 = FieldDescriptor.prime_field(5)
    e4 = tate_curve(TateParams(f5.one(), f5.zero()))
    assert point_count(e4) % 4 == 0


def test_point_count_refuses_singular():
    f11 = FieldDescriptor.prime_field(11)
    e = tate_curve(TateParams(f11.one(), f11.one()))  # disc = -11 = 0 here
    assert e.is_singular()
    with pytest.raises(ValueError):
        point_count(e)


def test_point_count_budget():
    f101 = FieldDescriptor.prime_field(101)
    e = tate_curve(TateParams(f101.one(), f101.one()))
    with pytest.raises(BudgetError):
        point_count(e, budget=100)


def test_point_count_representation_independent():
    f7 = FieldDescriptor.prime_field(7)
    tower = FieldDescriptor.prime_field(7, [("t", [4, 1])])  # t = 3, still F_7
    plain = tate_curve(TateParams(f7.one(), f7.one()))
    wrapped = tate_curve(TateParams(tower.from_int(1), tower.from_int(1)))
    assert point_count(plain) == point_count(wrapped)


# ---------------------------------------------------------------- filtering

def test_default_gonalities():
    assert DEFAULT_GONALITIES == {29: 11, 31: 12, 37: 18}


def test_gonality_table_api():
    table = GonalityTable()
    assert table.known() == [29, 31, 37]
    assert table.get(29) == 11 and table.get(6) is None
    extended = GonalityTable.with_extra({41: 22})
    assert extended.get(41) == 22 and table.get(41) is None
    with pytest.raises(KeyError) as info:
        table.require(6)
    assert "29" in str(info.value)
    with pytest.raises(ValueError):
        GonalityTable(entries=((29, 0),))


def fake_hit(p, d, pdeg):
    desc = FieldDescriptor.prime_field(p)
    return ScanHit(p=p, d=d, b=desc.one(), c=desc.one(), order=29, place_degree=pdeg)


def test_low_degree_filter_strict_boundary():
    hits = [fake_hit(3, 12, pdeg) for pdeg in (1, 10, 11, 12)]
    kept = low_degree_filter(hits, 29)
    assert [h.place_degree for h in kept] == [1, 10]  # 11 is not < 11


def test_low_degree_filter_empty_and_order_preserving():
    assert low_degree_filter([], 37) == []
    hits = [fake_hit(3, 12, pdeg) for pdeg in (5, 2, 9)]
    assert [h.place_degree for h in low_degree_filter(hits, 31)] == [5, 2, 9]


def test_low_degree_filter_unknown_order():
    with pytest.raises(KeyError):
        low_degree_filter([fake_hit(3, 1, 1)], 8)
    kept = low_degree_filter([fake_hit(3, 1, 1)], 8, override=2)
    assert len(kept) == 1
    assert low_degree_filter([fake_hit(3, 1, 1)], 8, override=1) == []


# ------------------------------------------------------------------ records

def test_hit_record_and_line():
    h = scan_fp(5, 1, 4)[0]
    rec = hit_record(h)
    assert list(rec) == ["p", "d", "b", "c", "order", "place_degree"]
    line = format_hit_line(h)
    assert line.startswith('{"p": 5, "d": 1, ') and line.endswith("}")


def test_summary_record():
    hits = scan_fp(5, 1, 4)
    rec = summary_record(5, 1, hits, elapsed=0.25)
    assert rec["pairs_scanned"] == 25
    assert rec["hits"] == len(hits)
    assert rec["elapsed_seconds"] == 0.25
