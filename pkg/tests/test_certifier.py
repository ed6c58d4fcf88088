import random
from fractions import Fraction

import mpmath
import pytest

from conftest import MP, mp_eval
from wilkercert.certifier import (
    BEST_CONSTANT_FAMILIES,
    CASES,
    CATALOG,
    DOMINANCE_PAIRS,
    HALF_PI_DOMAIN,
    INCONCLUSIVE,
    PROVED,
    REFUTED,
    CertifyConfig,
    adverse_scale,
    all_best_constants,
    best_constants,
    certified_decimal,
    certify_sign,
    get_case,
    grid_nodes,
    sweep,
)
from wilkercert.enclosure import Interval
from wilkercert.kernels import ExpressionId

# ---- catalog ----------------------------------------------------------------------


def test_catalog_ids_unique_and_closed():
    assert len(CATALOG) == len(CASES)
    for s, w in DOMINANCE_PAIRS:
        assert s in CATALOG and w in CATALOG


def test_every_case_builds_its_gap():
    for case in CASES:
        n = None if case.n_range is None else case.n_range[0]
        ExpressionId(case.gap, n)


def test_case_parameter_checks():
    with pytest.raises(ValueError):
        certify_sign("wilker-family-lower", 2)
    with pytest.raises(ValueError):
        certify_sign("wilker", 3)
    with pytest.raises(KeyError):
        get_case("nope")


def test_config_validation():
    with pytest.raises(ValueError):
        CertifyConfig(max_depth=0)
    with pytest.raises(ValueError):
        CertifyConfig(precision_schedule=(16,))
    with pytest.raises(ValueError):
        CertifyConfig(delta0=Fraction(3, 4))


# ---- certification ------------------------------------------------------------------


def test_catalog_statuses_match_expectations(catalog_certificates):
    wrong = {k: c.status for k, c in catalog_certificates.items() if c.status != get_case(k[0]).expected}
    assert not wrong


def _x_of(leaf_bound: str, hp: Fraction) -> Fraction:
    if leaf_bound == "pi/2":
        return hp
    if leaf_bound.startswith("pi/2 - "):
        return hp - Fraction(leaf_bound[len("pi/2 - "):])
    return Fraction(leaf_bound)


def test_proved_leaves_cover_the_domain(catalog_certificates):
    for (cid, n), cert in catalog_certificates.items():
        if cert.status != PROVED:
            continue
        zones = {}
        for leaf in cert.leaves:
            zones.setdefault(leaf.zone, []).append((leaf.lo, leaf.hi))
            assert leaf.sign == 1
        for zone, spans in zones.items():
            spans.sort()
            assert spans[0][0] == (0 if zone != "interior" else spans[0][0])
            for (a, b), (c, d) in zip(spans, spans[1:]):
                assert b == c, (cid, zone)
        zero_hi = max(b for _, b in zones["zero"])
        assert min(a for a, _ in zones["interior"]) == zero_hi
        if get_case(cid).domain_hi == HALF_PI_DOMAIN:
            # the interior ends past pi/2 - delta, where the t-zone takes over
            interior_hi = max(b for _, b in zones["interior"])
            t_hi = max(b for _, b in zones["pi_half"])
            assert Fraction(314159265, 200000000) - t_hi <= interior_hi


def test_certificate_is_deterministic():
    a = certify_sign("huygens-sharp-upper").to_dict(timing=False)
    b = certify_sign("huygens-sharp-upper").to_dict(timing=False)
    assert a == b


def test_certificate_json_shape():
    d = certify_sign("wilker").to_dict()
    assert set(d) >= {"case", "params", "status", "leaves", "endpoints", "stats"}
    assert set(d["leaves"][0]) >= {"lo", "hi", "precision", "sign"}
    assert set(d["endpoints"]["zero"]) >= {"delta", "valuation", "leading"}
    assert "form" in d["endpoints"]["pi_half"]
    assert set(d["stats"]) >= {"nodes", "seconds"}


def test_reversed_sharp_lower_bound_is_refuted():
    # the sharp lower constant used as an upper one, on (0, 1)
    cert = certify_sign("wilker-quartic-upper")
    assert cert.status == REFUTED
    x = cert.witness
    assert 0 < x < 1 and x.denominator <= 2**16
    assert mp_eval(ExpressionId("wilker-quartic-upper"), x, 512) < 0
    lo, hi = cert.witness_value
    assert hi < 0


def test_shallow_depth_is_inconclusive():
    cert = certify_sign("kernel-g", config=CertifyConfig(max_depth=1, precision_schedule=(32,)))
    assert cert.status == INCONCLUSIVE
    assert cert.note


@pytest.mark.parametrize("case_id,n", [("tan-tail-lower", 1), ("tan-tail-upper", 3),
                                       ("wilker-sharp-lower", None), ("huygens2-sharp-upper", None)])
def test_adverse_tightening_refutes(case_id, n):
    s = adverse_scale(case_id, n)
    assert s in (Fraction(1001, 1000), Fraction(999, 1000))
    cert = certify_sign(case_id, n, scale=s)
    assert cert.status == REFUTED
    assert mp_eval(ExpressionId(case_id, n, s), cert.witness, 512) < 0


def test_soundness_spot_check(catalog_certificates):
    """10 000 random 512-bit points per proved certificate have a positive gap."""
    bad = []
    with mpmath.workprec(512):
        hp = mpmath.pi / 2
        for (cid, n), cert in catalog_certificates.items():
            if cert.status != PROVED:
                continue
            case = get_case(cid)
            hi = hp if case.domain_hi == HALF_PI_DOMAIN else mpmath.mpf(case.domain_hi.numerator) / case.domain_hi.denominator
            fn = ExpressionId(case.gap, n).fn
            rng = random.Random(hash((cid, n)) & 0xFFFF)
            for _ in range(10_000):
                x = hi * (mpmath.mpf(rng.getrandbits(512) | 1) / mpmath.mpf(2) ** 512)
                if not fn(MP, x) > 0:
                    bad.append((cid, n, x))
                    break
    assert not bad


# ---- best constants -----------------------------------------------------------------


@pytest.mark.parametrize("case,zero,dec_zero,dec_half", [
    ("wilker-sharp", Fraction(16, 14175), "0.001128", "0.001209"),
    ("wilker2-sharp", Fraction(4, 1575), "0.002539", "0.004727"),
    ("huygens-sharp", Fraction(23, 33600), "0.000684", "0.000894"),
    ("huygens2-sharp", Fraction(83, 100800), "0.0008234", "0.0012901"),
])
def test_best_constants(case, zero, dec_zero, dec_half):
    p = best_constants(case)
    assert p.at_zero == zero
    assert certified_decimal(Interval.from_fraction(p.at_zero, 128)).startswith(dec_zero)
    assert certified_decimal(p.at_pi_half_enclosure).startswith(dec_half)
    assert p.printed_match and p.series_match and p.cross_check_ok
    assert (p.inf_at, p.sup_at) == ("0", "pi/2")


def test_best_constant_limit_against_mpmath_near_half_pi():
    p = best_constants("wilker-sharp")
    with mpmath.workprec(256):
        x = mpmath.pi / 2 - mpmath.mpf(2) ** -30
        v = mp_eval(ExpressionId("f"), x, 256)
        assert abs(v - p.at_pi_half.evalf(mpmath.pi)) < mpmath.mpf(2) ** -25


def test_tan_tail_constants():
    for n in range(1, 5):
        p = best_constants("tan-tail", n)
        assert p.printed_match and p.series_match and p.cross_check_ok
    with pytest.raises(ValueError):
        best_constants("tan-tail")


def test_all_best_constants_families():
    labels = [p.label for p in all_best_constants(range(1, 3))]
    assert labels[:4] == list(BEST_CONSTANT_FAMILIES[:4])
    assert labels[4:] == ["tan-tail[n=1]", "tan-tail[n=2]"]


def test_certified_decimal_truncates():
    iv = Interval.from_endpoints(Fraction(12345, 10**7), Fraction(12349, 10**7), 64)
    assert certified_decimal(iv) == "0.001234..."
    assert certified_decimal(Interval.from_endpoints(-1, 1, 64)) == "0?"
    assert certified_decimal(Interval.from_fraction(Fraction(-5, 4), 64)).startswith("-1.25")


# ---- sweeps -------------------------------------------------------------------------


def test_trivial_two_node_sweep():
    res = sweep("wilker-sharp", grid_points=2)
    assert len(res.rows) == 2
    assert res.all_positive()


def test_grid_excludes_endpoints():
    nodes = grid_nodes(3, HALF_PI_DOMAIN, 64)
    assert len(nodes) == 3
    assert nodes[0].lo_fraction() > 0 and nodes[-1].hi_fraction() < Fraction(157, 100)
    with pytest.raises(ValueError):
        grid_nodes(1, HALF_PI_DOMAIN, 64)


def test_chain_sweep_all_positive():
    res = sweep("chain", grid_points=200)
    assert res.all_positive()
    assert sorted(res.rows[0].extra) == ["chain-2", "chain-3", "chain-4", "chain-5", "chain-6"]


def test_sharp_wilker_lower_versus_classic_lower_on_1000_nodes():
    res = sweep("wilker-sharp", grid_points=1000)
    assert res.all_positive()
    summary = res.dominance_summary()
    pair = "wilker-sharp-lower/wilker-classic-lower"
    # the sharp lower bound is the stronger one except close to pi/2,
    # where its x^4 coefficient tends to b = 0.16376... < (2/pi)^4 = 0.16425...
    assert summary[pair]["undecided"] == 0
    failing = [r.x for r in res.rows if r.dominance[pair] == "no"]
    assert failing and min(x.lo_fraction() for x in failing) > Fraction(3, 2)
    holding = [r.x for r in res.rows if r.dominance[pair] == "yes"]
    assert max(x.hi_fraction() for x in holding) < min(x.lo_fraction() for x in failing)
    for other in ("wilker-sharp-upper/wilker-classic-upper", "wilker-sharp-lower/wilker-x4-lower",
                  "wilker-sharp-upper/wilker-x4-upper"):
        assert summary[other]["yes"] == 1000


def test_huygens_sharp_bounds_dominate_cubic_ones():
    res = sweep("huygens-sharp", grid_points=100)
    for counts in res.dominance_summary().values():
        assert counts["yes"] == 100
