from fractions import Fraction

import ncg


def frac(s):
    return Fraction(s)


def test_profile_roundtrip():
    p = ncg.Profile(3, "3", [[1], [2], []])
    text = ncg.write_profile(p)
    q = ncg.parse_profile(text)
    assert q.n == 3
    assert frac(q.alpha) == 3
    assert q.strategies == [[1], [2], []]
    assert ncg.write_profile(q) == text


def test_costs_on_a_path():
    # 0-1-2 path, both edges bought by the left endpoint, alpha=3.
    p = ncg.Profile(3, "3", [[1], [2], []])
    assert frac(ncg.player_cost(p, 0)) == 3 + 1 + 2
    assert frac(ncg.player_cost(p, 2)) == 0 + 2 + 1
    assert frac(ncg.social_cost(p)) == 2 * 3 + (3 + 2 + 3)


def test_is_nash_and_witness():
    path = ncg.Profile(3, "3", [[1], [2], []])
    ok, witness = ncg.is_nash(path)
    assert ok and witness is None

    triangle = ncg.Profile(3, "3", [[1], [2], [0]])
    ok, witness = ncg.is_nash(triangle)
    assert not ok
    assert "delta" in witness


def test_best_response():
    p = ncg.Profile(3, "3", [[], [2], []])  # 0 isolated from the 1-2 edge
    cost, strategy = ncg.best_response(p, 0)
    assert strategy == [1]
    assert frac(cost) == 3 + 1 + 2


def test_optimum_and_enumeration():
    assert frac(ncg.optimum_cost(3, "1")) == 9
    nes = ncg.enumerate_ne(3, "3")
    assert len(nes) >= 1
    for p in nes:
        ok, _ = ncg.is_nash(p)
        assert ok


def test_audit_records():
    p = ncg.Profile(3, "3", [[1], [2], []])
    records = ncg.run_audit(p)
    names = [r["name"] for r in records]
    assert names == sorted(names, key=names.index)  # stable order
    assert "distance-spread" in names
    assert all(r["verdict"] in ("pass", "fail", "not-applicable")
               for r in records)


def test_dynamics_from_triangle():
    triangle = ncg.Profile(3, "3", [[1], [2], [0]])
    out = ncg.best_response_dynamics(triangle)
    assert out["status"] == "converged"
    final = out["trajectory"][-1]
    ok, _ = ncg.is_nash(final)
    assert ok
