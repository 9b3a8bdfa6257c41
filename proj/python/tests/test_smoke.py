import json

import pytest

import ekr


def test_star_and_bound():
    p = ekr.Params(4, 2, 2)
    w = ekr.star(p)
    assert len(w) == ekr.bound_value(p) == 6
    assert ekr.is_intersecting(w)
    assert len(ekr.universe(ekr.Params(6, 3, 2))) == 160


def test_signed_set_canonical_form():
    p = ekr.Params(3, 2, 2)
    s = ekr.make_signed_set([(2, 1), (1, 2)], p)
    assert s.pairs == [(1, 2), (2, 1)]
    with pytest.raises(ekr.EkrError) as err:
        ekr.make_signed_set([(1, 1), (1, 2)], p)
    assert err.value.code == "DuplicateElement"
    assert ekr.theta_shift(ekr.make_signed_set([(1, 1), (2, 2)], p), 1, 2).pairs == [(1, 2), (2, 1)]
    assert ekr.mod_star(6, 3) == 3


def test_worked_injection():
    p = ekr.Params(4, 2, 2)
    fam = ekr.SignedFamily(p, [s.pairs for s in ekr.universe(p) if (2, 1) in s])
    cert = ekr.assemble_injection(fam)
    targets = [to.pairs for _, to in cert.mapping]
    assert targets == [
        [(1, 1), (2, 1)],
        [(1, 1), (2, 2)],
        [(1, 1), (4, 1)],
        [(1, 1), (4, 2)],
        [(1, 1), (3, 1)],
        [(1, 1), (3, 2)],
    ]
    assert ekr.verify_certificate(cert)["valid"]
    assert ekr.check_proof_steps(fam)["ok"]
    doc = json.loads(cert.to_json())
    assert doc["blocks"] == {"a0": 4, "a": [1, 1]}
    assert cert.diagnostics["b"] == 4


def test_injection_guards():
    with pytest.raises(ekr.EkrError) as err:
        ekr.assemble_injection(ekr.star(ekr.Params(5, 3, 2)))
    assert err.value.code == "UnsupportedRange"


def test_search_and_random():
    assert ekr.max_intersecting_exact(ekr.Params(6, 3, 2)).max_size == 40
    rep = ekr.verify_bound(ekr.Params(3, 2, 1))
    assert rep.summary() == "max=3 bound=2 VIOLATION(expected: r=1 regime)"
    p = ekr.Params(6, 2, 2)
    a = ekr.random_maximal_intersecting(p, 12)
    assert a == ekr.random_maximal_intersecting(p, 12)
    assert ekr.is_maximal_intersecting(a)
    assert ekr.verify_certificate(ekr.assemble_injection(a))["valid"]
    families, complete = ekr.enumerate_maximal_intersecting(ekr.Params(2, 1, 2), 10)
    assert complete and len(families) == 4


def test_shadow_and_json():
    f = ekr.PlainFamily(5, [[2, 3], [2, 4]])
    assert ekr.shadow_to(f, 1).members == [[2], [3], [4]]
    assert ekr.katona_check(ekr.PlainFamily(3, [[1, 2], [1, 3], [2, 3]]), 1)["holds"]
    line = '{"n":4,"k":2,"r":2,"sets":[[[1,1],[2,2]],[[1,1],[3,1]]]}'
    assert ekr.parse_signed_family(line).to_json() == line
    with pytest.raises(ekr.EkrError):
        ekr.parse_signed_family('{"n":4,"k":2,"r":2,"sets":[[[2,2],[1,1]]]}')
