import copy

import pytest

import cactuslab as cl


def square():
    return cl.graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def test_version():
    assert cl.__version__.count(".") == 2


def test_family_sizes():
    assert len(cl.build_family("GC", 1)["graph"]["vertices"]) == 239
    assert len(cl.build_family("GD", 1)["graph"]["vertices"]) == 267
    with pytest.raises(cl.CactusError):
        cl.build_family("X")


def test_searches_on_small_graphs():
    assert cl.hamilton_cycle(square())["status"] == "FOUND"
    path = cl.hamilton_path(square(), endpoints=("a", "b"))
    assert path["sequence"][0] == "a" and path["sequence"][-1] == "b"
    assert cl.k_tree(square(), 2)["status"] == "FOUND"
    triangle = cl.graph([("a", "b"), ("b", "c"), ("c", "a")])
    # An odd cycle cannot be a block, so the cactus is a spanning path.
    found = cl.spanning_even_cactus(triangle)
    assert found["status"] == "FOUND" and len(found["edges"]) == 2


def test_petersen_has_no_hamilton_cycle():
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    assert cl.hamilton_cycle(cl.graph(outer + inner + spokes))["status"] == "NONE"


def test_prism_hamilton_of_random_cactus():
    g = cl.random_good_cactus(seed=5, max_vertices=12)
    report = cl.analyze_cactus(g)
    assert report["is_cactus"] and report["is_even"] and report["classification"] == "good"
    ones = [v for v, b in report["block_degrees"].items() if b == 1]
    cycle = cl.prism_hamilton(g, ones)
    assert sorted(cycle) == sorted([v + "@a" for v in g["vertices"]] + [v + "@b" for v in g["vertices"]])


def test_builtin_check():
    r = cl.check_lemma("L3")
    assert r["confirmed"]
    with pytest.raises(cl.CactusError):
        cl.check_lemma("L99")


def test_certificate_round_trip():
    cert = cl.certify("kA")
    assert cert["claim"] == "spanning_good_even_cactus"
    assert cl.verify(cert)["holds"]
    broken = copy.deepcopy(cert)
    broken["witness"]["edges"].pop()
    assert not cl.verify(broken)["holds"]
    del broken["claim"]
    assert not cl.verify(broken)["schema_ok"]


def test_prism_certificate():
    cert = cl.certify("prism_GD", 1, budget="2m")
    assert cl.verify(cert)["holds"]
    assert len(cert["witness"]["sequence"]) == 2 * 267
