import exaro


def test_enumeration_counts():
    assert len(exaro.enumerate_by_order(1)) == 1
    assert len(exaro.enumerate_by_order(2)) == 6
    assert len(exaro.enumerate_by_order(3)) == 35


def test_tree_roundtrip_and_eval():
    t = exaro.Tree.from_json('{"vertices":1,"arrows":1,"tau":[],"sigma":[["a0",1]]}')
    assert t.order == 1
    assert t.differential() == "f^i ∂_i"
    assert t.eval("f1 = x1", "2") == ["2"]
    back = exaro.Tree.from_json(t.to_json())
    assert back == t


def test_pairing_worked_value():
    t = exaro.Tree.from_sigma(2, [1, 1, 2], "(a0,a3)(1,2)(a1,a2)")
    assert exaro.pairing(t, t) == "2"
    assert t.symmetry == 2


def test_normal_form():
    twisted = exaro.Tree.from_sigma(3, [1, 2], "(a0,1)(a1,a2)(2,3)")
    nf = twisted.normal_form()
    assert nf.classify()["is_butcher_tree"]
    assert nf in twisted.equivalence_class()


def test_verify_order_two():
    out = exaro.verify(2, seed=3)
    assert out["all_agree"]
    assert len(out["rows"]) == 7
