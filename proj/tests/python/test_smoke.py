try:
    import _core as sublab
except ImportError:  # installed layout
    import sublab


def test_builtin_orders():
    assert sublab.builtin_group("A5").order() == 60
    assert sublab.builtin_group("hol17").order() == 272
    assert sublab.builtin_group("order39").order() == 39


def test_permutation_arithmetic():
    p = sublab.Permutation.from_cycles("(1 2 3)", 3)
    assert p.order() == 3
    assert sublab.compose(p, p.inverse()).cycles() == "()"


def test_class_predicates():
    assert sublab.is_soluble(sublab.builtin_group("S4"))
    assert not sublab.is_soluble(sublab.builtin_group("A5"))
    assert sublab.pt_admissible(5, 2)
    assert not sublab.pt_admissible(17, 3)
    assert sublab.in_class_ht(sublab.builtin_group("hol5"), 2)
    assert not sublab.in_class_ht(sublab.builtin_group("hol5"), 1)


def test_subnormality_query():
    g = sublab.builtin_group("A5")
    h = sublab.PermGroup(
        5,
        [
            sublab.Permutation.from_cycles("(1 2)(3 4)", 5),
            sublab.Permutation.from_cycles("(1 3)(2 4)", 5),
        ],
    )
    verdict, witness = sublab.is_subnormal(g, h, "kpt", 2)
    assert verdict
    assert "order=12" in witness
    verdict, _ = sublab.is_subnormal(g, h, "fsub_uk", 2)
    assert not verdict


def test_residual():
    assert sublab.residual_order(sublab.builtin_group("order39"), 1) == 1
    assert sublab.residual_order(sublab.builtin_group("A5"), 2) == 60


def test_lattice_export():
    dot = sublab.lattice_dot(sublab.builtin_group("S3"))
    assert "digraph" in dot
    assert sorted(sublab.subgroup_orders(sublab.builtin_group("S3"))) == [
        1, 2, 2, 2, 3, 6]
