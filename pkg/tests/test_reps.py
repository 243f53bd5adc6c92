import pytest

from biserial.families import build_lambda, lambda_vertices
from biserial.homology import hom_basis, projdim
from biserial.matrices import Matrix
from biserial.reps import (Algebra, InvalidString, ModuleMap,
                           RepresentationError, StringWord, check_morphism,
                           direct_sum, inflate, random_module, restrict,
                           string_module, supported_on)
from biserial.witnesses import build_Z, z_walk


def test_empty_word_gives_simple(alg1):
    m = string_module(alg1, StringWord("c1", []))
    assert m.dim_vector() == (("c1", 1),)


def test_z3_walk_dimensions(alg3):
    m = string_module(alg3, z_walk(3))
    assert m.total_dim() == 5
    assert dict(m.dim_vector()) == {"a3": 1, "b2": 1, "b3": 1, "c2": 1, "a2": 1}


def test_mixed_letters_direct_run_invalid(alg1):
    # alpha then beta in one direct run composes to zero: not a string.
    with pytest.raises(InvalidString):
        string_module(alg1, StringWord("c1", [("al_c1_a0", 1), ("be_a0_u", 1)]))


def test_non_composable_word(alg1):
    with pytest.raises(InvalidString) as exc:
        StringWord("c1", [("be_a0_u", 1)]).walk_vertices(alg1.pres)
    assert "non-composable" in str(exc.value)


def test_immediate_backtrack_rejected(alg1):
    with pytest.raises(InvalidString) as exc:
        StringWord("c1", [("al_c1_a0", 1), ("al_c1_a0", -1)]).walk_vertices(alg1.pres)
    assert "backtrack" in str(exc.value)


def test_amalgam_half_walk_rejected(alg2):
    # A pure alpha run through the c2 diamond would have to satisfy the
    # equality against the beta side; the walk cannot.
    with pytest.raises(InvalidString):
        string_module(alg2, StringWord(
            "c2", [("al_c2_c1", 1), ("al_c1_a0", 1), ("al_a0_c0", 1)]))


def test_string_dimension_is_length_plus_one(alg2):
    word = z_walk(2)
    m = string_module(alg2, word)
    assert m.total_dim() == len(word) + 1


def test_projective_a1_shape(alg5):
    p = alg5.projective("a1")
    assert dict(p.dim_vector()) == {"a1": 1, "d0": 1, "a0": 1, "u": 1}
    assert p.total_dim() == 4


def test_projective_c1_total(alg5):
    assert alg5.projective("c1").total_dim() == 6


def test_projective_u_over_level_zero():
    for r in (1, 2):
        alg = Algebra(build_lambda(r, 0))
        assert dict(alg.projective("u").dim_vector()) == {"u": 2}


def test_direct_sum_empty(alg1):
    total, injs, projs = direct_sum(alg1, [])
    assert total.is_zero() and not injs and not projs


def test_direct_sum_with_zero_is_isomorphic(alg1):
    from biserial.homology import certified_iso

    m = string_module(alg1, z_walk(1))
    total, _, _ = direct_sum(alg1, [m, alg1.zero_module()])
    assert certified_iso(total, m, seed=0) is not None


def test_direct_sum_dims_add(alg1):
    a = alg1.projective("c1")
    b = alg1.simple("u")
    total, _, _ = direct_sum(alg1, [a, b])
    for v in alg1.vertices:
        assert total.dims[v] == a.dims[v] + b.dims[v]


def test_direct_sum_maps_intertwine(alg1):
    a, b = alg1.projective("a1"), alg1.projective("b1")
    total, injs, projs = direct_sum(alg1, [a, b])
    assert all(check_morphism(f) for f in injs + projs)


def test_inflate_simple(alg0, alg1):
    m = inflate(alg0.simple("d0"), alg1)
    assert m.dim_vector() == (("d0", 1),)


def test_inflate_preserves_pd(alg0, alg1):
    z0 = build_Z(alg0, 0)
    r0 = projdim(z0, cutoff=8)
    r1 = projdim(inflate(z0, alg1), cutoff=8)
    assert r0.verdict == r1.verdict == "finite"
    assert r0.value == r1.value == 1


def test_inflate_then_restrict_identity(alg0, alg1):
    m = build_Z(alg0, 0)
    back = restrict(inflate(m, alg1), alg0)
    assert back.dims == m.dims
    assert back.mats == m.mats


def test_inflate_requires_factor(alg0, alg2):
    other = Algebra(build_lambda(2, 0))
    with pytest.raises(RepresentationError):
        inflate(other.simple("u"), alg2)


def test_inflate_preserves_hom_dimensions(alg0, alg1):
    a = alg0.projective("a0")
    b = build_Z(alg0, 0)
    d_small = len(hom_basis(a, b))
    d_big = len(hom_basis(inflate(a, alg1), inflate(b, alg1)))
    assert d_small == d_big


def test_supported_on(alg2, algp):
    lam1 = set(lambda_vertices(1, 1))
    assert not supported_on(alg2.simple("c2"), lam1)
    assert supported_on(alg2.zero_module(), set())
    # The c2 projective over the level-2 algebra avoids a2 and b2.
    assert supported_on(alg2.projective("c2"),
                        set(algp.pres.quiver.vertices))


def test_check_morphism_identity_and_zero(alg1):
    m = alg1.projective("c1")
    assert check_morphism(ModuleMap.identity(m))
    assert check_morphism(ModuleMap.zero(m, alg1.simple("u")))


def test_check_morphism_reports_violated_arrow(alg1):
    z = build_Z(alg1, 1)
    f = ModuleMap.identity(z)
    # Perturb one block: replace the u-component by zero.
    f.mats["u"] = Matrix.zeros(alg1.field, z.dims["u"], z.dims["u"])
    bad = ModuleMap(z, z, f.mats)
    violations = bad.violations()
    assert violations and "be_a0_u" in violations


def test_module_map_shape_mismatch(alg1):
    with pytest.raises(RepresentationError):
        ModuleMap(alg1.simple("u"), alg1.simple("u"),
                  {"u": Matrix.zeros(alg1.field, 2, 2)})


def test_representation_relation_checking(alg0):
    dims = {v: 0 for v in alg0.vertices}
    dims["u"] = 1
    mats = {"al_u_u": Matrix.from_rows(alg0.field, [[1]])}
    with pytest.raises(RepresentationError):
        # The loop square cannot act as the identity.
        from biserial.reps import Representation
        Representation(alg0, dims, mats)


def test_random_module_budget_zero(alg1):
    assert random_module(alg1, seed=5, budget=0).is_zero()


def test_random_module_deterministic(algp):
    a = random_module(algp, seed=9, budget=30)
    b = random_module(algp, seed=9, budget=30)
    assert a.dims == b.dims and a.mats == b.mats


def test_random_module_respects_budget_and_relations(algp):
    for seed in range(6):
        m = random_module(algp, seed=seed, budget=20)
        assert m.total_dim() <= 20
        assert not m.violated_relations()


def test_projective_has_simple_top(alg2):
    from biserial.homology import top_dims

    for v in ("a1", "c2", "u"):
        tops = top_dims(alg2.projective(v))
        assert tops == {w: (1 if w == v else 0) for w in alg2.vertices}


def test_z_walk_end_dims():
    alg = Algebra(build_lambda(1, 5))
    z5 = build_Z(alg, 5)
    assert dict(z5.dim_vector()) == {"a5": 1, "b4": 1, "b5": 1, "a4": 1}


def test_string_end_algebra_dimensions(alg3):
    # Walks without repeated vertices are bricks; the level-1 walk passes
    # a0 twice and picks up one nilpotent endomorphism.
    z3 = string_module(alg3, z_walk(3))
    assert len(hom_basis(z3, z3)) == 1
    alg1 = Algebra(build_lambda(1, 1))
    z1s = string_module(alg1, z_walk(1))
    assert len(hom_basis(z1s, z1s)) == 2
