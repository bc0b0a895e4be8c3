"""The closure tower: moduli, arithmetic, embeddings, normalization."""

import pytest

from tensornorm import LatticeError, SplitMix64, TowerConfig
from tensornorm.parsing import parse_closure_elem

from conftest import enumerate_level, poly_is_irreducible_brute


def test_moduli_are_least_irreducible(cfg2, cfg3):
    # oracle: walk the enumeration order and stop at the first irreducible
    for cfg in (cfg2, cfg3):
        p = cfg.p
        for n in cfg.levels:
            chosen = cfg._arith[n].modulus
            code = 0
            while True:
                cand = tuple((code // p**i) % p for i in range(n)) + (1,)
                if poly_is_irreducible_brute(cand, p):
                    break
                code += 1
            assert chosen == cand


def test_quadratic_extension_table(cfg2):
    # the modulus is x^2 + x + 1, so the generator squares to itself plus one
    w = cfg2.generator(2)
    assert cfg2._arith[2].modulus == (1, 1, 1)
    assert w * w == w + cfg2.one()
    assert w + w == cfg2.zero()


def test_inverse_by_exhaustion(cfg2):
    w = cfg2.generator(2)
    inverses = [c for c in enumerate_level(cfg2, 2) if (w * c).is_one]
    assert inverses == [w.inv()]
    assert w.inv() == w * w  # w^3 = 1
    with pytest.raises(ZeroDivisionError):
        cfg2.zero().inv()


def test_embed_prime_field_pointwise_fixed(cfg2):
    assert cfg2.embed_coords(cfg2.one(), 2) == (1, 0)
    assert cfg2.embed_coords(cfg2.from_int(1), 4) == (1, 0, 0, 0)


def test_embed_generator_is_least_root(cfg2):
    # oracle: enumerate the level-4 field and find every root of x^2+x+1
    w = cfg2.generator(2)
    coords = cfg2.embed_coords(w, 4)
    image = cfg2.from_coords(4, coords)
    assert image == w  # canonical renormalization undoes the embedding
    roots = []
    for c in enumerate_level(cfg2, 4):
        raw = cfg2.embed_coords(c, 4)
        lifted_code = sum(d * 2**i for i, d in enumerate(raw))
        if (c * c + c + cfg2.one()).is_zero:
            roots.append(lifted_code)
    embedded_code = sum(d * 2**i for i, d in enumerate(coords))
    assert embedded_code in roots
    assert embedded_code == min(roots)


def test_embed_nondivisible_level_errors():
    cfg = TowerConfig(2, 12)
    w = cfg.generator(2)
    with pytest.raises(LatticeError):
        cfg.embed_coords(w, 3)
    with pytest.raises(LatticeError):
        cfg.from_code(5, 0)


def _code_at(cfg, elem, level):
    """The element's raw code inside the given level's power basis."""
    return sum(d * cfg.p**i for i, d in enumerate(cfg.embed_coords(elem, level)))


def test_embeddings_are_field_homomorphisms(cfg2, cfg3):
    # exhaustive over all pairs of source elements, levels up to 4
    for cfg in (cfg2, cfg3):
        for m in cfg.levels:
            for n in cfg.levels:
                if m >= n or n % m:
                    continue
                arith = cfg._arith[n]
                elems = enumerate_level(cfg, m)
                images = [cfg._embed_code_raw(_code_at(cfg, e, m), m, n) for e in elems]
                assert len(set(images)) == len(images)  # injective
                for a, ia in zip(elems, images):
                    for b, ib in zip(elems, images):
                        expected_mul = cfg._embed_code_raw(_code_at(cfg, a * b, m), m, n)
                        assert arith.mul(ia, ib) == expected_mul
                        expected_add = cfg._embed_code_raw(_code_at(cfg, a + b, m), m, n)
                        assert arith.add(ia, ib) == expected_add


def test_embedding_table_commutes():
    cfg = TowerConfig(2, 12)
    # 1 -> 2 -> 4 equals 1 -> 4, and 2 -> 6 -> 12 equals 2 -> 12, on all codes
    for (m, mid, n) in [(1, 2, 4), (2, 4, 12), (2, 6, 12), (3, 6, 12)]:
        for code in range(cfg.p**m):
            via = cfg._embed_code_raw(cfg._embed_code_raw(code, m, mid), mid, n)
            assert via == cfg._embed_code_raw(code, m, n)


def test_field_axioms_random_mixed_levels(cfg2, cfg3):
    rng = SplitMix64(7)
    for cfg in (cfg2, cfg3):
        one = cfg.one()
        for _ in range(200):
            a = cfg.random_element(rng, rng.choice(cfg.levels))
            b = cfg.random_element(rng, rng.choice(cfg.levels))
            c = cfg.random_element(rng, rng.choice(cfg.levels))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == cfg.zero()
            if not a.is_zero:
                assert a * a.inv() == one


def test_canonical_minimal_level(cfg2):
    w = cfg2.generator(2)
    # an element built at level 4 that actually lies in the quadratic field
    coords = cfg2.embed_coords(w, 4)
    again = cfg2.from_coords(4, coords)
    assert again.level == 2 and again == w
    # prime-field elements always normalize to level 1
    assert cfg2.from_coords(4, (1, 0, 0, 0)).level == 1
    assert (w + w * w).level == 1  # w + w^2 = w + w + 1 = 1


def test_structural_equality_and_hash(cfg2):
    w = cfg2.generator(2)
    assert hash(w * w.inv()) == hash(cfg2.one())
    assert len({w, w * w, w**3, cfg2.one()}) == 3


def test_ensure_level_extends_and_preserves():
    cfg = TowerConfig(2, 4)
    w = cfg.generator(2)
    old_pair = {k: v for k, v in cfg._emb.items()}
    cfg.ensure_level(3)
    assert cfg.level_bound == 12
    assert set(cfg.levels) == {1, 2, 3, 4, 6, 12}
    for pair, cols in old_pair.items():
        assert cfg._emb[pair] == cols
    g3 = cfg.generator(3)
    assert (g3**7).is_one  # multiplicative order divides 2^3 - 1
    assert w * w == w + 1  # old elements still behave
    cfg.ensure_level(6)  # already present: no-op
    assert cfg.level_bound == 12


def test_random_element_determinism_and_range(cfg2):
    a = [cfg2.random_element(SplitMix64(5), 4) for _ in range(10)]
    b = [cfg2.random_element(SplitMix64(5), 4) for _ in range(10)]
    assert a == b


def test_random_element_uniformity(cfg2):
    rng = SplitMix64(2024)
    counts = {}
    for _ in range(10_000):
        c = cfg2.random_element(rng, 2)
        counts[c] = counts.get(c, 0) + 1
    assert len(counts) == 4
    for n in counts.values():
        assert abs(n - 2500) <= 125  # 5 percent of the expected count


def test_fixture_string_round_trip(cfg2, cfg3):
    rng = SplitMix64(11)
    for cfg in (cfg2, cfg3):
        for _ in range(50):
            c = cfg.random_element(rng, rng.choice(cfg.levels))
            assert parse_closure_elem(c.fixture(), cfg) == c
