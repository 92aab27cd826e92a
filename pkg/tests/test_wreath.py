"""Wreath product elements, conjugacy types, class enumeration."""
import itertools
import math
import random

import pytest

from wreath_centers.errors import NotACycle, PadTooSmall, SizeMismatch
from wreath_centers.wreath import (
    PartitionFamily, WreathElement, canonical_representative, class_order,
    cycle_product, enumerate_class, families_of_size, families_up_to,
    type_of, w_inverse, w_multiply,
)


def all_elements(n, G):
    for labels in itertools.product(range(G.order), repeat=n):
        for perm in itertools.permutations(range(n)):
            yield WreathElement(labels, perm)


def test_composition_order(z3):
    # pure permutations compose left to right: (xy)(i) = y(x(i))
    x = WreathElement((0, 0, 0), (1, 0, 2))
    y = WreathElement((0, 0, 0), (0, 2, 1))
    assert w_multiply(x, y, z3).perm == (2, 0, 1)
    assert w_multiply(y, x, z3).perm == (1, 2, 0)


def test_group_axioms_random(z3):
    rng = random.Random(11)
    n = 5
    e = WreathElement.identity(n)
    for _ in range(40):
        def rand():
            perm = list(range(n))
            rng.shuffle(perm)
            return WreathElement([rng.randrange(3) for _ in range(n)], perm)
        x, y, z = rand(), rand(), rand()
        assert w_multiply(w_multiply(x, y, z3), z, z3) \
            == w_multiply(x, w_multiply(y, z, z3), z3)
        assert w_multiply(x, e, z3) == x
        assert w_multiply(e, x, z3) == x
        assert w_multiply(x, w_inverse(x, z3), z3) == e
        assert w_multiply(w_inverse(x, z3), x, z3) == e


def test_multiply_size_mismatch(z2):
    with pytest.raises(SizeMismatch):
        w_multiply(WreathElement.identity(2), WreathElement.identity(3), z2)


def test_type_worked_example(z3):
    """A ten-point element with known cycle-product classes.

    perm = (1,4)(2,5)(3)(6)(7,8,9,10) in 1-based cycle notation,
    labels g = (1,0,2,0,0,1,1,2,1,0) over the cyclic group of order 3.
    """
    x = WreathElement((1, 0, 2, 0, 0, 1, 1, 2, 1, 0),
                      (3, 4, 2, 0, 1, 5, 7, 8, 9, 6))
    fam = type_of(x, z3)
    assert fam == PartitionFamily({0: (2,), 1: (4, 2, 1), 2: (1,)})
    # per-cycle products, 1-based cycles
    assert cycle_product(x, (1, 4), z3) == 1
    assert cycle_product(x, (2, 5), z3) == 0
    assert cycle_product(x, (3,), z3) == 2
    assert cycle_product(x, (7, 8, 9, 10), z3) == 1


def test_cycle_product_rejects_non_cycles(z3):
    x = WreathElement((0, 0, 0), (1, 0, 2))
    with pytest.raises(NotACycle):
        cycle_product(x, (1, 3), z3)
    with pytest.raises(NotACycle):
        cycle_product(x, (), z3)
    with pytest.raises(NotACycle):
        cycle_product(x, (1, 1), z3)
    with pytest.raises(NotACycle):
        cycle_product(x, (4,), z3)


def test_type_is_conjugation_invariant(s3):
    rng = random.Random(3)
    n = 3
    elts = list(all_elements(n, s3))
    for _ in range(25):
        x = rng.choice(elts)
        h = rng.choice(elts)
        conj = w_multiply(w_multiply(h, x, s3), w_inverse(h, s3), s3)
        assert type_of(conj, s3) == type_of(x, s3)


def test_types_classify_conjugacy_nonabelian():
    """Type buckets are exactly the conjugation orbits in S3 wr S3.

    Nonabelian labels with 3-cycles distinguish the two walk
    orientations of the cycle product; only one of them is a class
    function of this multiplication.
    """
    from wreath_centers.groups import builtin_group
    s3 = builtin_group("sym:3")
    elts = list(all_elements(3, s3))
    buckets = {}
    for x in elts:
        buckets.setdefault(type_of(x, s3), []).append(x)
    covered = 0
    for fam, bucket in buckets.items():
        z, size = class_order(fam, s3)
        assert len(bucket) == size
        rep = bucket[0]
        orbit = {w_multiply(w_multiply(h, rep, s3), w_inverse(h, s3), s3)
                 for h in elts}
        # invariance makes each bucket a union of orbits; matching sizes
        # over a partition of the group forces orbit == bucket
        assert len(orbit) == size
        assert type_of(next(iter(orbit)), s3) == fam
        covered += size
    assert covered == len(elts) == 6 ** 3 * 6


def test_class_order_matches_enumeration(z2, s3):
    for G, n in ((z2, 3), (s3, 2)):
        total = 0
        for fam in families_of_size(n, G.num_classes):
            _, size = class_order(fam, G)
            members = list(enumerate_class(fam, n, G))
            assert len(members) == size
            assert len(set(members)) == size
            assert all(type_of(x, G) == fam for x in members)
            total += size
        assert total == G.order ** n * math.factorial(n)


def test_classes_partition_the_group(z2):
    # every element of (Z2 wr S3) shows up in exactly one class
    seen = {}
    for fam in families_of_size(3, 2):
        for x in enumerate_class(fam, 3, z2):
            assert x not in seen
            seen[x] = fam
    assert len(seen) == 2 ** 3 * 6
    for x, fam in seen.items():
        assert type_of(x, z2) == fam


def test_class_order_z_value(z3):
    # Z = prod z_lam(c) * xi_c^{len}; xi is the centralizer order
    fam = PartitionFamily({0: (1, 1), 1: (2,)})
    z, size = class_order(fam, z3)
    assert z == 2 * 3 ** 2 * 2 * 3
    assert size == 3 ** 4 * 24 // z


def test_class_order_rejects_foreign_index(z2):
    with pytest.raises(SizeMismatch):
        class_order(PartitionFamily({5: (1,)}), z2)


def test_family_normalization():
    assert PartitionFamily({0: (), 1: (2, 1)}) == PartitionFamily({1: (2, 1)})
    assert PartitionFamily({1: [1, 2]}).get(1) == (2, 1)
    f = PartitionFamily({0: (2,), 2: (1,)})
    assert f.indices() == (0, 2)
    assert f.get(1) == ()
    assert f.size == 3
    assert f.num_cycles == 2
    with pytest.raises(ValueError):
        PartitionFamily({-1: (1,)})
    with pytest.raises(ValueError):
        PartitionFamily([(0, (1,)), (0, (2,))])
    with pytest.raises(ValueError):
        PartitionFamily({}, kind="weird")


def test_family_pad_and_strip():
    f = PartitionFamily({0: (3,), 1: (2,)})
    g = f.pad(8)
    assert g.get(0) == (3, 1, 1, 1)
    assert g.size == 8
    assert f.pad(5) is f
    with pytest.raises(PadTooSmall):
        f.pad(4)
    back, ones = g.strip_ones()
    assert back == f and ones == 3
    assert f.strip_ones() == (f, 0)


def test_family_properness():
    assert PartitionFamily({0: (2,), 1: (1,)}).is_proper()
    assert not PartitionFamily({0: (2, 1)}).is_proper()
    assert PartitionFamily().is_proper()
    with pytest.raises(ValueError):
        PartitionFamily({0: (1,)}, kind="char").is_proper()
    with pytest.raises(ValueError):
        PartitionFamily({0: (1,)}, kind="char").pad(3)


def test_family_json_round_trip():
    f = PartitionFamily({0: (2, 1), 2: (3,)})
    assert f.to_json() == {"0": [2, 1], "2": [3]}
    assert PartitionFamily.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        PartitionFamily.from_json([1, 2])


def test_families_of_size_counts():
    assert len(list(families_of_size(2, 2))) == 5
    # one index reduces to ordinary partitions
    for n, count in ((0, 1), (1, 1), (4, 5), (6, 11)):
        assert len(list(families_of_size(n, 1))) == count
    fams = list(families_up_to(2, 2))
    assert len(fams) == 1 + 2 + 5
    assert all(f.size <= 2 for f in fams)
    # no duplicates across the sweep
    assert len(set(fams)) == len(fams)


def test_canonical_representative(z3):
    for fam in families_of_size(3, 3):
        for n in (3, 5):
            x = canonical_representative(fam, n, z3)
            assert type_of(x, z3) == fam.pad(n)
    with pytest.raises(PadTooSmall):
        canonical_representative(PartitionFamily({0: (4,)}), 3, z3)


def test_element_basics():
    x = WreathElement((1, 0), (1, 0))
    assert x.n == 2
    assert x.to_json() == {"labels": [1, 0], "perm": [2, 1]}
    with pytest.raises(SizeMismatch):
        WreathElement((0,), (0, 1))
    assert WreathElement.identity(3).perm == (0, 1, 2)


def test_enumerate_class_requires_exact_size(z2):
    with pytest.raises(SizeMismatch):
        list(enumerate_class(PartitionFamily({0: (1,)}), 3, z2))
