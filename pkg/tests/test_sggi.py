import pytest

from regpoly.errors import WrongRank
from regpoly.groups import Permutation
from regpoly.sggi import (GeneratorSystem, check_sggi, intersection_condition_full,
                          intersection_condition_rank3, rank3_intersection)

from _support import nn_system, polygon_system, symmetric_system


@pytest.mark.parametrize("n", [4, 5])
def test_nn_types(n):
    rep = check_sggi(nn_system(n))
    assert rep.involutions_ok and rep.string_ok and rep.ok
    assert rep.schlafli == (n, n)


def test_broken_triple():
    # (0 1) and (1 2) do not commute: their product has order 3
    gens = [Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (2, 3)),
            Permutation.from_cycles(4, (1, 2))]
    rep = check_sggi(GeneratorSystem.from_generators(gens))
    assert rep.involutions_ok and not rep.string_ok


def test_identity_generator_is_not_an_involution():
    gens = [Permutation.from_cycles(3, (0, 1)), Permutation([0, 1, 2])]
    assert not check_sggi(GeneratorSystem.from_generators(gens)).involutions_ok


@pytest.mark.parametrize("n", [3, 6])
def test_full_condition(n):
    assert intersection_condition_full(nn_system(n))


def test_rank1():
    sys = GeneratorSystem.from_generators([Permutation([1, 0])])
    assert intersection_condition_full(sys)
    assert check_sggi(sys).schlafli == ()


def test_rank3_n3():
    sys = nn_system(3)
    assert intersection_condition_rank3(sys)
    inter = rank3_intersection(sys)
    assert len(inter) == 2
    assert inter == sys.parabolic({1})


def test_rank3_n9():
    assert intersection_condition_rank3(nn_system(9))


@pytest.mark.parametrize("n", range(3, 9))
def test_rank3_agrees_with_full(n):
    sys = nn_system(n)
    assert intersection_condition_rank3(sys) == intersection_condition_full(sys)


def test_rank3_rejects_other_ranks():
    with pytest.raises(WrongRank):
        intersection_condition_rank3(symmetric_system(5))


def test_symmetric_groups_are_c_groups():
    for m in (3, 4, 5):
        sys = symmetric_system(m)
        assert check_sggi(sys).schlafli == (3,) * (m - 2)
        assert intersection_condition_full(sys)


def test_failing_intersection():
    # <a, b> with a, b generating S3 twice over: rho0 = rho2 breaks <rho0> & <rho2> = 1
    a = Permutation.from_cycles(3, (0, 1))
    b = Permutation.from_cycles(3, (1, 2))
    sys = GeneratorSystem.from_generators([a, b, a])
    assert not intersection_condition_full(sys)
    assert not intersection_condition_rank3(sys)


def test_polygon_system():
    sys = polygon_system(6)
    assert check_sggi(sys).schlafli == (6,)
    assert intersection_condition_full(sys)


@pytest.mark.parametrize("n", range(3, 11))
def test_nn_system_family(n):
    sys = nn_system(n)
    rep = check_sggi(sys)
    assert rep.ok and rep.schlafli == (n, n)
    assert intersection_condition_rank3(sys)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_dihedral_part_has_no_translation(n):
    sys = nn_system(n)
    elems = sys.group.elements
    pure = {i for i, e in enumerate(elems) if e.translation.is_zero()}
    assert sys.parabolic({0, 1}) == pure


@pytest.mark.parametrize("n", [3, 6, 10])
def test_rotations_have_translation(n):
    _, r1, r2 = nn_system(n).generators
    for k in range(1, n):
        assert not ((r1 * r2) ** k).translation.is_zero()


def test_reversed_system():
    sys = nn_system(4)
    rev = sys.reversed()
    assert rev.generators == sys.generators[::-1]
    assert check_sggi(rev).schlafli == (4, 4)
