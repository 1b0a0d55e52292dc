import pytest

from conftest import Q
from reference_values import ORTH_P, SYM_E7, SYM_P
from hgarith.certificate import VerdictStatus, load_bundled, serialize_certificate, verify_certificate
from hgarith.cyclo import ParameterPair
from hgarith.exact import QMatrix
from hgarith.group import solve_invariant_form
from hgarith.search import SearchConfig, _Registry, reduce_to_pattern, search_root_unipotents
from hgarith.slp import evaluate_slp
from hgarith.standard import Membership, apply_basis_change, root_group_membership, root_group_pattern, root_system

from reference_values import ORTH_ALPHA, ORTH_BETA, SYM_ALPHA, SYM_BETA


@pytest.fixture(scope="module")
def sym_std(sym_pres):
    return apply_basis_change(Q(SYM_P), solve_invariant_form(sym_pres))


@pytest.fixture(scope="module")
def sym_values(sym_pres):
    cert = load_bundled("theorem1.cert.json")
    return evaluate_slp(cert.slp, {"A": sym_pres.A, "B": sym_pres.B, "P": cert.P})


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(max_word_length=-1)
    assert SearchConfig().effective_conjugator_length() == 7
    assert SearchConfig(max_word_length=3).effective_conjugator_length() == 2
    assert SearchConfig(max_word_length=1).effective_conjugator_length() == 1
    assert SearchConfig(conjugator_length=20, max_word_length=5).effective_conjugator_length() == 5


def test_zero_length_search_is_empty(sym_pres):
    result = search_root_unipotents(sym_pres, Q(SYM_P), SearchConfig(max_word_length=0))
    assert result.found == []
    assert result.stats["nodes"] == 0
    assert result.certificate() is None


def test_short_words_include_the_transvection(sym_pres):
    result = search_root_unipotents(sym_pres, Q(SYM_P), SearchConfig(max_word_length=2, commutator_rounds=0))
    assert "a^-1 b" in result.candidates


def test_search_is_deterministic(sym_pres):
    cfg = SearchConfig(max_word_length=5, conjugator_length=3)
    r1 = search_root_unipotents(sym_pres, Q(SYM_P), cfg)
    r2 = search_root_unipotents(sym_pres, Q(SYM_P), cfg)
    assert r1.candidates == r2.candidates
    assert [(w.root, w.name, w.matrix) for w in r1.found] == [(w.root, w.name, w.matrix) for w in r2.found]
    assert {k: v for k, v in r1.stats.items() if k != "seconds"} == {k: v for k, v in r2.stats.items() if k != "seconds"}


def test_search_degree4_certificate(sym_pres, sym_std):
    pair = ParameterPair.parse(SYM_ALPHA, SYM_BETA)
    result = search_root_unipotents(sym_pres, Q(SYM_P), SearchConfig(max_word_length=8, conjugator_length=7), parameters=pair)
    assert set(result.roots_found()) == {"chi1^2", "chi1*chi2"}
    for w in result.found:
        pattern = root_group_pattern(sym_std, _root(w.root))
        assert root_group_membership(w.matrix, sym_std, pattern) is Membership.NONTRIVIAL_MEMBER
    cert = result.certificate()
    assert cert.slp.names[:2] == ["a", "b"]
    assert [c.root for c in cert.claims] == ["chi1^2", "chi1*chi2"]
    assert verify_certificate(cert).status == VerdictStatus.VALID
    assert "E1" in serialize_certificate(cert)


def test_search_degree5_certificate(orth_pres):
    pair = ParameterPair.parse(ORTH_ALPHA, ORTH_BETA)
    result = search_root_unipotents(orth_pres, Q(ORTH_P), SearchConfig(max_word_length=8, conjugator_length=7), parameters=pair)
    assert set(result.roots_found()) == {"chi1*chi2", "chi1"}
    assert verify_certificate(result.certificate()).status == VerdictStatus.VALID


def test_restricted_targets(sym_pres):
    cfg = SearchConfig(max_word_length=8, conjugator_length=7, target_patterns=["chi1^2"])
    result = search_root_unipotents(sym_pres, Q(SYM_P), cfg)
    assert result.targets == ["chi1^2"]
    assert set(result.roots_found()) <= {"chi1^2"}


def _root(label):
    from hgarith.standard import parse_root

    return parse_root(label)


def test_reduce_commutator_lands_in_highest_root_group(sym_std, sym_values):
    system = root_system(sym_std)
    pattern = root_group_pattern(sym_std, system.highest_root)
    registry = _Registry()
    E5, E6 = sym_values["E5"], sym_values["E6"]
    out = reduce_to_pattern([(E5, "E5"), (E6, "E6")], pattern, sym_std, system, registry)
    assert out
    for E, _ in out:
        assert root_group_membership(E, sym_std, pattern) is Membership.NONTRIVIAL_MEMBER
    commutator = E5 @ E6 @ E5.inverse() @ E6.inverse()
    assert commutator == Q(SYM_E7)
    # either [E5, E6] or [E6, E5] = [E5, E6]^-1 is an acceptable witness
    assert commutator in [E for E, _ in out] or commutator.inverse() in [E for E, _ in out]


def test_reduce_direct_and_empty(sym_std):
    system = root_system(sym_std)
    pattern = root_group_pattern(sym_std, system.highest_root)
    E7 = Q(SYM_E7)
    assert reduce_to_pattern([(E7, "x")], pattern, sym_std) == [(E7, "x")]
    assert reduce_to_pattern([], pattern, sym_std) == []
    assert reduce_to_pattern([(QMatrix.identity(4), "i")], pattern, sym_std) == []
