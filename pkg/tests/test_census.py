"""Census over candidate (ideal, finite) vertex counts and the minimality theorem."""

import math

import pytest

from raca import catalog
from raca.census import (
    CandidatePair,
    candidate_pairs,
    enumerate_types,
    verify_minimality,
)
from raca.errors import DomainError
from raca.lobachevsky import catalan_constant
from raca.polyhedra import (
    READING_DISTINCT,
    canonical_form,
    face_statistics,
    lemma_rem_check,
    polyhedron_from_certificate,
    validate,
)
from raca.volumes import antiprism_volume

G = catalan_constant().value


def test_candidate_pairs_exact():
    pairs = candidate_pairs()
    assert [(p.v_inf, p.v_f) for p in pairs] == [
        (2, 4), (2, 6), (2, 8), (3, 2), (3, 4)]
    assert pairs == sorted(pairs)


@pytest.mark.parametrize("vi,vf", [
    (2, 2),   # too few vertices in total
    (4, 2),   # edge budget exceeded
    (2, 3),   # odd finite count breaks handshake parity
    (1, 6),   # fewer than two ideal vertices
    (3, 6),   # edge budget exceeded
    (2, 4.0), # non-integer
    (True, 6),
])
def test_candidate_pair_rejections(vi, vf):
    with pytest.raises(DomainError):
        CandidatePair(vi, vf)


def test_realizable_counts():
    expected = {(2, 4): 0, (2, 6): 0, (2, 8): 1, (3, 2): 1, (3, 4): 1}
    for pair in candidate_pairs():
        record = enumerate_types(pair)
        assert len(record.realizable_types) == expected[(pair.v_inf, pair.v_f)]


def test_survivors_match_reference_polyhedra():
    matches = {(2, 8): catalog.p28, (3, 2): catalog.p32, (3, 4): catalog.p34}
    for (vi, vf), builder in matches.items():
        record = enumerate_types(CandidatePair(vi, vf))
        assert record.realizable_types == (canonical_form(builder()),)


def test_census_polyhedra_satisfy_invariants():
    for pair in candidate_pairs():
        record = enumerate_types(pair)
        assert len(record.polyhedra) == len(record.realizable_types)
        for p, cert in zip(record.polyhedra, record.realizable_types):
            assert canonical_form(p) == cert
            profile = validate(p)
            assert (profile.v_inf, profile.v_f) == (pair.v_inf, pair.v_f)
            stats = face_statistics(p)
            assert stats.w == 4 * profile.v_inf + 3 * profile.v_f
            assert stats.wi == 4 * profile.v_inf
            assert profile.f == pair.v_inf + pair.v_f // 2 + 2
            assert lemma_rem_check(p).passed
            assert polyhedron_from_certificate(cert) == p


def test_p32_ideal_vertices_form_triangle():
    record = enumerate_types(CandidatePair(3, 2))
    p = record.polyhedra[0]
    quartic = [v for v in range(p.vertex_count)
               if sum(v in face for face in p.faces) == 4]
    assert len(quartic) == 3
    edges = {frozenset(e) for face in p.faces
             for e in zip(face, face[1:] + face[:1])}
    a, b, c = quartic
    assert {frozenset((a, b)), frozenset((b, c)), frozenset((a, c))} <= edges


def test_volumes_attached_to_realizable_pairs():
    vols = {}
    for pair in candidate_pairs():
        record = enumerate_types(pair)
        if not record.realizable_types:
            assert record.volume is None
            continue
        assert record.volume is not None
        assert 0 < record.volume.abs_error_bound < 1e-9
        vols[(pair.v_inf, pair.v_f)] = record.volume.value
    assert vols[(3, 2)] == pytest.approx(G, abs=1e-12)
    assert vols[(2, 8)] == pytest.approx(2 * G, abs=1e-12)
    assert vols[(3, 4)] == pytest.approx(antiprism_volume(4).value / 4, abs=1e-12)
    assert vols[(3, 2)] < vols[(3, 4)] < vols[(2, 8)]


def test_enumerate_accepts_plain_tuple():
    assert enumerate_types((3, 2)).realizable_types == \
        enumerate_types(CandidatePair(3, 2)).realizable_types


def test_enumeration_is_deterministic(monkeypatch):
    for pair in [(3, 2), (2, 6), (3, 4)]:
        base = enumerate_types(pair)
        assert enumerate_types(pair, reverse_branching=True).realizable_types \
            == base.realizable_types
        assert enumerate_types(pair, workers=2).realizable_types \
            == base.realizable_types
        monkeypatch.setenv("RACA_THREADS", "3")
        assert enumerate_types(pair, workers=3).realizable_types \
            == base.realizable_types
        monkeypatch.delenv("RACA_THREADS")


def test_worker_argument_validation(monkeypatch):
    with pytest.raises(DomainError):
        enumerate_types((3, 2), workers=0)
    monkeypatch.setenv("RACA_THREADS", "many")
    with pytest.raises(DomainError):
        enumerate_types((3, 2))


def test_reading_flag_threads_through():
    record = enumerate_types((3, 2), condition3_reading=READING_DISTINCT)
    assert record.condition3_reading == READING_DISTINCT
    assert record.realizable_types == ()
    with pytest.raises(DomainError):
        enumerate_types((3, 2), condition3_reading="sloppy")


def test_record_serialization():
    import json
    record = enumerate_types((3, 2))
    blob = json.dumps(record.to_dict(), sort_keys=True)
    data = json.loads(blob)
    assert data["count"] == 1
    assert data["volume"]["value"] == pytest.approx(G, abs=1e-12)
    assert data["pair"] == {"v_ideal": 3, "v_finite": 2}


def test_verify_minimality():
    report = verify_minimality()
    assert report.verified
    assert report.failures == ()
    assert report.minimal_volume == pytest.approx(G, abs=1e-9)
    assert report.witness == canonical_form(catalog.p32())
    assert report.uniqueness
    entries = {e["case"]: e for e in report.branch_log}
    assert entries["all vertices ideal"]["lower_bound"] > report.minimal_volume
    assert entries["no ideal vertices"]["lower_bound"] > report.minimal_volume
    assert entries["one ideal vertex"]["lower_bound"] > report.minimal_volume
    assert entries["one ideal vertex"]["lower_bound"] == pytest.approx(
        14 * G / 8, abs=1e-12)
    census_entries = [e for e in report.branch_log if e["case"].startswith("census")]
    assert len(census_entries) == 5


def test_verify_minimality_strict_reading_fails_honestly():
    report = verify_minimality(condition3_reading=READING_DISTINCT)
    assert not report.verified
    assert report.failures
    assert report.condition3_reading == READING_DISTINCT


def test_report_serialization():
    import json
    report = verify_minimality()
    data = json.loads(json.dumps(report.to_dict(), sort_keys=True))
    assert data["verified"] is True
    assert math.isclose(data["minimal_volume"], G, abs_tol=1e-9)
