import time

import pytest

from sigsurf.brieskorn import BrieskornExponents
from sigsurf.cancel import CancelToken
from sigsurf.curves import PuiseuxPairs
from sigsurf.errors import (AllEnginesFailed, Cancelled, ComputationError, ConsensusFailure,
                            InputError, NoApplicableEngine)
from sigsurf.portfolio import (WEIGHT_TWO_NOTE, JobSpec, SignatureResult, applicable_engines,
                               engine_tasks, job_from_fixture, race_signature, run_benchmarks,
                               verify_signature)
from sigsurf.resolution import ordinary_point_graph
from sigsurf.spectral import SpectralPairs, brieskorn_curve_spectral_pairs

G1 = PuiseuxPairs(((3, 2), (7, 2), (15, 2)))


def test_applicable_engines():
    assert applicable_engines(JobSpec(N=5, pairs=G1)) == {"puiseux", "resolution"}
    assert applicable_engines(JobSpec(N=5, pairs=PuiseuxPairs(((3, 2),)))) == \
        {"puiseux", "resolution", "spectral"}
    assert applicable_engines(JobSpec(N=6, graph=ordinary_point_graph(10))) == {"resolution"}
    assert applicable_engines(JobSpec(N=2, sppairs=brieskorn_curve_spectral_pairs(2, 3))) == {"spectral"}
    assert applicable_engines(JobSpec(brieskorn=(2, 3, 5))) == {"brieskorn", "puiseux", "spectral"}
    assert applicable_engines(JobSpec(brieskorn=(2, 4, 5))) == {"brieskorn"}
    assert applicable_engines(JobSpec(brieskorn=(2, 3, 1))) == {"brieskorn"}
    assert applicable_engines(JobSpec(N=3, poly="y^2 - x^3")) == {"puiseux", "resolution", "spectral"}


def test_no_engine_for_smooth_or_unsolvable_input():
    with pytest.raises(NoApplicableEngine):
        applicable_engines(JobSpec(N=3, pairs=PuiseuxPairs(())))
    with pytest.raises(NoApplicableEngine):
        applicable_engines(JobSpec(N=3, poly="y - x^2"))
    with pytest.raises(NoApplicableEngine):
        applicable_engines(JobSpec(N=3, poly="y^4 + 2*x^3*y^2 + x^6 + x^5*y"))


@pytest.mark.parametrize("kwargs", [
    dict(N=3),
    dict(N=3, pairs=G1, graph=ordinary_point_graph(2)),
    dict(pairs=G1),
    dict(N=1, pairs=G1),
    dict(N=2.0, pairs=G1),
    dict(N=4, brieskorn=(2, 3, 5)),
])
def test_job_validation(kwargs):
    with pytest.raises(InputError):
        JobSpec(**kwargs)


def test_brieskorn_job_takes_n_from_z_exponent():
    assert JobSpec(brieskorn=(2, 3, 5)).N == 5
    assert JobSpec(N=5, brieskorn=BrieskornExponents(2, 3, 5)).N == 5


def test_race_and_verify_agree():
    job = JobSpec(N=5, pairs=G1)
    result = race_signature(job)
    report = verify_signature(job)
    assert result.value == report.value == -168
    assert report.consensus
    assert {r.approach for r in report.results} == {"puiseux", "resolution"}


def test_poly_job_notes_pairs():
    result = race_signature(JobSpec(N=2, poly="y^2 - x^3"))
    assert result.value == -2
    assert any("Puiseux pairs [(3, 2)]" in note for note in result.notes)


def test_weight_two_note():
    S = SpectralPairs(((0, 2, 1),))
    result = race_signature(JobSpec(N=2, sppairs=S))
    assert WEIGHT_TWO_NOTE in result.notes


def test_result_checks_eta_relation():
    with pytest.raises(ComputationError):
        SignatureResult(value=1, approach="x", N=2, eta_N=1, eta_1=1)


def test_result_to_dict():
    report = verify_signature(JobSpec(N=2, pairs=PuiseuxPairs(((3, 2),))))
    d = report.to_dict()
    assert d["consensus"] and d["value"] == -2
    res = next(r for r in d["results"] if r["approach"] == "resolution")
    assert res["eta_N"] == "2/3" and res["eta_1"] == "4/3"


def _const(value):
    return lambda cancel: (value, None, None, [])


def _fail(cancel):
    raise ComputationError("boom")


def test_consensus_failure_on_disagreement():
    job = JobSpec(N=5, pairs=G1)
    tasks = dict(engine_tasks(job))
    tasks["resolution"] = _const(-167)
    with pytest.raises(ConsensusFailure) as info:
        verify_signature(job, tasks=tasks)
    assert not info.value.report.consensus
    report = verify_signature(job, tasks=tasks, raise_on_failure=False)
    assert report.value is None


def test_error_breaks_consensus():
    job = JobSpec(N=5, pairs=G1)
    report = verify_signature(job, tasks={"puiseux": _const(-168), "resolution": _fail},
                              raise_on_failure=False)
    assert not report.consensus
    assert "resolution" in report.errors


def test_all_engines_failed():
    job = JobSpec(N=5, pairs=G1)
    with pytest.raises(AllEnginesFailed):
        race_signature(job, tasks={"a": _fail, "b": _fail})
    with pytest.raises(AllEnginesFailed):
        verify_signature(job, tasks={"a": _fail})


def test_race_survives_a_failing_engine():
    job = JobSpec(N=5, pairs=G1)
    result = race_signature(job, tasks={"good": _const(-168), "bad": _fail})
    assert result.value == -168


def _spin(cancel):
    while True:
        cancel.check()
        time.sleep(0.001)


def test_losers_are_cancelled():
    job = JobSpec(N=5, pairs=G1)
    result = race_signature(job, tasks={"fast": _const(1), "spin": _spin})
    assert result.approach == "fast"
    assert result.stop_latencies["spin"] < 0.1


def test_slow_real_engine_is_cancelled():
    # the spectral generator for x^301 + y^300 takes over a second
    job = JobSpec(brieskorn=(301, 300, 2))
    result = race_signature(job)
    assert result.approach in ("brieskorn", "puiseux")
    assert result.stop_latencies["spectral"] < 0.1


def test_unresponsive_loser_reported():
    def stubborn(cancel):
        time.sleep(0.3)
        return (0, None, None, [])

    result = race_signature(JobSpec(N=5, pairs=G1), tasks={"fast": _const(1), "slow": stubborn},
                            grace=0.01)
    assert result.stop_latencies["slow"] == float("inf")


def test_cancel_token():
    token = CancelToken()
    token.check()
    token.cancel()
    assert token.cancelled and token.cancelled_at is not None
    with pytest.raises(Cancelled):
        token.check()


def test_job_from_fixture():
    job = job_from_fixture({"name": "x", "N": 6, "graph": {
        "exceptional": [{"id": 0, "m": 2}], "arrowheads": [1, 2], "edges": [[0, 1], [0, 2]]}})
    assert job.kind == "graph"
    with pytest.raises(InputError):
        job_from_fixture({"name": "x", "N": 2})


def test_benchmark_rows():
    suite = [
        {"name": "cusp", "N": 2, "pairs": [[3, 2]]},
        {"name": "skip", "skip": "not here"},
        {"name": "k", "kernel": "s_counts", "c": [4, 5, 6]},
    ]
    report = run_benchmarks(suite)
    rows = report["rows"]
    assert {r["approach"] for r in rows if r["fixture"] == "cusp"} == {"puiseux", "resolution", "spectral"}
    assert all(r["value"] == -2 for r in rows if r["fixture"] == "cusp")
    assert any("skipped" in r for r in rows)
    kernel_values = {r["value"] for r in rows if r["fixture"] == "k"}
    assert len(kernel_values) == 1
