"""Run the signature engines side by side.

``race_signature`` starts every engine that applies to a job on its own
thread and keeps the first answer; the others are told to stop through a
shared :class:`~sigsurf.cancel.CancelToken`.  ``verify_signature`` lets all
of them finish and insists that they agree.
"""
from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Optional

from sigsurf import kernels
from sigsurf.algebra import format_rational
from sigsurf.brieskorn import BrieskornExponents, brieskorn_signature
from sigsurf.cancel import CancelToken
from sigsurf.curves import PuiseuxPairs, pairs_to_resolution_graph, puiseux_pairs_lite
from sigsurf.errors import (AllEnginesFailed, Cancelled, ComputationError,
                            ConsensusFailure, InputError, NoApplicableEngine)
from sigsurf.polynomial import BivariatePoly, parse_polynomial
from sigsurf.puiseux import signature_puiseux
from sigsurf.resolution import ResolutionGraph, signature_resolution
from sigsurf.spectral import (SpectralPairs, brieskorn_curve_spectral_pairs,
                              signature_spectral)

__all__ = ["APPROACHES", "JobSpec", "SignatureResult", "VerificationReport",
           "engine_tasks", "applicable_engines", "race_signature",
           "verify_signature", "run_benchmarks"]

APPROACHES = ("puiseux", "resolution", "spectral", "brieskorn")
WEIGHT_TWO_NOTE = "unverified orientation for weight-2 term"
_INPUT_KINDS = ("pairs", "graph", "sppairs", "brieskorn", "poly")


@dataclass(frozen=True)
class JobSpec:
    N: Optional[int] = None
    pairs: Optional[PuiseuxPairs] = None
    graph: Optional[ResolutionGraph] = None
    sppairs: Optional[SpectralPairs] = None
    brieskorn: Optional[BrieskornExponents] = None
    poly: Optional[BivariatePoly] = None

    def __post_init__(self):
        given = [k for k in _INPUT_KINDS if getattr(self, k) is not None]
        if len(given) != 1:
            raise InputError(f"a job needs exactly one input, got {given or 'none'}")
        if self.brieskorn is not None and not isinstance(self.brieskorn, BrieskornExponents):
            object.__setattr__(self, "brieskorn", BrieskornExponents(*self.brieskorn))
        if isinstance(self.poly, str):
            object.__setattr__(self, "poly", parse_polynomial(self.poly))
        if self.brieskorn is not None:
            c3 = self.brieskorn.c3
            if self.N is not None and self.N != c3:
                raise InputError(f"-N {self.N} conflicts with the z exponent {c3}")
            object.__setattr__(self, "N", c3)
        elif self.N is None:
            raise InputError("N is required")
        if isinstance(self.N, bool) or not isinstance(self.N, int):
            raise InputError(f"N must be an integer, got {self.N!r}")
        if self.brieskorn is None and self.N < 2:
            raise InputError(f"N must be >= 2, got {self.N}")

    @property
    def kind(self):
        return next(k for k in _INPUT_KINDS if getattr(self, k) is not None)


@dataclass
class SignatureResult:
    value: int
    approach: str
    N: Optional[int] = None
    eta_N: Optional[Fraction] = None
    eta_1: Optional[Fraction] = None
    wall_time: float = 0.0
    notes: list = field(default_factory=list)
    stop_latencies: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if None not in (self.N, self.eta_N, self.eta_1):
            if self.eta_N - self.N * self.eta_1 != self.value:
                raise ComputationError(
                    f"{self.approach}: eta_N - N*eta_1 = {self.eta_N - self.N * self.eta_1} != {self.value}")

    def to_dict(self):
        out = {
            "value": self.value,
            "approach": self.approach,
            "N": self.N,
            "eta_N": None if self.eta_N is None else format_rational(self.eta_N),
            "eta_1": None if self.eta_1 is None else format_rational(self.eta_1),
            "wall_time": self.wall_time,
            "notes": list(self.notes),
        }
        if self.stop_latencies:
            out["stop_latencies"] = dict(self.stop_latencies)
        return out


# An engine task takes a cancel token and returns (value, eta_N, eta_1, notes).
Task = Callable[[Optional[CancelToken]], tuple]


def _pairs_tasks(p: PuiseuxPairs, N: int) -> Dict[str, Task]:
    tasks = {
        "puiseux": lambda cancel: (signature_puiseux(p, N, cancel=cancel), None, None, []),
        "resolution": lambda cancel: (
            *signature_resolution(pairs_to_resolution_graph(p), N, cancel=cancel, details=True),
            ["graph derived from the Puiseux pairs"]),
    }
    if len(p) == 1:
        m, n = p.pairs[0]
        tasks["spectral"] = lambda cancel: (
            *signature_spectral(brieskorn_curve_spectral_pairs(m, n, cancel=cancel), N,
                                cancel=cancel, details=True),
            [f"spectral pairs of x^{m} + y^{n}"])
    return tasks


def engine_tasks(job: JobSpec) -> Dict[str, Task]:
    """Map each applicable approach to a callable computing the signature."""
    N = job.N
    if job.pairs is not None:
        if len(job.pairs) == 0:
            raise NoApplicableEngine("smooth branch: no engine handles empty Puiseux pairs")
        return _pairs_tasks(job.pairs, N)
    if job.graph is not None:
        G = job.graph
        return {"resolution": lambda cancel: (
            *signature_resolution(G, N, cancel=cancel, details=True), [])}
    if job.sppairs is not None:
        S = job.sppairs
        notes = [WEIGHT_TWO_NOTE] if S.has_weight_two else []
        return {"spectral": lambda cancel: (
            *signature_spectral(S, N, cancel=cancel, details=True), list(notes))}
    if job.brieskorn is not None:
        c = job.brieskorn
        tasks = {"brieskorn": lambda cancel: (brieskorn_signature(c, cancel=cancel), None, None, [])}
        lo, hi = sorted((c.c1, c.c2))
        if lo >= 2 and gcd(lo, hi) == 1 and N >= 2:
            pairs_tasks = _pairs_tasks(PuiseuxPairs(((hi, lo),)), N)
            tasks["puiseux"] = pairs_tasks["puiseux"]
            tasks["spectral"] = pairs_tasks["spectral"]
        return tasks
    try:
        pairs = puiseux_pairs_lite(job.poly)
    except ComputationError as exc:
        raise NoApplicableEngine(f"cannot derive invariants from the polynomial: {exc}") from exc
    if len(pairs) == 0:
        raise NoApplicableEngine("the polynomial defines a smooth curve at the origin")
    tasks = _pairs_tasks(pairs, N)
    for approach, task in list(tasks.items()):
        tasks[approach] = _with_note(task, f"Puiseux pairs {list(pairs.pairs)} from the polynomial")
    return tasks


def _with_note(task, note):
    def run(cancel):
        value, eta_n, eta_1, notes = task(cancel)
        return value, eta_n, eta_1, [note, *notes]
    return run


def applicable_engines(job: JobSpec) -> set:
    tasks = engine_tasks(job)
    if not tasks:
        raise NoApplicableEngine(f"no engine applies to {job.kind} input")
    return set(tasks)


def run_engine(approach, task, cancel, N=None):
    start = time.perf_counter()
    value, eta_n, eta_1, notes = task(cancel)
    return SignatureResult(value=value, approach=approach, N=N, eta_N=eta_n, eta_1=eta_1,
                           wall_time=time.perf_counter() - start, notes=list(notes))


def race_signature(job: JobSpec, tasks=None, grace=1.0) -> SignatureResult:
    """First engine to finish wins; the rest are cancelled.

    After a winner is claimed, waits up to ``grace`` seconds for the losers
    to notice the cancellation and records how long each one took to stop
    (``stop_latencies``, seconds after the cancel signal).
    """
    tasks = dict(tasks if tasks is not None else engine_tasks(job))
    if not tasks:
        raise NoApplicableEngine(f"no engine applies to {job.kind} input")
    token = CancelToken()
    lock = threading.Lock()
    settled = threading.Event()
    state = {"winner": None, "remaining": len(tasks)}
    errors = {}
    stopped_at = {}

    def worker(approach, task):
        try:
            result = run_engine(approach, task, token, job.N)
        except Cancelled:
            pass
        except Exception as exc:  # reported through AllEnginesFailed
            with lock:
                errors[approach] = exc
        else:
            with lock:
                if state["winner"] is None:
                    state["winner"] = result
                    token.cancel()
                    settled.set()
        finally:
            with lock:
                stopped_at[approach] = time.perf_counter()
                state["remaining"] -= 1
                if state["remaining"] == 0:
                    settled.set()

    threads = [threading.Thread(target=worker, args=item, daemon=True, name=f"sigsurf-{item[0]}")
               for item in tasks.items()]
    for t in threads:
        t.start()
    settled.wait()
    winner = state["winner"]
    if winner is None:
        raise AllEnginesFailed(errors)
    deadline = time.perf_counter() + grace
    for t in threads:
        t.join(max(0.0, deadline - time.perf_counter()))
    with lock:
        for approach in tasks:
            if approach == winner.approach:
                continue
            end = stopped_at.get(approach)
            if end is None:
                winner.notes.append(f"{approach} still running after {grace:.2f}s grace")
                winner.stop_latencies[approach] = float("inf")
            else:
                winner.stop_latencies[approach] = max(0.0, end - token.cancelled_at)
        for approach, exc in errors.items():
            winner.notes.append(f"{approach} failed: {exc}")
    return winner


@dataclass
class VerificationReport:
    N: int
    results: list
    errors: dict
    consensus: bool

    @property
    def value(self):
        return self.results[0].value if self.consensus else None

    def to_dict(self):
        return {
            "N": self.N,
            "consensus": self.consensus,
            "value": self.value,
            "results": [r.to_dict() for r in self.results],
            "errors": {k: str(v) for k, v in self.errors.items()},
        }


def verify_signature(job: JobSpec, tasks=None, raise_on_failure=True) -> VerificationReport:
    """Run every applicable engine to completion and compare the answers."""
    tasks = dict(tasks if tasks is not None else engine_tasks(job))
    if not tasks:
        raise NoApplicableEngine(f"no engine applies to {job.kind} input")
    results = {}
    errors = {}

    def worker(approach, task):
        try:
            results[approach] = run_engine(approach, task, None, job.N)
        except Exception as exc:  # collected into the report
            errors[approach] = exc

    threads = [threading.Thread(target=worker, args=item, daemon=True) for item in tasks.items()]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    ordered = [results[a] for a in APPROACHES if a in results]
    ordered += [r for a, r in results.items() if a not in APPROACHES]
    values = {r.value for r in ordered}
    consensus = not errors and len(values) == 1
    report = VerificationReport(N=job.N, results=ordered, errors=errors, consensus=consensus)
    if raise_on_failure and not consensus:
        if not ordered:
            raise AllEnginesFailed(errors)
        detail = {r.approach: r.value for r in ordered}
        detail.update({a: f"error ({e})" for a, e in errors.items()})
        exc = ConsensusFailure(detail)
        exc.report = report
        raise exc
    return report


def job_from_fixture(entry) -> JobSpec:
    """Build a job from a suite entry such as ``{"N": 5, "pairs": [[3, 2]]}``."""
    from sigsurf import formats

    kinds = [k for k in _INPUT_KINDS if k in entry]
    if len(kinds) != 1:
        raise InputError(f"fixture {entry.get('name', '?')!r} needs exactly one input, got {kinds}")
    kind = kinds[0]
    raw = entry[kind]
    N = entry.get("N")
    if kind == "pairs":
        return JobSpec(N=N, pairs=formats.pairs_from_dict({"pairs": raw}))
    if kind == "graph":
        return JobSpec(N=N, graph=formats.graph_from_dict(raw))
    if kind == "sppairs":
        return JobSpec(N=N, sppairs=formats.spectral_from_dict(raw))
    if kind == "brieskorn":
        return JobSpec(N=N, brieskorn=BrieskornExponents(*raw))
    return JobSpec(N=N, poly=parse_polynomial(raw))


def run_benchmarks(suite, repeats=1) -> dict:
    """Time each applicable engine on each fixture, one engine at a time.

    ``suite`` is a list of fixture dicts (``name``, ``N`` and one input);
    entries with ``"skip"`` are reported but not run.  Entries of the form
    ``{"name": ..., "kernel": "s_counts", "c": [c1, c2, c3]}`` compare the
    naive and fast lattice counters on every available backend.  No timing
    is asserted.
    """
    from sigsurf.brieskorn import s_counts_fast, s_counts_naive

    rows = []
    for entry in suite:
        name = entry.get("name", "?")
        if "skip" in entry:
            rows.append({"fixture": name, "approach": None, "skipped": entry["skip"]})
            continue
        if entry.get("kernel") == "s_counts":
            c = tuple(entry["c"])
            limit = entry.get("naive_limit", 5 * 10 ** 7)
            py_limit = entry.get("python_naive_limit", 2 * 10 ** 6)
            for backend in kernels.backends():
                work = (c[0] - 1) * (c[1] - 1) * (c[2] - 1)
                for label, fn in (("fast", s_counts_fast), ("naive", s_counts_naive)):
                    cap = py_limit if backend == "python" else limit
                    if label == "naive" and work > cap:
                        rows.append({"fixture": name, "kernel": label, "backend": backend,
                                     "skipped": f"{work} lattice points exceeds {cap}"})
                        continue
                    best = _best_time(lambda: fn(c, backend=backend), repeats)
                    rows.append({"fixture": name, "kernel": label, "backend": backend,
                                 "seconds": best, "value": fn(c, backend=backend).signature})
            continue
        job = job_from_fixture(entry)
        for approach, task in engine_tasks(job).items():
            holder = {}

            def once():
                holder["r"] = task(None)

            best = _best_time(once, repeats)
            rows.append({"fixture": name, "N": job.N, "approach": approach,
                         "value": holder["r"][0], "seconds": best})
    return {"backend": kernels.BACKEND, "rows": rows}


def _best_time(fn, repeats):
    best = float("inf")
    for _ in range(max(1, repeats)):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best
