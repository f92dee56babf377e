"""Batch verification: sweep specs, ordered JSON-lines output, resume."""

from __future__ import annotations

import hashlib
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, TextIO

from . import verify as V
from .verify import Status, TheoremId, VerificationReport

__all__ = [
    "SweepSpec",
    "SpecError",
    "THEOREM_PARAMS",
    "VERIFIERS",
    "run_sweep",
    "resume_sweep",
    "EXIT_OK",
    "EXIT_FAIL",
    "EXIT_USAGE",
    "EXIT_IO",
]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class SpecError(ValueError):
    """Invalid sweep specification or resume mismatch (usage error)."""


# Required range parameters per theorem, in iteration order (outermost first),
# with the lowest admissible value for each.
THEOREM_PARAMS: dict[TheoremId, dict[str, int]] = {
    TheoremId.T1E1: {"n": 1, "m": 1, "alpha": 1},
    TheoremId.T1E2: {"n": 1, "m": 1, "alpha": 1},
    TheoremId.QT_PLUS: {"n": 1, "m": 1, "alpha": 1},
    TheoremId.QT_MINUS: {"n": 1, "m": 1, "alpha": 1},
    TheoremId.QLUCAS: {"d": 2, "a": 0, "h": 0},
    TheoremId.CYC_LEMMA: {"d": 2},
    TheoremId.SUN_FORMULA: {"n": 1},
    TheoremId.GUO_ZENG: {"n": 1},
    TheoremId.SUN_DELANNOY: {"n": 1},
    TheoremId.CANCELLATION: {"b": 0},
    TheoremId.B_SYMMETRY: {"a": 0, "d": 2, "alpha": 1},
    TheoremId.SUPERCONG: {"p": 3},
    TheoremId.DELANNOY_POWER_CONJ: {"n": 1, "m": 1},
    TheoremId.Q_FACTOR: {"n": 2},
    TheoremId.QAPERY_ALT: {"k": 0, "alpha": 1},
}

SIGNED = (TheoremId.T1E1, TheoremId.T1E2)


def _integer_sum(sign):
    return lambda p: V.verify_integer_sum(p["n"], p["m"], p["alpha"], sign)


VERIFIERS: dict[TheoremId, Callable[[dict], VerificationReport]] = {
    TheoremId.T1E1: _integer_sum(1),
    TheoremId.T1E2: _integer_sum(-1),
    TheoremId.QT_PLUS: lambda p: V.verify_q_sum_plus(p["n"], p["m"], p["alpha"]),
    TheoremId.QT_MINUS: lambda p: V.verify_q_sum_minus(p["n"], p["m"], p["alpha"]),
    TheoremId.QLUCAS: lambda p: V.verify_q_lucas(p["a"], p["b"], p["h"], p["l"], p["d"]),
    TheoremId.CYC_LEMMA: lambda p: V.verify_cyclotomic_lemma(p["d"]),
    TheoremId.SUN_FORMULA: lambda p: V.verify_sun_formula(p["n"]),
    TheoremId.GUO_ZENG: lambda p: V.verify_guo_zeng(p["n"]),
    TheoremId.SUN_DELANNOY: lambda p: V.verify_sun_delannoy(p["n"]),
    TheoremId.CANCELLATION: lambda p: V.verify_cancellation(p["b"]),
    TheoremId.B_SYMMETRY: lambda p: V.verify_b_symmetry(p["a"], p["b"], p["d"], p["alpha"]),
    TheoremId.SUPERCONG: lambda p: V.verify_supercongruence(p["p"]),
    TheoremId.DELANNOY_POWER_CONJ: lambda p: V.explore_delannoy_power(p["n"], p["m"]),
    TheoremId.Q_FACTOR: lambda p: V.verify_q_int_factorization(p["n"]),
    TheoremId.QAPERY_ALT: lambda p: V.verify_q_apery_alt(p["k"], p["alpha"]),
}


@dataclass
class SweepSpec:
    """Declarative parameter sweep.

    ``ranges`` maps parameter names to inclusive ``(lo, hi)`` pairs.  ``sign``
    only applies to T1E1/T1E2 (``"+1"``, ``"-1"`` or ``"both"``); by default the
    theorem id fixes it.  ``workers`` and ``out`` do not affect the output
    bytes and are excluded from the spec hash.
    """

    theorem: TheoremId
    ranges: dict[str, tuple[int, int]]
    sign: str | None = None
    deterministic: bool = False
    workers: int = 1
    out: str = "-"

    def __post_init__(self):
        self.theorem = TheoremId(self.theorem)
        self.ranges = {k: (int(v[0]), int(v[1])) for k, v in self.ranges.items()}
        self.validate()

    def validate(self) -> None:
        floors = THEOREM_PARAMS[self.theorem]
        missing = [name for name in floors if name not in self.ranges]
        if missing:
            raise SpecError(f"{self.theorem.value} needs ranges for: {', '.join(missing)}")
        extra = [name for name in self.ranges if name not in floors]
        if extra:
            raise SpecError(f"{self.theorem.value} does not take: {', '.join(extra)}")
        for name, (lo, hi) in self.ranges.items():
            if lo > hi:
                raise SpecError(f"empty range for {name}: {lo}..{hi}")
            if lo < floors[name]:
                raise SpecError(f"{name} must be >= {floors[name]}, got {lo}")
        if self.sign is not None:
            if self.theorem not in SIGNED:
                raise SpecError("--sign only applies to T1E1/T1E2")
            if self.sign not in ("+1", "-1", "both"):
                raise SpecError(f"bad sign {self.sign!r}")
        if self.workers < 1:
            raise SpecError("workers must be >= 1")
        if not self.tasks_nonempty():
            raise SpecError("sweep has no parameter tuples")

    def canonical(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "ranges": {k: list(self.ranges[k]) for k in sorted(self.ranges)},
            "sign": self.sign,
            "deterministic": self.deterministic,
        }

    def spec_hash(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    @classmethod
    def from_canonical(cls, obj: dict, **kw) -> SweepSpec:
        return cls(TheoremId(obj["theorem"]),
                   {k: tuple(v) for k, v in obj["ranges"].items()},
                   obj.get("sign"), bool(obj.get("deterministic")), **kw)

    def theorems(self) -> list[TheoremId]:
        if self.theorem not in SIGNED or self.sign is None:
            return [self.theorem]
        return {"+1": [TheoremId.T1E1], "-1": [TheoremId.T1E2],
                "both": [TheoremId.T1E1, TheoremId.T1E2]}[self.sign]

    def tasks(self) -> Iterator[tuple[TheoremId, dict[str, int]]]:
        """All (theorem, params) pairs in deterministic order."""
        for tid in self.theorems():
            names = list(THEOREM_PARAMS[tid])
            axes = [range(self.ranges[n][0], self.ranges[n][1] + 1) for n in names]
            for values in itertools.product(*axes):
                params = dict(zip(names, values))
                yield from _expand(tid, params)

    def tasks_nonempty(self) -> bool:
        return next(iter(self.tasks()), None) is not None


def _expand(tid: TheoremId, params: dict[str, int]) -> Iterator[tuple[TheoremId, dict]]:
    if tid is TheoremId.QLUCAS:
        d = params["d"]
        for b in range(d):
            for l in range(d):
                yield tid, {"a": params["a"], "b": b, "h": params["h"], "l": l, "d": d}
    elif tid is TheoremId.B_SYMMETRY:
        for b in range(params["d"]):
            yield tid, {"a": params["a"], "b": b, "d": params["d"], "alpha": params["alpha"]}
    elif tid is TheoremId.SUPERCONG:
        if V.is_prime(params["p"]):
            yield tid, params
    else:
        yield tid, params


def _run_task(task: tuple[TheoremId, dict]) -> VerificationReport:
    tid, params = task
    return VERIFIERS[tid](params)


def _encode(report: VerificationReport, deterministic: bool) -> str:
    return json.dumps(report.to_json(deterministic), separators=(",", ":")) + "\n"


def _header(spec: SweepSpec) -> str:
    return json.dumps({"spec_hash": spec.spec_hash(), "spec": spec.canonical()},
                      sort_keys=True, separators=(",", ":")) + "\n"


def _execute(spec: SweepSpec, tasks: list, stream: TextIO, verifiers=None) -> int:
    """Run tasks, writing records in task order.  Returns the exit code."""
    run = _run_task if verifiers is None else (lambda t: verifiers[t[0]](t[1]))
    all_ok = True
    if spec.workers > 1 and verifiers is None and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            results = pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (8 * spec.workers)))
            for report in results:
                all_ok &= report.ok
                stream.write(_encode(report, spec.deterministic))
                stream.flush()
    else:
        for task in tasks:
            report = run(task)
            all_ok &= report.ok
            stream.write(_encode(report, spec.deterministic))
            stream.flush()
    return EXIT_OK if all_ok else EXIT_FAIL


def run_sweep(spec: SweepSpec, stream: TextIO | None = None, verifiers=None) -> int:
    """Run a full sweep.  ``verifiers`` overrides the theorem dispatch table (testing hook)."""
    tasks = list(spec.tasks())
    if stream is not None:
        stream.write(_header(spec))
        return _execute(spec, tasks, stream, verifiers)
    if spec.out == "-":
        sys.stdout.write(_header(spec))
        return _execute(spec, tasks, sys.stdout, verifiers)
    with open(spec.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(_header(spec))
        return _execute(spec, tasks, fh, verifiers)


def resume_sweep(path: str, expected: SweepSpec | None = None, workers: int = 1,
                 verifiers=None) -> int:
    """Continue an interrupted sweep written to ``path``.

    A trailing partial or corrupt line is dropped and recomputed.  Raises
    :class:`SpecError` when the header hash does not match its spec, or does
    not match ``expected``; ``OSError`` on I/O problems.
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    lines = raw.split(b"\n")
    try:
        header = json.loads(lines[0])
        spec = SweepSpec.from_canonical(header["spec"], workers=workers, out=path)
    except (ValueError, KeyError, TypeError) as exc:
        raise SpecError(f"{path}: unreadable sweep header") from exc
    if header.get("spec_hash") != spec.spec_hash():
        raise SpecError(f"{path}: spec hash does not match its spec")
    if expected is not None and expected.spec_hash() != spec.spec_hash():
        raise SpecError(f"{path}: spec hash differs from the requested sweep")

    tasks = list(spec.tasks())
    keep = len(lines[0]) + 1
    done = 0
    prior_ok = True
    body = lines[1:]
    for i, line in enumerate(body):
        complete = i < len(body) - 1  # followed by a newline
        if not complete:
            break
        try:
            rec = json.loads(line)
            ok = (done < len(tasks) and rec["theorem"] == tasks[done][0].value
                  and rec["params"] == tasks[done][1])
        except (ValueError, KeyError, TypeError):
            ok = False
        if not ok:
            if i == len(body) - 2:  # last full line is corrupt: recompute it
                break
            raise SpecError(f"{path}: record {i + 1} does not match the sweep")
        prior_ok &= Status(rec["status"]).ok
        done += 1
        keep += len(line) + 1

    with open(path, "r+b") as fh:
        fh.truncate(keep)
    with open(path, "a", encoding="utf-8", newline="\n") as fh:
        code = _execute(spec, tasks[done:], fh, verifiers)
    return code if prior_ok else EXIT_FAIL
