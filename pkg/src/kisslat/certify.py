"""End-to-end certification: code file in, canonical certificate out.

The pipeline is parse -> self-orthogonality -> weights -> span basis ->
short-vector enumeration -> closure probe -> verdicts.  Every stage
failure is wrapped with the stage name; fields computed by earlier
stages survive a later failure.  Output is canonical: keys sorted,
floats fixed at 12 significant digits, volatile timings kept out of the
serialized form, so identical inputs and seeds give byte-identical
certificates.
"""

from __future__ import annotations

import json
import random
import time
import warnings
from dataclasses import dataclass, field

from . import asymptotics
from .binary_codes import BinaryCode, is_self_orthogonal, parse_code, weight_distribution
from .code_lattice import (
    build_span_basis,
    closure_probe,
    enumerate_short,
    random_set_member,
    set_contains,
)

TOOL_VERSION = "0.1.0"


class CertifyError(RuntimeError):
    """Pipeline failure, tagged with the stage that raised it.

    `partial` holds whatever earlier stages already computed; a failure
    downstream never corrupts those fields.
    """

    def __init__(self, stage: str, message: str, partial: dict | None = None):
        super().__init__(f"stage {stage}: {message}")
        self.stage = stage
        self.partial = partial or {}


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def bounds_snapshot() -> dict[str, float]:
    """Every closed-form constant, rounded to 12 significant digits."""
    e3 = asymptotics.light_vector_exponent(3, 0.5)
    d0 = asymptotics.target_relative_distance()
    z1, z2 = asymptotics.exponent_zeros(3)
    return {
        "light_vector_exponent_s3_half": _round12(e3),
        "light_vector_exponent_s3_half_scaled": _round12(e3 / 64),
        "kissing_exponent_constant": _round12(asymptotics.kissing_exponent_constant()),
        "kissing_exponent_constant_tight": _round12(asymptotics.kissing_exponent_constant(1e-7)),
        "rate_threshold_q64": _round12(asymptotics.rate_threshold(64).rho0),
        "target_relative_distance": _round12(d0.value),
        "target_distance_offset": _round12(d0.offset),
        "target_distance_offset_sign": d0.sign,
        "exponent_zero_low_s3": _round12(z1),
        "exponent_zero_high_s3": _round12(z2),
        "exponent_drop_at_target_s3": _round12(
            e3 - asymptotics.light_vector_exponent(3, d0.value)
        ),
    }


@dataclass
class Certificate:
    code: dict
    lattice: dict
    checks: dict
    bounds: dict
    meta: dict
    timings: dict = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict:
        d = {
            "code": self.code,
            "lattice": self.lattice,
            "checks": self.checks,
            "bounds_snapshot": self.bounds,
            "meta": self.meta,
        }
        if include_timings:
            d["timings"] = self.timings
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(
            code=d["code"],
            lattice=d["lattice"],
            checks=d["checks"],
            bounds=d["bounds_snapshot"],
            meta=d["meta"],
            timings=d.get("timings", {}),
        )


def certify_code(
    c: BinaryCode,
    seed: int = 0,
    cap: int | None = None,
    trials: int = 1000,
    workers: int = 1,
) -> Certificate:
    """Run the full pipeline on an already-parsed code."""
    timings: dict[str, float] = {}
    notes: list[str] = []
    partial: dict = {}

    def stage(name, fn):
        t0 = time.perf_counter()
        try:
            out = fn()
        except CertifyError:
            raise
        except Exception as exc:
            raise CertifyError(name, str(exc), partial=dict(partial)) from exc
        timings[name] = time.perf_counter() - t0
        partial[name] = out
        return out

    so = stage("self_orthogonality", lambda: is_self_orthogonal(c))
    if not so:
        notes.append("input code is not self-orthogonal: lattice built anyway, "
                     "minimum-norm guarantees lapse")
    wd = stage("weights", lambda: weight_distribution(c))

    def build():
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return build_span_basis(c)

    basis = stage("lattice", build)
    used_cap = cap if cap is not None else max(wd.d or 0, 8)
    report = stage("enumeration", lambda: enumerate_short(basis, used_cap, workers=workers))
    closure = stage("closure", lambda: closure_probe(c, trials=trials, seed=seed))

    def sample_span_set():
        rng = random.Random(seed + 1)
        for _ in range(trials):
            x = random_set_member(c, rng)
            if not set_contains(c, x) or not basis.contains(x):
                return False
        return True

    span_ok = stage("membership", sample_span_set)

    code_part = {
        "n": c.n,
        "k": c.k,
        "d": wd.d,
        "A_d": wd.A_d,
        "self_orthogonal": so,
        "weights": {str(w): cnt for w, cnt in sorted(wd.counts.items())},
    }
    lattice_part = {
        "dimension": basis.n,
        "determinant": basis.determinant(),
        "min_norm": report.min_norm,
        "kissing": report.kissing,
        "per_norm": {str(v): cnt for v, cnt in sorted(report.per_norm.items())},
        "basis_digest": basis.digest(),
    }
    checks = {
        "set_closed_sampled": closure.closed,
        "norm_equals_d": (report.min_norm == wd.d) if wd.d is not None else None,
        "kissing_ge_Ad": (report.kissing >= wd.A_d) if wd.d is not None else None,
        "span_contains_set_sampled": span_ok,
        "closure_counterexamples": [list(v) for v in closure.counterexamples],
        "closure_trials": closure.trials,
        "closure_failures": closure.failures,
    }
    meta = {
        "tool_version": TOOL_VERSION,
        "seed": seed,
        "trials": trials,
        "norm_cap": used_cap,
        "workers": workers,
        "warnings": notes,
    }
    return Certificate(
        code=code_part,
        lattice=lattice_part,
        checks=checks,
        bounds=bounds_snapshot(),
        meta=meta,
        timings={k: round(v, 6) for k, v in timings.items()},
    )


def certify_file(
    path: str,
    seed: int = 0,
    cap: int | None = None,
    trials: int = 1000,
    workers: int = 1,
) -> Certificate:
    try:
        with open(path) as fh:
            text = fh.read()
        c = parse_code(text)
    except CertifyError:
        raise
    except Exception as exc:
        raise CertifyError("parse_code", str(exc)) from exc
    return certify_code(c, seed=seed, cap=cap, trials=trials, workers=workers)


def emit(cert: Certificate, fmt: str = "json", include_timings: bool = False) -> str:
    """Canonical serialization; byte-identical across reruns."""
    if fmt == "json":
        return json.dumps(cert.to_dict(include_timings), sort_keys=True, indent=2) + "\n"
    if fmt == "csv-summary":
        ch = cert.checks
        verdicts = ";".join(
            f"{key}={ch[key]}"
            for key in ("set_closed_sampled", "norm_equals_d", "kissing_ge_Ad")
        )
        head = "n,k,d,A_d,min_norm,kissing,verdicts"
        row = ",".join(
            str(v)
            for v in (
                cert.code["n"],
                cert.code["k"],
                cert.code["d"],
                cert.code["A_d"],
                cert.lattice["min_norm"],
                cert.lattice["kissing"],
                verdicts,
            )
        )
        return head + "\n" + row + "\n"
    raise ValueError(f"unknown certificate format {fmt!r}")


def parse_certificate(text: str) -> Certificate:
    return Certificate.from_dict(json.loads(text))
