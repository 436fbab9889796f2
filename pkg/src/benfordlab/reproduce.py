"""Self-check harness: rerun every headline claim with fixed seeds.

Each claim pins its thresholds here, computes its measurements from
scratch, and reports pass/fail strictly from those thresholds.  Seeds are
fixed constants so outcomes (and serialized output) are bit-stable from
run to run.
"""
import math
from dataclasses import dataclass

import json

import numpy as np

from .analysis import (
    conformance_report,
    decades_spanned,
    ks_uniform_mantissa,
    mad_stat,
    digit_histogram,
)
from .digitlaw import (
    DigitLawSpec,
    benford_pmf,
    wrapped_gaussian_flatness,
)
from .errors import SpecificationError
from .generators import (
    ExponentIntervalSpec,
    GeometricSeqSpec,
    ProductSpec,
    SourceDistribution,
    gen_geometric_sequence,
    gen_power_sequence,
    gen_product_samples,
    scale_sequence,
)
from .rng import derive_seed, uniform_stream

CLAIM_IDS = (
    "table1",
    "gr_uniform",
    "scale_invariance",
    "base_invariance",
    "product_m_small",
    "product_m_large",
    "sigma_flatness",
    "geoseq_fig3",
    "deep_digit_uniformity",
)

#: canonical first-digit probabilities, rounded to the 4 decimals usually quoted
FIRST_DIGIT_REFERENCE_4DP = (
    0.3010, 0.1761, 0.1249, 0.0969, 0.0792, 0.0669, 0.0580, 0.0512, 0.0458,
)

SEEDS = {
    "gr_a10": 101,
    "gr_a2": 112,
    "gr_ae": 103,
    "base_invariance": 201,
    "scale_invariance": 301,
    "product_wide_m5": 401,
    "product_narrow_m10": 402,
    "product_narrow_m400": 403,
    "geoseq": 501,
}

GR_SAMPLES = 1_000_000
PRODUCT_SAMPLES = 100_000
GEO_TERMS = 10_000
ALPHA = 0.01

MAX_DIGIT_DEV = 0.002
MAD_CONVERGED = 0.005
MAD_NOT_CONVERGED = 0.02
FLATNESS_SIGMA1 = 5e-8
FLATNESS_SIGMA10 = 1e-12
FLATNESS_SIGMA03_ORACLE = 0.338
FLATNESS_SIGMA03_RTOL = 0.10
GEO_MIN_DECADES = 40.0
GEO_MAX_KS = 0.02
DEEP_DIGIT_DEV = 0.001
SCALE_TRIALS = 100
SCALE_MIN_CONFORMING = 99


@dataclass(frozen=True)
class ReproduceClaim:
    """Outcome of one claim: id, pass/fail, and the measured quantities."""

    id: str
    status: str  # pass | fail
    details: dict


DESCRIPTIONS = {
    "table1": "exact first-digit probabilities match the canonical table to 4 decimals",
    "gr_uniform": "powers a**R with R uniform over decade-aligned intervals give Benford digits",
    "scale_invariance": "multiplying a conforming sequence by a constant keeps it conforming",
    "base_invariance": "the digit law holds in base 8 for an a=3 power sequence",
    "product_m_small": "products of a few wide-interval factors already conform",
    "product_m_large": "narrow-interval products need hundreds of factors to conform",
    "sigma_flatness": "wrapped normal of width sigma>=1 is flat to the eighth figure",
    "geoseq_fig3": "a 10,000-term generalized geometric sequence spans 40+ decades and conforms",
    "deep_digit_uniformity": "fourth-digit probabilities are uniform to within 0.001",
}


def _gr_case(a: float, p: int, m: int, seed: int, base: int = 10) -> dict:
    spec = ExponentIntervalSpec(a=a, p=p, m_intervals=m, number_base=base)
    values = gen_power_sequence(spec, GR_SAMPLES, seed)
    law = DigitLawSpec(base=base, position=1)
    report = conformance_report(values, law, ALPHA)
    max_dev = float(np.max(np.abs(report.observed - report.expected)))
    return {
        "a": a,
        "p": p,
        "m_intervals": m,
        "number_base": base,
        "seed": seed,
        "n": GR_SAMPLES,
        "max_digit_dev": max_dev,
        "chi_square": report.chi_square,
        "chi_square_critical": report.chi_square_critical,
        "ok": bool(max_dev < MAX_DIGIT_DEV and report.chi_square <= report.chi_square_critical),
    }


def _claim_table1() -> ReproduceClaim:
    pmf = benford_pmf(DigitLawSpec(base=10, position=1))
    devs = np.abs(pmf.probs - np.asarray(FIRST_DIGIT_REFERENCE_4DP))
    max_err = float(devs.max())
    status = "pass" if max_err < 5e-5 else "fail"
    return ReproduceClaim(
        id="table1",
        status=status,
        details={"max_abs_error": max_err, "tolerance": 5e-5},
    )


def _claim_gr_uniform() -> ReproduceClaim:
    cases = [
        _gr_case(10.0, 0, 1, SEEDS["gr_a10"]),
        _gr_case(2.0, 0, 1, SEEDS["gr_a2"]),
        _gr_case(math.e, -3, 2, SEEDS["gr_ae"]),
    ]
    status = "pass" if all(c["ok"] for c in cases) else "fail"
    return ReproduceClaim(
        id="gr_uniform",
        status=status,
        details={"max_digit_dev_limit": MAX_DIGIT_DEV, "cases": cases},
    )


def _claim_scale_invariance() -> ReproduceClaim:
    seed = SEEDS["scale_invariance"]
    spec = ExponentIntervalSpec(a=10.0, p=0, m_intervals=1)
    base_values = gen_power_sequence(spec, GR_SAMPLES, seed)
    law = DigitLawSpec(base=10, position=1)
    base_report = conformance_report(base_values, law, ALPHA)
    u = uniform_stream(derive_seed(seed, 1), 0, SCALE_TRIALS)
    factors = 0.1 + 9.9 * u
    conforming = 0
    for c in factors:
        report = conformance_report(scale_sequence(base_values, float(c)), law, ALPHA)
        if report.verdict == "conforming":
            conforming += 1
    status = (
        "pass"
        if base_report.verdict == "conforming" and conforming >= SCALE_MIN_CONFORMING
        else "fail"
    )
    return ReproduceClaim(
        id="scale_invariance",
        status=status,
        details={
            "seed": seed,
            "n": GR_SAMPLES,
            "trials": SCALE_TRIALS,
            "conforming_trials": conforming,
            "required": SCALE_MIN_CONFORMING,
            "base_verdict": base_report.verdict,
        },
    )


def _claim_base_invariance() -> ReproduceClaim:
    case = _gr_case(3.0, 0, 1, SEEDS["base_invariance"], base=8)
    return ReproduceClaim(
        id="base_invariance",
        status="pass" if case["ok"] else "fail",
        details={"max_digit_dev_limit": MAX_DIGIT_DEV, "cases": [case]},
    )


def _product_mad(lo: float, hi: float, factors: int, seed: int) -> dict:
    spec = ProductSpec(
        source=SourceDistribution.uniform(lo, hi),
        num_factors=factors,
        num_samples=PRODUCT_SAMPLES,
        seed=seed,
    )
    values = gen_product_samples(spec)
    law = DigitLawSpec(base=10, position=1)
    mad = mad_stat(digit_histogram(values, law), benford_pmf(law))
    return {
        "source_lo": lo,
        "source_hi": hi,
        "num_factors": factors,
        "n": PRODUCT_SAMPLES,
        "seed": seed,
        "mad": mad,
    }


def _claim_product_m_small() -> ReproduceClaim:
    case = _product_mad(1.0, 10.0, 5, SEEDS["product_wide_m5"])
    status = "pass" if case["mad"] < MAD_CONVERGED else "fail"
    return ReproduceClaim(
        id="product_m_small",
        status=status,
        details={"mad_limit": MAD_CONVERGED, "cases": [case]},
    )


def _claim_product_m_large() -> ReproduceClaim:
    not_yet = _product_mad(5.0, 6.0, 10, SEEDS["product_narrow_m10"])
    converged = _product_mad(5.0, 6.0, 400, SEEDS["product_narrow_m400"])
    ok = not_yet["mad"] > MAD_NOT_CONVERGED and converged["mad"] < MAD_CONVERGED
    return ReproduceClaim(
        id="product_m_large",
        status="pass" if ok else "fail",
        details={
            "mad_fail_floor": MAD_NOT_CONVERGED,
            "mad_limit": MAD_CONVERGED,
            "cases": [not_yet, converged],
        },
    )


def _claim_sigma_flatness() -> ReproduceClaim:
    f1 = wrapped_gaussian_flatness(1.0)
    f10 = wrapped_gaussian_flatness(10.0)
    f03 = wrapped_gaussian_flatness(0.3)
    ok = (
        f1 < FLATNESS_SIGMA1
        and f10 < FLATNESS_SIGMA10
        and abs(f03 - FLATNESS_SIGMA03_ORACLE) <= FLATNESS_SIGMA03_RTOL * FLATNESS_SIGMA03_ORACLE
    )
    return ReproduceClaim(
        id="sigma_flatness",
        status="pass" if ok else "fail",
        details={
            "flatness_sigma_1": f1,
            "limit_sigma_1": FLATNESS_SIGMA1,
            "flatness_sigma_10": f10,
            "limit_sigma_10": FLATNESS_SIGMA10,
            "flatness_sigma_0.3": f03,
            "oracle_sigma_0.3": FLATNESS_SIGMA03_ORACLE,
        },
    )


def _claim_geoseq_fig3() -> ReproduceClaim:
    spec = GeometricSeqSpec(
        interval_lo=1.0,
        interval_hi=9.9,
        length=GEO_TERMS,
        seed=SEEDS["geoseq"],
        mode="fresh_factors",
    )
    values = gen_geometric_sequence(spec)
    law = DigitLawSpec(base=10, position=1)
    report = conformance_report(values, law, ALPHA)
    decades = decades_spanned(values)
    ks = ks_uniform_mantissa(values)
    ok = (
        decades > GEO_MIN_DECADES
        and ks < GEO_MAX_KS
        and report.chi_square <= report.chi_square_critical
    )
    return ReproduceClaim(
        id="geoseq_fig3",
        status="pass" if ok else "fail",
        details={
            "terms": GEO_TERMS,
            "seed": SEEDS["geoseq"],
            "decades_spanned": decades,
            "min_decades": GEO_MIN_DECADES,
            "ks_mantissa": ks,
            "max_ks": GEO_MAX_KS,
            "chi_square": report.chi_square,
            "chi_square_critical": report.chi_square_critical,
        },
    )


def _claim_deep_digit_uniformity() -> ReproduceClaim:
    pmf = benford_pmf(DigitLawSpec(base=10, position=4))
    max_dev = float(np.max(np.abs(pmf.probs - 0.1)))
    return ReproduceClaim(
        id="deep_digit_uniformity",
        status="pass" if max_dev < DEEP_DIGIT_DEV else "fail",
        details={"max_dev_from_uniform": max_dev, "tolerance": DEEP_DIGIT_DEV},
    )


_CLAIM_RUNNERS = {
    "table1": _claim_table1,
    "gr_uniform": _claim_gr_uniform,
    "scale_invariance": _claim_scale_invariance,
    "base_invariance": _claim_base_invariance,
    "product_m_small": _claim_product_m_small,
    "product_m_large": _claim_product_m_large,
    "sigma_flatness": _claim_sigma_flatness,
    "geoseq_fig3": _claim_geoseq_fig3,
    "deep_digit_uniformity": _claim_deep_digit_uniformity,
}


def run_claim(claim_id: str) -> ReproduceClaim:
    """Run a single claim by id."""
    if claim_id not in _CLAIM_RUNNERS:
        raise SpecificationError(
            f"unknown claim {claim_id!r}; valid ids: {', '.join(CLAIM_IDS)}"
        )
    return _CLAIM_RUNNERS[claim_id]()


def run_claims(claim_ids=None) -> list[ReproduceClaim]:
    """Run the requested claims (all of them by default), in canonical order."""
    if claim_ids is None:
        claim_ids = CLAIM_IDS
    else:
        for cid in claim_ids:
            if cid not in _CLAIM_RUNNERS:
                raise SpecificationError(
                    f"unknown claim {cid!r}; valid ids: {', '.join(CLAIM_IDS)}"
                )
        claim_ids = [cid for cid in CLAIM_IDS if cid in set(claim_ids)]
    return [run_claim(cid) for cid in claim_ids]


def claims_to_json(claims) -> str:
    """Deterministic JSON for a list of claim results."""
    payload = {
        "claims": [
            {"id": c.id, "status": c.status, "details": c.details} for c in claims
        ],
        "all_pass": all(c.status == "pass" for c in claims),
    }
    return json.dumps(payload, indent=2) + "\n"
