"""Goodness-of-fit machinery and the named verification campaigns.

Each ``verify_*`` function simulates one limit statement at scale, tests it
with a Kolmogorov-Smirnov statistic against its declared limit law, and also
re-tests the same simulated samples against a deliberately mis-specified null
(half the dispersion).  The report's ``passed`` flag answers "did the right
null survive"; ``campaign_passed`` additionally demands that the wrong null
was rejected, so a test with no power cannot certify anything.

Replicate r of every campaign draws from the sub-stream (seed, label, r) with
fixed labels per role, which keeps reports byte-identical across reruns,
chunkings, and thread counts.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import asdict, dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .functionals import (
    FunctionalConfig,
    functional_statistic,
    integral_riemann,
    limit_law,
    log_product_statistic,
)
from .norming import norming_for
from .paths import DoaSpec, sample_doa, simulate_levy_path
from .rng import stream
from .stable import StableParams, cdf, char_fn, sample

__all__ = [
    "Ecdf",
    "VerificationReport",
    "ecdf",
    "ks_two_sample",
    "ks_one_sample",
    "empirical_char_fn",
    "verify_sampler",
    "verify_remark",
    "verify_fclt",
    "verify_lemma",
    "verify_product",
]

# Sub-stream labels: simulation replicates, null-law draws, control draws.
_SIM, _NULL, _CONTROL = 0, 1, 2
_ECF_CHUNK = 2**14


def _as_samples(x, name: str = "samples") -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError(f"{name} must be a nonempty 1-d array")
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{name} must be finite")
    return x


class Ecdf:
    """Empirical CDF as a right-continuous step function."""

    def __init__(self, samples):
        self.xs = np.sort(_as_samples(samples))
        self.n = self.xs.size

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.searchsorted(self.xs, x, side="right") / self.n
        if out.ndim == 0:
            return float(out)
        return out


def ecdf(samples) -> Ecdf:
    return Ecdf(samples)


def _kolmogorov_sf(lam: float) -> float:
    """Asymptotic tail 2*sum (-1)^(j-1) exp(-2 j^2 lam^2), clamped to [0,1]."""
    if lam <= 0.0:
        return 1.0
    total = 0.0
    for j in range(1, 101):
        term = 2.0 * (-1.0) ** (j - 1) * math.exp(-2.0 * j * j * lam * lam)
        total += term
        if abs(term) < 1e-18:
            break
    return min(1.0, max(0.0, total))


def ks_two_sample(a, b) -> tuple[float, float]:
    """Two-sample KS statistic and its asymptotic p-value.

    The sup of |ECDF_a - ECDF_b| is attained right after a jump of either
    sample, so scanning the pooled points with right-continuous evaluation is
    exact.
    """
    a = np.sort(_as_samples(a, "a"))
    b = np.sort(_as_samples(b, "b"))
    pooled = np.concatenate([a, b])
    fa = np.searchsorted(a, pooled, side="right") / a.size
    fb = np.searchsorted(b, pooled, side="right") / b.size
    stat = float(np.abs(fa - fb).max())
    en = math.sqrt(a.size * b.size / (a.size + b.size))
    return stat, _kolmogorov_sf((en + 0.12 + 0.11 / en) * stat)


def _eval_cdf(cdf_fn, xs: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(cdf_fn(xs), dtype=float)
        if out.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        out = np.array([float(cdf_fn(float(x))) for x in xs])
    if not np.all(np.isfinite(out)) or out.min() < -1e-9 or out.max() > 1.0 + 1e-9:
        raise ValueError("cdf_fn must return values in [0, 1]")
    return np.clip(out, 0.0, 1.0)


def ks_one_sample(samples, cdf_fn) -> tuple[float, float]:
    """One-sample KS statistic against a continuous CDF, with p-value.

    ``cdf_fn`` may be vectorized or scalar-only; both one-sided gaps (before
    and after each jump of the ECDF) enter the sup.
    """
    xs = np.sort(_as_samples(samples))
    f = _eval_cdf(cdf_fn, xs)
    n = xs.size
    grid = np.arange(1, n + 1) / n
    stat = float(max((grid - f).max(), (f - (grid - 1.0 / n)).max()))
    sq = math.sqrt(n)
    return stat, _kolmogorov_sf((sq + 0.12 + 0.11 / sq) * stat)


def empirical_char_fn(samples, t):
    """Sample mean of exp(i*t*X) at scalar or array ``t``."""
    x = _as_samples(samples)
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("t must be finite")
    tt = np.atleast_1d(t)
    acc = np.zeros(tt.size, dtype=complex)
    for start in range(0, x.size, _ECF_CHUNK):
        chunk = x[start : start + _ECF_CHUNK]
        acc += np.exp(1j * np.outer(tt, chunk)).sum(axis=1)
    out = acc / x.size
    if t.ndim == 0:
        return complex(out[0])
    return out


@dataclass
class VerificationReport:
    """Outcome of one campaign, serializable byte-for-byte reproducibly."""

    test_name: str
    seed: int
    n: int
    reps: int
    statistic: float
    threshold: float
    direction: str
    passed: bool
    config: dict
    details: dict
    negative_control: dict
    artifacts: list

    @property
    def campaign_passed(self) -> bool:
        """True when the declared null passed AND the mis-specified null was
        rejected; a campaign that cannot reject anything proves nothing."""
        return self.passed and not self.negative_control.get("passed", False)

    def to_json(self) -> str:
        return json.dumps(_plain(asdict(self)), indent=2) + "\n"

    def write(self, path) -> None:
        with open(path, "w", newline="\n") as fh:
            fh.write(self.to_json())

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls(**json.loads(text))


def _plain(obj):
    """Recursively strip numpy scalar/array types so json stays canonical."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)) and not isinstance(obj, bool):
        return int(obj)
    return obj


def _report(test_name, seed, n, reps, statistic, threshold, direction, config,
            details, control_name, control_statistic, control_threshold) -> VerificationReport:
    statistic = float(statistic)
    threshold = float(threshold)
    passed = statistic <= threshold if direction == "leq" else statistic >= threshold
    c_stat = float(control_statistic)
    control = {
        "name": control_name,
        "statistic": c_stat,
        "threshold": float(control_threshold),
        "direction": direction,
        "passed": c_stat <= control_threshold if direction == "leq" else c_stat >= control_threshold,
    }
    return VerificationReport(
        test_name=test_name,
        seed=int(seed),
        n=int(n),
        reps=int(reps),
        statistic=statistic,
        threshold=threshold,
        direction=direction,
        passed=bool(passed),
        config=_plain(config),
        details=_plain(details),
        negative_control=_plain(control),
        artifacts=[],
    )


def _law_dict(p: StableParams) -> dict:
    return {
        "alpha": p.alpha,
        "beta": p.beta,
        "dispersion": p.dispersion,
        "location": p.location,
    }


def _spec_dict(spec: DoaSpec) -> dict:
    return {
        "family": repr(spec.family),
        "known_mu": spec.known_mu,
        "known_alpha": spec.known_alpha,
        "known_beta": spec.known_beta,
        "positivity": spec.positivity,
    }


def _check_reps(reps) -> int:
    if not isinstance(reps, (int, np.integer)) or isinstance(reps, bool) or reps < 2:
        raise ValueError(f"reps must be an integer >= 2, got {reps!r}")
    return int(reps)


def _write_csv(path, header: str, rows) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(repr(float(v)) if isinstance(v, (float, np.floating))
                              else str(v) for v in row) + "\n")


def _write_limit_laws(out_dir, laws: dict) -> str:
    path = os.path.join(out_dir, "limit_laws.json")
    with open(path, "w", newline="\n") as fh:
        fh.write(json.dumps(_plain(laws), indent=2) + "\n")
    return "limit_laws.json"


def verify_sampler(params: StableParams, n: int, seed, t_grid=None,
                   threshold: float = 5e-3, out_dir=None) -> VerificationReport:
    """Characteristic-function fidelity of the exact sampler.

    Draws n variates and compares their empirical characteristic function with
    the analytic one on a grid of frequencies (default -5..5, step 0.1), in
    sup norm.  The control re-tests the same draws against the law with
    doubled dispersion.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    grid = np.arange(-50, 51) / 10.0 if t_grid is None else np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0 or not np.all(np.isfinite(grid)):
        raise ValueError("t_grid must be a nonempty finite 1-d array")

    rng = stream(seed, _SIM)
    acc = np.zeros(grid.size, dtype=complex)
    head = None
    remaining = n
    while remaining > 0:
        chunk = sample(params, rng, min(_ECF_CHUNK, remaining))
        remaining -= chunk.size
        if head is None:
            head = chunk[: min(5000, chunk.size)]
        acc += np.exp(1j * np.outer(grid, chunk)).sum(axis=1)
    ecf_vals = acc / n

    gaps = np.abs(ecf_vals - char_fn(params, grid))
    stat = float(gaps.max())
    wrong = replace(params, dispersion=2.0 * params.dispersion)
    control_stat = float(np.abs(ecf_vals - char_fn(wrong, grid)).max())

    config = {
        "campaign": "verify-sampler",
        "params": _law_dict(params),
        "n": n,
        "t_min": float(grid.min()),
        "t_max": float(grid.max()),
        "t_count": int(grid.size),
        "threshold": float(threshold),
    }
    details = {
        "worst_t": float(grid[int(np.argmax(gaps))]),
        "sampled_law": _law_dict(params),
        "control_law": _law_dict(wrong),
    }
    report = _report("verify-sampler", seed, n, 1, stat, threshold, "leq",
                     config, details, "char fn with doubled dispersion",
                     control_stat, threshold)
    if out_dir is not None:
        _write_csv(os.path.join(out_dir, "charfn_fit.csv"),
                   "t,ecf_re,ecf_im,cf_re,cf_im",
                   [(float(t), v.real, v.imag, c.real, c.imag)
                    for t, v, c in zip(grid, ecf_vals, char_fn(params, grid))])
        _write_csv(os.path.join(out_dir, "samples.csv"), "value",
                   [(float(v),) for v in head])
        report.artifacts = [
            "charfn_fit.csv",
            "samples.csv",
            _write_limit_laws(out_dir, {"sampled": _law_dict(params)}),
        ]
    return report


def verify_remark(alpha: float, beta: float, reps: int, grid: int, seed,
                  t: float = 1.0, eps: Optional[float] = None,
                  threshold: float = 0.04, out_dir=None) -> VerificationReport:
    """Distributional identity of the truncated path integral.

    Simulates ``reps`` stable Levy paths, forms the right-endpoint Riemann sum
    of L(x)/x over (eps, t], and KS-compares those values against ``reps``
    direct draws of the predicted law (dispersion gamma(alpha+1) * t).  The
    control compares against draws with half that dispersion, e.g. N(0,1)
    instead of N(0,2) at alpha = 2.
    """
    reps = _check_reps(reps)
    law = limit_law(alpha, beta, t, 1.0)
    integrals = np.empty(reps)
    for r in range(reps):
        path = simulate_levy_path(alpha, beta, stream(seed, _SIM, r), grid)
        integrals[r] = integral_riemann(path, t, eps)
    direct = sample(law, stream(seed, _NULL), reps)
    stat, p = ks_two_sample(integrals, direct)

    wrong_law = replace(law, dispersion=law.dispersion / 2.0)
    wrong = sample(wrong_law, stream(seed, _CONTROL), reps)
    control_stat, _ = ks_two_sample(integrals, wrong)

    eps_used = 1.0 / grid if eps is None else float(eps)
    config = {
        "campaign": "verify-remark",
        "alpha": float(alpha),
        "beta": float(beta),
        "reps": reps,
        "grid": int(grid),
        "t": float(t),
        "eps": eps_used,
        "threshold": float(threshold),
    }
    details = {
        "p_value": float(p),
        "limit_law": _law_dict(law),
        "control_law": _law_dict(wrong_law),
    }
    report = _report("verify-remark", seed, int(grid), reps, stat, threshold,
                     "leq", config, details,
                     "direct draws at half dispersion", control_stat, threshold)
    if out_dir is not None:
        _write_csv(os.path.join(out_dir, "statistics.csv"), "rep,t,value",
                   [(r, float(t), integrals[r]) for r in range(reps)])
        _write_csv(os.path.join(out_dir, "draws.csv"), "rep,value",
                   [(r, direct[r]) for r in range(reps)])
        report.artifacts = [
            "statistics.csv",
            "draws.csv",
            _write_limit_laws(out_dir, {"t=" + repr(float(t)): _law_dict(law)}),
        ]
    return report


def verify_fclt(config: FunctionalConfig, times: Sequence[float], reps: int,
                seed, threshold: float = 0.04, out_dir=None) -> VerificationReport:
    """Marginals of the functional statistic against their limit laws.

    For each requested time t (which must sit on the path grid), the simulated
    statistic values across replicates are KS-tested one-sample against the
    numerically inverted CDF of limit_law(alpha, beta, t, f'(mu)).  The
    reported statistic is the worst marginal; the control is the best marginal
    against half-dispersion nulls, so "fail" means even the easiest marginal
    rejected the wrong law.
    """
    reps = _check_reps(reps)
    times = [float(t) for t in times]
    if not times:
        raise ValueError("need at least one time")
    m, n = config.grid, config.n
    for t in times:
        if not 0.0 < t <= 1.0:
            raise ValueError(f"times must lie in (0, 1], got {t}")
        if abs(t * m - round(t * m)) > 1e-9:
            raise ValueError(f"time {t} is not on the grid with {m} cells")
        if n * round(t * m) // m < 1:
            raise ValueError(f"time {t} cuts an empty partial sum at n={n}")

    spec, fn = config.spec, config.fn
    seq = norming_for(spec)
    a_n, mu = float(seq.a(n)), spec.known_mu
    t_arr = np.array(times)
    stats = np.empty((reps, len(times)))
    for r in range(reps):
        x = sample_doa(spec, stream(seed, _SIM, r), n)
        path = functional_statistic(x, fn, mu, a_n, m)
        stats[r] = path.at(t_arr)

    laws = [limit_law(spec.known_alpha, spec.known_beta, t, fn.f_prime_at_mu)
            for t in times]
    per_time, per_time_p, control_per_time = [], [], []
    for i, law in enumerate(laws):
        s, p = ks_one_sample(stats[:, i], lambda x, law=law: cdf(law, x))
        per_time.append(s)
        per_time_p.append(p)
        wrong = replace(law, dispersion=law.dispersion / 2.0)
        cs, _ = ks_one_sample(stats[:, i], lambda x, wrong=wrong: cdf(wrong, x))
        control_per_time.append(cs)

    worst = int(np.argmax(per_time))
    stat = float(per_time[worst])
    control_stat = float(min(control_per_time))

    cfg = {
        "campaign": "verify-fclt",
        "spec": _spec_dict(spec),
        "fn": fn.name,
        "f_prime_at_mu": float(fn.f_prime_at_mu),
        "n": int(n),
        "grid": int(m),
        "times": times,
        "reps": reps,
        "threshold": float(threshold),
    }
    details = {
        "per_time": {repr(t): {"statistic": float(s), "p_value": float(p)}
                     for t, s, p in zip(times, per_time, per_time_p)},
        "worst_time": times[worst],
        "limits": {repr(t): _law_dict(law) for t, law in zip(times, laws)},
    }
    report = _report("verify-fclt", seed, n, reps, stat, threshold, "leq",
                     cfg, details, "half-dispersion null, best marginal",
                     control_stat, threshold)
    if out_dir is not None:
        rows = [(r, float(t), stats[r, i])
                for r in range(reps) for i, t in enumerate(times)]
        _write_csv(os.path.join(out_dir, "statistics.csv"), "rep,t,value", rows)
        report.artifacts = [
            "statistics.csv",
            _write_limit_laws(out_dir, {repr(t): _law_dict(law)
                                        for t, law in zip(times, laws)}),
        ]
    return report


def verify_product(spec: DoaSpec, n: int, reps: int, seed,
                   threshold: float = 0.07, out_dir=None) -> VerificationReport:
    """Log products of partial-sum ratios against their stable limit.

    Each replicate draws n variates, forms log of (prod S_k/(k*mu)) to the
    exponent mu/a_n, and the sample of logs is KS-tested against the law with
    dispersion gamma(alpha+1) (skewness beta = 1 for positive heavy-tailed
    inputs, inert at alpha = 2).  Requires a positivity guarantee.
    """
    if not spec.positivity:
        raise ValueError("verify_product needs a spec with positivity=True")
    reps = _check_reps(reps)
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    seq = norming_for(spec)
    a_n, mu = float(seq.a(n)), spec.known_mu
    exponent = mu / a_n
    logs = np.empty(reps)
    for r in range(reps):
        x = sample_doa(spec, stream(seed, _SIM, r), n)
        logs[r] = log_product_statistic(x, mu, exponent)

    law = limit_law(spec.known_alpha, spec.known_beta, 1.0, 1.0)
    stat, p = ks_one_sample(logs, lambda x: cdf(law, x))
    wrong = replace(law, dispersion=law.dispersion / 2.0)
    control_stat, _ = ks_one_sample(logs, lambda x: cdf(wrong, x))

    cfg = {
        "campaign": "verify-product",
        "spec": _spec_dict(spec),
        "n": n,
        "reps": reps,
        "exponent": float(exponent),
        "threshold": float(threshold),
    }
    details = {
        "p_value": float(p),
        "limit_law": _law_dict(law),
        "control_law": _law_dict(wrong),
    }
    report = _report("verify-product", seed, n, reps, stat, threshold, "leq",
                     cfg, details, "half-dispersion null", control_stat, threshold)
    if out_dir is not None:
        _write_csv(os.path.join(out_dir, "statistics.csv"), "rep,t,value",
                   [(r, 1.0, logs[r]) for r in range(reps)])
        report.artifacts = [
            "statistics.csv",
            _write_limit_laws(out_dir, {"t=1.0": _law_dict(law)}),
        ]
    return report


def verify_lemma(spec: DoaSpec, ns: Sequence[int], reps: int, seed,
                 band: float = 2.0, trend_tol: float = 0.25,
                 scale_fn=None, out_dir=None) -> VerificationReport:
    """Boundedness of sum_{k<=n} E|S_k - k*mu| / k relative to a_n.

    Estimates the sum per replicate (so Monte Carlo error is quantified by
    honest replicate-to-replicate spread), divides by a_n from the registry
    (or ``scale_fn``), and checks two things across the requested n's: every
    ratio within ``band`` of the largest-n ratio, and growth over the top
    step at most 1 + trend_tol.  Statistic = max(spread/band,
    growth/(1+trend_tol)), threshold 1.  The control rescales the same sums
    by a_n/log(n), which a genuinely bounded ratio must reject.
    """
    reps = _check_reps(reps)
    ns = [int(v) for v in ns]
    if len(ns) < 2 or sorted(set(ns)) != ns or ns[0] < 2:
        raise ValueError("ns must be >= 2 distinct increasing integers, each >= 2")
    seq = norming_for(spec)
    n_arr = np.array(ns)
    a_vals = np.asarray(scale_fn(n_arr) if scale_fn is not None else seq.a(n_arr), dtype=float)
    if not np.all(a_vals > 0.0):
        raise ValueError("scaling sequence must be positive")
    mu, nmax = spec.known_mu, ns[-1]
    k = np.arange(1, nmax + 1)
    q = np.empty((reps, len(ns)))
    for r in range(reps):
        x = sample_doa(spec, stream(seed, _SIM, r), nmax)
        deviations = np.abs(np.cumsum(x) - k * mu)
        q[r] = np.cumsum(deviations / k)[n_arr - 1]

    def _band_stat(ratios: np.ndarray) -> float:
        if np.all(ratios == 0.0):
            return max(1.0 / band, 1.0 / (1.0 + trend_tol))
        if np.any(ratios == 0.0):
            return 1e300
        spread = float(max((ratios / ratios[-1]).max(), (ratios[-1] / ratios).max()))
        growth = float(ratios[-1] / ratios[-2])
        return max(spread / band, growth / (1.0 + trend_tol))

    means = q.mean(axis=0)
    stderr = q.std(axis=0, ddof=1) / math.sqrt(reps)
    ratios = means / a_vals
    ratio_se = stderr / a_vals
    stat = _band_stat(ratios)
    control_ratios = ratios * np.log(n_arr)
    control_stat = _band_stat(control_ratios)

    cfg = {
        "campaign": "verify-lemma",
        "spec": _spec_dict(spec),
        "ns": ns,
        "reps": reps,
        "band": float(band),
        "trend_tol": float(trend_tol),
        "custom_scale": scale_fn is not None,
    }
    details = {
        "ratios": [float(v) for v in ratios],
        "ratio_stderr": [float(v) for v in ratio_se],
        "ci95_low": [float(v - 1.96 * s) for v, s in zip(ratios, ratio_se)],
        "ci95_high": [float(v + 1.96 * s) for v, s in zip(ratios, ratio_se)],
        "a_n": [float(v) for v in a_vals],
        "control_ratios": [float(v) for v in control_ratios],
    }
    report = _report("verify-lemma", seed, nmax, reps, stat, 1.0, "leq",
                     cfg, details, "scaling deflated by log(n)", control_stat, 1.0)
    if out_dir is not None:
        _write_csv(os.path.join(out_dir, "ratios.csv"),
                   "n,ratio,stderr,ci_low,ci_high",
                   [(ns[i], ratios[i], ratio_se[i],
                     ratios[i] - 1.96 * ratio_se[i], ratios[i] + 1.96 * ratio_se[i])
                    for i in range(len(ns))])
        b_vals = seq.b(n_arr)
        _write_csv(os.path.join(out_dir, "norming.csv"), "n,a_n,b_n,family",
                   [(ns[i], float(seq.a(ns[i])), float(b_vals[i]), repr(spec.family))
                    for i in range(len(ns))])
        report.artifacts = ["ratios.csv", "norming.csv"]
    return report
