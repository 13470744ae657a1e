"""Monte-Carlo sanity checks of the exact trace formulas.

Samples complex Wishart matrices W = X X^dagger / N with X an N x M matrix
of independent standard complex Gaussians (real and imaginary parts each of
variance 1/2, so E|X_ij|^2 = 1) and compares sample means of tr W^k and
tr W^-k against the exact values from the cumulants module at c = M/N.

The RNG is numpy's Philox (a counter-based generator), so reports are
bit-reproducible under a fixed seed.  Inverse traces are computed from a
Cholesky factorization by triangular solves, never by explicit inversion;
ill-conditioned samples are rejected and the rejection rate is reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

RNG_ALGORITHM = "numpy.random.Philox"
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class SamplerConfig:
    N: int
    M: int
    samples: int
    seed: int = 0
    targets: tuple[str, ...] = ("trW", "trWinv", "trWinv2")

    def __post_init__(self):
        if self.N < 1 or self.M < self.N:
            raise ValueError("need M >= N >= 1 for almost-sure invertibility")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        for t in self.targets:
            _parse_target(t)

    @property
    def c(self) -> Fraction:
        return Fraction(self.M, self.N)


def _parse_target(name: str) -> tuple[int, bool]:
    """'trW' -> (1, False); 'trW2' -> (2, False); 'trWinv2' -> (2, True)."""
    if not name.startswith("trW"):
        raise ValueError(f"unknown target {name!r}")
    rest = name[3:]
    inverse = rest.startswith("inv")
    if inverse:
        rest = rest[3:]
    power = int(rest) if rest else 1
    if power < 1:
        raise ValueError(f"unknown target {name!r}")
    return power, inverse


def sample_wishart(cfg: SamplerConfig):
    """Yield W = X X^dagger / N, deterministically under cfg.seed."""
    rng = np.random.Generator(np.random.Philox(cfg.seed))
    for _ in range(cfg.samples):
        x = rng.normal(scale=np.sqrt(0.5), size=(cfg.N, cfg.M, 2))
        X = x[..., 0] + 1j * x[..., 1]
        yield (X @ X.conj().T) / cfg.N


def exact_target_value(name: str, N: int, c: Fraction) -> Fraction:
    """E tr W^(+-k) at finite (N, c) from the exact oracle."""
    power, inverse = _parse_target(name)
    from .cumulants import trace_moment_oracle

    moment = trace_moment_oracle((power,), inverse)
    num = _eval_tower(moment.num, c, N)
    den = _eval_tower(moment.den, c, N)
    if den == 0:
        raise ValueError(
            f"E {name} diverges at N={N}, c={c}: needs (c-1)N >= {power}"
        )
    return num / den / N  # tr = Tr / N


def _eval_tower(poly, c: Fraction, N: int) -> Fraction:
    """Evaluate a polynomial in N whose coefficients are rationals in c."""
    total = Fraction(0)
    for k, coeff in enumerate(poly.coeffs):
        val = coeff(c) if hasattr(coeff, "num") else Fraction(coeff)
        total += val * Fraction(N) ** k
    return total


def estimate_cumulants(cfg: SamplerConfig) -> dict:
    """Sample means with jackknife standard errors, against exact values.

    Returns the report as a JSON-serializable dict; floats appear only in
    the statistical quantities, exact values are decimal strings of
    rationals.
    """
    parsed = [_parse_target(t) for t in cfg.targets]
    need_inverse = any(inv for _, inv in parsed)
    max_pos = max((p for p, inv in parsed if not inv), default=0)
    values = {t: [] for t in cfg.targets}
    rejections = 0
    for W in sample_wishart(cfg):
        if need_inverse:
            try:
                L = np.linalg.cholesky(W)
            except np.linalg.LinAlgError:
                rejections += 1
                continue
            diag = np.abs(np.diag(L))
            if diag.max() / diag.min() > np.sqrt(CONDITION_LIMIT):
                rejections += 1
                continue
            # columns of W^-1 via two triangular solves
            Linv = np.linalg.solve(L, np.eye(cfg.N, dtype=complex))
            Winv = Linv.conj().T @ Linv
        powers_pos = {}
        if max_pos:
            P = W
            for k in range(1, max_pos + 1):
                powers_pos[k] = P
                if k < max_pos:
                    P = P @ W
        powers_inv = {}
        if need_inverse:
            max_inv = max(p for p, inv in parsed if inv)
            P = Winv
            for k in range(1, max_inv + 1):
                powers_inv[k] = P
                if k < max_inv:
                    P = P @ Winv
        for name, (p, inv) in zip(cfg.targets, parsed):
            mat = powers_inv[p] if inv else powers_pos[p]
            values[name].append(float(np.trace(mat).real) / cfg.N)

    estimates = []
    for name in cfg.targets:
        data = np.asarray(values[name])
        m = len(data)
        mean = float(data.mean())
        if m > 1:
            # delete-one jackknife of the sample mean
            loo = (data.sum() - data) / (m - 1)
            stderr = float(np.sqrt((m - 1) / m * ((loo - loo.mean()) ** 2).sum()))
        else:
            stderr = float("inf")
        exact = exact_target_value(name, cfg.N, cfg.c)
        sigmas = abs(mean - float(exact)) / stderr if stderr > 0 else float("inf")
        estimates.append(
            {
                "target": name,
                "value": mean,
                "stderr": stderr,
                "exact": f"{exact.numerator}/{exact.denominator}",
                "exact_float": float(exact),
                "sigmas": sigmas,
            }
        )
    return {
        "config": {
            "N": cfg.N,
            "M": cfg.M,
            "c": f"{cfg.c.numerator}/{cfg.c.denominator}",
            "samples": cfg.samples,
            "seed": cfg.seed,
            "rng": RNG_ALGORITHM,
            "targets": list(cfg.targets),
        },
        "estimates": estimates,
        "rejections": rejections,
    }


def report_json(cfg: SamplerConfig) -> str:
    return json.dumps(estimate_cumulants(cfg), indent=2, sort_keys=True)
