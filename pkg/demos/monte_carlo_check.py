"""Monte-Carlo sanity check of the exact formulas at N = 8, c = 2.

Samples complex Wishart matrices W = X X^dagger / N and compares sample
means of tr W, tr W^-1 and tr W^-2 against the exact rational values.
"""

from hwz.mc import SamplerConfig, estimate_cumulants

cfg = SamplerConfig(N=8, M=16, samples=20_000, seed=42)
report = estimate_cumulants(cfg)

print(f"N={cfg.N}, M={cfg.M} (c=2), {cfg.samples} samples, seed {cfg.seed}")
for est in report["estimates"]:
    print(
        f"  {est['target']:8s} {est['value']:.5f} +/- {est['stderr']:.5f}"
        f"   exact {est['exact']}   ({est['sigmas']:.2f} sigma)"
    )
print("rejections:", report["rejections"])
