"""Designs for the single-measurement binary-outcome reduction.

Each unit is observed once and reduced to the pair of exceedance indicators.
The demo prints the outcome-cell probabilities across stress settings, then
computes the D-optimal design and the c-optimal design for estimating the
joint failure probability at the normal use conditions, both copulas.
"""

from adt_design import (BinaryScenario, bundled_scenario_path, cell_probs,
                        load_config, p11_use_gradient, run_scenario)

config = load_config(bundled_scenario_path("paper_ex4_frank_c"))
sc = BinaryScenario(config.model, config.copula, config.use_conditions.thresholds)

print("outcome-cell probabilities (P11 = both failed, P22 = neither):")
print("  x            P11     P12     P21     P22")
for x in [(0.0, 0.0), (0.5, 0.5), (1.0, 1.0)]:
    P = cell_probs(sc, x)
    print(f"  {str(x):<12} " + "  ".join(f"{p:.4f}" for p in P))

c = p11_use_gradient(sc, config.use_conditions)
print(f"\ngradient of P11 at use conditions {config.use_conditions.x_u}: "
      + "(" + ", ".join(f"{v:.5f}" for v in c) + ")")

for name in ("paper_ex4_frank_D", "paper_ex4_gaussian_D",
             "paper_ex4_frank_c", "paper_ex4_gaussian_c"):
    result = run_scenario(load_config(bundled_scenario_path(name)))
    print(f"\n{name}:")
    for pt, w in zip(result.joint.design.support, result.joint.design.weights):
        if w > 5e-4:
            print(f"  {pt}: {w:.4f}")
    print(f"  gap {result.joint.gap:.2e} "
          f"({'certified' if result.joint.certified else 'NOT certified'})")
