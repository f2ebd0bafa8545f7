"""Where does detection start?

Detection compares realization outputs against a tolerance of
eps_u = 1e-6 + 1e-9*|u|.  A constant offset delta on an acceleration copy
shifts the affected output by g*delta (g = tau/(2h) = 0.1 at defaults), so
offsets below ~1e-5 m/s^2 are formally stealthy — and also dynamically
irrelevant at that size.  This demo sweeps the offset magnitude across the
threshold and tabulates what the supervisor saw.

Run from the repository root:  python3 demos/04_detection_threshold_sweep.py
"""

from caccguard import (
    AttackSchedule,
    AttackSegment,
    Constant,
    GuardAmbiguityError,
    Scenario,
    SolverSettings,
    simulate,
)
from caccguard.verify import nominal_deviation

MAGNITUDES = [1e-7, 1e-6, 1e-5, 1e-4, 1e-2, 1.0]

print(f"{'offset':>10s} {'outcome':>28s} {'max |u*-u_nom|':>15s}")
for magnitude in MAGNITUDES:
    scenario = Scenario(
        name=f"sweep-{magnitude:g}",
        attack=AttackSchedule(
            (AttackSegment((1, 1), 5.0, 10.0, Constant(magnitude)),)
        ),
        solver=SolverSettings(horizon=15.0),
    )
    try:
        result = simulate(scenario)
    except GuardAmbiguityError:
        # g*delta lands exactly on the comparison tolerance: individual
        # equality tests flip inconsistently and the supervisor refuses
        # to guess rather than isolate the wrong sensor
        print(f"{magnitude:10.0e} {'ambiguous (tolerance edge)':>28s} "
              f"{'-':>15s}")
        continue
    if result.events:
        outcome = (f"isolated {result.events[0].to_mode.label} "
                   f"at t={result.events[0].t:g}")
    else:
        outcome = "undetected (stealthy)"
    print(f"{magnitude:10.0e} {outcome:>28s} "
          f"{nominal_deviation(result):15.3e}")

print()
print("Below the tolerance the offset rides along undetected, but the")
print("leaked input error is bounded by the same tolerance (~1e-7 here:")
print("smaller than sensor quantization).  Exactly at the edge the guards")
print("turn ambiguous and the run aborts loudly instead of mis-isolating.")
print("One decade above the edge, detection is clean and same-sample.")
print()
print("The CLI exposes the same experiment, parallelized:")
print("  caccguard sweep scenario.cfg --target 'y5|1' \\")
print("      --onsets 5 --magnitudes 1e-6,1e-4,1e-2,1 --out-dir sweep/")
