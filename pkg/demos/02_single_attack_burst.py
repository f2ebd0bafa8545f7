"""Anatomy of one attack: inject, detect, isolate, repair.

A constant +1 m/s^2 offset lands on acceleration copy 1 (sensor y5|1) for
ten seconds while the leader happens to be accelerating.  The supervisor
must leave q0 on the very first corrupted sample, ride out the attack on
the three healthy realizations, and come back the moment the offset stops.

Run from the repository root:  python3 demos/02_single_attack_burst.py
Writes demos/out/burst.svg with velocity / applied input / mode panels.
"""

from pathlib import Path

from caccguard import (
    AttackSchedule,
    AttackSegment,
    Constant,
    Scenario,
    SolverSettings,
    simulate,
    write_trace,
)
from caccguard.plotting import plot
from caccguard.vehicle import LeaderProfile
from caccguard.verify import nominal_deviation

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

scenario = Scenario(
    name="burst",
    leader=LeaderProfile(initial_speed=20.0, segments=((24.0, 2.0), (27.0, 0.0))),
    attack=AttackSchedule(
        (AttackSegment((1, 1), 20.0, 30.0, Constant(1.0)),)
    ),
    solver=SolverSettings(horizon=40.0),
)

result = simulate(scenario)
print(f"attack window: [20, 30) s, offset +1.0 m/s^2 on y5|1")
print(f"termination: {result.arc.termination}\n")
for event in result.events:
    print(f"  t={event.t:6.3f}  jump {event.j}:  "
          f"{event.from_mode.label:5s} -> {event.to_mode.label:5s}  "
          f"via {event.guard_id:14s}  reset: {event.reset_description}")

latency = result.events[0].t - 20.0
print(f"\ndetection latency: {latency:g} s (attack applied and caught on the "
      "same sample)")
print(f"max |u* - u_nominal| over the whole run: "
      f"{nominal_deviation(result):.3e}")
print("the vehicle never felt the attack: the applied input tracks the")
print("attack-free baseline to floating-point precision.")

trace = write_trace(result, OUT / "burst.trace.csv")
svg = plot(trace, OUT / "burst.svg", ["v", "u_star", "mode"])
print(f"\nwrote {svg}")
