"""Four-note melodic patterns from joint qubit-state / charge-parity jumps.

The four joint states (qubit ground/excited x parity even/odd) each own an
oscillator, so the record plays itself as a melody. A gate layer adds
sonar-style pings whenever the qubit becomes excited, pitched by the
charge parity at that moment.
"""

from pathlib import Path

import numpy as np

import qsynth
from qsynth.conditioning import condition, default_levels

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

params = qsynth.FourStateParams(
    qubit=qsynth.TwoStateParams(rate_up=2.0, rate_down=6.0),
    parity_rate=1.0,      # slowed far below the real ms-scale so pitch changes are audible
    noise_sigma=0.15,
)
trace = qsynth.simulate_four_state(params, 20.0, seed=11)
parity_flips = len(trace.events["parity"]) - 1
qubit_flips = len(trace.events["qubit"]) - 1
print(f"simulated {trace.duration_s:.0f} s: {qubit_flips} qubit flips, "
      f"{parity_flips} parity flips")

latch = qsynth.LatchConfig(levels=default_levels(4))
states, noise = condition(trace, 48_000.0, latch)

patch = qsynth.load_patch(Path(__file__).parent.parent / "presets" / "parity_pings.json")
audio = qsynth.render_state_synth(states, noise, patch)
qsynth.write_wav(audio, OUT / "four_state_melody.wav")

occupancy = np.bincount(states.states, minlength=4) / len(states.states)
print("joint-state occupancy:", np.round(occupancy, 3))
print(f"wrote {OUT / 'four_state_melody.wav'}")
