"""The staccato "Morse code" line: a rarely-excited qubit at 700 Hz.

A two-level telegraph record with ~6% excited-state occupancy is latched
into states and sonified with an inaudibly-low ground voice and a 700 Hz
excited voice with a hard gate envelope. What remains is a sparse rhythmic
pattern driven entirely by the simulated quantum jumps.
"""

from pathlib import Path

import numpy as np

import qsynth

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# ~6% excited: rate_up / (rate_up + rate_down) = 6 / 100
params = qsynth.TwoStateParams(rate_up=6.0, rate_down=94.0, noise_sigma=0.1)
trace = qsynth.simulate_two_state(params, 20.0, seed=3)
frac = np.mean(trace.samples[0] > 0)
print(f"simulated {trace.duration_s:.0f} s, excited fraction {frac:.3f}")

# condition to audio rate and latch
latch = qsynth.LatchConfig(levels=(-1.0, 1.0))
from qsynth.conditioning import condition

states, noise = condition(trace, 48_000.0, latch)
print(f"{len(states.transition_indices)} state transitions after latching")

patch = qsynth.load_patch(Path(__file__).parent.parent / "presets" / "motif_700hz.json")
audio = qsynth.render_state_synth(states, noise, patch)
qsynth.write_wav(audio, OUT / "two_state_morse.wav")
print(f"wrote {OUT / 'two_state_morse.wav'} ({audio.duration_s:.0f} s, "
      f"{audio.clip_count} clipped samples)")
