"""The offset-charge drone: a slow CV bends a sine through microtones.

Offset charge reconfigures on a minutes timescale, so an hour of drift is
compressed here by playing the CV against a short musical bed. The drone's
pitch follows the normalized charge through an exponential (equal-interval)
frequency map; sudden charge jumps re-pitch it mid-phrase.
"""

from pathlib import Path

import numpy as np

import qsynth
from qsynth.conditioning import condition

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# one simulated hour of offset charge, jumps every ~2 minutes
drift_params = qsynth.DriftParams(
    jump_mean_interval_s=120.0, wander_sigma_per_sqrt_s=0.004, sample_rate_hz=10.0
)
drift = qsynth.simulate_drift(drift_params, 3600.0, seed=6)
print(f"drift: {len(drift.jump_times)} charge jumps over an hour, "
      f"range [{drift.values.min():.2f}, {drift.values.max():.2f})")

# pure drone, one minute of CV played back 6x faster than real time
voice = qsynth.DriftVoice(f_min_hz=55.0, f_max_hz=440.0, amp=0.4)
compressed = qsynth.DriftTrace(60.0, drift.values)  # reinterpret the rate
drone = qsynth.render_drift(compressed, voice, 48_000.0, 60.0)
qsynth.write_wav(drone, OUT / "drift_drone.wav")
print(f"wrote {OUT / 'drift_drone.wav'}")

# the same CV layered under a two-state bed via the patch's drift section
params = qsynth.TwoStateParams(rate_up=4.0, rate_down=12.0, noise_sigma=0.1)
trace = qsynth.simulate_two_state(params, 60.0, seed=6)
states, noise = condition(trace, 48_000.0, qsynth.LatchConfig(levels=(-1.0, 1.0)))
patch = qsynth.load_patch(Path(__file__).parent.parent / "presets" / "drone_two_state.json")
audio = qsynth.render_state_synth(states, noise, patch, drift=compressed)
qsynth.write_wav(audio, OUT / "drift_under_two_state.wav")
print(f"wrote {OUT / 'drift_under_two_state.wav'}")
