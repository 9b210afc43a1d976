"""Good, average, and bad following, rendered as stereo bell tones.

A leader qubit jumps randomly; a follower is conditionally corrected with
X(theta) pulses. theta = pi tracks perfectly (both ears agree), smaller
angles let the follower lag and wander: the stereo field falls apart as
the feedback degrades.
"""

import math
from pathlib import Path

import numpy as np

import qsynth

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

patch = qsynth.load_patch(Path(__file__).parent.parent / "presets" / "follower_bell.json")
latch = qsynth.LatchConfig(levels=(-1.0, 1.0))

# the leader must jump on the feedback's own timescale for errors to be
# audible: at 300 rounds/s a 30/s leader leaves under-rotated pulses behind
for name, theta in [("good", math.pi), ("average", 3 * math.pi / 4), ("bad", math.pi / 4)]:
    params = qsynth.FollowerParams(
        leader=qsynth.TwoStateParams(rate_up=30.0, rate_down=30.0, noise_sigma=0.05),
        theta=theta,
        round_rate_hz=300.0,
        noise_sigma=0.05,
    )
    trace = qsynth.simulate_follower(params, 15.0, seed=4)
    match = np.mean((trace.samples[0] > 0) == (trace.samples[1] > 0))

    conditioned = qsynth.resample(qsynth.center_and_scale(trace), 48_000.0, "hold")
    audio = qsynth.render_follower(conditioned, patch, latch)
    path = OUT / f"follower_{name}.wav"
    qsynth.write_wav(audio, path)
    print(f"theta={theta:.2f} ({name}): leader/follower agreement {match:.2f} -> {path}")
