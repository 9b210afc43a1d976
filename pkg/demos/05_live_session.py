"""A scripted live-performance session against the block renderer.

Starts the engine with a WAV tap instead of a sound device, connects over
the WebSocket control protocol, and performs a few parameter moves the way
the browser panel would: re-pitching a voice, switching its waveform, and
watching the status stream. The tap records everything the audience would
have heard.
"""

import json
import time
from pathlib import Path

import qsynth
from qsynth.live import ControlFeed, LiveEngine, LiveSession
from websockets.sync.client import connect

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)
TAP = OUT / "live_session.wav"

trace = qsynth.simulate_two_state(
    qsynth.TwoStateParams(rate_up=3.0, rate_down=9.0, noise_sigma=0.1), 10.0, seed=2
)
feed = ControlFeed.from_trace(trace, 48_000.0, 2)
patch = qsynth.load_patch(Path(__file__).parent.parent / "presets" / "two_state.json")
engine = LiveEngine(patch, feed, tap_path=TAP)


def rpc(ws, **payload):
    ws.send(json.dumps(payload))
    while True:
        reply = json.loads(ws.recv(timeout=5))
        if reply.get("op") != "status":
            return reply


with LiveSession(engine) as session:
    print(f"engine listening at {session.url}")
    with connect(session.url) as ws:
        print("initial patch:", rpc(ws, id=1, op="get", path="voices.1.freq_hz"))
        rpc(ws, id=2, op="subscribe")

        time.sleep(1.0)
        print("re-pitching the excited voice to 700 Hz")
        print(" ->", rpc(ws, id=3, op="set", path="voices.1.freq_hz", value=700))

        time.sleep(1.0)
        print("switching the ground voice to a square wave")
        print(" ->", rpc(ws, id=4, op="set", path="voices.0.waveform", value="square"))

        time.sleep(1.0)
        print("pulling the wet/dry mix halfway toward the raw data")
        print(" ->", rpc(ws, id=5, op="set", path="wet_dry", value=0.5))

        # drain one status push for the record
        while True:
            msg = json.loads(ws.recv(timeout=5))
            if msg.get("op") == "status":
                print("status:", msg)
                break
        time.sleep(1.0)

audio = qsynth.read_wav(TAP)
print(f"tap captured {audio.duration_s:.1f} s -> {TAP}")
