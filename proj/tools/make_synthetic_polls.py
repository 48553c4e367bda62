#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Writes the synthetic three-question poll dataset under data/synthetic/.

Each question has 40 monthly rows (t = 0..39) with three outcomes. Question B
is shaped so that its entropy has a unique global minimum at t = 34.
Values are deterministic; rerunning reproduces the committed files.
"""
import math
import pathlib
import sys

LABELS = ["Karamanlis", "Papandreou", "Other"]
EPOCH = "t=0 is March 2004, monthly"


def wiggle(t, amp, period, phase=0.0):
    return amp * math.sin(2 * math.pi * t / period + phase)


def question_a(t):
    # leader share erodes, entropy climbs towards log 3
    p1 = 58.0 - 0.42 * t + wiggle(t, 0.8, 7)
    p2 = 24.0 + 0.18 * t + wiggle(t, 0.5, 5, 1.0)
    return p1, p2, 100.0 - p1 - p2


def question_b(t):
    # satisfaction concentrates until t = 34, then loosens slightly
    if t <= 34:
        p1 = 36.0 + 0.62 * t + wiggle(t, 0.3, 9)
        p2 = 32.0 - 0.32 * t
    else:
        p1 = 36.0 + 0.62 * 34 - 1.1 * (t - 34)
        p2 = 32.0 - 0.32 * 34 + 0.5 * (t - 34)
    return p1, p2, 100.0 - p1 - p2


def question_c(t):
    # near-uniform plateau between t = 12 and t = 28
    if t < 12:
        p1 = 48.0 - 1.2 * t
    elif t <= 28:
        p1 = 34.0 + wiggle(t, 0.6, 6)
    else:
        p1 = 34.0 + 0.9 * (t - 28)
    p2 = 30.0 + 0.1 * t + wiggle(t, 0.4, 8, 0.5)
    return p1, p2, 100.0 - p1 - p2


QUESTIONS = {
    "A": ("Who is more suitable for Prime Minister?", question_a),
    "B": ("Are you satisfied with the party leader?", question_b),
    "C": ("Which party would you vote for?", question_c),
}


def rows(fn):
    out = []
    for t in range(40):
        # every fifth month loses a 2.5% undecided slice, so the row sums below 100
        scale = 0.975 if t % 5 == 3 else 1.0
        vals = [round(v * scale, 1) for v in fn(t)]
        out.append((t, vals))
    return out


def entropy10(vals):
    s = sum(vals)
    return -sum(v / s * math.log10(v / s) for v in vals if v > 0)


def main(dest):
    dest = pathlib.Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    for qid, (text, fn) in QUESTIONS.items():
        data = rows(fn)
        if qid == "B":
            ent = [entropy10(v) for _, v in data]
            assert min(range(40), key=lambda i: ent[i]) == 34, "B must bottom out at t=34"
            assert sorted(ent)[0] < sorted(ent)[1], "B minimum must be unique"
        lines = [f"# id: {qid}", f"# question: {text}", f"# epoch: {EPOCH}", "t," + ",".join(LABELS)]
        lines += [f"{t}," + ",".join(f"{v:g}" for v in vals) for t, vals in data]
        (dest / f"{qid}.csv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "synthetic")
