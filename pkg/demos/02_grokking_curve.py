"""
Memorise first, generalise later
================================

Train the default network (P=53, d=128, H=256, AdamW lr 3e-4, weight decay 1,
half the pairs for training) and locate the two thresholds: train accuracy
0.99 and test accuracy 0.95. The gap between them is the grokking delay.

Runs are cached under runs-out/runs/<config hash>, so a second call is instant.
Pass a smaller epoch count as the first argument for a quick look.
"""

import sys
from pathlib import Path

from groklab import svg
from groklab.experiments import BASE, obtain_run
from groklab.metrics import grokking_times

epochs = int(sys.argv[1]) if len(sys.argv) > 1 else BASE.epochs
out = Path(__file__).resolve().parent.parent / "runs-out"
run = obtain_run(BASE.replace(epochs=epochs), out)

times = grokking_times(run.log)
print(f"train >= 0.99 at epoch {times.t_train}, test >= 0.95 at epoch {times.t_test}, delay {times.delay}")

for epoch in (0, 100, 200, 500, 1000, 1500, 2000, run.epochs[-1]):
    if epoch <= run.epochs[-1]:
        r = run.record(epoch)
        print(f"epoch {epoch:5d}  train {r.train_acc:.3f}  test {r.test_acc:.3f}  loss {r.train_loss:.4f}")

chart = svg.line_chart({"train": (run.epochs, run.column("train_acc")),
                        "test": (run.epochs, run.column("test_acc"))},
                       title="accuracy", xlabel="epoch", ylabel="accuracy", ylim=(0, 1))
Path("grokking_curve.svg").write_text(chart)
print("wrote grokking_curve.svg")
