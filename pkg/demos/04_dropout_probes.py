"""
Probing a trained network with dropout
======================================

Dropout is applied only at inference here. Masking 30% of the hidden units
100 times and measuring test accuracy each time gives a spread; that spread
is largest while the network is switching from memorising to generalising.
The dropout robustness curve repeats the probe at rates 0.0 to 0.9.
"""

from pathlib import Path

import numpy as np

from groklab.experiments import BASE, obtain_run
from groklab.metrics import MCDropoutConfig, dropout_robustness_curve, grokking_times, mc_dropout_stats

out = Path(__file__).resolve().parent.parent / "runs-out"
run = obtain_run(BASE, out)
tokens, labels = run.task.pairs[run.split.test], run.task.labels[run.split.test]
times = grokking_times(run.log)
print(times)

variances = {}
for epoch, params in sorted(run.checkpoints.items()):
    res = mc_dropout_stats(params, run.config.variant, tokens, labels, MCDropoutConfig(rate=0.3), label=str(epoch))
    variances[epoch] = res.variance
peak = max(variances, key=variances.get)
print(f"variance peaks at epoch {peak} ({variances[peak]:.2e}); final {variances[max(variances)]:.2e}")

for epoch in (500, 1000, 1500, max(run.checkpoints)):
    curve = dropout_robustness_curve(run.checkpoints[epoch], run.config.variant, tokens, labels, epoch=epoch)
    print(f"epoch {epoch:5d}:", np.round(curve.means, 3))
