"""
A network small enough to read
==============================

P = 5 tokens, 3-dimensional embeddings and 4 hidden units. We look at the
parameter groups, run one forward/backward pass, compare the analytic
gradient with central differences, and take a few AdamW steps.
"""

import numpy as np

from groklab.dataset import generate
from groklab.model import InitSpec, ModelDims, Variant, backward, forward, init_params, loss_and_accuracy
from groklab.numerics import RngStream
from groklab.optimizer import AdamWState, OptHyper, step

dims = ModelDims(P=5, d=3, H=4)
params = init_params(dims, InitSpec(), RngStream(0, "init"))
for name, value in params.items():
    print(f"{name:3s} shape={value.shape} std={value.std():.3f}")

# every pair (i, j) with label (i + j) mod 5
task = generate(5)
logits, trace = forward(params, Variant(), task.pairs)
print("initial loss/acc:", loss_and_accuracy(logits, task.labels))

# analytic gradient of the mean cross-entropy
grads = backward(params, Variant(), trace, task.labels)


def loss_at(flat):
    saved = params.flat.copy()
    params.flat[:] = flat
    out = loss_and_accuracy(forward(params, Variant(), task.pairs)[0], task.labels)[0]
    params.flat[:] = saved
    return out


h = 1e-5
fd = np.array([(loss_at(params.flat + h * e) - loss_at(params.flat - h * e)) / (2 * h)
               for e in np.eye(params.flat.size)])
print("max |analytic - finite difference|:", np.abs(fd - grads.flat).max())

# a few optimizer steps on the full table; weight decay is decoupled from the gradient
state = AdamWState.zeros_like(params)
hyper = OptHyper(lr=1e-2, weight_decay=0.1)
for k in range(200):
    logits, trace = forward(params, Variant(), task.pairs)
    step(params, backward(params, Variant(), trace, task.labels), state, hyper)
print("after 200 steps:", loss_and_accuracy(forward(params, Variant(), task.pairs)[0], task.labels))
