"""
What the embedding table learns
===============================

After grokking, tokens whose sums or differences agree modulo P get similar
embedding vectors. The cosine-similarity matrix then shows stripes along its
diagonals, which the codiagonal energy turns into a single number between 0
and 1. The entries of the table also split into two clusters, one on each side
of zero.
"""

from pathlib import Path

import numpy as np

from groklab import svg
from groklab.experiments import BASE, NULL_BASELINE, anchor_epochs, obtain_run
from groklab.metrics import codiagonal_energy, cosine_similarity_matrix, detect_bimodality, histogram

out = Path(__file__).resolve().parent.parent / "runs-out"
run = obtain_run(BASE, out)
anchors = anchor_epochs([r.__dict__ for r in run.log], sorted(run.checkpoints))
print("anchor epochs:", anchors)
print(f"null baseline for the codiagonal energy: {NULL_BASELINE}")

for name in ("init", "t_train", "onset", "post-grok"):
    epoch = anchors[name]
    E = run.checkpoints[epoch].E
    C = cosine_similarity_matrix(E)
    energy = codiagonal_energy(C)
    peaks = detect_bimodality(histogram(E))
    print(f"{name:9s} epoch {epoch:5d}: codiagonal energy {energy.score:.3f} "
          f"(difference {energy.difference:.3f}, sum {energy.sum:.3f}), peaks {peaks}")
    Path(f"cosine_{name}.svg").write_text(svg.heatmap(C, title=f"epoch {epoch}"))

# the two clusters, read off the final histogram
h = histogram(run.params.E)
print("final histogram peaks:", np.round(detect_bimodality(h), 3))
