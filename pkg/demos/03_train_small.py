"""
A short multiview training run
==============================

Runs the whole pipeline on a small sphere-on-plane setup: synthesis, MVS
simulation, dense initialization, pruning phase, training, rendering,
TSDF meshing and evaluation. Takes a few minutes on one core.
"""

import json
import logging
import sys

from splatreg import pipeline

logging.basicConfig(level=logging.INFO, format="%(message)s")
out = sys.argv[1] if len(sys.argv) > 1 else "demo_out/runs"

cfg = pipeline.load_config(None, dict(
    n_views=12, n_test=2, width=48, height=48,
    k_target=2000, n_prun=100, prune_interval=50,
    iterations=600, densify_from_iter=100, densify_until_iter=400, max_gaussians=5000,
    voxel_divisor=96, n_samples=20000,
))
row = pipeline.run_pipeline(cfg, out, "f")
print(json.dumps(row, indent=1))

# every stage is cached under a hash of its inputs; a second call is instant
for stage in ("synth", "mvs", "init", "train", "mesh"):
    print(f"{stage:>6}: {pipeline.stage_dir(out, cfg, stage)}")
