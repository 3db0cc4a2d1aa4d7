"""
Ablation matrix at toy scale
============================

Configurations (a)-(f) switch the ingredients on one at a time:

    a  sparse init, colour loss only
    b  dense MVS init
    c  single-view relative depth loss
    d  multiview relative depth loss on mean depth
    e  multiview relative depth loss on median depth
    f  everything, including multiview distortion and normal terms

The reduced preset here runs in minutes; the full 128 px / 5k-iteration
version is what the acceptance suite checks.
"""

import sys

from splatreg import pipeline

out = sys.argv[1] if len(sys.argv) > 1 else "demo_out/ablation"
cfg = pipeline.load_config(None, dict(
    n_views=12, n_test=2, width=40, height=40,
    k_target=1500, sparse_count=200, n_prun=100, prune_interval=50,
    iterations=500, densify_from_iter=100, densify_until_iter=300, max_gaussians=4000,
    voxel_divisor=96, n_samples=20000,
))
pipeline.run_ablation(cfg, out)
print(open(f"{out}/ablation.md").read())
