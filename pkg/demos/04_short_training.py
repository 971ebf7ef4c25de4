# coding: utf-8

# # A short training run, end to end
#
# Train baseline and icc for a few epochs on a small dataset, evaluate
# both, then dump forward and backward attention masks for one clip.
# This is sized to take a few minutes on a CPU, so the models stay crude.
# The point is the plumbing, not the scores.

from pathlib import Path

from slotcycle.diagnostics import dump_divergence_masks
from slotcycle.harness.checkpoint import load_model
from slotcycle.harness.config import config_from_dict
from slotcycle.harness.data import clip_features, load_split
from slotcycle.harness.evaluate import evaluate_model
from slotcycle.harness.train import read_log, train

OUT = Path(__file__).resolve().parent / "out" / "short_training"

config = config_from_dict({
    "data": {"train_clips": 64, "eval_clips": 8,
             "generator": {"image_size": 32, "num_frames": 4, "min_objects": 1, "max_objects": 3,
                           "scale_range": [2.0, 3.0], "background_noise": 0.0}},
    "model": {"image_size": 32, "patch_size": 4, "num_slots": 4},
    "optim": {"lr": 1e-3}, "epochs": 5, "checkpoint_every": 5, "out_dir": str(OUT), "seeds": [0],
})

results = {}
for mode in ("baseline", "icc"):
    run = train(config, seed=0, mode=mode)
    log = read_log(run.log_path)
    print(f"{mode}: {run.final_step} steps, recon {log[0]['recon_forward']:.0f} -> {log[-1]['recon_forward']:.0f}")
    model, _, _ = load_model(run.checkpoints[-1])
    results[mode] = evaluate_model(model, load_split(config, "eval"), mode, seed=0)
    results[mode].write(run.run_dir / "eval")

for mode, res in results.items():
    agg = {k: round(v["mean"], 3) for k, v in res.report.aggregate().items()}
    print(mode, agg, {k: round(v, 4) for k, v in vars(res.collapse).items()})

# Where do the two streams disagree? One grayscale PNG per slot and stream,
# plus an argmax overlay per stream, for every backward timestep.

model, _, _ = load_model(train(config, seed=0, mode="icc").checkpoints[-1])
feats = clip_features(model, load_split(config, "eval")[:1])[0]
files = dump_divergence_masks(model, feats, "icc", OUT / "masks")
print(f"wrote {len(files)} mask images to {OUT / 'masks'}")
