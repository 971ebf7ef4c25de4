# coding: utf-8

# # Forward and backward streams
#
# The forward stream initializes slots on frame 0 and carries them forward.
# A backward stream starts from the last forward slots and walks back to
# frame 0. The three variants differ in what they do with it:
#
# * `ecc` pulls backward slots toward forward slots (explicit consistency);
# * `icc` reconstructs every frame again from the backward slots;
# * `ncr` is `icc` with a fresh initialization instead of the chain.

import torch

from slotcycle.ocl_core import ModelConfig, SlotModel, record_usage
from slotcycle.streams import hungarian_match, loss_ecc, run_backward, run_forward, total_loss, StreamTrace

torch.manual_seed(0)
cfg = ModelConfig(image_size=32, patch_size=8, num_slots=3, dim=16, mlp_hidden=32, decoder_hidden=32)
model = SlotModel(cfg)
frames = torch.rand(2, 5, 32, 32, 3)  # a batch of two 5-frame clips
feats = model.encode(frames)
print("features", tuple(feats.shape))  # (B, T, h, w, c)

fw = run_forward(model, feats)
print("forward timesteps", fw.timesteps)

# The backward stream covers frames T-2 down to 0, so every backward loss
# has exactly T-1 terms.

for variant in ("ecc", "icc", "ncr"):
    bw = run_backward(model, feats, fw, variant, decode=True)
    print(f"{variant:>4} backward timesteps {bw.timesteps}")

# Both directions use the same aggregator, decoder and trunk objects. Only
# the time embedding is direction specific.

with record_usage(model) as used:
    total_loss(model, feats, "icc")
print("groups touched by icc:", sorted(used))
with record_usage(model) as used:
    total_loss(model, feats, "baseline")
print("groups touched by baseline:", sorted(used))

# Loss terms per mode. Reconstruction terms are summed over timesteps and
# feature elements and averaged over the batch.

for mode in ("baseline", "ecc", "ecc_hungarian", "icc", "ncr"):
    bundle, _ = total_loss(model, feats, mode, seed=3)
    print(f"{mode:>14}", {k: None if v is None else round(v, 2) for k, v in bundle.as_floats().items()})

# Hungarian ECC matches slots before comparing them. Two 1-D slots swapped
# between streams cost 8 under index pairing and 0 once matched.

a = torch.tensor([[[[1.0], [3.0]]]])
b = torch.tensor([[[[3.0], [1.0]]]])
ta = StreamTrace("forward", "forward", [0], a, a, None)
tb = StreamTrace("backward", "ecc", [0], b, b, None)
print("index ECC", loss_ecc(ta, tb).item(), "hungarian ECC", loss_ecc(ta, tb, "hungarian").item())
print("assignment", hungarian_match(a[0, 0].numpy(), b[0, 0].numpy()).tolist())
