# coding: utf-8

# # Segmentation metrics
#
# Predicted segments come from an argmax over slot attention, upsampled to
# pixels. ARI compares partitions and ignores label names. fg-ARI does the
# same on foreground pixels only. mIoU matches segments to objects one to
# one over the whole clip. mBO lets each object take its best segment.

import numpy as np

from slotcycle.metrics import ari, binarize, mbo, miou, video_metrics

gt = np.array([0, 0, 1, 1])
print("ARI identical", ari(gt, gt), "ARI crossed", ari(np.array([0, 1, 0, 1]), gt))

# Relabeling the prediction never changes a score.

pred = np.array([[[2, 2, 0], [2, 1, 1], [0, 1, 1]]])
truth = np.array([[[1, 1, 0], [1, 2, 2], [0, 2, 2]]])
print(video_metrics(pred, truth))
print(video_metrics(np.array([5, 9, 7])[pred], truth))

# One segment shared by two objects: mBO counts it twice, mIoU only once.

truth = np.array([1, 1, 2, 2, 0, 0])
pred = np.array([0, 0, 0, 0, 1, 1])
print("mBO", mbo(pred, truth), "mIoU", miou(pred, truth))

# Attention maps of shape (S, h, w) become label maps by argmax. Ties go to
# the lowest slot index.

attn = np.array([[[0.6, 0.5, 0.3]], [[0.4, 0.5, 0.7]]])
print(binarize(attn, (2, 6)))
