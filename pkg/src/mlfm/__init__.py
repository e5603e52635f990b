"""Low-frequency memory units over small convolutional backbones."""

from .tensor import (Tape, Tensor, add, backward, binary, channel_affine,
                     concat_channels, conv2d, linear, mean_hw, mul, pointwise,
                     pool2d, relu, sgd_step, sigmoid, softmax_cross_entropy,
                     split_channels, sum_all, tanh, upsample_nearest2)
from .wavelet import (WAVELET_IDS, FilterBank, Subbands2D, dwt2, filter_bank,
                      idwt2, wavedec_ll)

__version__ = "0.1.0"
