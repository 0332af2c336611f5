#pragma once

#include "dlpbench/dissimilarity/lockstep.hpp"

namespace dlpbench {

/// k-sliding distance. Each point is compared with the closest value within
/// +-w samples of the other series:
///   d(x -> y) = sum_t min_{|s - t| <= w} (x_t - y_s)^2
/// and the result is sqrt((d(x -> y) + d(y -> x)) / 2).
double ksd(Series x, Series y, int w);

/// Flexibility distance with A = 1 and T = (max - min of both series) / n.
/// Matching x_i to y_j costs A |x_i - y_j| + T |i - j|; every point takes its
/// cheapest counterpart, and the two directional sums are averaged.
double fd(Series x, Series y);

/// Shape-based distance 1 - max_s CC_s(x, y) / (|x| |y|) over every shift
/// s in (-n, n), with zero padding. Lies in [0, 2]; ZeroNorm on zero input.
double sbd(Series x, Series y);
/// Same as sbd but also reports the maximising shift (y shifted by s aligns
/// with x). Used by k-shape.
double sbd(Series x, Series y, int& best_shift);

/// Matrix-profile distance. Windows of length w are compared with plain
/// (not z-normalised) Euclidean distance, the AB and BA nearest-neighbour
/// profiles are concatenated, and the entry at 0-based position
/// min(ceil(tau * (|x| + |y|)), len - 1) of the sorted profile is returned.
/// With w = n this is ED(x, y).
double mpd(Series x, Series y, int w, double tau);

}  // namespace dlpbench
