#pragma once

#include "rlnc/gf256.hpp"
#include "rlnc/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rlnc {

/// Symbols per data block: a 64-bit payload carved into eight byte-wide
/// field symbols. Sync/ID header bits are outside the coded payload and
/// are not modeled.
inline constexpr int kSymbolsPerBlock = 8;

/// One 64-bit data block as h = 8 field symbols.
struct Block {
    std::array<gf::Element, kSymbolsPerBlock> symbols{};

    bool operator==(const Block&) const = default;
};

/// How a frame was carved into blocks and lanes.
struct FrameLayout {
    std::size_t frameBits = 0;
    std::size_t blocksPerFrame = 0;
    std::size_t blocksPerLane = 0;   // ceil(blocksPerFrame / k)
    std::size_t padSymbols = 0;      // zero symbols appended to square off the lanes
};

/// Frame split over k lanes, block i assigned round-robin to lane i mod k.
struct SplitFrame {
    std::vector<std::vector<Block>> lanes;
    FrameLayout layout;
};

/// k source blocks (one per lane) encoded together under one coefficient
/// matrix into n = k + r coded blocks.
struct Generation {
    std::uint64_t index = 0;
    std::vector<Block> sourceBlocks;   // k
    gf::Matrix codingMatrix;           // n x k
    std::vector<Block> codedBlocks;    // n

    int k() const { return static_cast<int>(sourceBlocks.size()); }
    int n() const { return static_cast<int>(codedBlocks.size()); }
};

/// A coded block as seen by the receiver: payload plus its coefficient row
/// (coefficients travel out of band in this model).
struct ReceivedBlock {
    std::vector<gf::Element> coefficients;  // length k
    Block payload;
};

/// How thoroughly encode_generation verifies decodability before release.
/// TopRows checks the first k coefficient rows (transmitter-side check for
/// the no-loss case); EveryRowSubset checks all k-subsets of rows, so any
/// k surviving blocks decode. The latter is what redundancy-as-erasure
/// protection needs and is what the simulator uses when packets drop.
enum class DecodabilityCheck { TopRows, EveryRowSubset };

/// Splits a byte frame into blocks distributed round-robin over k lanes.
/// The tail is zero-padded so every lane holds the same number of blocks.
/// Throws EmptyFrame on zero-length input.
SplitFrame split_frame(const std::vector<std::uint8_t>& frame, int k);

/// Inverse of split_frame: concatenates lanes round-robin and drops padding.
std::vector<std::uint8_t> merge_lanes(const SplitFrame& split);

/// Applies a coefficient matrix (n x k) to k source blocks.
std::vector<Block> encode_with_matrix(const std::vector<Block>& source, const gf::Matrix& coefficients);

/// Draws an n x k coefficient matrix uniformly from GF(2^8), redrawing
/// until the requested decodability check passes (at most 16 redraws, then
/// RedrawLimitExceeded — only a broken RandomSource gets that far).
Generation encode_generation(const std::vector<Block>& source, int n, RandomSource& rng,
                             DecodabilityCheck check = DecodabilityCheck::TopRows,
                             std::uint64_t generationIndex = 0);

/// Recovers the k source blocks, in lane order, from any k independent
/// received rows. Throws UndecodableGeneration when the received rows span
/// less than k dimensions.
std::vector<Block> decode_generation(const std::vector<ReceivedBlock>& received, int k);

/// Fraction of uniformly drawn k x k matrices over GF(2^8) that are
/// singular, estimated from `trials` samples (no redraw). The exact value
/// is 1 - prod_{i=1..k}(1 - 256^-i), on the order of 2^-8.
double decode_failure_probability_estimate(int k, std::size_t trials, RandomSource& rng);

}  // namespace rlnc
