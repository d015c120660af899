#include "rlnc/codec.hpp"

#include "rlnc/combinatorics.hpp"
#include "rlnc/errors.hpp"

#include <stdexcept>
#include <utility>

namespace rlnc {

SplitFrame split_frame(const std::vector<std::uint8_t>& frame, int k) {
    if (k < 1) throw std::invalid_argument("split_frame: k must be >= 1");
    if (frame.empty()) throw EmptyFrame("split_frame: zero-length frame");

    const std::size_t symbols = frame.size();
    const std::size_t blocksPerFrame = (symbols + kSymbolsPerBlock - 1) / kSymbolsPerBlock;
    const std::size_t blocksPerLane = (blocksPerFrame + static_cast<std::size_t>(k) - 1) / static_cast<std::size_t>(k);

    SplitFrame out;
    out.layout.frameBits = symbols * 8;
    out.layout.blocksPerFrame = blocksPerFrame;
    out.layout.blocksPerLane = blocksPerLane;
    out.layout.padSymbols = blocksPerLane * static_cast<std::size_t>(k) * kSymbolsPerBlock - symbols;
    out.lanes.assign(static_cast<std::size_t>(k), std::vector<Block>(blocksPerLane));

    for (std::size_t s = 0; s < symbols; ++s) {
        const std::size_t blockIdx = s / kSymbolsPerBlock;
        const std::size_t lane = blockIdx % static_cast<std::size_t>(k);
        const std::size_t slot = blockIdx / static_cast<std::size_t>(k);
        out.lanes[lane][slot].symbols[s % kSymbolsPerBlock] = frame[s];
    }
    return out;
}

std::vector<std::uint8_t> merge_lanes(const SplitFrame& split) {
    const std::size_t k = split.lanes.size();
    std::vector<std::uint8_t> frame;
    frame.reserve(split.layout.blocksPerLane * k * kSymbolsPerBlock);
    for (std::size_t slot = 0; slot < split.layout.blocksPerLane; ++slot)
        for (std::size_t lane = 0; lane < k; ++lane)
            for (int s = 0; s < kSymbolsPerBlock; ++s)
                frame.push_back(split.lanes[lane][slot].symbols[static_cast<std::size_t>(s)]);
    frame.resize((split.layout.frameBits / 8));
    return frame;
}

std::vector<Block> encode_with_matrix(const std::vector<Block>& source, const gf::Matrix& coefficients) {
    const int k = static_cast<int>(source.size());
    if (coefficients.cols() != k) throw std::invalid_argument("encode_with_matrix: column count must equal k");
    std::vector<Block> coded(static_cast<std::size_t>(coefficients.rows()));
    for (int j = 0; j < coefficients.rows(); ++j) {
        Block& y = coded[static_cast<std::size_t>(j)];
        for (int i = 0; i < k; ++i) {
            const gf::Element a = coefficients.at(j, i);
            if (a == 0) continue;
            for (int s = 0; s < kSymbolsPerBlock; ++s)
                y.symbols[static_cast<std::size_t>(s)] =
                    gf::add(y.symbols[static_cast<std::size_t>(s)],
                            gf::mul(a, source[static_cast<std::size_t>(i)].symbols[static_cast<std::size_t>(s)]));
        }
    }
    return coded;
}

namespace {

bool top_rows_full_rank(const gf::Matrix& m, int k) {
    gf::Matrix top(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) top.at(r, c) = m.at(r, c);
    return gf::rank(top) == k;
}

bool every_row_subset_full_rank(const gf::Matrix& m, int k) {
    bool ok = true;
    for_each_combination(m.rows(), k, [&](const std::vector<int>& rows) {
        if (!ok) return;
        gf::Matrix sub(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(rows[static_cast<std::size_t>(r)], c);
        if (gf::rank(sub) != k) ok = false;
    });
    return ok;
}

}  // namespace

Generation encode_generation(const std::vector<Block>& source, int n, RandomSource& rng,
                             DecodabilityCheck check, std::uint64_t generationIndex) {
    const int k = static_cast<int>(source.size());
    if (k < 1) throw std::invalid_argument("encode_generation: need at least one source block");
    if (n < k) throw std::invalid_argument("encode_generation: n must be >= k");

    constexpr int kMaxRedraws = 16;
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        gf::Matrix m(n, k);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < k; ++c) m.at(r, c) = rng.byte();
        const bool decodable = (check == DecodabilityCheck::TopRows)
                                   ? top_rows_full_rank(m, k)
                                   : every_row_subset_full_rank(m, k);
        if (!decodable) continue;
        Generation g;
        g.index = generationIndex;
        g.sourceBlocks = source;
        g.codingMatrix = m;
        g.codedBlocks = encode_with_matrix(source, m);
        return g;
    }
    throw RedrawLimitExceeded("encode_generation: no decodable coefficient matrix in 16 redraws");
}

std::vector<Block> decode_generation(const std::vector<ReceivedBlock>& received, int k) {
    if (k < 1) throw std::invalid_argument("decode_generation: k must be >= 1");
    if (static_cast<int>(received.size()) < k)
        throw UndecodableGeneration("decode_generation: fewer than k blocks received");
    for (const ReceivedBlock& rb : received)
        if (static_cast<int>(rb.coefficients.size()) != k)
            throw std::invalid_argument("decode_generation: coefficient row length must equal k");

    // Select k linearly independent rows among the received ones, then solve.
    const int m = static_cast<int>(received.size());
    gf::Matrix work(m, k);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < k; ++c) work.at(r, c) = received[static_cast<std::size_t>(r)].coefficients[static_cast<std::size_t>(c)];

    std::vector<int> rowOrder(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) rowOrder[static_cast<std::size_t>(r)] = r;
    int pivots = 0;
    for (int col = 0; col < k && pivots < m; ++col) {
        int pivot = -1;
        for (int row = pivots; row < m; ++row) {
            if (work.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != pivots) {
            for (int c = 0; c < k; ++c) std::swap(work.at(pivot, c), work.at(pivots, c));
            std::swap(rowOrder[static_cast<std::size_t>(pivot)], rowOrder[static_cast<std::size_t>(pivots)]);
        }
        const gf::Element invPivot = gf::inv(work.at(pivots, col));
        for (int row = pivots + 1; row < m; ++row) {
            const gf::Element factor = gf::mul(work.at(row, col), invPivot);
            if (factor == 0) continue;
            for (int c = col; c < k; ++c)
                work.at(row, c) = gf::add(work.at(row, c), gf::mul(factor, work.at(pivots, c)));
        }
        ++pivots;
    }
    if (pivots < k) throw UndecodableGeneration("decode_generation: received rows are rank deficient");

    gf::Matrix coeffs(k, k);
    gf::Matrix rhs(k, kSymbolsPerBlock);
    for (int r = 0; r < k; ++r) {
        const ReceivedBlock& rb = received[static_cast<std::size_t>(rowOrder[static_cast<std::size_t>(r)])];
        for (int c = 0; c < k; ++c) coeffs.at(r, c) = rb.coefficients[static_cast<std::size_t>(c)];
        for (int s = 0; s < kSymbolsPerBlock; ++s) rhs.at(r, s) = rb.payload.symbols[static_cast<std::size_t>(s)];
    }
    const gf::Matrix x = gf::solve(coeffs, rhs);

    std::vector<Block> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int s = 0; s < kSymbolsPerBlock; ++s)
            out[static_cast<std::size_t>(i)].symbols[static_cast<std::size_t>(s)] = x.at(i, s);
    return out;
}

double decode_failure_probability_estimate(int k, std::size_t trials, RandomSource& rng) {
    if (k < 1) throw std::invalid_argument("decode_failure_probability_estimate: k must be >= 1");
    if (trials < 1) throw std::invalid_argument("decode_failure_probability_estimate: trials must be >= 1");
    std::size_t singular = 0;
    gf::Matrix m(k, k);
    for (std::size_t t = 0; t < trials; ++t) {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m.at(r, c) = rng.byte();
        if (gf::rank(m) < k) ++singular;
    }
    return static_cast<double>(singular) / static_cast<double>(trials);
}

}  // namespace rlnc
