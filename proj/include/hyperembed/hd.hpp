#pragma once

// Hyperdimensional vector algebra and the embedding of n-gram statistics
// into fixed-dimensional HD vectors.
//
// Atomic symbol vectors are random bipolar (+1/-1) columns of an item
// memory. An n-gram maps to the binding of its permuted symbol vectors,
//   m = rho^1(H[s1]) * rho^2(H[s2]) * ... * rho^n(H[sn]),
// and a whole statistics vector maps to the count-weighted bundle
//   h = sum_g count(g) * m_g,
// optionally scaled to unit l2 norm. Bundled components are accumulated
// as 64-bit integers, so linearity in the statistics is exact.

#include <cstdint>
#include <map>
#include <vector>

namespace hyperembed::hd {

// Integer-valued HD vector: atomic/bound vectors are +-1, bundles are sums.
using HDVector = std::vector<std::int64_t>;

// Real-valued embedding (possibly l2-normalized).
using HDEmbedding = std::vector<double>;

// Sparse n-gram counts over a symbol alphabet of dense integer ids.
struct NGramStats {
    std::size_t n = 0;
    std::size_t alphabet_size = 0;
    std::map<std::vector<std::uint32_t>, std::uint64_t> counts;

    std::uint64_t total() const;
};

// Fixed random codebook: one bipolar column of length d per alphabet symbol.
// Regenerating with the same (d, alphabet_size, seed) is bit-identical;
// entries are the sign of the high bit of consecutive xoshiro256** draws,
// column by column.
class ItemMemory {
public:
    ItemMemory(std::size_t d, std::size_t alphabet_size, std::uint64_t seed);

    std::size_t dim() const { return d_; }
    std::size_t alphabet_size() const { return alphabet_size_; }
    std::uint64_t seed() const { return seed_; }

    std::int64_t entry(std::size_t component, std::uint32_t symbol) const {
        return entries_[static_cast<std::size_t>(symbol) * d_ + component];
    }

    HDVector column(std::uint32_t symbol) const;

private:
    std::size_t d_;
    std::size_t alphabet_size_;
    std::uint64_t seed_;
    std::vector<std::int8_t> entries_;  // column-major, d_ entries per symbol
};

ItemMemory make_item_memory(std::size_t d, std::size_t alphabet_size, std::uint64_t seed);

// Cyclic rotation: component i moves to index (i + shift) mod d.
HDVector permute(const HDVector& v, std::size_t shift);

// Component-wise product. Self-inverse on bipolar vectors.
HDVector bind(const HDVector& u, const HDVector& v);

// Weighted component-wise sum.
HDVector bundle(const std::vector<HDVector>& vs, const std::vector<std::uint64_t>& weights);

// HD vector of a single n-gram; position exponents are 1-based.
HDVector embed_ngram(const std::vector<std::uint32_t>& gram, const ItemMemory& im);

// Count-weighted bundle of all observed n-grams. With normalize set the
// result has unit l2 norm; an all-zero bundle is returned unchanged.
HDEmbedding embed_stats(const NGramStats& stats, const ItemMemory& im, bool normalize);

// Real-weighted variant used when the underlying statistics are not counts
// (e.g. tf-idf values). Same composition rule, double accumulation.
HDEmbedding embed_weighted(const std::vector<std::pair<std::vector<std::uint32_t>, double>>& grams,
                           const ItemMemory& im, bool normalize);

// dot(u, v) / (|u||v|); 0 whenever either argument is all-zero.
double cosine(const HDEmbedding& u, const HDEmbedding& v);

double l2_norm(const HDEmbedding& v);

}  // namespace hyperembed::hd
