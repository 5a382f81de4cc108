#include "hyperembed/hd.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperembed/rng.hpp"

namespace hyperembed::hd {

std::uint64_t NGramStats::total() const {
    std::uint64_t sum = 0;
    for (const auto& [gram, count] : counts) sum += count;
    return sum;
}

ItemMemory::ItemMemory(std::size_t d, std::size_t alphabet_size, std::uint64_t seed)
    : d_(d), alphabet_size_(alphabet_size), seed_(seed) {
    if (d == 0) throw std::invalid_argument("ItemMemory: dimensionality must be positive");
    if (alphabet_size == 0) throw std::invalid_argument("ItemMemory: alphabet size must be positive");
    entries_.resize(d * alphabet_size);
    Xoshiro256ss rng(seed);
    for (auto& entry : entries_) entry = static_cast<std::int8_t>(rng.next_sign());
}

HDVector ItemMemory::column(std::uint32_t symbol) const {
    if (symbol >= alphabet_size_)
        throw std::invalid_argument("ItemMemory: symbol id " + std::to_string(symbol) +
                                    " out of range (alphabet size " +
                                    std::to_string(alphabet_size_) + ")");
    HDVector out(d_);
    const std::int8_t* src = entries_.data() + static_cast<std::size_t>(symbol) * d_;
    for (std::size_t i = 0; i < d_; ++i) out[i] = src[i];
    return out;
}

ItemMemory make_item_memory(std::size_t d, std::size_t alphabet_size, std::uint64_t seed) {
    return ItemMemory(d, alphabet_size, seed);
}

HDVector permute(const HDVector& v, std::size_t shift) {
    const std::size_t d = v.size();
    if (d == 0) return v;
    const std::size_t s = shift % d;
    if (s == 0) return v;
    HDVector out(d);
    for (std::size_t i = 0; i < d; ++i) out[(i + s) % d] = v[i];
    return out;
}

HDVector bind(const HDVector& u, const HDVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("bind: dimension mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    HDVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * v[i];
    return out;
}

HDVector bundle(const std::vector<HDVector>& vs, const std::vector<std::uint64_t>& weights) {
    if (vs.size() != weights.size())
        throw std::invalid_argument("bundle: vectors/weights length mismatch");
    if (vs.empty()) return {};
    const std::size_t d = vs.front().size();
    HDVector out(d, 0);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (vs[k].size() != d) throw std::invalid_argument("bundle: dimension mismatch");
        const auto w = static_cast<std::int64_t>(weights[k]);
        for (std::size_t i = 0; i < d; ++i) out[i] += w * vs[k][i];
    }
    return out;
}

namespace {

// Accumulates weight * m_gram into acc without materializing intermediates:
// m_gram[i] = prod_j H[s_j][(i - j) mod d], since rotating a column by j
// moves component (i - j) mod d to index i.
template <typename Acc, typename Weight>
void accumulate_ngram(const std::vector<std::uint32_t>& gram, const ItemMemory& im,
                      Weight weight, std::vector<Acc>& acc) {
    if (gram.empty()) throw std::invalid_argument("embed_ngram: empty n-gram");
    const std::size_t d = im.dim();
    for (std::uint32_t symbol : gram) {
        if (symbol >= im.alphabet_size())
            throw std::invalid_argument("embed_ngram: symbol id " + std::to_string(symbol) +
                                        " out of range (alphabet size " +
                                        std::to_string(im.alphabet_size()) + ")");
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::int64_t prod = 1;
        for (std::size_t j = 0; j < gram.size(); ++j) {
            const std::size_t src = (i + d - ((j + 1) % d)) % d;
            prod *= im.entry(src, gram[j]);
        }
        acc[i] += static_cast<Acc>(weight) * static_cast<Acc>(prod);
    }
}

HDEmbedding finalize(std::vector<double> acc, bool normalize) {
    if (normalize) {
        double norm = l2_norm(acc);
        if (norm > 0.0) {
            for (auto& x : acc) x /= norm;
        }
    }
    return acc;
}

}  // namespace

HDVector embed_ngram(const std::vector<std::uint32_t>& gram, const ItemMemory& im) {
    HDVector out(im.dim(), 0);
    accumulate_ngram<std::int64_t, std::int64_t>(gram, im, 1, out);
    return out;
}

HDEmbedding embed_stats(const NGramStats& stats, const ItemMemory& im, bool normalize) {
    std::vector<std::int64_t> acc(im.dim(), 0);
    for (const auto& [gram, count] : stats.counts) {
        accumulate_ngram<std::int64_t, std::uint64_t>(gram, im, count, acc);
    }
    HDEmbedding out(acc.begin(), acc.end());
    return finalize(std::move(out), normalize);
}

HDEmbedding embed_weighted(const std::vector<std::pair<std::vector<std::uint32_t>, double>>& grams,
                           const ItemMemory& im, bool normalize) {
    std::vector<double> acc(im.dim(), 0.0);
    for (const auto& [gram, weight] : grams) {
        accumulate_ngram<double, double>(gram, im, weight, acc);
    }
    return finalize(std::move(acc), normalize);
}

double l2_norm(const HDEmbedding& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

double cosine(const HDEmbedding& u, const HDEmbedding& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cosine: dimension mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

}  // namespace hyperembed::hd
