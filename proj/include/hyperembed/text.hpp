#pragma once

// Text-to-feature pipeline: preprocessing, SemHash subword tokens,
// character/token n-gram statistics, sparse count features over a
// train-split vocabulary, TF / TF-IDF word baselines, and HD embedding
// of per-document statistics.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperembed/feature_matrix.hpp"
#include "hyperembed/hd.hpp"

namespace hyperembed::text {

// --- Unicode helpers (UTF-8 in, UTF-8 out) ---------------------------------

// Decodes UTF-8 into codepoints; invalid bytes decode as U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view text);
std::string encode_utf8(const std::vector<char32_t>& codepoints);

// Splits a string into single-codepoint UTF-8 strings.
std::vector<std::string> codepoint_strings(std::string_view text);

// --- Preprocessing ----------------------------------------------------------

// Removes Cc control characters (U+0000..U+001F, U+007F..U+009F), lowercases
// (ASCII plus Latin-1 letters), and, when a stopword set is supplied, drops
// whitespace-delimited tokens found in the set.
std::string preprocess(std::string_view raw_text,
                       const std::set<std::string>* stopwords = nullptr);

std::set<std::string> load_stopwords(const std::string& path);

// Whitespace tokenization.
std::vector<std::string> split_words(std::string_view text);

// --- SemHash subword tokens -------------------------------------------------

// For each whitespace word w emits the character trigrams of "#w#" in order;
// a word of k codepoints yields exactly k trigrams.
std::vector<std::string> semhash_tokens(std::string_view preprocessed_text);

// --- Alphabet ----------------------------------------------------------------

// Ordered symbol set with dense ids 0..size-1; the last id is a reserved
// out-of-vocabulary slot shared by every symbol unseen at build time.
class Alphabet {
public:
    // Symbols keep first-appearance order; an OOV slot is appended last.
    static Alphabet build(const std::vector<std::vector<std::string>>& token_streams);

    std::uint32_t lookup(const std::string& symbol) const;
    bool contains(const std::string& symbol) const;
    std::size_t size() const { return symbols_.size(); }
    std::uint32_t oov_id() const { return static_cast<std::uint32_t>(symbols_.size() - 1); }
    const std::string& symbol(std::uint32_t id) const { return symbols_[id]; }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, std::uint32_t> index_;
};

// --- n-gram statistics --------------------------------------------------------

// Counts every length-n sliding window of the symbol sequence. Sequences
// shorter than n yield empty statistics.
hd::NGramStats ngram_stats(const std::vector<std::string>& symbols, std::size_t n,
                           const Alphabet& alphabet);
hd::NGramStats ngram_stats_ids(const std::vector<std::uint32_t>& ids, std::size_t n,
                               std::size_t alphabet_size);

// --- Sparse features over a train vocabulary -----------------------------------

// Ordered union of the n-gram keys observed in the train split; keys are
// (n, id sequence) sorted lexicographically so column order is stable.
struct NGramVocabulary {
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> keys;
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::uint64_t> index;

    std::size_t size() const { return keys.size(); }

    static NGramVocabulary build(const std::vector<std::vector<hd::NGramStats>>& train_doc_stats);
};

// One row per document; n-grams absent from the vocabulary are dropped.
FeatureMatrix stats_to_sparse_features(const std::vector<std::vector<hd::NGramStats>>& doc_stats,
                                       const NGramVocabulary& vocabulary,
                                       const std::vector<int>& labels);

// --- TF / TF-IDF word baselines --------------------------------------------------

struct TfIdfModel {
    std::vector<std::string> vocabulary;  // sorted
    std::map<std::string, std::uint64_t> index;
    std::vector<double> idf;  // ln((1+N)/(1+df)) + 1
    std::size_t n_train_docs = 0;

    static TfIdfModel fit(const std::vector<std::vector<std::string>>& train_word_docs);
};

// TF: raw word counts. TF-IDF: tf * idf with l2-normalized rows.
FeatureMatrix tf_features(const TfIdfModel& model,
                          const std::vector<std::vector<std::string>>& word_docs,
                          const std::vector<int>& labels);
FeatureMatrix tfidf_features(const TfIdfModel& model,
                             const std::vector<std::vector<std::string>>& word_docs,
                             const std::vector<int>& labels);

// --- HD embedding of a corpus ------------------------------------------------------

// One normalized HD embedding per document: per-n statistics are embedded
// with that order's item memory and bundled before normalization.
// item_memories[k] corresponds to doc_stats[doc][k]; all must share dim d.
FeatureMatrix embed_corpus(const std::vector<std::vector<hd::NGramStats>>& doc_stats,
                           const std::vector<hd::ItemMemory>& item_memories,
                           const std::vector<int>& labels);

// Real-weighted variant (tf-idf values as bundle weights); one item memory,
// symbols are word ids, each "gram" is the single word (n = 1).
FeatureMatrix embed_corpus_weighted(
    const std::vector<std::vector<std::pair<std::uint32_t, double>>>& doc_word_weights,
    const hd::ItemMemory& item_memory, const std::vector<int>& labels);

}  // namespace hyperembed::text
