#pragma once

// Labeled sample matrix in sparse (counts / tf-idf) or dense (HD) form.
// The byte cost is the benchmark's memory model: 16 bytes per stored
// sparse entry (8 index + 8 value), 8 bytes per dense scalar.

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperembed {

enum class Storage { SparseCount, SparseReal, DenseReal };

struct FeatureMatrix {
    Storage kind = Storage::DenseReal;
    std::size_t rows = 0;
    std::size_t cols = 0;
    // Sparse rows hold only nonzero entries, sorted by column index.
    std::vector<std::vector<std::pair<std::uint64_t, double>>> sparse;
    // Dense storage, row-major, rows * cols scalars.
    std::vector<double> dense;
    std::vector<int> labels;

    bool is_sparse() const { return kind != Storage::DenseReal; }

    std::uint64_t nnz() const {
        std::uint64_t count = 0;
        for (const auto& row : sparse) count += row.size();
        return count;
    }

    static constexpr std::uint64_t kSparseEntryBytes = 16;
    static constexpr std::uint64_t kDenseScalarBytes = 8;

    std::uint64_t feature_bytes() const {
        if (is_sparse()) return kSparseEntryBytes * nnz();
        return kDenseScalarBytes * static_cast<std::uint64_t>(rows) * cols;
    }

    const double* dense_row(std::size_t r) const { return dense.data() + r * cols; }
    double* dense_row(std::size_t r) { return dense.data() + r * cols; }

    FeatureMatrix densified() const {
        if (!is_sparse()) return *this;
        FeatureMatrix out;
        out.kind = Storage::DenseReal;
        out.rows = rows;
        out.cols = cols;
        out.labels = labels;
        out.dense.assign(rows * cols, 0.0);
        for (std::size_t r = 0; r < rows; ++r) {
            for (const auto& [col, value] : sparse[r]) out.dense[r * cols + col] = value;
        }
        return out;
    }
};

}  // namespace hyperembed
