#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kerov {

/// Integer Young diagram stored as weakly decreasing row lengths
/// (bottom row first, French convention). The empty list is the empty
/// diagram. Immutable after construction.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<long long> rows) : rows_(std::move(rows)) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (rows_[j] < 1) throw std::invalid_argument("partition rows must be positive");
      if (j > 0 && rows_[j] > rows_[j - 1])
        throw std::invalid_argument("partition rows must be weakly decreasing");
    }
  }

  const std::vector<long long>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  long long box_count() const {
    long long n = 0;
    for (long long r : rows_) n += r;
    return n;
  }

  long long row(std::size_t j) const { return j < rows_.size() ? rows_[j] : 0; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<long long> rows_;
};

/// (N, N-1, ..., 1); N = 0 gives the empty partition.
inline Partition staircase(int N) {
  if (N < 0) throw std::invalid_argument("staircase needs N >= 0");
  std::vector<long long> rows;
  for (int r = N; r >= 1; --r) rows.push_back(r);
  return Partition(std::move(rows));
}

inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<long long> cols(static_cast<std::size_t>(p.rows().front()), 0);
  for (long long r : p.rows())
    for (long long c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

// Content of a box in row j (1-indexed from the bottom), column i is i - j.
// Addable corners are the cells where a box may be appended keeping the rows
// weakly decreasing; removable corners are the row ends that may be deleted.

inline std::vector<long long> addable_contents(const Partition& p) {
  std::vector<long long> out;
  const auto& rows = p.rows();
  for (std::size_t j = 0; j <= rows.size(); ++j) {
    long long len = j < rows.size() ? rows[j] : 0;
    long long above_cap = j == 0 ? (1LL << 62) : rows[j - 1];
    if (len < above_cap) out.push_back((len + 1) - static_cast<long long>(j + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<long long> removable_contents(const Partition& p) {
  std::vector<long long> out;
  const auto& rows = p.rows();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    long long below = j + 1 < rows.size() ? rows[j + 1] : 0;
    if (rows[j] > below) out.push_back(rows[j] - static_cast<long long>(j + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Partition add_box_at_content(const Partition& p, long long content) {
  std::vector<long long> rows = p.rows();
  for (std::size_t j = 0; j <= rows.size(); ++j) {
    long long len = j < rows.size() ? rows[j] : 0;
    if ((len + 1) - static_cast<long long>(j + 1) != content) continue;
    long long above_cap = j == 0 ? (1LL << 62) : rows[j - 1];
    if (len >= above_cap) continue;
    if (j < rows.size())
      ++rows[j];
    else
      rows.push_back(1);
    return Partition(std::move(rows));
  }
  throw std::invalid_argument("no addable corner with the requested content");
}

inline Partition remove_box_at_content(const Partition& p, long long content) {
  std::vector<long long> rows = p.rows();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j] - static_cast<long long>(j + 1) != content) continue;
    long long below = j + 1 < rows.size() ? rows[j + 1] : 0;
    if (rows[j] <= below) continue;
    --rows[j];
    if (rows[j] == 0) rows.erase(rows.begin() + static_cast<long long>(j));
    return Partition(std::move(rows));
  }
  throw std::invalid_argument("no removable corner with the requested content");
}

}  // namespace kerov
