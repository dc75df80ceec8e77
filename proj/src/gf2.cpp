#include "uht/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace uht {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

void GF2Matrix::set(std::size_t r, std::size_t c, bool bit) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  auto& word = data_[r * words_ + c / 64];
  word = bit ? (word | mask) : (word & ~mask);
}

void GF2Matrix::xor_row(std::size_t dst, std::size_t src, std::size_t first_word) {
  std::uint64_t* d = data_.data() + dst * words_;
  const std::uint64_t* s = data_.data() + src * words_;
  for (std::size_t w = first_word; w < words_; ++w) d[w] ^= s[w];
}

void GF2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * words_, data_.begin() + (a + 1) * words_,
                   data_.begin() + b * words_);
}

namespace {

// Augmented layout: [A | rhs | (identity when tracking)].
GF2Matrix augment(const GF2Matrix& a, std::span<const std::uint8_t> rhs, bool track) {
  const std::size_t n = a.cols();
  GF2Matrix m(a.rows(), n + 1 + (track ? a.rows() : 0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto src = a.row(r);
    auto dst = m.row(r);
    std::copy(src.begin(), src.end(), dst.begin());
    if (rhs[r]) m.set(r, n, true);
    if (track) m.set(r, n + 1 + r, true);
  }
  return m;
}

// Returns pivot columns; rows past the returned size have a zero A-part.
std::vector<std::size_t> forward_eliminate(GF2Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    const std::size_t first_word = c / 64;
    for (std::size_t r = rank + 1; r < m.rows(); ++r)
      if (m.get(r, c)) m.xor_row(r, rank, first_word);
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

GF2Solution gf2_solve(const GF2Matrix& a, std::span<const std::uint8_t> rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("gf2_solve: rhs size mismatch");
  const std::size_t n = a.cols();
  GF2Matrix m = augment(a, rhs, false);
  const auto pivots = forward_eliminate(m, n);

  GF2Solution out;
  out.rank = pivots.size();
  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (!m.get(r, n)) continue;
    // Inconsistent: redo the elimination tracking row combinations.
    GF2Matrix t = augment(a, rhs, true);
    const auto tp = forward_eliminate(t, n);
    for (std::size_t s = tp.size(); s < t.rows(); ++s) {
      if (!t.get(s, n)) continue;
      for (std::size_t k = 0; k < a.rows(); ++k)
        if (t.get(s, n + 1 + k)) out.certificate.push_back(k);
      break;
    }
    out.feasible = false;
    return out;
  }

  out.feasible = true;
  GF2Matrix x(1, n);
  auto xs = x.row(0);
  for (std::size_t i = pivots.size(); i-- > 0;) {
    auto row = m.row(i);
    unsigned acc = m.get(i, n) ? 1U : 0U;
    for (std::size_t w = pivots[i] / 64; w < xs.size(); ++w)
      acc ^= static_cast<unsigned>(std::popcount(row[w] & xs[w]));
    if (acc & 1U) x.set(0, pivots[i], true);
  }
  out.assignment.resize(n);
  for (std::size_t c = 0; c < n; ++c) out.assignment[c] = x.get(0, c) ? 1 : 0;
  return out;
}

}  // namespace uht
