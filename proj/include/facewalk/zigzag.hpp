#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace facewalk {

// Streams P_L where P_0 = (base) and P_l is the concatenation of the
// insertion sequences of the elements of P_{l-1}, alternating direction.
//
// Family must provide:
//   using Object = ...;
//   Object base() const;
//   void expand(const Object& x, int level, std::vector<Object>& out) const;
//   bool odd_reversed() const;   // whether odd-indexed elements expand reversed
template <class Family>
class ZigzagIterator {
 public:
  using Object = typename Family::Object;

  ZigzagIterator(Family fam, int levels) : fam_(std::move(fam)), L_(levels) {
    base_ = fam_.base();
    seq_.resize(std::size_t(L_) + 1);
    idx_.assign(std::size_t(L_) + 1, 0);
    count_.assign(std::size_t(L_) + 1, 1);
    rev_.assign(std::size_t(L_) + 1, false);
    for (int l = 1; l <= L_; ++l) reset(l);
    count_[0] = 1;
  }

  const Object& current() const { return at(L_); }
  const Object& at(int level) const {
    if (level == 0) return base_;
    const auto& s = seq_[std::size_t(level)];
    std::size_t i = idx_[std::size_t(level)];
    return rev_[std::size_t(level)] ? s[s.size() - 1 - i] : s[i];
  }

  bool next() {
    int l = L_;
    work_ = 1;
    while (l >= 1 && idx_[std::size_t(l)] + 1 >= seq_[std::size_t(l)].size()) {
      --l;
      ++work_;
    }
    if (l < 1) return false;
    ++idx_[std::size_t(l)];
    ++count_[std::size_t(l)];
    for (int m = l + 1; m <= L_; ++m) {
      ++count_[std::size_t(m)];
      reset(m);
      ++work_;
    }
    return true;
  }

  std::size_t last_work() const { return work_; }
  const Family& family() const { return fam_; }

 private:
  void reset(int l) {
    fam_.expand(at(l - 1), l, seq_[std::size_t(l)]);
    idx_[std::size_t(l)] = 0;
    bool odd = count_[std::size_t(l - 1)] % 2 == 1;
    rev_[std::size_t(l)] = fam_.odd_reversed() ? odd : !odd;
  }

  Family fam_;
  int L_;
  Object base_;
  std::vector<std::vector<Object>> seq_;
  std::vector<std::size_t> idx_;
  std::vector<unsigned long long> count_;
  std::vector<bool> rev_;
  std::size_t work_ = 0;
};

}  // namespace facewalk
