#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facewalk/posetcore.hpp"
#include "facewalk/strip.hpp"

namespace facewalk {

// Binary reflected Gray code over {0,1}^n, position 1 is the leftmost character.
class BrgcIterator {
 public:
  explicit BrgcIterator(int n);
  const std::string& current() const { return word_; }
  bool next();

 private:
  int n_;
  std::uint64_t i_ = 0;
  std::string word_;
};

// Ternary reflected Gray code over {0,-,1}^n (Knuth's loopless reflected
// mixed-radix algorithm, radix 3). Each call to next() changes one character.
class GammaIterator {
 public:
  explicit GammaIterator(int n);
  const std::string& current() const { return word_; }
  bool next();
  int last_position() const { return last_; }

 private:
  int n_;
  std::vector<int> a_, f_, o_;
  std::string word_;
  int last_ = -1;
};

std::vector<std::string> brgc(int n);
// Listing of all faces of Q_n followed by EMPTY.
std::vector<std::string> gamma(int n);

int ternary_rank(const std::string& w);

CoverGraph boolean_lattice_graph(int n);  // G(Q_n), words over {0,1}
CoverGraph cube_face_graph(int n);        // G(L(Q_n)) with EMPTY

RhombicStrip strip_boolean_mirror(int n);
RhombicStrip strip_boolean_stack(int n);
RhombicStrip strip_cube_faces(int n);

}  // namespace facewalk
