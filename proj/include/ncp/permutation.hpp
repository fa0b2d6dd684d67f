#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ncp {

// Bijection of {1..n} in one-line notation. Product is composition:
// (s*t)(i) = s(t(i)).
class Permutation {
 public:
  Permutation() = default;  // id_0
  explicit Permutation(std::vector<int> one_line);  // 1-based images
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  // Cycle notation such as "(123)", "(12)(34)", "id"; n is the size.
  static Permutation from_cycles(std::string_view text, int n);
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

  std::string to_string() const;  // "[2,1]"
  std::string cycles() const;     // "(12)" style; "id" for identity

 private:
  std::vector<int> img_;
};

// u x v: u on the first n points, v shifted on the rest.
Permutation perm_cross(const Permutation& u, const Permutation& v);
// Block permutation tau^{k_1..k_n}: block i moves as a whole to block slot tau(i).
Permutation perm_block(const Permutation& tau, const std::vector<int>& sizes);

}  // namespace ncp
