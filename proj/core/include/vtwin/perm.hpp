#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vtwin/word.hpp"

namespace vtwin {

// Permutation of {1..n} stored as its row of images. Products read left to
// right: (a * b)(x) = b(a(x)), so the leftmost factor acts first.
class Perm {
public:
  explicit Perm(int n);

  static Perm from_images(std::vector<int> images);
  static Perm transposition(int n, int a, int b);

  // Accepts the one-line form `[3,1,2]` or cycle notation `(1 3 2)(4 5)`;
  // `()` is the identity.
  static Perm parse(int n, std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int> &images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  bool is_even() const;

  std::string str() const;
  std::string cycles() const;

  friend Perm operator*(const Perm &a, const Perm &b);
  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

private:
  std::vector<int> images_;
};

// All n! permutations in lexicographic order of their image rows.
std::vector<Perm> all_permutations(int n);

// The image of w under the projection onto S_n.
Perm pi_image(const VWord &w);

// lambda_{i,j}^{sign} with i < j.
struct SignedLambda {
  int i;
  int j;
  int sign;

  // lambda_{a,b} for a != b, using lambda_{b,a} = lambda_{a,b}^{-1}.
  static SignedLambda ordered(int a, int b);

  SignedLambda inverse() const { return {i, j, -sign}; }
  // The ordered pair (a, b) with lambda_{a,b} equal to this element.
  std::pair<int, int> head_tail() const;

  friend auto operator<=>(const SignedLambda &, const SignedLambda &) = default;
};

std::string to_string(const SignedLambda &x);

// mu x mu^{-1} for any rho-word mu with pi_image(mu) == sigma.
SignedLambda act(const Perm &sigma, SignedLambda x);

// (i_1, ..., i_{n-1}) with 0 <= i_k <= k. The coset representative is
// m_{1,i_1} ... m_{n-1,i_{n-1}} where m_{k,i} = rho_k rho_{k-1} ... rho_{i+1}.
struct SchreierTuple {
  int strands;
  std::vector<int> indices;

  friend bool operator==(const SchreierTuple &,
                         const SchreierTuple &) = default;
};

SchreierTuple schreier_tuple(const Perm &sigma);
VWord schreier_word(const SchreierTuple &t);

// Diagonal action on ordered pairs of signed lambdas with disjoint index
// sets.
struct DiagonalOrbitReport {
  int strands;
  std::size_t set_size;
  std::size_t orbit_count;
  std::size_t stabiliser_size;
};

DiagonalOrbitReport diagonal_orbit_check(int n);

} // namespace vtwin
