#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frieze/sequence.hpp"

namespace frieze {

// An element of SL2(Z), stored row-major as [[a, b], [c, d]].
//
// Products follow the ordinary matrix convention: in X * Y the right factor
// acts first on column vectors. Every word in this library is evaluated as
// the plain left-to-right product of its letters, so the word "U^2*S" is the
// matrix U^2 * S.
class Mat2 {
 public:
  // Throws InvalidInput unless a*d - b*c == 1.
  Mat2(BigInt a, BigInt b, BigInt c, BigInt d);

  static Mat2 identity();
  static Mat2 minus_identity();
  // S = [[0,1],[-1,0]], order 4.
  static Mat2 S();
  // T = [[0,1],[-1,-1]], order 3.
  static Mat2 T();
  // U^k = [[1,0],[k,1]].
  static Mat2 U(std::int64_t k = 1);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  BigInt trace() const { return a_ + d_; }
  bool is_identity() const;
  bool is_minus_identity() const;

  Mat2 inverse() const;
  Mat2 pow(std::int64_t k) const;

  Mat2 operator-() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;

  // "[[a,b],[c,d]]"
  std::string to_json() const;

 private:
  struct Unchecked {};
  Mat2(Unchecked, BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  BigInt a_, b_, c_, d_;
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }

// S^{b0} U^{a1} S U^{a2} S ... U^{an} S^{b1}.
struct SUWord {
  bool prefix_s = false;
  std::vector<std::int64_t> factors;
  bool trailing_s = true;
};

Mat2 eval_word(const SUWord& word);

// Word whose factors are the entries of `seq`, each followed by S:
// U^{c0} S U^{c1} S ... U^{c(n-1)} S.
Mat2 eval_sequence_word(std::span<const std::int64_t> seq);

// A general word over S, T, U with integer exponents (text form
// "U^2*S*U*S"). Also accepts the literals "I" and "-I".
struct Letter {
  char symbol;  // 'S', 'T', 'U', 'I', or 'N' for -I
  std::int64_t exponent;
};
using Word = std::vector<Letter>;

Word parse_word(std::string_view text);
std::string format_word(const Word& word);
Mat2 eval(const Word& word);

// Order of m in SL2(Z); std::nullopt means infinite order.
std::optional<int> element_order(const Mat2& m);

// sign * T^{b0} (S T^{e1}) (S T^{e2}) ... (S T^{en}) S^{b1}.
//
// b0 ranges over {0, 1, 2}: a reduced word may begin with T^2 (for example
// T^2 itself), which the two-valued form cannot express.
struct TSNormalForm {
  int sign = 1;
  int b0 = 0;
  std::vector<int> exponents;
  int b1 = 0;

  Mat2 evaluate() const;
  // "I", "-I", "T*S*T^2", "-S*T" ...
  std::string to_string() const;
};

TSNormalForm ts_normal_form(const Mat2& m);

// Whether X U^a S == U^b S X.
bool check_conjugation_lemma(const Mat2& x, std::int64_t a, std::int64_t b);

// Whether (U^{a+1} S)(U S)(U^{b+1} S) == (U^a S)(U^b S).
bool check_cancellation_identity(std::int64_t a, std::int64_t b);

}  // namespace frieze
