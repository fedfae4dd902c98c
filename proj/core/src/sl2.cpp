#include "frieze/sl2.hpp"

#include <charconv>

#include "frieze/error.hpp"

namespace frieze {

Mat2::Mat2(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw InvalidInput("matrix " + to_json() + " does not have determinant 1");
  }
}

Mat2 Mat2::identity() { return Mat2(Unchecked{}, 1, 0, 0, 1); }
Mat2 Mat2::minus_identity() { return Mat2(Unchecked{}, -1, 0, 0, -1); }
Mat2 Mat2::S() { return Mat2(Unchecked{}, 0, 1, -1, 0); }
Mat2 Mat2::T() { return Mat2(Unchecked{}, 0, 1, -1, -1); }
Mat2 Mat2::U(std::int64_t k) { return Mat2(Unchecked{}, 1, 0, k, 1); }

bool Mat2::is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
bool Mat2::is_minus_identity() const {
  return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1;
}

Mat2 Mat2::inverse() const { return Mat2(Unchecked{}, d_, -b_, -c_, a_); }

Mat2 Mat2::pow(std::int64_t k) const {
  Mat2 base = k < 0 ? inverse() : *this;
  // Negating INT64_MIN is undefined; peel one factor off first.
  Mat2 result = identity();
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Mat2 Mat2::operator-() const { return Mat2(Unchecked{}, -a_, -b_, -c_, -d_); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(Mat2::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
              x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::string Mat2::to_json() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

Mat2 eval_word(const SUWord& word) {
  Mat2 m = word.prefix_s ? Mat2::S() : Mat2::identity();
  const Mat2 s = Mat2::S();
  for (std::size_t i = 0; i < word.factors.size(); ++i) {
    m = m * Mat2::U(word.factors[i]);
    if (i + 1 < word.factors.size() || word.trailing_s) m = m * s;
  }
  return m;
}

Mat2 eval_sequence_word(std::span<const std::int64_t> seq) {
  return eval_word(SUWord{false, std::vector<std::int64_t>(seq.begin(), seq.end()), true});
}

Word parse_word(std::string_view text) {
  Word word;
  auto fail = [&](std::string_view token) {
    throw InvalidInput("bad word token '" + std::string(token) + "'");
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    if (star == std::string_view::npos) star = text.size();
    std::string_view token = text.substr(start, star - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == "I") {
      word.push_back({'I', 1});
    } else if (token == "-I") {
      word.push_back({'N', 1});
    } else {
      if (token.empty() || (token[0] != 'S' && token[0] != 'T' && token[0] != 'U')) fail(token);
      std::int64_t exponent = 1;
      if (token.size() > 1) {
        if (token[1] != '^' || token.size() == 2) fail(token);
        const char* first = token.data() + 2;
        const char* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc() || ptr != last) fail(token);
      }
      word.push_back({token[0], exponent});
    }
    start = star + 1;
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '*';
    const Letter& l = word[i];
    if (l.symbol == 'I') {
      out += "I";
    } else if (l.symbol == 'N') {
      out += "-I";
    } else {
      out += l.symbol;
      if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
  }
  return out;
}

Mat2 eval(const Word& word) {
  Mat2 m = Mat2::identity();
  for (const Letter& l : word) {
    switch (l.symbol) {
      case 'S': m = m * Mat2::S().pow(l.exponent); break;
      case 'T': m = m * Mat2::T().pow(l.exponent); break;
      case 'U': m = m * Mat2::U(l.exponent); break;
      case 'N': m = -m; break;
      default: break;
    }
  }
  return m;
}

std::optional<int> element_order(const Mat2& m) {
  const BigInt t = m.trace();
  if (t == 2) {
    if (m.is_identity()) return 1;
    return std::nullopt;
  }
  if (t == -2) {
    if (m.is_minus_identity()) return 2;
    return std::nullopt;
  }
  if (t > 2 || t < -2) return std::nullopt;
  // Elliptic: torsion in SL2(Z) has order at most 6, so 12 bounds the search.
  Mat2 power = m;
  for (int k = 1; k <= 12; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

namespace {

// Letter in the S/T alphabet; for S the exponent is always 1.
struct TSLetter {
  bool is_s;
  int exponent;
};

class TSReducer {
 public:
  void push(TSLetter l) {
    if (!l.is_s) {
      l.exponent %= 3;
      if (l.exponent == 0) return;
    }
    if (!stack_.empty() && stack_.back().is_s == l.is_s) {
      if (l.is_s) {
        stack_.pop_back();  // S^2 = -I
        sign_ = -sign_;
      } else {
        const int e = (stack_.back().exponent + l.exponent) % 3;
        stack_.pop_back();
        if (e != 0) push({false, e});
      }
      return;
    }
    stack_.push_back(l);
  }
  void push_s() { push({true, 1}); }
  void push_t(int e) { push({false, e}); }
  void negate() { sign_ = -sign_; }

  // U^k as S/T letters: U = S T^2, U^-1 = -T S.
  void push_u(const BigInt& k) {
    if (k > 0) {
      for (BigInt i = 0; i < k; ++i) {
        push_s();
        push_t(2);
      }
    } else {
      for (BigInt i = 0; i < -k; ++i) {
        negate();
        push_t(1);
        push_s();
      }
    }
  }

  TSNormalForm result() const {
    TSNormalForm form;
    form.sign = sign_;
    std::size_t i = 0;
    if (i < stack_.size() && !stack_[i].is_s) form.b0 = stack_[i++].exponent;
    while (i < stack_.size()) {
      // stack_[i] is S here: letters alternate after reduction.
      if (i + 1 < stack_.size()) {
        form.exponents.push_back(stack_[i + 1].exponent);
        i += 2;
      } else {
        form.b1 = 1;
        ++i;
      }
    }
    return form;
  }

 private:
  std::vector<TSLetter> stack_;
  int sign_ = 1;
};

}  // namespace

Mat2 TSNormalForm::evaluate() const {
  Mat2 m = Mat2::T().pow(b0);
  for (int e : exponents) m = m * Mat2::S() * Mat2::T().pow(e);
  if (b1 != 0) m = m * Mat2::S();
  return sign < 0 ? -m : m;
}

std::string TSNormalForm::to_string() const {
  std::string body;
  auto append = [&](const std::string& letter) {
    if (!body.empty()) body += '*';
    body += letter;
  };
  auto t_letter = [](int e) { return e == 1 ? std::string("T") : "T^" + std::to_string(e); };
  if (b0 != 0) append(t_letter(b0));
  for (int e : exponents) {
    append("S");
    append(t_letter(e));
  }
  if (b1 != 0) append("S");
  if (body.empty()) body = "I";
  return sign < 0 ? "-" + body : body;
}

TSNormalForm ts_normal_form(const Mat2& m) {
  // Euclidean descent: left-multiply by U^k and S until the lower-left
  // entry vanishes, remembering each step so it can be undone.
  struct Step {
    bool is_s;
    BigInt k;
  };
  std::vector<Step> steps;
  BigInt a = m.a(), b = m.b(), c = m.c(), d = m.d();
  while (c != 0) {
    if (a != 0) {
      const BigInt q = c / a;  // truncates toward zero, so |c - q a| < |a|
      if (q != 0) {
        c -= q * a;
        d -= q * b;
        steps.push_back({false, -q});
      }
    }
    if (c != 0) {
      BigInt na = c, nb = d, nc = -a, nd = -b;
      a = std::move(na);
      b = std::move(nb);
      c = std::move(nc);
      d = std::move(nd);
      steps.push_back({true, 0});
    }
  }
  // Now the matrix is sign * [[1, x], [0, 1]] with x = sign * b.
  const int sign = a == 1 ? 1 : -1;
  const BigInt x = sign * b;

  // m = step_1^-1 ... step_r^-1 * sign * [[1,x],[0,1]], with
  // [[1,x],[0,1]] = -S U^{-x} S and S^-1 = -S.
  TSReducer reducer;
  if (sign < 0) reducer.negate();
  for (const Step& step : steps) {
    if (step.is_s) {
      reducer.negate();
      reducer.push_s();
    } else {
      reducer.push_u(-step.k);
    }
  }
  if (x != 0) {
    reducer.negate();
    reducer.push_s();
    reducer.push_u(-x);
    reducer.push_s();
  }
  return reducer.result();
}

bool check_conjugation_lemma(const Mat2& x, std::int64_t a, std::int64_t b) {
  return x * Mat2::U(a) * Mat2::S() == Mat2::U(b) * Mat2::S() * x;
}

bool check_cancellation_identity(std::int64_t a, std::int64_t b) {
  const Mat2 s = Mat2::S();
  const Mat2 lhs = (Mat2::U(a + 1) * s) * (Mat2::U(1) * s) * (Mat2::U(b + 1) * s);
  const Mat2 rhs = (Mat2::U(a) * s) * (Mat2::U(b) * s);
  return lhs == rhs;
}

}  // namespace frieze
